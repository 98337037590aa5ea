import tempfile

import pytest

import dickson.lib.db as db
import dickson.lib.invariants as invariants
from dickson.lib.genexpr import d_sym
from dickson.lib.superpoly import SuperPoly


@pytest.fixture
def test_db():
    with tempfile.NamedTemporaryFile(delete=False) as fp:
        return db.get(db_file=fp.name)


@pytest.fixture
def test_records():
    invariants.clear_cache()
    for i in range(2):
        invariants.expand_symbol(3, 2, d_sym(2, i))
    invariants.expand_symbol(2, 3, d_sym(3, 0))
    return invariants.cache_records()


def test_create(test_db, test_records):
    assert len(test_records) == 3
    docs = db.list_all(test_db)
    assert len(docs) == 0
    docs = db.store(test_db, test_records)
    assert docs
    assert db.index_count(test_db["db_file"]) == 3
    # Known records are not stored twice
    assert db.store(test_db, test_records) is None
    assert len(db.list_all(test_db)) == 3


def test_search(test_db, test_records):
    db.store(test_db, test_records)
    res = db.search(test_db, 3, 2)
    assert sorted(r["symbol"] for r in res) == ["d[2,0]", "d[2,1]"]
    assert SuperPoly.from_dict(res[0]["poly"]) == invariants.make_d(3, 2, 2, int(res[0]["symbol"][4]))


def test_seed_cache(test_db, test_records):
    db.store(test_db, test_records)
    invariants.clear_cache()
    assert invariants.seed_cache(db.list_all(test_db)) == 3
    assert invariants.cache_records() == []
    assert invariants.expand_symbol(2, 3, d_sym(3, 0)) == invariants.make_d(2, 3, 3, 0)
