import tempfile

import pytest

import dickson.lib.invariants as invariants
import dickson.lib.storage as storage


@pytest.fixture
def test_records():
    return [
        {"p": 3, "n": 2, "symbol": "d[2,{}]".format(i), "poly": invariants.make_d(3, 2, 2, i).to_dict()}
        for i in range(2)
    ]


def test_create(test_records):
    with tempfile.NamedTemporaryFile(delete=False) as fp:
        data = storage.store(test_records, db_file=fp.name)
        assert data
        fp.flush()

        datas = storage.stream_read(db_file=fp.name)
        assert len(datas) == len(test_records)
        assert datas[0]["symbol"] == "d[2,0]"
        storage.store(test_records[:1], db_file=fp.name)
        assert len(storage.stream_read(db_file=fp.name)) == 3
        fp.close()


def test_missing_file():
    assert storage.stream_read(db_file="/nonexistent/expansions.msgpack") == []


def test_search(test_records):
    with tempfile.NamedTemporaryFile(delete=False) as fp:
        storage.store(test_records, db_file=fp.name)
        res = storage.stream_search(lambda d: d["symbol"] == "d[2,1]", db_file=fp.name)
        assert len(res) == 1
        assert res[0]["poly"] == test_records[1]["poly"]
