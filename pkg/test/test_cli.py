import json

import pytest

import dickson.cli as cli
import dickson.lib.verify as verify
from dickson.lib.genexpr import GenExpr, d_sym
from dickson.lib.parser import parse_expr
from dickson.lib.utils import UnsupportedError


def run_json(capsys, argv):
    status = cli.main(argv + ["--format", "json"])
    return status, json.loads(capsys.readouterr().out)


def test_expand(capsys):
    assert cli.main(["expand", "y1+y1", "--p", "2"]) == cli.EXIT_OK
    assert capsys.readouterr().out == "0\n"
    status, doc = run_json(capsys, ["expand", "h[1]", "--p", "3", "--n", "2"])
    assert status == cli.EXIT_OK
    assert doc["schema_version"] == "dickson/1"
    assert doc["command"] == "expand"
    assert doc["result"]["terms"] == [{"c": 1, "ext": [], "y": [1, 0]}]


def test_usage_errors(capsys):
    assert cli.main(["expand", ""]) == cli.EXIT_USAGE
    assert cli.main(["expand", "q1"]) == cli.EXIT_USAGE
    assert cli.main(["expand", "d[3,0]", "--n", "2"]) == cli.EXIT_USAGE
    assert cli.main(["expand", "x1", "--p", "2"]) == cli.EXIT_USAGE
    assert cli.main(["transfer", "--family", "pn11"]) == cli.EXIT_USAGE
    with pytest.raises(SystemExit):
        cli.main(["verify", "nosuch"])


def test_invariant_check(capsys):
    assert cli.main(["invariant-check", "d[2,1]"]) == cli.EXIT_OK
    assert cli.main(["invariant-check", "y1"]) == cli.EXIT_FAILED
    assert cli.main(["invariant-check", "h[1]", "--tag", "un"]) == cli.EXIT_OK
    assert cli.main(["invariant-check", "d[1,0]", "--composition", "1,1"]) == cli.EXIT_OK


def test_steenrod(capsys):
    status, doc = run_json(capsys, ["steenrod", "d[2,1]", "--op", "P^1"])
    assert status == cli.EXIT_OK
    assert doc["op"] == "P^1"
    assert doc["dickson"] == str(GenExpr.symbol(3, 2, d_sym(2, 0)))


def test_basis(capsys):
    status, doc = run_json(capsys, ["basis", "--family", "pn11"])
    assert status == cli.EXIT_OK
    assert doc["rank"] == doc["expected_rank"] == 4
    assert doc["basis"][0] == {"element": "1", "degree": 0}


def test_xi_and_rewrite(capsys):
    args = ["--p", "2", "--n", "3", "--family", "pn11"]
    assert cli.main(["xi", "d[2,0]^2*d[2,1]^7"] + args) == cli.EXIT_OK
    assert capsys.readouterr().out.strip() == str(parse_expr("d[3,0]^2*d[3,1]", 2, 3))
    status, doc = run_json(capsys, ["rewrite", "d[2,0]^2*d[2,1]^7"] + args)
    assert status == cli.EXIT_OK
    assert doc["engine"] == "rewrite"
    assert len(doc["terms"]) == 5


def test_transfer(capsys):
    status, doc = run_json(capsys, ["transfer", "h[1]^8", "--family", "p1n1"])
    assert status == cli.EXIT_OK
    assert doc["dickson"] == str(GenExpr.symbol(3, 2, d_sym(2, 0)).scale(2))
    status, doc = run_json(capsys, ["transfer", "--family", "p1n1", "--report"])
    assert status == cli.EXIT_OK
    assert doc["passed"]
    assert [r["tag"] for r in doc["results"]] == ["p1n1-transfer"]


def test_suite_items():
    tags = {item.tag for item in verify.suite_items("fast")}
    assert "worked-example" in tags
    assert "freeness-pn11" in tags
    assert "ideal-transfer" not in tags
    full = {(item.tag, item.p, item.n) for item in verify.suite_items("full")}
    assert ("ideal-transfer", 3, 2) in full
    assert ("cardinality-pn11", 3, 4) in full
    with pytest.raises(UnsupportedError):
        verify.suite_items("nosuch")


def test_suite_item_failure():
    def boom():
        raise UnsupportedError("no")

    res = verify.SuiteItem("boom", 3, 2, boom).run()
    assert not res
    assert res.detail == "UnsupportedError: no"


def test_verify_fast(capsys):
    assert cli.main(["verify", "fast", "--samples", "3"]) == cli.EXIT_OK
