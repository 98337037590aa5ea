import pytest

import dickson.lib.invariants as invariants
import dickson.lib.modbasis as modbasis
from dickson.lib import Family
from dickson.lib.genexpr import GenExpr, d_sym, h_sym, y_sym
from dickson.lib.parser import parse_expr
from dickson.lib.utils import NotInvariantError, UnsupportedError


def test_dickson_monomials():
    assert modbasis.dickson_monomials(2, 2, 6) == [(0, 3), (2, 0)]
    assert modbasis.dickson_monomials(3, 2, 5) == []
    assert modbasis.dickson_monomials(3, 2, 0) == [(0, 0)]


def test_ranks():
    assert modbasis.family(Family.PN11, 2, 3).rank() == 7
    assert modbasis.family(Family.PN11, 3, 2).rank() == modbasis.expected_rank(Family.PN11, 3, 2) == 4
    assert modbasis.family(Family.P1N1, 3, 3).rank() == 13
    assert modbasis.family(Family.HN, 3, 2).rank() == 16
    assert modbasis.family(Family.SYLOW, 3, 2).rank() == modbasis.expected_rank(Family.SYLOW, 3, 2) == 64
    assert modbasis.family(Family.WR1, 3, 2).rank() == 13
    assert modbasis.family(Family.WR2, 3, 2).rank() == 12
    assert modbasis.expected_rank(Family.WR1, 3, 2) is None
    with pytest.raises(UnsupportedError):
        modbasis.family(Family.PN11, 3, 1)
    with pytest.raises(UnsupportedError):
        modbasis.family("nosuch", 3, 2)


def test_cardinality():
    for p, n in [(2, 4), (3, 4)]:
        for tag in (Family.PN11, Family.P1N1):
            res = modbasis.verify_cardinality(tag, p, n)
            assert res, res.detail


def test_worked_example():
    res = modbasis.check_worked_example()
    assert res, res.detail
    assert res.detail == "engine rewrite"


def test_rewrite_worked_example():
    expr = parse_expr("d[2,0]^2*d[2,1]^7", 2, 3)
    dec = modbasis.rewrite(expr, Family.PN11)
    assert dec.engine == "rewrite"
    assert len(dec.pairs) == 5
    assert dec.verify()
    assert modbasis.cross_check(expr, Family.PN11)
    assert modbasis.xi(expr, Family.PN11) == parse_expr("d[3,0]^2*d[3,1]", 2, 3)


def test_relations():
    for p, n in [(2, 3), (3, 2), (2, 4)]:
        res = modbasis.check_relations(p, n)
        assert res, res.detail


def test_p1n1_xi():
    p, n = 3, 2
    fam = modbasis.family(Family.P1N1, p, n)
    for m in range(1, fam.top() + 1):
        assert modbasis.xi(GenExpr.symbol(p, n, h_sym(1), (p - 1) * m), Family.P1N1) == 0
    assert modbasis.xi(GenExpr.const(p, n), Family.P1N1) == 1
    top = GenExpr.symbol(p, n, h_sym(1), (p - 1) * (fam.top() + 1))
    assert modbasis.xi(top, Family.P1N1) == GenExpr.symbol(p, n, d_sym(2, 0)).scale(2)
    assert modbasis.rewrite(top, Family.P1N1).verify()


def test_oracle_rejects_non_members():
    with pytest.raises(NotInvariantError):
        modbasis.rewrite(GenExpr.symbol(3, 2, y_sym(1)), Family.PN11)


def test_express_in_generators():
    p, n = 3, 2
    gens = [GenExpr.symbol(p, n, d_sym(2, i)) for i in range(2)]
    d21 = invariants.make_d(p, n, 2, 1)
    assert modbasis.express_in_generators(d21 ** 2, gens) == gens[1] ** 2
    assert modbasis.express_in_generators(invariants.make_h(p, n, 2), gens) is None


def test_freeness():
    res = modbasis.verify_freeness(Family.PN11, 3, 2, degree_bound=12)
    assert res, res.detail
    res = modbasis.verify_freeness(Family.P1N1, 2, 3, degree_bound=10)
    assert res, res.detail
    res = modbasis.verify_freeness(Family.HN, 3, 2, degree_bound=10)
    assert res, res.detail


def test_decompositions():
    for tag in (Family.PN11, Family.P1N1):
        res = modbasis.check_decompositions(tag, 3, 2, samples=5, seed=3)
        assert res, res.detail


def test_freeness_full_bound():
    for p, n in [(2, 3), (3, 2)]:
        for tag in (Family.PN11, Family.P1N1):
            res = modbasis.verify_freeness(tag, p, n)
            assert res, res.detail
