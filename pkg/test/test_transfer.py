import pytest

import dickson.lib.invariants as invariants
import dickson.lib.transfer as transfer
from dickson.lib import GroupTag
from dickson.lib.genexpr import GenExpr, d_sym
from dickson.lib.parser import parse_expr
from dickson.lib.superpoly import SuperPoly
from dickson.lib.utils import NotInvariantError, UnsupportedError


def test_unit():
    for tag in (GroupTag.PN11, GroupTag.P1N1, GroupTag.UN):
        assert transfer.transfer(SuperPoly.one(3, 2), tag) == 1


def test_gl_invariants_are_fixed():
    d20 = invariants.make_d(3, 2, 2, 0)
    assert transfer.normalized_transfer(d20, GroupTag.PN11) == d20
    assert transfer.normalized_transfer(d20, "p1n1") == d20


def test_rejects():
    with pytest.raises(UnsupportedError):
        transfer.transfer(SuperPoly.one(3, 2), GroupTag.GL)
    with pytest.raises(NotInvariantError):
        transfer.transfer(SuperPoly.y(3, 2, 1), GroupTag.PN11)


def test_p1n1_transfer():
    for p, n in [(3, 2), (2, 3), (3, 3), (5, 2)]:
        res = transfer.verify_p1n1_transfer(p, n)
        assert res, res.detail


def test_top_power():
    value = transfer.transfer(parse_expr("h[1]^8", 3, 2), GroupTag.P1N1)
    assert value == invariants.make_d(3, 2, 2, 0).scale(2)
    assert transfer.as_dickson(value) == GenExpr.symbol(3, 2, d_sym(2, 0)).scale(2)


def test_top_power_sign():
    # h_1^(p^n-1) transfers to (-1)^(n+1) d_{n,0}, so odd n gives +d_{n,0}
    value = transfer.transfer(parse_expr("h[1]^26", 3, 3), GroupTag.P1N1)
    assert value == invariants.make_d(3, 3, 3, 0)
    assert transfer.as_dickson(value) == GenExpr.symbol(3, 3, d_sym(3, 0))


def test_exterior_example():
    value = transfer.transfer(transfer.exterior_example_element(3), GroupTag.UN)
    assert value == invariants.make_M(3, 2, 2, (1,)) * invariants.make_L(3, 2, 2)
    assert invariants.expand(transfer.exterior_example_element(3)) == invariants.expand(parse_expr("x1*y1^5", 3, 2))


def test_as_dickson():
    d20 = invariants.make_d(3, 2, 2, 0)
    d21 = invariants.make_d(3, 2, 2, 1)
    expected = parse_expr("d[2,0]*d[2,1] + 2*d[2,1]^4", 3, 2)
    assert transfer.as_dickson(d20 * d21 + (d21 ** 4).scale(2)) == expected
    assert transfer.as_dickson(invariants.make_h(3, 2, 1)) is None


def test_ideal_family_basis():
    assert len(transfer.ideal_family_basis(3, 2)) == 64
    assert len(transfer.ideal_family_basis(2, 3)) == 21


def test_main():
    res = transfer.verify_main(3, 2, seed=1, samples=3)
    assert res, res.detail
    res = transfer.verify_main(2, 3, seed=1, samples=3)
    assert res, res.detail
    for p, n in [(5, 2), (3, 3)]:
        res = transfer.verify_main(p, n, seed=2, samples=2)
        assert res, res.detail


def test_exterior_transfer():
    res = transfer.verify_exterior_transfer(3, 2, seed=5, samples=2)
    assert res, res.detail
    with pytest.raises(UnsupportedError):
        transfer.verify_exterior_transfer(2, 2)


def test_ideal_transfer():
    res = transfer.verify_ideal_transfer(3, 2, seed=5, samples=3)
    assert res, res.detail
