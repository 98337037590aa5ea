import pytest

import dickson.lib.glgroup as glgroup
import dickson.lib.invariants as invariants
from dickson.lib import GroupTag
from dickson.lib.genexpr import GenExpr, d_sym
from dickson.lib.superpoly import SuperPoly
from dickson.lib.utils import IndexRangeError, UnsupportedError


def y(p, n, i):
    return SuperPoly.y(p, n, i)


def test_dickson_two_variables():
    p, n = 2, 2
    y1, y2 = y(p, n, 1), y(p, n, 2)
    assert invariants.make_d(p, n, 2, 1) == y1 ** 2 + y1 * y2 + y2 ** 2
    assert invariants.make_d(p, n, 2, 0) == y1 ** 2 * y2 + y1 * y2 ** 2
    assert invariants.make_d(p, n, 1, 0) == y1
    assert invariants.make_d(p, n, 2, 2) == 1
    assert invariants.make_d(3, 2, 2, 1, cross_check=True) == invariants.make_d_by_division(3, 2, 2, 1)


def test_h_and_L():
    p, n = 3, 2
    y1, y2 = y(p, n, 1), y(p, n, 2)
    assert invariants.make_h(p, n, 1) == y1
    assert invariants.make_h(p, n, 2) == y2 ** 3 - y1 ** 2 * y2
    assert invariants.make_L(p, n, 2) == y1 * y2 ** 3 - y2 * y1 ** 3
    assert invariants.make_h(p, n, 1, hat=True) == y2
    with pytest.raises(IndexRangeError):
        invariants.make_h(p, n, 3)


def test_mui():
    p, n = 3, 2
    m10 = invariants.make_M(p, n, 1, (0,))
    assert m10 == SuperPoly.x(p, n, 1)
    with pytest.raises(UnsupportedError):
        invariants.make_M(2, 2, 2, (0,))
    assert invariants.mui_product_sign(2) == -1
    assert invariants.mui_product_sign(3) == -1
    assert invariants.mui_product_sign(4) == 1


@pytest.mark.parametrize("p,n", [(2, 2), (2, 3), (3, 2)])
def test_identities(p, n):
    for check in (
        invariants.check_d_constructions,
        invariants.check_dickson_recursion,
        invariants.check_h_hat,
        invariants.check_orbit_polynomial,
        invariants.check_L_expansion,
        invariants.check_decomposition,
        invariants.check_hat_consistency,
        invariants.check_invariance,
    ):
        res = check(p, n)
        assert res, res.detail


def test_exterior_identities():
    for check in (invariants.check_M_expansion, invariants.check_mui_relations):
        res = check(3, 2)
        assert res, res.detail
    assert invariants.check_mui_products(3, 2, "top", (0,))


def test_restriction_images():
    assert len(invariants.restriction_image_generators(GroupTag.GL, 3, 2)) == 5
    assert len(invariants.restriction_image_generators(GroupTag.SYLOW, 3, 2)) == 4
    assert len(invariants.restriction_image_generators(GroupTag.P1N1, 3, 2)) == 4
    for tag in (GroupTag.GL, GroupTag.SYLOW, GroupTag.P1N1, GroupTag.PN11):
        res = invariants.check_restriction_images(3, 2, tag)
        assert res, res.detail


def test_parabolic_generators():
    for comp in glgroup.compositions(3):
        res = invariants.check_parabolic_generators(2, 3, comp)
        assert res, res.detail
    assert len(invariants.kuhn_mitchell_generators(3, 3, (1, 2))) == 3


def test_expansion_cache():
    invariants.clear_cache()
    expr = GenExpr.symbol(3, 2, d_sym(2, 0))
    value = invariants.expand(expr)
    assert value == invariants.make_d(3, 2, 2, 0)
    records = invariants.cache_records()
    assert [r["symbol"] for r in records] == ["d[2,0]"]
    invariants.clear_cache()
    assert invariants.cache_records() == []
    assert invariants.seed_cache(records) == 1
    assert invariants.seed_cache(records) == 0
    assert invariants.expand(expr) == value


def test_identities_three_variables():
    for check in (
        invariants.check_M_expansion,
        invariants.check_mui_relations,
        invariants.check_hat_consistency,
        invariants.check_invariance,
    ):
        res = check(3, 3)
        assert res, res.detail
    res = invariants.check_mui_products(3, 3, "top", (0,))
    assert res, res.detail
    res = invariants.check_mui_products(3, 3, "lower", (0,), 1)
    assert res, res.detail
