import pytest

import dickson.lib.invariants as invariants
import dickson.lib.steenrod as steenrod
from dickson.lib.superpoly import SuperPoly
from dickson.lib.utils import ExpressionError, UnsupportedError


@pytest.fixture
def d32():
    p, n = 3, 2
    return invariants.make_d(p, n, 2, 0), invariants.make_d(p, n, 2, 1)


def test_ops_parse():
    ops = steenrod.SteenrodOp.parse("beta*P^2")
    assert ops == [steenrod.SteenrodOp("beta"), steenrod.SteenrodOp("P", 2)]
    assert "*".join(str(o) for o in ops) == "beta*P^2"
    assert str(steenrod.SteenrodOp("P")) == "P^0"
    with pytest.raises(ExpressionError):
        steenrod.SteenrodOp.parse("Q^2")
    with pytest.raises(ExpressionError):
        steenrod.SteenrodOp.parse("")


def test_instability_on_generators():
    p, n = 3, 2
    y1 = SuperPoly.y(p, n, 1)
    x1 = SuperPoly.x(p, n, 1)
    assert steenrod.apply_P(0, y1) == y1
    assert steenrod.apply_P(1, y1) == y1 ** 3
    assert steenrod.apply_P(2, y1) == 0
    assert steenrod.apply_P(1, x1) == 0
    assert steenrod.apply_beta(x1) == y1
    assert steenrod.apply_beta(y1) == 0
    assert steenrod.apply_ops(steenrod.SteenrodOp.parse("P^1*beta"), x1) == y1 ** 3
    with pytest.raises(UnsupportedError):
        steenrod.apply_P(1, SuperPoly.y(2, 2, 1))


def test_dickson_values(d32):
    d20, d21 = d32
    expected = {1: d20, 3: -(d21 ** 2), 4: d20 * d21, 5: -(d20 ** 2), 6: d21 ** 3}
    for k in range(9):
        assert steenrod.apply_P(k, d21) == expected.get(k, SuperPoly.zero(3, 2)), k
    expected = {
        0: d20,
        3: -(d20 * d21),
        4: -(d20 ** 2),
        6: d20 * d21 ** 2,
        7: (d20 ** 2 * d21).scale(2),
        8: d20 ** 3,
    }
    for q in range(10):
        assert steenrod.apply_P(q, d20) == expected.get(q, SuperPoly.zero(3, 2)), q


def test_closed_forms(d32):
    d20, d21 = d32
    assert steenrod.closed_form_P_d(3, 2, 1, 3) == -(d21 ** 2)
    assert steenrod.closed_form_P_d(3, 2, 0, 7) == (d20 ** 2 * d21).scale(2)
    assert steenrod.closed_form_P_d(3, 2, 0, 3, l=1) == steenrod.apply_P(3, d20 ** 3)
    for q in range(10):
        assert invariants.expand(steenrod.closed_form_P_d0(3, 2, q)) == steenrod.apply_P(q, d20), q
    assert steenrod.base_p_digits(7, 3, 2) == [1, 2]
    assert steenrod.base_p_digits(9, 3, 2) is None


def test_total_power():
    p, n = 3, 2
    res = steenrod.verify_total_power(p, n)
    assert res, res.detail
    y1 = SuperPoly.y(p, n, 1)
    assert steenrod.total_power(y1) == y1 + y1 ** 3


@pytest.mark.parametrize(
    "check",
    [
        steenrod.verify_dickson_table,
        steenrod.verify_h_action,
        steenrod.verify_h1_power_action,
        steenrod.verify_closure,
    ],
)
def test_checks(check):
    res = check(3, 2)
    assert res, res.detail


def test_dickson_action():
    res = steenrod.verify_dickson_action(3, 2, 0, 0, 7)
    assert res, res.detail
    assert "binomial-form=True" in res.detail
    res = steenrod.scan_dickson_action(3, 2)
    assert res, res.detail


def test_mui_action():
    for i in (1, 2):
        res = steenrod.verify_M_action(3, i)
        assert res, res.detail


def test_random_properties():
    for check in (steenrod.verify_cartan, steenrod.verify_instability, steenrod.verify_beta):
        res = check(3, 2, seed=11, samples=10)
        assert res, res.detail


def test_three_variables():
    for check in (steenrod.verify_dickson_table, steenrod.verify_h_action, steenrod.verify_total_power):
        res = check(3, 3)
        assert res, res.detail
    res = steenrod.verify_M_action(3, 3)
    assert res, res.detail
