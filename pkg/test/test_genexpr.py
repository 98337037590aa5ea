import pytest

from dickson.lib.genexpr import (
    GenExpr,
    GenSymbol,
    L_sym,
    M_sym,
    d_sym,
    h_sym,
    moore_columns,
    y_sym,
)
from dickson.lib.utils import IndexRangeError


def sym(p, n, s, e=1):
    return GenExpr.symbol(p, n, s, e)


def test_names():
    assert d_sym(2, 0).name() == "d[2,0]"
    assert d_sym(2, 0, hat=True).name() == "dhat[2,0]"
    assert L_sym(2, 1, omit=1).name() == "L[2,1;1]"
    assert L_sym(2, 2).name() == "L[2]"
    assert M_sym(2, (0, 1)).name() == "M[2;0,1]"
    assert h_sym(1, hat=True).name() == "hhat[1]"


def test_degrees():
    assert d_sym(2, 0).degree(2) == 3
    assert d_sym(3, 2).degree(3) == 18
    assert L_sym(2).degree(3) == 4
    assert M_sym(2, (1,)).degree(3) == 2
    assert M_sym(2, (0, 1)).degree(3) == 2
    expr = sym(2, 3, d_sym(2, 0), 2) * sym(2, 3, d_sym(2, 1), 7)
    assert expr.degree() == 20
    assert str(expr) == "d[2,0]^2*d[2,1]^7"


def test_moore_columns():
    assert moore_columns(3) == [0, 1, 2]
    assert moore_columns(2, 1) == [0, 2]


def test_validate():
    with pytest.raises(IndexRangeError):
        sym(3, 2, d_sym(3, 0))
    with pytest.raises(IndexRangeError):
        sym(3, 2, M_sym(2, (1, 0)))
    with pytest.raises(IndexRangeError):
        GenSymbol(d_sym(2, 0).kind, 2, (2,)).validate(2)


def test_exterior_symbols():
    p, n = 3, 2
    m0 = sym(p, n, M_sym(2, (0,)))
    m1 = sym(p, n, M_sym(2, (1,)))
    assert not sym(p, n, M_sym(2, (0,)), 2)
    assert not (m0 * m0)
    assert m0 * m1 == -(m1 * m0)
    assert m0 * m1 * sym(p, n, L_sym(2)) == sym(p, n, L_sym(2)) * m0 * m1


def test_arithmetic():
    p, n = 3, 2
    y1 = sym(p, n, y_sym(1))
    y2 = sym(p, n, y_sym(2))
    assert (y1 + y2) ** 3 == y1 ** 3 + y2 ** 3
    assert y1 - y1 == 0
    assert 1 - y1 == -(y1 - 1)
    assert (y1 * 4).constant_term() == 0
    assert (y1 + 5).constant_term() == 2


def test_substitute_symbols():
    p, n = 2, 3
    e0 = sym(p, n, d_sym(2, 0))
    e1 = sym(p, n, d_sym(2, 1))
    expr = e0 * e1 + e1
    out = expr.substitute_symbols({d_sym(2, 1): GenExpr.const(p, n)})
    assert out == e0 + 1
    doc = expr.to_dict()
    assert doc["p"] == 2
    assert len(doc["terms"]) == 2
