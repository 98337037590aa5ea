import pytest

from dickson.lib.genexpr import GenExpr, L_sym, M_sym, d_sym, dI_sym, h_sym
from dickson.lib.parser import parse_expr, tokenize
from dickson.lib.utils import ExpressionError, IndexRangeError


def test_tokenize():
    tokens = tokenize("d[2,0]^2")
    assert [t[1] for t in tokens] == ["d", "[", 2, ",", 0, "]", "^", 2, None]
    assert tokens[-1][0] == "end"
    assert tokens[2][2] == 2


def test_worked_example():
    expr = parse_expr("d[2,0]^2*d[2,1]^7", 2, 3)
    assert expr == GenExpr.symbol(2, 3, d_sym(2, 0), 2) * GenExpr.symbol(2, 3, d_sym(2, 1), 7)


def test_empty():
    with pytest.raises(ExpressionError) as e:
        parse_expr("", 2, 3)
    assert e.value.offset == 0
    with pytest.raises(ExpressionError):
        parse_expr("   ", 2, 3)


def test_characteristic_two():
    assert parse_expr("y1+y1", 2, 1) == 0
    assert parse_expr("2*d[2,1]^2 - 5", 3, 2) == GenExpr.symbol(3, 2, d_sym(2, 1), 2).scale(2) + 1


def test_errors_carry_offset():
    with pytest.raises(ExpressionError) as e:
        parse_expr("d[2,0] + q[1]", 3, 2)
    assert e.value.offset == 9
    with pytest.raises(ExpressionError) as e:
        parse_expr("y1 # 2", 3, 2)
    assert e.value.offset == 3
    with pytest.raises(ExpressionError):
        parse_expr("(y1 + y2", 3, 2)
    with pytest.raises(ExpressionError):
        parse_expr("x1*y1", 2, 2)
    with pytest.raises(IndexRangeError):
        parse_expr("d[3,0]", 3, 2)


def test_hats():
    hatted = GenExpr.symbol(3, 2, d_sym(2, 0, hat=True))
    assert parse_expr("dhat[2,0]", 3, 2) == hatted
    assert parse_expr("d[2,0]^", 3, 2) == hatted
    assert parse_expr("d[2,0]^^2", 3, 2) == hatted ** 2
    assert parse_expr("hhat[1]", 3, 2) == GenExpr.symbol(3, 2, h_sym(1, hat=True))


def test_symbols():
    p, n = 3, 3
    assert parse_expr("d[3,1;I=1,2]", p, n) == parse_expr("dI[3,1]", p, n)
    assert parse_expr("dI[3,1]", p, n) == GenExpr.symbol(p, n, dI_sym(3, 1))
    assert parse_expr("L[2,1;1]", p, n) == GenExpr.symbol(p, n, L_sym(2, 1, omit=1))
    assert parse_expr("M[3;0,2]", p, n) == GenExpr.symbol(p, n, M_sym(3, (0, 2)))
    assert parse_expr("M[3;0;2]", p, n) == GenExpr.symbol(p, n, M_sym(3, (0,), omit=2))
    with pytest.raises(ExpressionError):
        parse_expr("d[3,1;I=2,1]", p, n)


def test_precedence():
    p, n = 5, 2
    y1 = parse_expr("y1", p, n)
    y2 = parse_expr("y2", p, n)
    assert parse_expr("-y1^2", p, n) == -(y1 ** 2)
    assert parse_expr("2*y1+y2^2", p, n) == y1.scale(2) + y2 ** 2
    assert parse_expr("(y1+y2)^2", p, n) == y1 ** 2 + (y1 * y2).scale(2) + y2 ** 2
    assert parse_expr("y1\n+ y2", p, n) == y1 + y2
    assert parse_expr("x1*x1", p, n) == 0


def test_round_trip():
    p, n = 3, 3
    for text in [
        "d[2,0]^2*d[2,1]^7 + 2*y3",
        "M[3;0,1]*L[3] - hhat[2]",
        "L[2,1;1]*dI[3,2]^2",
        "hom[3,1] + hsw[2,1]^2",
        "Mhat[2;1]*x1",
    ]:
        expr = parse_expr(text, p, n)
        assert parse_expr(str(expr), p, n) == expr


def test_implicit_product():
    p, n = 3, 2
    assert parse_expr("2x1y1^5", p, n) == parse_expr("2*x1*y1^5", p, n)
    assert parse_expr("y1 y2", p, n) == parse_expr("y1*y2", p, n)
    assert parse_expr("d[2,0]d[2,1]^2 + 2(y1 + y2)", p, n) == parse_expr("d[2,0]*d[2,1]^2 + 2*(y1+y2)", p, n)
    assert parse_expr("-2h[1]^2", p, n) == GenExpr.symbol(p, n, h_sym(1), 2)
    with pytest.raises(ExpressionError):
        parse_expr("y1 2", p, n)
