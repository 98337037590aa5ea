import pytest

import dickson.lib.utils as utils


def test_parse_int_list():
    assert utils.parse_int_list("1, 2,3") == [1, 2, 3]
    assert utils.parse_int_list("") == []
    assert utils.parse_int_list("  ") == []


def test_parse_composition():
    assert utils.parse_composition("1,2", 3) == (1, 2)
    assert utils.parse_composition("3", 3) == (3,)
    with pytest.raises(utils.IndexRangeError):
        utils.parse_composition("1,1", 3)
    with pytest.raises(utils.IndexRangeError):
        utils.parse_composition("0,3", 3)


def test_q_number():
    assert utils.q_number(3, 3) == 13
    assert utils.q_number(2, 3) == 7
    assert utils.q_number(5, 1) == 1
    assert utils.q_number(2, 0) == 0


def test_errors():
    e = utils.ExpressionError("Unexpected character", 4)
    assert e.offset == 4
    assert "offset 4" in str(e)
    assert isinstance(e, utils.DicksonError)
    residual = object()
    assert utils.IdentityError("mismatch", residual).residual is residual
