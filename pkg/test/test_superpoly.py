import random

import pytest

import dickson.lib.glgroup as glgroup
from dickson.lib.superpoly import (
    SuperPoly,
    binom_mod_p,
    exact_div,
    field,
    primitive_root,
    random_superpoly,
    substitute,
)
from dickson.lib.utils import InexactDivisionError, UnsupportedError


def y(p, n, i):
    return SuperPoly.y(p, n, i)


def x(p, n, i):
    return SuperPoly.x(p, n, i)


def test_field():
    assert field(5).inv(2) == 3
    assert field(3).primitive_root() == 2
    assert field(2).primitive_root() == 1
    assert [field(p).primitive_root() for p in (5, 7, 11, 13)] == [2, 3, 2, 2]
    with pytest.raises(UnsupportedError):
        primitive_root(9)
    with pytest.raises(UnsupportedError):
        field(4)
    with pytest.raises(UnsupportedError):
        field(17)


def test_binom():
    assert binom_mod_p(7, 2, 2) == 1
    assert binom_mod_p(3, 1, 3) == 0
    assert binom_mod_p(5, 2, 3) == 1
    assert binom_mod_p(2, 3, 5) == 0


def test_exterior_sign():
    p, n = 3, 2
    assert x(p, n, 1) * x(p, n, 1) == 0
    assert x(p, n, 1) * x(p, n, 2) == -(x(p, n, 2) * x(p, n, 1))
    f = x(p, n, 1) * y(p, n, 2)
    assert f * f == 0
    with pytest.raises(UnsupportedError):
        x(2, 2, 1)


def test_characteristic():
    assert not (y(2, 3, 1) + y(2, 3, 1))
    s = y(3, 2, 1) + y(3, 2, 2)
    assert s ** 3 == y(3, 2, 1) ** 3 + y(3, 2, 2) ** 3
    assert (s ** 9).degrees() == [9]


def test_exact_div():
    p, n = 5, 2
    f = y(p, n, 1) ** 2 - y(p, n, 2) ** 2
    assert exact_div(f, y(p, n, 1) - y(p, n, 2)) == y(p, n, 1) + y(p, n, 2)
    with pytest.raises(InexactDivisionError):
        exact_div(y(p, n, 1) ** 2 + y(p, n, 2), y(p, n, 1))


def test_frobenius():
    f = y(3, 2, 1) + y(3, 2, 2).scale(2)
    assert f.frobenius(1) == f ** 3
    with pytest.raises(UnsupportedError):
        x(3, 2, 1).frobenius()


def test_substitute_left_action():
    p, n = 3, 2
    g = glgroup.elementary(n, p, 1, 0)
    assert substitute(y(p, n, 1), g) == y(p, n, 1) + y(p, n, 2)
    assert substitute(y(p, n, 2), g) == y(p, n, 2)
    assert substitute(x(p, n, 1), g) == x(p, n, 1) + x(p, n, 2)


def test_substitute_composition():
    p, n = 3, 2
    rng = random.Random(7)
    g = glgroup.GLMatrix([[1, 2], [1, 0]], p)
    h = glgroup.GLMatrix([[2, 1], [0, 1]], p)
    for _ in range(5):
        f = random_superpoly(p, n, rng)
        assert substitute(substitute(f, g), h) == substitute(f, h @ g)


def test_components():
    p, n = 3, 2
    f = x(p, n, 1) * y(p, n, 2) + y(p, n, 1) ** 2
    assert f.degrees() == [2]
    assert not f.is_pure()
    parts = f.ext_components()
    assert parts[(1,)] == y(p, n, 2)
    assert parts[()] == y(p, n, 1) ** 2
    assert SuperPoly.from_dict(f.to_dict()) == f
    assert str(f) == "y1^2 + x1*y2"
