import numpy as np

import dickson.lib.linalg as linalg
from dickson.lib.utils import SingularMatrixError

import pytest


def test_rank():
    assert linalg.rank_mod_p([[1, 2], [2, 4]], 3) == 1
    assert linalg.rank_mod_p([[1, 2], [2, 4]], 5) == 1
    assert linalg.rank_mod_p([[1, 1], [1, 2]], 2) == 2
    assert linalg.rank_mod_p([[2, 2], [1, 1]], 2) == 1
    assert linalg.rank_mod_p([], 3) == 0


def test_det():
    assert linalg.det_mod_p([[1, 1], [0, 1]], 2) == 1
    assert linalg.det_mod_p([[0, 1], [1, 0]], 3) == 2
    assert linalg.det_mod_p([[1, 2], [2, 4]], 7) == 0


def test_inverse():
    m = [[1, 2], [3, 4]]
    inv = linalg.inverse_mod_p(m, 5)
    assert np.array_equal(np.array(m).dot(inv) % 5, np.eye(2, dtype=np.int64))
    with pytest.raises(SingularMatrixError):
        linalg.inverse_mod_p([[1, 2], [2, 4]], 3)


def test_solve():
    sol = linalg.solve_mod_p([[1, 1], [0, 1]], [1, 2], 5)
    assert list(sol) == [4, 2]
    assert linalg.solve_mod_p([[1, 1], [2, 2]], [1, 0], 3) is None
