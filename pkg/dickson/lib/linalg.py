"""Linear algebra over F_p on numpy integer arrays"""
import numpy as np

from dickson.lib.utils import SingularMatrixError


def as_array(m, p):
    return np.array(m, dtype=np.int64).reshape(len(m), -1) % p


def row_reduce(m, p, augment=None):
    """Reduced row echelon form of m over F_p

    :param m: Matrix as nested lists or an array
    :param p: Prime modulus
    :param augment: Optional right hand side columns carried through the same row operations
    :return Tuple of (reduced matrix, pivot columns, reduced augment or None)
    """
    a = as_array(m, p)
    n_rows, n_cols = a.shape
    if augment is not None:
        t = np.array(augment, dtype=np.int64).reshape(n_rows, -1) % p
        a = np.concatenate([a, t], axis=1)
    pivots = []
    piv_r = 0
    for piv_c in range(n_cols):
        if piv_r >= n_rows:
            break
        nz = np.nonzero(a[piv_r:, piv_c])[0]
        if not len(nz):
            continue
        i_row = piv_r + nz[0]
        if i_row != piv_r:
            a[[piv_r, i_row]] = a[[i_row, piv_r]]
        inv = pow(int(a[piv_r, piv_c]), p - 2, p)
        a[piv_r] = a[piv_r] * inv % p
        col = a[:, piv_c].copy()
        col[piv_r] = 0
        others = np.nonzero(col)[0]
        if len(others):
            a[others] = (a[others] - np.outer(col[others], a[piv_r])) % p
        pivots.append(piv_c)
        piv_r += 1
    if augment is not None:
        return a[:, :n_cols], pivots, a[:, n_cols:]
    return a, pivots, None


def rank_mod_p(m, p):
    if not len(m):
        return 0
    _, pivots, _ = row_reduce(m, p)
    return len(pivots)


def solve_mod_p(a, b, p):
    """One solution x of a x = b over F_p with free variables set to 0

    :return numpy vector, or None when the system is inconsistent
    """
    a = as_array(a, p)
    n_rows, n_cols = a.shape
    r, pivots, t = row_reduce(a, p, augment=np.array(b).reshape(n_rows, 1))
    rank = len(pivots)
    if np.any(t[rank:] % p):
        return None
    sol = np.zeros(n_cols, dtype=np.int64)
    for row, c in enumerate(pivots):
        sol[c] = t[row, 0]
    return sol


def det_mod_p(m, p):
    a = as_array(m, p)
    n = a.shape[0]
    det = 1
    for c in range(n):
        nz = np.nonzero(a[c:, c])[0]
        if not len(nz):
            return 0
        r = c + nz[0]
        if r != c:
            a[[c, r]] = a[[r, c]]
            det = -det
        piv = int(a[c, c])
        det = det * piv % p
        inv = pow(piv, p - 2, p)
        below = a[c + 1 :, c].copy()
        if len(below):
            a[c + 1 :] = (a[c + 1 :] - np.outer(below * inv % p, a[c])) % p
    return det % p


def inverse_mod_p(m, p):
    a = as_array(m, p)
    n = a.shape[0]
    r, pivots, inv = row_reduce(a, p, augment=np.eye(n, dtype=np.int64))
    if len(pivots) != n:
        raise SingularMatrixError("Matrix is singular mod {}".format(p))
    return inv


def elementary_factors(rows, p):
    """Factor an invertible matrix into elementary substitutions

    The result lists the steps in the order they are applied to a polynomial:
    ("swap", i, j), ("scale", i, a) meaning y_i -> a*y_i, and
    ("add", src, dst, a) meaning y_dst -> y_dst + a*y_src. Indices are 0-based.
    """
    a = [[v % p for v in row] for row in rows]
    n = len(a)
    steps = []
    for c in range(n):
        r = next((i for i in range(c, n) if a[i][c]), None)
        if r is None:
            raise SingularMatrixError("Matrix is singular mod {}".format(p))
        if r != c:
            a[r], a[c] = a[c], a[r]
            steps.append(("swap", r, c))
        piv = a[c][c]
        if piv != 1:
            inv = pow(piv, p - 2, p)
            a[c] = [v * inv % p for v in a[c]]
            steps.append(("scale", c, piv))
        for i in range(n):
            f = a[i][c]
            if i != c and f:
                a[i] = [(u - f * v) % p for u, v in zip(a[i], a[c])]
                steps.append(("add", i, c, f))
    steps.reverse()
    return steps
