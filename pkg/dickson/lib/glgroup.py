"""Matrices over F_p, parabolic subgroups and coset representatives"""
import itertools
import json
import logging
from collections import deque
from functools import lru_cache

import numpy as np
from sympy import factorint

import dickson.lib.linalg as linalg
from dickson.lib import GroupTag
from dickson.lib.superpoly import field, substitute
from dickson.lib.utils import (
    IndexRangeError,
    SingularMatrixError,
    UnsupportedError,
    parse_int_list,
    q_number,
)

LOG = logging.getLogger(__name__)


class GLMatrix(object):
    """Invertible n x n matrix over F_p acting on the left on variables"""

    __slots__ = ("p", "entries", "_key")

    def __init__(self, entries, p, check=True):
        field(p)
        a = np.array(entries, dtype=np.int64) % p
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise IndexRangeError("Matrix must be square, got shape {}".format(a.shape))
        if check and linalg.det_mod_p(a, p) == 0:
            raise SingularMatrixError("Matrix {} is singular mod {}".format(a.tolist(), p))
        a.setflags(write=False)
        self.p = p
        self.entries = a
        self._key = None

    @property
    def n(self):
        return self.entries.shape[0]

    @classmethod
    def identity(cls, n, p):
        return cls(np.eye(n, dtype=np.int64), p, check=False)

    def __matmul__(self, other):
        if self.p != other.p or self.n != other.n:
            raise IndexRangeError("Cannot multiply matrices of different shape or field")
        return GLMatrix(self.entries @ other.entries, self.p, check=False)

    __mul__ = __matmul__

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = GLMatrix.identity(self.n, self.p)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def inverse(self):
        return GLMatrix(linalg.inverse_mod_p(self.entries, self.p), self.p, check=False)

    def det(self):
        return linalg.det_mod_p(self.entries, self.p)

    def transpose(self):
        return GLMatrix(self.entries.T, self.p, check=False)

    def scaled(self, c):
        return GLMatrix(self.entries * c, self.p, check=False)

    def to_list(self):
        return self.entries.tolist()

    def key(self):
        if self._key is None:
            self._key = (self.p, self.entries.tobytes())
        return self._key

    def __eq__(self, other):
        return isinstance(other, GLMatrix) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return json.dumps(self.to_list())


class Composition(object):
    """Ordered composition of n, read from the top-left block

    ``Composition((1, 2))`` has a 1x1 block followed by a 2x2 block, so
    nu = (1, 3).
    """

    def __init__(self, parts):
        parts = tuple(int(v) for v in parts)
        if not parts or any(v < 1 for v in parts):
            raise IndexRangeError("Composition parts must be positive: {}".format(parts))
        self.parts = parts

    @staticmethod
    def from_str(text):
        return Composition(parse_int_list(text))

    @property
    def n(self):
        return sum(self.parts)

    @property
    def nu(self):
        return tuple(itertools.accumulate(self.parts))

    def blocks(self):
        """0-based index ranges of the diagonal blocks"""
        start = 0
        out = []
        for s in self.parts:
            out.append(range(start, start + s))
            start += s
        return out

    def block_of(self, i):
        for b, rng in enumerate(self.blocks()):
            if i in rng:
                return b
        raise IndexRangeError("Index {} outside composition {}".format(i, self.parts))

    def refines(self, other):
        """True when every flag of other is also a flag of self"""
        return other.n == self.n and set(other.nu) <= set(self.nu)

    def __eq__(self, other):
        return isinstance(other, Composition) and other.parts == self.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return json.dumps(list(self.parts))


def compositions(n):
    """Every composition of n"""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def elementary(n, p, i, j, c=1):
    """Transvection I + c E_ij with 0-based indices"""
    a = np.eye(n, dtype=np.int64)
    a[i, j] = c
    return GLMatrix(a, p, check=False)


def diagonal(n, p, i, c):
    a = np.eye(n, dtype=np.int64)
    a[i, i] = c
    return GLMatrix(a, p)


def omega(n, p):
    """Antidiagonal involution"""
    return GLMatrix(np.eye(n, dtype=np.int64)[::-1], p, check=False)


def gl_order(n, p):
    order = 1
    for i in range(n):
        order *= p ** n - p ** i
    return order


def parabolic_order(comp, p):
    order = 1
    for s in comp.parts:
        order *= gl_order(s, p)
    cross = sum(a * b for a, b in itertools.combinations(comp.parts, 2))
    return order * p ** cross


def parabolic_generators(comp, p, transposed=False):
    """Generators of the block upper triangular group P(I)

    Per block, every elementary transvection inside the block together with a
    primitive-root diagonal on its first coordinate; across blocks, every
    transvection above the diagonal blocks.
    """
    if not isinstance(comp, Composition):
        comp = Composition(comp)
    n = comp.n
    root = field(p).primitive_root()
    gens = []
    for rng in comp.blocks():
        for i, j in itertools.permutations(rng, 2):
            gens.append(elementary(n, p, i, j))
        if root != 1:
            gens.append(diagonal(n, p, rng[0], root))
    blocks = comp.blocks()
    for a, b in itertools.combinations(range(len(blocks)), 2):
        for i in blocks[a]:
            for j in blocks[b]:
                gens.append(elementary(n, p, i, j))
    if transposed:
        gens = [g.transpose() for g in gens]
    return gens


def unipotent_generators(n, p):
    return [elementary(n, p, i, j) for i, j in itertools.combinations(range(n), 2)]


def generators(tag, n, p, transposed=False):
    """Generators of a tagged subgroup of GL(n, F_p)"""
    tag = GroupTag.from_str(tag)
    if tag == GroupTag.GL:
        gens = parabolic_generators(Composition((n,)), p)
    elif tag == GroupTag.BN:
        gens = parabolic_generators(Composition((1,) * n), p)
    elif tag in (GroupTag.UN, GroupTag.SYLOW):
        gens = unipotent_generators(n, p)
    elif tag == GroupTag.P1N1:
        gens = parabolic_generators(Composition((1, n - 1)), p)
    elif tag == GroupTag.PN11:
        gens = parabolic_generators(Composition((n - 1, 1)), p)
    else:
        raise UnsupportedError("Unknown group tag {}".format(tag))
    if transposed:
        gens = [g.transpose() for g in gens]
    return gens


def conjugate_by_omega(gens):
    return [omega(g.n, g.p) @ g @ omega(g.n, g.p) for g in gens]


def weyl_generators(tag, n, p, comp=None):
    """Generators of omega G omega, the group fixing the hatted classes"""
    if comp is not None:
        return conjugate_by_omega(parabolic_generators(comp, p))
    return conjugate_by_omega(generators(tag, n, p))


def preserves_flag(g, comp):
    """g(V^i) = V^i for every flag space V^i = <y_1..y_nu_i>"""
    a = g.entries
    for v in comp.nu:
        if np.any(a[v:, :v]):
            return False
    return True


def in_subgroup(g, tag):
    """Membership test by shape"""
    tag = GroupTag.from_str(tag)
    a = g.entries
    n = g.n
    if tag == GroupTag.GL:
        return True
    if tag in (GroupTag.UN, GroupTag.SYLOW):
        return bool(np.all(np.diag(a) == 1) and not np.any(np.tril(a, -1)))
    if tag == GroupTag.BN:
        return not np.any(np.tril(a, -1))
    if tag == GroupTag.P1N1:
        return not np.any(a[1:, 0])
    if tag == GroupTag.PN11:
        return not np.any(a[n - 1, : n - 1])
    raise UnsupportedError("Unknown group tag {}".format(tag))


def group_closure(gens, limit=200000):
    """Enumerate the group generated by gens by breadth-first search"""
    if not gens:
        return set()
    ident = GLMatrix.identity(gens[0].n, gens[0].p)
    seen = {ident}
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = g @ s
            if h not in seen:
                seen.add(h)
                queue.append(h)
                if len(seen) > limit:
                    raise UnsupportedError("Group closure exceeds {} elements".format(limit))
    return seen


def group_order(gens):
    return len(group_closure(gens))


def is_invariant(f, gens):
    """True when every generator fixes f"""
    return all(substitute(f, g) == f for g in gens)


@lru_cache(maxsize=None)
def find_primitive_poly(p, n):
    """Lexicographically smallest primitive polynomial of degree n over F_p

    Returns coefficients (c_0, ..., c_{n-1}, 1) from the constant term up.
    """
    order = p ** n - 1
    primes = list(factorint(order).keys())
    for coeffs in itertools.product(range(p), repeat=n):
        if coeffs[0] == 0:
            continue
        poly = tuple(coeffs) + (1,)
        a = companion_matrix(poly, p)
        ident = GLMatrix.identity(n, p)
        if a ** order != ident:
            continue
        if any(a ** (order // q) == ident for q in primes):
            continue
        LOG.debug("Primitive polynomial for p={} n={}: {}".format(p, n, poly))
        return poly
    raise UnsupportedError("No primitive polynomial of degree {} mod {}".format(n, p))


def companion_matrix(poly, p):
    """Companion matrix with subdiagonal ones and last column -c_0..-c_{n-1}"""
    n = len(poly) - 1
    if n < 1 or poly[-1] % p != 1:
        raise IndexRangeError("Companion matrix needs a monic polynomial of degree >= 1")
    a = np.zeros((n, n), dtype=np.int64)
    for i in range(n - 1):
        a[i + 1, i] = 1
    for i in range(n):
        a[i, n - 1] = -poly[i]
    return GLMatrix(a, p, check=False)


def evaluate_matrix_poly(poly, a):
    """Pr(A) computed by Horner's rule"""
    n = a.n
    acc = np.zeros((n, n), dtype=np.int64)
    for c in reversed(poly):
        acc = (acc @ a.entries + c * np.eye(n, dtype=np.int64)) % a.p
    return acc


def normalize_scalar(g):
    """Scale g so the first nonzero entry of its first column is 1"""
    col = g.entries[:, 0]
    lead = int(col[np.nonzero(col)[0][0]])
    return g.scaled(pow(lead, g.p - 2, g.p))


class CosetFamily(object):
    """Left coset representatives of a subgroup of GL(n, F_p)"""

    def __init__(self, tag, p, n, reps, variant="plain"):
        self.tag = GroupTag.from_str(tag)
        self.p = p
        self.n = n
        self.reps = list(reps)
        self.variant = variant

    def index(self):
        return len(self.reps)

    def member(self, g):
        """Membership in the subgroup this family is a transversal of"""
        if self.variant == "transposed":
            return in_subgroup(g.transpose(), self.tag)
        if self.variant == "omega":
            w = omega(self.n, self.p)
            return in_subgroup(w @ g @ w, self.tag)
        return in_subgroup(g, self.tag)

    def subgroup_generators(self):
        gens = generators(self.tag, self.n, self.p)
        if self.variant == "transposed":
            return [g.transpose() for g in gens]
        if self.variant == "omega":
            return conjugate_by_omega(gens)
        return gens

    def transposed(self):
        """Transversal of the transposed subgroup"""
        reps = [g.inverse().transpose() for g in self.reps]
        return CosetFamily(self.tag, self.p, self.n, reps, "transposed")

    def omega_conjugated(self):
        w = omega(self.n, self.p)
        reps = [w @ g @ w for g in self.reps]
        return CosetFamily(self.tag, self.p, self.n, reps, "omega")

    def to_dict(self):
        return {
            "tag": str(self.tag),
            "p": self.p,
            "n": self.n,
            "variant": self.variant,
            "reps": [g.to_list() for g in self.reps],
        }

    def __repr__(self):
        return json.dumps(self.to_dict())


def subgroup_index(tag, n, p):
    tag = GroupTag.from_str(tag)
    if tag in (GroupTag.P1N1, GroupTag.PN11):
        return q_number(p, n)
    if tag in (GroupTag.UN, GroupTag.SYLOW):
        index = 1
        for m in range(1, n + 1):
            index *= p ** m - 1
        return index
    raise UnsupportedError("No coset family for tag {}".format(tag))


def _dedupe(mats):
    seen = set()
    out = []
    for g in mats:
        if g not in seen:
            seen.add(g)
            out.append(g)
    return out


def _embed(block, n, p):
    """diag(I_{n-m}, block)"""
    m = block.n
    a = np.eye(n, dtype=np.int64)
    a[n - m :, n - m :] = block.entries
    return GLMatrix(a, p, check=False)


@lru_cache(maxsize=None)
def coset_reps(p, n, tag):
    """Left coset representatives built from companion matrices

    P(1,n-1): inverses of powers of A_n up to scalars.
    P(n-1,1): transposes of powers of A_n up to scalars.
    U_n: products B_n ... B_1 with B_m = diag(I, A_m^(-i_m)), 0 <= i_m <= p^m - 2.
    """
    field(p)
    tag = GroupTag.from_str(tag)
    if tag in (GroupTag.P1N1, GroupTag.PN11):
        a = companion_matrix(find_primitive_poly(p, n), p)
        if tag == GroupTag.P1N1:
            mats = [(a ** i).inverse() for i in range(p ** n - 1)]
        else:
            mats = [(a ** i).transpose() for i in range(p ** n - 1)]
        reps = _dedupe(normalize_scalar(g) for g in mats)
        expected_mod = 1
    elif tag in (GroupTag.UN, GroupTag.SYLOW):
        factors = []
        for m in range(n, 0, -1):
            am_inv = companion_matrix(find_primitive_poly(p, m), p).inverse()
            factors.append([_embed(am_inv ** i, n, p) for i in range(p ** m - 1)])
        reps = []
        for combo in itertools.product(*factors):
            g = GLMatrix.identity(n, p)
            for b in combo:
                g = g @ b
            reps.append(g)
        expected_mod = (-1) ** n % p
    else:
        raise UnsupportedError("No coset family for tag {}".format(tag))
    index = subgroup_index(tag, n, p)
    if len(reps) != index or index % p != expected_mod:
        raise UnsupportedError(
            "Coset family {} at p={} n={} has {} reps, expected {}".format(
                tag, p, n, len(reps), index
            )
        )
    LOG.info("Built {} coset representatives for {} at p={} n={}".format(index, tag, p, n))
    return CosetFamily(tag, p, n, reps)


def verify_coset_family(family):
    """Pairwise check that reps lie in distinct left cosets"""
    inverses = [g.inverse() for g in family.reps]
    for i, gi in enumerate(inverses):
        for gj in family.reps[i + 1 :]:
            if family.member(gi @ gj):
                return False
    return True
