"""Exact arithmetic in E(x_1..x_n) (x) F_p[y_1..y_n]

A SuperPoly is a sparse map from monomials to residues 1..p-1. A monomial is
the pair (ext, yexp): ext is the strictly increasing tuple of exterior indices
(1-based) and yexp the exponent vector of the polynomial variables. Values are
never mutated after construction.
"""
import json
from functools import lru_cache
from typing import NamedTuple, Tuple

from sympy import isprime, ntheory

import dickson.lib.config as config
import dickson.lib.linalg as linalg
from dickson.lib.utils import (
    FieldMismatchError,
    InexactDivisionError,
    UnsupportedError,
)


class PrimeField(object):
    """The prime field F_p with residues 0..p-1"""

    def __init__(self, p):
        if not isinstance(p, int) or not isprime(p) or p > config.max_prime:
            raise UnsupportedError(
                "p must be a prime between 2 and {}, got {}".format(config.max_prime, p)
            )
        self.p = p

    def reduce(self, a):
        return a % self.p

    def inv(self, a):
        a = a % self.p
        if not a:
            raise ZeroDivisionError("0 has no inverse in F_{}".format(self.p))
        return pow(a, self.p - 2, self.p)

    def primitive_root(self):
        """Smallest generator of the multiplicative group"""
        return primitive_root(self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return "F_{}".format(self.p)


@lru_cache(maxsize=None)
def field(p):
    return PrimeField(p)


@lru_cache(maxsize=None)
def primitive_root(p):
    """Smallest generator of F_p^*"""
    if not isprime(p):
        raise UnsupportedError("No primitive root mod {}".format(p))
    return int(ntheory.primitive_root(p))


class SuperMonomial(NamedTuple):
    ext: Tuple[int, ...]
    yexp: Tuple[int, ...]

    @property
    def degree(self):
        """Algebraic degree, x and y both count 1"""
        return len(self.ext) + sum(self.yexp)

    @property
    def topological_degree(self):
        return len(self.ext) + 2 * sum(self.yexp)


@lru_cache(maxsize=None)
def binom_mod_p(m, k, p):
    """Binomial coefficient C(m, k) reduced mod p by Lucas' theorem

    >>> binom_mod_p(7, 2, 2)
    1

    >>> binom_mod_p(3, 1, 3)
    0
    """
    if k < 0 or m < 0 or k > m:
        return 0
    res = 1
    while m or k:
        mi, ki = m % p, k % p
        if ki > mi:
            return 0
        num = 1
        den = 1
        for t in range(ki):
            num = num * (mi - t) % p
            den = den * (t + 1) % p
        res = res * num * pow(den, p - 2, p) % p
        m //= p
        k //= p
    return res


def sort_sign(seq):
    """Sort a sequence of exterior indices and return (sign, sorted tuple)

    Sign is 0 when an index repeats.

    >>> sort_sign((2, 1))
    (-1, (1, 2))

    >>> sort_sign((1, 1))
    (0, ())
    """
    if len(set(seq)) != len(seq):
        return 0, ()
    inversions = 0
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if seq[a] > seq[b]:
                inversions += 1
    return (-1 if inversions % 2 else 1), tuple(sorted(seq))


def merge_ext(e1, e2):
    """Sign and support of the exterior product x_e1 * x_e2"""
    if not e1:
        return 1, e2
    if not e2:
        return 1, e1
    if set(e1).intersection(e2):
        return 0, ()
    inversions = 0
    for a in e1:
        for b in e2:
            if a > b:
                inversions += 1
    return (-1 if inversions % 2 else 1), tuple(sorted(e1 + e2))


def monomial_key(mono):
    """Degree-lexicographic order key with y_1 > ... > y_n"""
    ext, yexp = mono
    return (len(ext) + sum(yexp), yexp, ext)


class SuperPoly(object):
    """Element of E(x_1..x_n) (x) F_p[y_1..y_n]"""

    __slots__ = ("p", "n", "_terms", "_hash")

    def __init__(self, p, n, terms=None):
        self.p = p
        self.n = n
        clean = {}
        if terms:
            for mono, c in terms.items():
                c = c % p
                if c:
                    clean[(tuple(mono[0]), tuple(mono[1]))] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, p, n, terms):
        obj = cls.__new__(cls)
        obj.p = p
        obj.n = n
        obj._terms = {k: c for k, c in terms.items() if c}
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, p, n):
        return cls._raw(p, n, {})

    @classmethod
    def const(cls, p, n, c):
        return cls._raw(p, n, {((), (0,) * n): c % p})

    @classmethod
    def one(cls, p, n):
        return cls.const(p, n, 1)

    @classmethod
    def monomial(cls, p, n, ext=(), yexp=None, c=1):
        yexp = tuple(yexp) if yexp is not None else (0,) * n
        if len(yexp) != n or any(i < 1 or i > n for i in ext):
            raise FieldMismatchError("Monomial does not fit {} variables".format(n))
        if ext and p == 2:
            raise UnsupportedError("Exterior generators are not available at p=2")
        sign, ext = sort_sign(tuple(ext))
        return cls._raw(p, n, {(ext, yexp): sign * c % p})

    @classmethod
    def y(cls, p, n, i):
        yexp = [0] * n
        yexp[i - 1] = 1
        return cls.monomial(p, n, (), yexp)

    @classmethod
    def x(cls, p, n, i):
        return cls.monomial(p, n, (i,), None)

    # Accessors

    def terms(self):
        """Iterate (SuperMonomial, coefficient) pairs in descending order"""
        for mono in sorted(self._terms, key=monomial_key, reverse=True):
            yield SuperMonomial(*mono), self._terms[mono]

    def coefficient(self, ext, yexp):
        return self._terms.get((tuple(ext), tuple(yexp)), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def is_pure(self):
        """True when no term carries an exterior factor"""
        return all(not ext for ext, _ in self._terms)

    def constant_term(self):
        return self._terms.get(((), (0,) * self.n), 0)

    def degree(self):
        if not self._terms:
            return -1
        return max(len(e) + sum(y) for e, y in self._terms)

    def degrees(self):
        return sorted({len(e) + sum(y) for e, y in self._terms})

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def parity(self):
        """Exterior parity of a homogeneous-in-x element"""
        parities = {len(e) % 2 for e, _ in self._terms}
        if len(parities) > 1:
            raise UnsupportedError("Element has mixed exterior parity")
        return parities.pop() if parities else 0

    def homogeneous_component(self, d):
        return SuperPoly._raw(
            self.p,
            self.n,
            {k: c for k, c in self._terms.items() if len(k[0]) + sum(k[1]) == d},
        )

    def truncate(self, d):
        """Drop every term of degree above d"""
        return SuperPoly._raw(
            self.p,
            self.n,
            {k: c for k, c in self._terms.items() if len(k[0]) + sum(k[1]) <= d},
        )

    def ext_components(self):
        """Split as sum x_E * f_E and return {E: f_E} with f_E pure"""
        out = {}
        for (ext, yexp), c in self._terms.items():
            out.setdefault(ext, {})[((), yexp)] = c
        return {e: SuperPoly._raw(self.p, self.n, t) for e, t in out.items()}

    def leading(self):
        mono = max(self._terms, key=monomial_key)
        return mono, self._terms[mono]

    # Arithmetic

    def _check(self, other):
        if self.p != other.p or self.n != other.n:
            raise FieldMismatchError(
                "Operands over (p={}, n={}) and (p={}, n={})".format(
                    self.p, self.n, other.p, other.n
                )
            )

    def _coerce(self, other):
        if isinstance(other, int):
            return SuperPoly.const(self.p, self.n, other)
        if isinstance(other, SuperPoly):
            self._check(other)
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.p
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = (out.get(k, 0) + c) % p
        return SuperPoly._raw(p, self.n, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.p
        return SuperPoly._raw(p, self.n, {k: (p - c) % p for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = c % self.p
        if not c:
            return SuperPoly.zero(self.p, self.n)
        return SuperPoly._raw(
            self.p, self.n, {k: v * c % self.p for k, v in self._terms.items()}
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, SuperPoly):
            return NotImplemented
        self._check(other)
        p = self.p
        out = {}
        for (e1, y1), c1 in self._terms.items():
            for (e2, y2), c2 in other._terms.items():
                sign, ext = merge_ext(e1, e2)
                if not sign:
                    continue
                key = (ext, tuple(a + b for a, b in zip(y1, y2)))
                out[key] = (out.get(key, 0) + sign * c1 * c2) % p
        return SuperPoly._raw(p, self.n, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def frobenius(self, times=1):
        """f^(p^times) for a pure polynomial"""
        if not self.is_pure():
            raise UnsupportedError("Frobenius is only defined on pure polynomials")
        q = self.p ** times
        return SuperPoly._raw(
            self.p,
            self.n,
            {((), tuple(a * q for a in y)): c for (_, y), c in self._terms.items()},
        )

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        if e == 0:
            return SuperPoly.one(self.p, self.n)
        base = self
        if self.is_pure():
            k = 0
            while e % self.p == 0:
                e //= self.p
                k += 1
            if k:
                base = self.frobenius(k)
        result = None
        while e:
            if e & 1:
                result = base if result is None else result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = SuperPoly.const(self.p, self.n, other)
        if not isinstance(other, SuperPoly):
            return NotImplemented
        return self.p == other.p and self.n == other.n and self._terms == other._terms

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.p, self.n, frozenset(self._terms.items())))
        return self._hash

    # Division and substitution

    def exact_div(self, g):
        """Quotient q with q * g = self, raising when g does not divide"""
        return exact_div(self, g)

    def substitute(self, matrix):
        return substitute(self, matrix)

    # Serialization

    def to_dict(self):
        return {
            "p": self.p,
            "n": self.n,
            "terms": [
                {"c": c, "ext": list(m.ext), "y": list(m.yexp)} for m, c in self.terms()
            ],
        }

    @staticmethod
    def from_dict(d):
        field(d["p"])
        n = d["n"]
        terms = {}
        for t in d.get("terms", []):
            yexp = tuple(t.get("y", [0] * n))
            if len(yexp) != n:
                raise FieldMismatchError("Exponent vector of length {}".format(len(yexp)))
            sign, ext = sort_sign(tuple(t.get("ext", [])))
            key = (ext, yexp)
            terms[key] = terms.get(key, 0) + sign * t["c"]
        return SuperPoly(d["p"], n, terms)

    def term_strings(self):
        """Printed terms in order, one at a time"""
        for mono, c in self.terms():
            factors = ["x{}".format(i) for i in mono.ext]
            for i, e in enumerate(mono.yexp):
                if e == 1:
                    factors.append("y{}".format(i + 1))
                elif e > 1:
                    factors.append("y{}^{}".format(i + 1, e))
            if c != 1 or not factors:
                factors.insert(0, str(c))
            yield "*".join(factors)

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(self.term_strings())

    def __repr__(self):
        return json.dumps(self.to_dict())


def exact_div(f, g):
    """Divide f by g under the degree-lexicographic order

    Both operands must be pure polynomials. Any blocked reduction step means
    g does not divide f and raises InexactDivisionError.
    """
    f._check(g)
    if not g:
        raise ZeroDivisionError("Division by the zero polynomial")
    if not f.is_pure() or not g.is_pure():
        raise UnsupportedError("exact_div works on pure polynomials only")
    p = f.p
    (_, glead), gc = g.leading()
    ginv = pow(gc, p - 2, p)
    gterms = list(g._terms.items())
    rem = dict(f._terms)
    quot = {}
    while rem:
        mono = max(rem, key=monomial_key)
        yexp = mono[1]
        shift = tuple(a - b for a, b in zip(yexp, glead))
        if any(s < 0 for s in shift):
            raise InexactDivisionError("{} does not divide {}".format(g, f))
        c = rem[mono] * ginv % p
        quot[((), shift)] = c
        for (_, gy), gcoef in gterms:
            key = ((), tuple(a + b for a, b in zip(shift, gy)))
            v = (rem.get(key, 0) - c * gcoef) % p
            if v:
                rem[key] = v
            else:
                rem.pop(key, None)
    return SuperPoly._raw(p, f.n, quot)


def _apply_swap(terms, i, j, p):
    out = {}
    for (ext, yexp), c in terms.items():
        y = list(yexp)
        y[i], y[j] = y[j], y[i]
        if ext:
            swap = {i + 1: j + 1, j + 1: i + 1}
            sign, ext = sort_sign(tuple(swap.get(k, k) for k in ext))
            c = c * sign
        key = (ext, tuple(y))
        out[key] = (out.get(key, 0) + c) % p
    return out


def _apply_scale(terms, i, a, p):
    out = {}
    for (ext, yexp), c in terms.items():
        e = yexp[i] + (1 if (i + 1) in ext else 0)
        out[(ext, yexp)] = c * pow(a, e, p) % p
    return out


def _apply_add(terms, src, dst, a, p):
    """y_dst -> y_dst + a*y_src and x_dst -> x_dst + a*x_src"""
    out = {}
    for (ext, yexp), c in terms.items():
        ext_parts = [(ext, c)]
        if (dst + 1) in ext:
            swapped = tuple((src + 1) if k == dst + 1 else k for k in ext)
            sign, sext = sort_sign(swapped)
            if sign:
                ext_parts.append((sext, c * sign * a))
        e = yexp[dst]
        for k in range(e + 1):
            b = binom_mod_p(e, k, p)
            if not b:
                continue
            y = list(yexp)
            y[dst] = e - k
            y[src] += k
            y = tuple(y)
            factor = b * pow(a, k, p)
            for pext, pc in ext_parts:
                key = (pext, y)
                out[key] = (out.get(key, 0) + pc * factor) % p
    return {k: v for k, v in out.items() if v}


def substitute(f, matrix):
    """Apply the ring homomorphism y_k -> sum_i a_ik y_i (same on x)

    The matrix is factored into elementary operations so that each step is a
    single-variable substitution.
    """
    rows = matrix.to_list() if hasattr(matrix, "to_list") else [list(r) for r in matrix]
    if len(rows) != f.n or any(len(r) != f.n for r in rows):
        raise FieldMismatchError(
            "Matrix of size {} does not act on {} variables".format(len(rows), f.n)
        )
    p = f.p
    terms = dict(f._terms)
    for op in linalg.elementary_factors(rows, p):
        if op[0] == "swap":
            terms = _apply_swap(terms, op[1], op[2], p)
        elif op[0] == "scale":
            terms = _apply_scale(terms, op[1], op[2], p)
        else:
            terms = _apply_add(terms, op[1], op[2], op[3], p)
    return SuperPoly._raw(p, f.n, terms)


def random_superpoly(p, n, rng, max_degree=4, terms=4, exterior=True):
    """Random element with up to ``terms`` monomials, for property runs

    :param rng: random.Random instance
    """
    out = {}
    for _ in range(terms):
        ext = ()
        if exterior and p != 2:
            ext = tuple(sorted(rng.sample(range(1, n + 1), rng.randint(0, min(2, n)))))
        left = rng.randint(0, max_degree)
        yexp = [0] * n
        for _ in range(left):
            yexp[rng.randrange(n)] += 1
        out[(ext, tuple(yexp))] = out.get((ext, tuple(yexp)), 0) + rng.randint(1, p - 1)
    return SuperPoly(p, n, out)


def random_homogeneous(p, n, rng, degree, terms=3):
    """Random pure polynomial, homogeneous of the given degree"""
    out = {}
    for _ in range(terms):
        yexp = [0] * n
        for _ in range(degree):
            yexp[rng.randrange(n)] += 1
        key = ((), tuple(yexp))
        out[key] = out.get(key, 0) + rng.randint(1, p - 1)
    return SuperPoly(p, n, out)
