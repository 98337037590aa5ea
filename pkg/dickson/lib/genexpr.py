"""Formal polynomials in named invariant generators"""
import json
from dataclasses import dataclass
from typing import Tuple

from dickson.lib import SymbolKind
from dickson.lib.superpoly import field
from dickson.lib.utils import FieldMismatchError, IndexRangeError


@dataclass(frozen=True, order=True)
class GenSymbol:
    """A named generator such as d_{m,i}, h_i or M_{m,S}

    ``size`` is the number of variables the generator lives on, ``idx`` its
    index tuple, ``omit`` a removed row (0 when none) and ``hat`` marks the
    omega-twisted variant.
    """

    kind: SymbolKind
    size: int = 0
    idx: Tuple[int, ...] = ()
    omit: int = 0
    hat: bool = False

    def is_odd(self):
        if self.kind == SymbolKind.X:
            return True
        if self.kind == SymbolKind.M:
            return len(self.idx) % 2 == 1
        return False

    def degree(self, p):
        """Algebraic degree"""
        k = self.kind
        if k in (SymbolKind.X, SymbolKind.Y):
            return 1
        if k == SymbolKind.H:
            return p ** (self.idx[0] - 1)
        if k == SymbolKind.H_OMIT:
            return p ** (self.idx[0] - 2)
        if k == SymbolKind.H_SWAP:
            return p ** (self.idx[0] - 1)
        if k in (SymbolKind.D, SymbolKind.D_PARAB):
            return p ** self.size - p ** self.idx[0]
        rows = self.size - (1 if self.omit else 0)
        if k == SymbolKind.L:
            cols = moore_columns(rows, self.idx[0] if self.idx else None)
            return sum(p ** c for c in cols)
        return len(self.idx) + sum(p ** c for c in range(rows) if c not in self.idx)

    def validate(self, n):
        k = self.kind
        m = self.size
        idx = self.idx
        ok = True
        if k in (SymbolKind.X, SymbolKind.Y, SymbolKind.H):
            ok = len(idx) == 1 and 1 <= idx[0] <= n
        elif k == SymbolKind.H_OMIT:
            ok = len(idx) == 2 and 1 <= idx[1] < idx[0] <= n
        elif k == SymbolKind.H_SWAP:
            ok = len(idx) == 2 and 1 <= idx[1] <= idx[0] <= n
        elif k == SymbolKind.D:
            ok = 1 <= m <= n and len(idx) == 1 and 0 <= idx[0] <= m - 1
        elif k == SymbolKind.D_PARAB:
            ok = 2 <= m <= n and len(idx) == 1 and 1 <= idx[0] <= m - 1
        elif k == SymbolKind.L:
            top = m - 1 if self.omit else m
            ok = 1 <= m <= n and len(idx) <= 1 and all(0 <= i <= top for i in idx)
            ok = ok and 0 <= self.omit <= m and (len(idx) == 1 or not self.omit)
        elif k == SymbolKind.M:
            cols = m - 1 if self.omit else m
            ok = 1 <= m <= n and 0 <= self.omit <= m and len(idx) >= 1
            ok = ok and list(idx) == sorted(set(idx)) and all(0 <= s < cols for s in idx)
        if self.hat and k in (SymbolKind.X, SymbolKind.Y):
            ok = False
        if not ok:
            raise IndexRangeError("Generator {} is not defined for n={}".format(self.name(), n))
        return self

    def name(self):
        k = self.kind
        hat = "hat" if self.hat else ""
        if k in (SymbolKind.X, SymbolKind.Y):
            return "{}{}".format(k.value, self.idx[0])
        if k in (SymbolKind.H, SymbolKind.H_OMIT, SymbolKind.H_SWAP):
            return "{}{}[{}]".format(k.value, hat, ",".join(str(i) for i in self.idx))
        if k in (SymbolKind.D, SymbolKind.D_PARAB):
            return "{}{}[{},{}]".format(k.value, hat, self.size, self.idx[0])
        if k == SymbolKind.L:
            inner = str(self.size)
            if self.idx:
                inner += ",{}".format(self.idx[0])
            if self.omit:
                inner += ";{}".format(self.omit)
            return "L{}[{}]".format(hat, inner)
        inner = "{};{}".format(self.size, ",".join(str(s) for s in self.idx))
        if self.omit:
            inner += ";{}".format(self.omit)
        return "M{}[{}]".format(hat, inner)

    def __str__(self):
        return self.name()


def moore_columns(rows, missing=None):
    """Exponent columns of a Moore determinant on r rows

    Without a missing column this is 0..r-1, otherwise 0..r with one removed.
    """
    if missing is None:
        return list(range(rows))
    return [c for c in range(rows + 1) if c != missing]


def x_sym(i):
    return GenSymbol(SymbolKind.X, 0, (i,))


def y_sym(i):
    return GenSymbol(SymbolKind.Y, 0, (i,))


def h_sym(i, hat=False):
    return GenSymbol(SymbolKind.H, 0, (i,), 0, hat)


def d_sym(m, i, hat=False):
    return GenSymbol(SymbolKind.D, m, (i,), 0, hat)


def dI_sym(m, i, hat=False):
    return GenSymbol(SymbolKind.D_PARAB, m, (i,), 0, hat)


def L_sym(m, i=None, omit=0, hat=False):
    if i == m and not omit:
        i = None
    return GenSymbol(SymbolKind.L, m, () if i is None else (i,), omit, hat)


def M_sym(m, subset, omit=0, hat=False):
    return GenSymbol(SymbolKind.M, m, tuple(subset), omit, hat)


def _merge(m1, m2):
    """Product of two symbol monomials as (sign, monomial)"""
    exps = dict(m1)
    inversions = 0
    odd1 = [s for s, _ in m1 if s.is_odd()]
    for s, e in m2:
        if s.is_odd():
            if s in exps:
                return 0, ()
            inversions += sum(1 for a in odd1 if a > s)
        exps[s] = exps.get(s, 0) + e
    return (-1 if inversions % 2 else 1), tuple(sorted(exps.items()))


class GenExpr(object):
    """Sparse polynomial over F_p in GenSymbols, ambient dimension n"""

    __slots__ = ("p", "n", "_terms")

    def __init__(self, p, n, terms=None):
        field(p)
        self.p = p
        self.n = n
        self._terms = {}
        for mono, c in (terms or {}).items():
            c %= p
            if c:
                key = tuple(sorted(mono))
                self._terms[key] = (self._terms.get(key, 0) + c) % p
        self._terms = {k: c for k, c in self._terms.items() if c}

    @classmethod
    def const(cls, p, n, c=1):
        return cls(p, n, {(): c})

    @classmethod
    def symbol(cls, p, n, sym, exp=1):
        sym.validate(n)
        if exp == 0:
            return cls.const(p, n)
        if sym.is_odd() and exp > 1:
            return cls(p, n)
        return cls(p, n, {((sym, exp),): 1})

    @classmethod
    def monomial(cls, p, n, factors, c=1):
        """Product of (symbol, exponent) pairs taken in the given order"""
        out = cls.const(p, n, c)
        for sym, e in factors:
            out = out * cls.symbol(p, n, sym, e)
        return out

    def items(self):
        for mono in sorted(self._terms, key=lambda m: (self._mono_degree(m), m), reverse=True):
            yield mono, self._terms[mono]

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def _mono_degree(self, mono):
        return sum(s.degree(self.p) * e for s, e in mono)

    def degree(self):
        if not self._terms:
            return -1
        return max(self._mono_degree(m) for m in self._terms)

    def degrees(self):
        return sorted({self._mono_degree(m) for m in self._terms})

    def homogeneous_part(self, d):
        return GenExpr(
            self.p, self.n, {m: c for m, c in self._terms.items() if self._mono_degree(m) == d}
        )

    def truncate(self, d):
        return GenExpr(
            self.p, self.n, {m: c for m, c in self._terms.items() if self._mono_degree(m) <= d}
        )

    def symbols(self):
        return sorted({s for m in self._terms for s, _ in m})

    def constant_term(self):
        return self._terms.get((), 0)

    def coefficient(self, factors):
        return self._terms.get(tuple(sorted(factors)), 0)

    def _check(self, other):
        if self.p != other.p or self.n != other.n:
            raise FieldMismatchError("GenExpr operands over different (p, n)")

    def _coerce(self, other):
        if isinstance(other, int):
            return GenExpr.const(self.p, self.n, other)
        if isinstance(other, GenExpr):
            self._check(other)
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return GenExpr(self.p, self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        return GenExpr(self.p, self.n, {m: v * c for m, v in self._terms.items()})

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                sign, mono = _merge(m1, m2)
                if sign:
                    out[mono] = out.get(mono, 0) + sign * c1 * c2
        return GenExpr(self.p, self.n, out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = GenExpr.const(self.p, self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = GenExpr.const(self.p, self.n, other)
        if not isinstance(other, GenExpr):
            return NotImplemented
        return self.p == other.p and self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.p, self.n, frozenset(self._terms.items())))

    def substitute_symbols(self, mapping):
        """Replace symbols by GenExprs, keeping unmapped symbols"""
        out = GenExpr(self.p, self.n)
        for mono, c in self._terms.items():
            term = GenExpr.const(self.p, self.n, c)
            for s, e in mono:
                if s in mapping:
                    term = term * mapping[s] ** e
                else:
                    term = term * GenExpr.symbol(self.p, self.n, s, e)
            out = out + term
        return out

    def to_dict(self):
        return {
            "p": self.p,
            "n": self.n,
            "terms": [
                {"c": c, "factors": [[s.name(), e] for s, e in mono]} for mono, c in self.items()
            ],
        }

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self.items():
            factors = [s.name() if e == 1 else "{}^{}".format(s.name(), e) for s, e in mono]
            if c != 1 or not factors:
                factors.insert(0, str(c))
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return json.dumps(self.to_dict())
