"""Free D_n-module bases and the rewriting map xi

Each family is a subring R of H*(V) containing the Dickson algebra D_n, with
a finite basis B such that R = sum over b in B of D_n b. ``rewrite`` writes an
element of R as sum c_b b with c_b in D_n; ``xi`` keeps the part that lies in
the GL-invariants.

Two engines produce decompositions: relation-driven rewriting (P(n-1,1) and
P(1,n-1) invariants) and an F_p linear algebra oracle that works for every
family. Both return the same coefficients because the bases are free.
"""
import itertools
import logging
import random
from functools import lru_cache

import dickson.lib.config as config
import dickson.lib.glgroup as glgroup
import dickson.lib.invariants as invariants
import dickson.lib.linalg as linalg
from dickson.lib import BasisFamily, CheckResult, Family, GroupTag, SymbolKind
from dickson.lib.genexpr import GenExpr, L_sym, M_sym, dI_sym, d_sym, h_sym
from dickson.lib.superpoly import SuperPoly
from dickson.lib.utils import (
    NotInvariantError,
    RewriteLimitError,
    UnsupportedError,
    q_number,
)

LOG = logging.getLogger(__name__)


def dickson_monomials(p, n, degree):
    """Exponent vectors e with sum_j e_j (p^n - p^j) = degree"""
    weights = [p ** n - p ** j for j in range(n)]
    out = []

    def rec(j, left, acc):
        if j < 0:
            if not left:
                out.append(tuple(acc))
            return
        for e in range(left // weights[j], -1, -1):
            acc[j] = e
            rec(j - 1, left - e * weights[j], acc)
        acc[j] = 0

    if degree >= 0:
        rec(n - 1, degree, [0] * n)
    return out


@lru_cache(maxsize=4096)
def expand_dickson_monomial(p, n, dexp):
    out = SuperPoly.one(p, n)
    for j, e in enumerate(dexp):
        if e:
            out = out * invariants.expand_symbol(p, n, d_sym(n, j)) ** e
    return out


def dickson_expr(p, n, coeffs):
    """GenExpr sum c d_{n,0}^e_0 ... d_{n,n-1}^e_{n-1} from {exponents: c}"""
    out = GenExpr(p, n)
    for dexp, c in sorted(coeffs.items()):
        mono = [(d_sym(n, j), e) for j, e in enumerate(dexp) if e]
        out = out + GenExpr.monomial(p, n, mono, c)
    return out


def generator_monomials(degrees, odd, total):
    """Exponent vectors over generators of the given degrees with total degree

    Odd generators take exponent 0 or 1.
    """
    out = []

    def rec(k, left, acc):
        if k == len(degrees):
            if not left:
                out.append(tuple(acc))
            return
        top = left // degrees[k]
        if odd[k]:
            top = min(top, 1)
        for e in range(top, -1, -1):
            rec(k + 1, left - e * degrees[k], acc + [e])

    if total >= 0:
        rec(0, total, [])
    return out


def _power_products(polys, vecs):
    cache = {}

    def power(k, e):
        if (k, e) not in cache:
            cache[(k, e)] = polys[k] ** e
        return cache[(k, e)]

    p, n = polys[0].p, polys[0].n
    out = []
    for v in vecs:
        f = SuperPoly.one(p, n)
        for k, e in enumerate(v):
            if e:
                f = f * power(k, e)
        out.append(f)
    return out


def _generator_data(generators):
    polys = [invariants.expand(g) for g in generators]
    degs = [g.degree() for g in generators]
    odd = [bool(f) and f.parity() == 1 for f in polys]
    return polys, degs, odd


def express_in_generators(target, generators):
    """Write an expanded element as a polynomial in the given generators

    :param target: SuperPoly
    :param generators: list of GenExpr
    :return GenExpr in the generators' symbols, or None when target is not in the generated ring
    """
    p, n = target.p, target.n
    polys, degs, odd = _generator_data(generators)
    out = GenExpr(p, n)
    for deg in target.degrees():
        part = target.homogeneous_component(deg)
        vecs = generator_monomials(degs, odd, deg)
        sol = invariants.solve_constants(part, _power_products(polys, vecs)) if vecs else None
        if sol is None:
            return None
        for v, c in zip(vecs, sol):
            if c:
                term = GenExpr.const(p, n, c)
                for g, e in zip(generators, v):
                    term = term * g ** e
                out = out + term
    return out


def ring_dimension(generators, degree):
    """Dimension over F_p of the degree part of the ring the generators span"""
    polys, degs, odd = _generator_data(generators)
    columns = _power_products(polys, generator_monomials(degs, odd, degree))
    return _span_rank(columns)


def _span_rank(columns):
    if not columns:
        return 0
    monos = sorted({m for f in columns for m, _ in f.terms()})
    if not monos:
        return 0
    matrix = [[f.coefficient(m.ext, m.yexp) for f in columns] for m in monos]
    return linalg.rank_mod_p(matrix, columns[0].p)


def oracle_decompose(target, basis, p, n):
    """Coefficients over D_n of target on basis by linear algebra, degree by degree

    :return list, per basis element, of {Dickson exponent vector: coefficient}
    """
    f = target if isinstance(target, SuperPoly) else invariants.expand(target)
    polys = [invariants.expand(b) for b in basis]
    degs = [b.degree() for b in basis]
    coeffs = [dict() for _ in basis]
    for deg in f.degrees():
        part = f.homogeneous_component(deg)
        columns = []
        labels = []
        for k, (b, bd) in enumerate(zip(polys, degs)):
            for dexp in dickson_monomials(p, n, deg - bd):
                columns.append(b * expand_dickson_monomial(p, n, dexp))
                labels.append((k, dexp))
        sol = invariants.solve_constants(part, columns) if columns else None
        if sol is None:
            raise NotInvariantError("Degree {} part is not in the span of the basis".format(deg))
        for (k, dexp), c in zip(labels, sol):
            if c:
                coeffs[k][dexp] = c
    return coeffs


class Decomposition(object):
    """target = sum over pairs (basis element, Dickson coefficient)"""

    def __init__(self, family, target, pairs, engine):
        self.family = family
        self.target = target
        self.pairs = pairs
        self.engine = engine

    def coefficient(self, basis_elem):
        for b, c in self.pairs:
            if b == basis_elem:
                return c
        return GenExpr(self.target.p, self.target.n)

    def reconstruct(self):
        out = GenExpr(self.target.p, self.target.n)
        for b, c in self.pairs:
            out = out + c * b
        return out

    def verify(self):
        """expand(target) = sum expand(c_b) expand(b)"""
        return invariants.expand(self.target) == invariants.expand(self.reconstruct())

    def to_dict(self):
        return {
            "family": str(self.family),
            "target": str(self.target),
            "engine": self.engine,
            "terms": [{"basis": str(b), "coefficient": str(c)} for b, c in self.pairs],
        }

    def __repr__(self):
        return "Decomposition({})".format(self.to_dict())


class _Family(BasisFamily):
    """Common oracle-backed behaviour of the module families"""

    tag = None
    unit_only = False

    def __init__(self, p, n, hat=False):
        self.p = p
        self.n = n
        self.hat = hat
        self._basis = None
        self._invariant = None

    def enumerate(self):
        if self._basis is None:
            self._basis = self._build()
            LOG.debug("{} basis at p={} n={}: {} elements".format(self.tag, self.p, self.n, len(self._basis)))
        return list(self._basis)

    def rank(self):
        return len(self.enumerate())

    def generators(self):
        """Algebra generators of the ring the family is a basis of"""
        raise NotImplementedError

    def _build(self):
        raise NotImplementedError

    def _engine(self, expr):
        """Relation-driven rewrite returning {basis index: {dexp: c}}, or None"""
        return None

    def _pairs(self, coeffs):
        basis = self.enumerate()
        return [(basis[k], dickson_expr(self.p, self.n, c)) for k, c in enumerate(coeffs) if c]

    def oracle(self, expr):
        coeffs = oracle_decompose(expr, self.enumerate(), self.p, self.n)
        return Decomposition(self.tag, expr, self._pairs(coeffs), "oracle")

    def rewrite(self, expr):
        if expr.p != self.p or expr.n != self.n:
            raise UnsupportedError("Expression over (p, n) = ({}, {})".format(expr.p, expr.n))
        try:
            coeffs = self._engine(expr)
        except RewriteLimitError as e:
            LOG.warning("{}; falling back to linear algebra".format(e))
            coeffs = None
        if coeffs is None:
            LOG.debug("Decomposing {} with the linear algebra oracle".format(expr))
            return self.oracle(expr)
        return Decomposition(self.tag, expr, self._pairs(coeffs), "rewrite")

    def invariant_mask(self):
        """Which basis elements expand to GL-invariants"""
        if self._invariant is None:
            gens = glgroup.generators(GroupTag.GL, self.n, self.p)
            self._invariant = [glgroup.is_invariant(invariants.expand(b), gens) for b in self.enumerate()]
        return list(self._invariant)

    def xi(self, expr):
        dec = self.rewrite(expr)
        if self.unit_only:
            return dec.coefficient(GenExpr.const(self.p, self.n))
        out = GenExpr(self.p, self.n)
        mask = dict(zip(self.enumerate(), self.invariant_mask()))
        for b, c in dec.pairs:
            if mask[b]:
                out = out + c * b
        return out


def _bump(vec, idx, amount, length):
    """Add amount at idx; indices past the end stand for the unit e_{n-1} = 1"""
    out = list(vec)
    if idx < length:
        out[idx] += amount
    return tuple(out)


def _pn11_normal(eexp, p):
    big = [k for k, m in enumerate(eexp) if m >= p]
    if not big:
        return True
    a = big[0]
    return len(big) == 1 and eexp[a] == p and not any(eexp[:a])


class Pn11Family(_Family):
    """Invariants of P(n-1,1) over D_n with e_i = d_{n-1,i}

    Basis: prod e_i^m_i with m_i < p, and e_{t-1}^p prod_{i >= t} e_i^m_i for
    1 <= t <= n-1. Rewriting uses, for 0 <= i < j <= n-1,
    e_i e_{j-1}^p = d_{n,j} e_i - d_{n,i} e_j + e_{i-1}^p e_j with e_{n-1} = 1, e_{-1} = 0.
    """

    tag = Family.PN11
    unit_only = True

    def _normal_forms(self):
        p, n = self.p, self.n
        r = n - 1
        out = list(itertools.product(range(p), repeat=r))
        for t in range(1, n):
            for tail in itertools.product(range(p), repeat=r - t):
                out.append((0,) * (t - 1) + (p,) + tail)
        return out

    def _build(self):
        out = []
        for eexp in self._normal_forms():
            mono = [(d_sym(self.n - 1, i), m) for i, m in enumerate(eexp) if m]
            out.append(GenExpr.monomial(self.p, self.n, mono))
        return out

    def generators(self):
        p, n = self.p, self.n
        gens = [GenExpr.symbol(p, n, d_sym(n - 1, i)) for i in range(n - 1)]
        return gens + [GenExpr.symbol(p, n, d_sym(n, n - 1))]

    def _engine(self, expr):
        p, n = self.p, self.n
        r = n - 1
        terms = {}
        for mono, c in expr.items():
            eexp = [0] * r
            dexp = [0] * n
            for sym, e in mono:
                if sym.kind != SymbolKind.D or sym.size not in (n - 1, n) or (sym.hat and sym.size < n):
                    return None
                if sym.size == n:
                    dexp[sym.idx[0]] += e
                else:
                    eexp[sym.idx[0]] += e
            key = (tuple(eexp), tuple(dexp))
            terms[key] = (terms.get(key, 0) + c) % p
        return self._reduce(terms)

    def _reduce(self, terms):
        p, n = self.p, self.n
        r = n - 1
        todo = [k for k in terms if not _pn11_normal(k[0], p)]
        steps = 0

        def add(key, c):
            value = (terms.get(key, 0) + c) % p
            if value:
                terms[key] = value
                if not _pn11_normal(key[0], p):
                    todo.append(key)
            else:
                terms.pop(key, None)

        while todo:
            key = todo.pop()
            c = terms.pop(key, 0)
            if not c:
                continue
            steps += 1
            if steps > config.rewrite_steps:
                raise RewriteLimitError("P(n-1,1) rewriting exceeded {} steps".format(config.rewrite_steps))
            eexp, dexp = key
            a = max(k for k, m in enumerate(eexp) if m >= p)
            lower = [k for k in range(a) if eexp[k]]
            i = lower[-1] if lower else a
            j = a + 1
            base = list(eexp)
            base[i] -= 1
            base[a] -= p

            add((_bump(base, i, 1, r), _bump(dexp, j, 1, n)), c)
            add((_bump(base, j, 1, r), _bump(dexp, i, 1, n)), -c)
            if i >= 1:
                add((_bump(_bump(base, i - 1, p, r), j, 1, r), dexp), c)
            LOG.debug("step {}: e^{} at (i={}, j={})".format(steps, eexp, i, j))
        index = {e: k for k, e in enumerate(self._normal_forms())}
        coeffs = [dict() for _ in index]
        for (eexp, dexp), c in terms.items():
            coeffs[index[eexp]][dexp] = c
        return coeffs


class P1n1Family(_Family):
    """Invariants of P(1,n-1) over D_n: basis H^m, 0 <= m <= A_1, with H = h_1^(p-1)

    d_{n,k}(I) = sum_{t=k}^{n} (-1)^(t-k) H^(q(t)-q(k)) d_{n,t} with q(t) = 1 + ... + p^(t-1),
    and the case k = 0 gives the monic relation of degree q(n) satisfied by H.
    """

    tag = Family.P1N1
    unit_only = True

    def top(self):
        return q_number(self.p, self.n) - 1

    def _build(self):
        sym = h_sym(1, self.hat)
        return [GenExpr.symbol(self.p, self.n, sym, (self.p - 1) * m) for m in range(self.top() + 1)]

    def generators(self):
        p, n = self.p, self.n
        gens = [GenExpr.symbol(p, n, h_sym(1, self.hat), p - 1)]
        return gens + [GenExpr.symbol(p, n, dI_sym(n, i, self.hat)) for i in range(1, n)]

    def _delta(self, k):
        """d_{n,k}(I) as {H exponent: {dexp: c}}"""
        p, n = self.p, self.n
        out = {}
        for t in range(k, n + 1):
            dexp = [0] * n
            if t < n:
                dexp[t] = 1
            e = q_number(p, t) - q_number(p, k)
            out.setdefault(e, {})[tuple(dexp)] = (-1) ** (t - k) % p
        return out

    def _mul(self, f, g):
        p = self.p
        out = {}
        for e1, c1 in f.items():
            for e2, c2 in g.items():
                slot = out.setdefault(e1 + e2, {})
                for d1, a in c1.items():
                    for d2, b in c2.items():
                        d = tuple(x + y for x, y in zip(d1, d2))
                        slot[d] = (slot.get(d, 0) + a * b) % p
        return {e: {d: c for d, c in v.items() if c} for e, v in out.items()}

    def _engine(self, expr):
        p, n = self.p, self.n
        total = {}
        for mono, c in expr.items():
            dexp = [0] * n
            poly = {0: {(0,) * n: c % p}}
            for sym, e in mono:
                if sym.kind == SymbolKind.D and sym.size == n:
                    dexp[sym.idx[0]] += e
                    continue
                if sym.hat != self.hat:
                    return None
                if sym.kind == SymbolKind.H and sym.idx == (1,) and e % (p - 1) == 0:
                    poly = self._mul(poly, {e // (p - 1): {(0,) * n: 1}})
                elif sym.kind == SymbolKind.D_PARAB and sym.size == n:
                    for _ in range(e):
                        poly = self._mul(poly, self._delta(sym.idx[0]))
                else:
                    return None
            poly = self._mul(poly, {0: {tuple(dexp): 1}})
            for e, coeff in poly.items():
                slot = total.setdefault(e, {})
                for d, v in coeff.items():
                    slot[d] = (slot.get(d, 0) + v) % p
        return self._reduce(total)

    def _reduce(self, poly):
        p, n = self.p, self.n
        deg = q_number(p, n)
        relation = {}
        for t in range(n):
            dexp = [0] * n
            dexp[t] = 1
            relation[q_number(p, t)] = {tuple(dexp): (-1) ** (n + t + 1) % p}
        steps = 0
        while True:
            high = [e for e, v in poly.items() if e >= deg and any(v.values())]
            if not high:
                break
            steps += 1
            if steps > config.rewrite_steps:
                raise RewriteLimitError("P(1,n-1) rewriting exceeded {} steps".format(config.rewrite_steps))
            e = max(high)
            lead = {e - deg: poly.pop(e)}
            for e2, coeff in self._mul(lead, relation).items():
                slot = poly.setdefault(e2, {})
                for d, v in coeff.items():
                    slot[d] = (slot.get(d, 0) + v) % p
        coeffs = [dict() for _ in range(deg)]
        for e, coeff in poly.items():
            for d, v in coeff.items():
                if v:
                    coeffs[e][d] = v
        return coeffs


class HnFamily(_Family):
    """Upper triangular invariants: prod h_i^r_i with 0 <= r_i < p^(n-i+1) - 1"""

    tag = Family.HN
    unit_only = True

    def bounds(self):
        return [self.p ** (self.n - i + 1) - 1 for i in range(1, self.n + 1)]

    def _build(self):
        p, n = self.p, self.n
        out = []
        for r in itertools.product(*[range(b) for b in self.bounds()]):
            mono = [(h_sym(i, self.hat), e) for i, e in enumerate(r, start=1) if e]
            out.append(GenExpr.monomial(p, n, mono))
        return out

    def generators(self):
        return [GenExpr.symbol(self.p, self.n, h_sym(i, self.hat)) for i in range(1, self.n + 1)]


def _sylow_exterior(p, n):
    """Hatted M_{i,i-1} L_{i-1}^((p-3)/2) for 1 <= i <= n"""
    e = (p - 3) // 2
    out = []
    for i in range(1, n + 1):
        g = GenExpr.symbol(p, n, M_sym(i, (i - 1,), hat=True))
        if i > 1 and e:
            g = g * GenExpr.symbol(p, n, L_sym(i - 1, hat=True), e)
        out.append(g)
    return out


class SylowImageFamily(_Family):
    """Restriction image from the Sylow subgroup: exterior products times the hatted upper triangular basis"""

    tag = Family.SYLOW

    def _build(self):
        p, n = self.p, self.n
        hn = HnFamily(p, n, hat=True).enumerate()
        if p == 2:
            return hn
        ext = _sylow_exterior(p, n)
        out = []
        for k in range(n + 1):
            for subset in itertools.combinations(range(n), k):
                head = GenExpr.const(p, n)
                for s in subset:
                    head = head * ext[s]
                out += [head * b for b in hn]
        return out

    def generators(self):
        return invariants.restriction_image_generators(GroupTag.SYLOW, self.p, self.n)


def _half_power(k):
    return (k + 1) // 2 - 1


class Wr1Family(_Family):
    """Restriction image from Sigma_p wr Sigma_{p^(n-1)}

    Polynomial part H^m for m <= A_1 with H the hatted h_1^(p-1); exterior part
    M_{1,0} L_1^(p-2) H^m and M_{n,S} L_n^(p-2) d_{n,0}^([(k+1)/2]-1) H^m for
    m < A_1 and s_k >= 1, all hatted.
    """

    tag = Family.WR1

    def _build(self):
        p, n = self.p, self.n
        base = P1n1Family(p, n, hat=True).enumerate()
        out = list(base)
        if p == 2:
            return out
        lower = base[:-1]
        head = GenExpr.symbol(p, n, M_sym(1, (0,), hat=True)) * GenExpr.symbol(p, n, L_sym(1, hat=True), p - 2)
        out += [head * b for b in lower]
        top = GenExpr.symbol(p, n, L_sym(n, hat=True), p - 2)
        for k in range(1, n + 1):
            for subset in itertools.combinations(range(n), k):
                if subset[-1] < 1:
                    continue
                head = GenExpr.symbol(p, n, M_sym(n, subset, hat=True)) * top
                head = head * GenExpr.symbol(p, n, d_sym(n, 0), _half_power(k))
                out += [head * b for b in lower]
        return out

    def generators(self):
        return invariants.restriction_image_generators(GroupTag.P1N1, self.p, self.n)


class Wr2Family(_Family):
    """Restriction image from Sigma_{p^(n-1)} wr Sigma_p, hatted throughout

    B is the hatted P(n-1,1) basis; elements are b, M_{n,n-1} L_n^(p-2) b and
    M_{n-1,S} L_{n-1}^(p-2) d_{n-1,0}^([(k+1)/2]-1) b.
    """

    tag = Family.WR2

    def _build(self):
        p, n = self.p, self.n
        base = []
        for b in Pn11Family(p, n).enumerate():
            base.append(b.substitute_symbols(
                {s: GenExpr.symbol(p, n, d_sym(s.size, s.idx[0], hat=True)) for s in b.symbols()}
            ))
        out = list(base)
        if p == 2:
            return out
        head = GenExpr.symbol(p, n, M_sym(n, (n - 1,), hat=True)) * GenExpr.symbol(p, n, L_sym(n, hat=True), p - 2)
        out += [head * b for b in base]
        lower = GenExpr.symbol(p, n, L_sym(n - 1, hat=True), p - 2)
        for k in range(1, n):
            for subset in itertools.combinations(range(n - 1), k):
                head = GenExpr.symbol(p, n, M_sym(n - 1, subset, hat=True)) * lower
                head = head * GenExpr.symbol(p, n, d_sym(n - 1, 0, hat=True), _half_power(k))
                out += [head * b for b in base]
        return out

    def generators(self):
        return invariants.restriction_image_generators(GroupTag.PN11, self.p, self.n)


_FAMILIES = {
    Family.PN11: Pn11Family,
    Family.P1N1: P1n1Family,
    Family.HN: HnFamily,
    Family.SYLOW: SylowImageFamily,
    Family.WR1: Wr1Family,
    Family.WR2: Wr2Family,
}


@lru_cache(maxsize=None)
def family(tag, p, n):
    """Shared family instance for a tag"""
    fam = Family.from_str(tag)
    if fam is None:
        raise UnsupportedError("Unknown family {}".format(tag))
    if n < 2 and fam in (Family.PN11, Family.WR2):
        raise UnsupportedError("{} needs n >= 2".format(fam))
    return _FAMILIES[fam](p, n)


def expected_rank(tag, p, n):
    """Rank predicted by the group index, or None when only the enumeration defines it"""
    fam = Family.from_str(tag)
    hn = 1
    for m in range(1, n + 1):
        hn *= p ** m - 1
    if fam in (Family.PN11, Family.P1N1):
        return q_number(p, n)
    if fam == Family.HN:
        return hn
    if fam == Family.SYLOW:
        return hn if p == 2 else hn * 2 ** n
    return None


def enumerate_basis(tag, p, n):
    return family(tag, p, n).enumerate()


def rewrite(expr, tag):
    return family(tag, expr.p, expr.n).rewrite(expr)


def xi(expr, tag):
    """Coefficient of the unit basis element, or the GL-invariant part for restriction images"""
    return family(tag, expr.p, expr.n).xi(expr)


def cross_check(expr, tag):
    """Rewriting engine and oracle give identical coefficients"""
    fam = family(tag, expr.p, expr.n)
    dec = fam.rewrite(expr)
    other = fam.oracle(expr)
    return dict((str(b), c) for b, c in dec.pairs) == dict((str(b), c) for b, c in other.pairs)


def verify_freeness(tag, p, n, degree_bound=None):
    """Cardinality, independence and span of a family's basis up to a degree bound

    In each degree d the products b * (Dickson monomial) must be linearly
    independent and their number must equal the dimension of the ring the
    family's generators span in degree d.
    """
    fam = family(tag, p, n)
    bound = config.degree_bound if degree_bound is None else degree_bound
    basis = fam.enumerate()
    failures = []
    rank = expected_rank(tag, p, n)
    if rank is not None and rank != len(basis):
        failures.append("basis has {} elements, rank is {}".format(len(basis), rank))
    polys = [invariants.expand(b) for b in basis]
    degs = [b.degree() for b in basis]
    gens = fam.generators()
    for d in range(bound + 1):
        columns = []
        for b, bd in zip(polys, degs):
            for dexp in dickson_monomials(p, n, d - bd):
                columns.append(b * expand_dickson_monomial(p, n, dexp))
        independent = _span_rank(columns)
        if independent != len(columns):
            failures.append("degree {}: {} products of rank {}".format(d, len(columns), independent))
            continue
        dim = ring_dimension(gens, d)
        if dim != len(columns):
            failures.append("degree {}: module dimension {} against ring dimension {}".format(d, len(columns), dim))
    detail = "; ".join(failures[:3]) if failures else "{} elements, degrees 0..{}".format(len(basis), bound)
    return CheckResult("freeness-{}".format(Family.from_str(tag)), p, n, not failures, detail)


def check_relations(p, n):
    """d_{n-1,i} d_{n-1,j-1}^p = d_{n,j} d_{n-1,i} - d_{n,i} d_{n-1,j} + d_{n-1,i-1}^p d_{n-1,j} for i < j"""
    failures = []

    def d(m, i):
        return invariants.make_d(p, n, m, i)

    for i, j in itertools.combinations(range(n), 2):
        lhs = d(n - 1, i) * d(n - 1, j - 1) ** p
        rhs = d(n, j) * d(n - 1, i) - d(n, i) * d(n - 1, j) + d(n - 1, i - 1) ** p * d(n - 1, j)
        if lhs != rhs:
            failures.append("i={} j={}".format(i, j))
    count = n * (n - 1) // 2
    detail = "; ".join(failures) if failures else "{} relations".format(count)
    return CheckResult("pn11-relations", p, n, not failures, detail)


def check_decompositions(tag, p, n, samples=None, seed=None):
    """Random family elements: decomposition reconstructs and engine matches the oracle"""
    rng = random.Random(config.default_seed if seed is None else seed)
    fam = family(tag, p, n)
    gens = fam.generators()
    failures = []
    count = samples or config.default_samples
    for s in range(count):
        expr = GenExpr.const(p, n, rng.randint(1, p - 1))
        for _ in range(rng.randint(1, 3)):
            expr = expr * rng.choice(gens) ** rng.randint(1, p)
        dec = fam.rewrite(expr)
        if not dec.verify():
            failures.append("sample {}: {} does not reconstruct".format(s, expr))
        elif dec.engine == "rewrite" and not cross_check(expr, tag):
            failures.append("sample {}: engine and oracle differ on {}".format(s, expr))
    detail = "; ".join(failures[:3]) if failures else "{} samples".format(count)
    return CheckResult("decompose-{}".format(Family.from_str(tag)), p, n, not failures, detail)


def check_worked_example():
    """d_{2,0}^2 d_{2,1}^7 at p = 2, n = 3 against its five term decomposition"""
    p, n = 2, 3

    def d(m, i, e=1):
        return GenExpr.symbol(p, n, d_sym(m, i), e)

    fam = family(Family.PN11, p, n)
    target = d(2, 0, 2) * d(2, 1, 7)
    expected = {
        GenExpr.const(p, n): d(3, 0, 2) * d(3, 1),
        d(2, 1): d(3, 0, 2) * d(3, 2),
        d(2, 0, 2): d(3, 0, 2),
        d(2, 0, 2) * d(2, 1): d(3, 2, 3),
        d(2, 0) * d(2, 1): d(3, 0) * d(3, 2, 2),
    }
    dec = fam.rewrite(target)
    failures = []
    got = dict(dec.pairs)
    if got != expected:
        failures.append("decomposition {}".format(", ".join("{}: {}".format(b, c) for b, c in dec.pairs)))
    value = fam.xi(target)
    if value != d(3, 0, 2) * d(3, 1):
        failures.append("xi = {}".format(value))
    detail = "; ".join(failures) if failures else "engine {}".format(dec.engine)
    return CheckResult("worked-example", p, n, not failures, detail)


def verify_cardinality(tag, p, n):
    """Basis size against the group index, without the degree scan"""
    rank = expected_rank(tag, p, n)
    if rank is None:
        raise UnsupportedError("{} has no predicted rank".format(tag))
    size = family(tag, p, n).rank()
    return CheckResult(
        "cardinality-{}".format(Family.from_str(tag)), p, n, size == rank, "{} elements, rank {}".format(size, rank)
    )
