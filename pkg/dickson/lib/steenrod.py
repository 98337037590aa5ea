"""Steenrod reduced powers and the Bockstein on E(x_1..x_n) (x) F_p[y_1..y_n]

P^k acts on a monomial by the instability formula P^i(y^e) = C(e,i) y^(e+i(p-1)),
P^i(x) = 0 for i > 0, and extends by the Cartan formula. The closed forms
below come from the total power P = sum_k P^k, the ring map with
P(y) = y + y^p and P(x) = x; P^q of a homogeneous f of degree d is the
degree d + q(p-1) part of P(f).
"""
import itertools
import logging
import random
import re
from dataclasses import dataclass
from functools import lru_cache

import dickson.lib.config as config
import dickson.lib.invariants as invariants
from dickson.lib import CheckResult
from dickson.lib.genexpr import GenExpr, d_sym, dI_sym, h_sym
from dickson.lib.superpoly import (
    SuperPoly,
    binom_mod_p,
    exact_div,
    random_homogeneous,
    random_superpoly,
)
from dickson.lib.utils import ExpressionError, IndexRangeError, UnsupportedError

LOG = logging.getLogger(__name__)

_OP_RE = re.compile(r"\s*(?:(beta|b)|P\s*\^?\s*(\d+))\s*", re.IGNORECASE)


def _require_odd(p):
    if p == 2:
        raise UnsupportedError("Reduced powers are only implemented for odd p")


@dataclass(frozen=True)
class SteenrodOp:
    """A single operation: P^index, or the Bockstein when kind is "beta" """

    kind: str
    index: int = 0

    def __post_init__(self):
        if self.kind not in ("P", "beta"):
            raise UnsupportedError("Unknown Steenrod operation {}".format(self.kind))
        if self.index < 0:
            raise IndexRangeError("P^k needs k >= 0")

    def __str__(self):
        return "beta" if self.kind == "beta" else "P^{}".format(self.index)

    @staticmethod
    def parse(text):
        """Parse a composite such as "beta*P^1" into a list of operations

        The list is in written order, so the rightmost is applied first.

        >>> SteenrodOp.parse("beta*P^2")
        [SteenrodOp(kind='beta', index=0), SteenrodOp(kind='P', index=2)]
        """
        ops = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            match = _OP_RE.match(text, pos)
            if not match or match.end() == pos:
                raise ExpressionError("Cannot read a Steenrod operation", pos)
            if match.group(1):
                ops.append(SteenrodOp("beta"))
            else:
                ops.append(SteenrodOp("P", int(match.group(2))))
            pos = match.end()
            if pos < len(text):
                if text[pos] != "*":
                    raise ExpressionError("Expected '*' between operations", pos)
                pos += 1
        if not ops:
            raise ExpressionError("Empty operation", 0)
        return ops

    def apply(self, f):
        if self.kind == "beta":
            return apply_beta(f)
        return apply_P(self.index, f)


def apply_ops(ops, f):
    for op in reversed(ops):
        f = op.apply(f)
    return f


@lru_cache(maxsize=65536)
def _distribute(yexp, k, p):
    """P^k on the monomial y^yexp as ((exponents, coefficient), ...)"""
    if not yexp:
        return (((), 1),) if k == 0 else ()
    head, rest = yexp[0], yexp[1:]
    out = []
    for j in range(min(head, k) + 1):
        c = binom_mod_p(head, j, p)
        if not c:
            continue
        for tail, c2 in _distribute(rest, k - j, p):
            out.append(((head + j * (p - 1),) + tail, c * c2 % p))
    return tuple(out)


def apply_P(k, f):
    """The reduced power P^k"""
    _require_odd(f.p)
    if k < 0:
        raise IndexRangeError("P^k needs k >= 0")
    if k == 0:
        return f
    out = {}
    for mono, c in f.terms():
        for yexp, c2 in _distribute(mono.yexp, k, f.p):
            key = (mono.ext, yexp)
            out[key] = out.get(key, 0) + c * c2
    return SuperPoly(f.p, f.n, out)


def apply_beta(f):
    """The Bockstein: the derivation with beta(x_i) = y_i and beta(y_i) = 0"""
    _require_odd(f.p)
    out = {}
    for mono, c in f.terms():
        for pos, i in enumerate(mono.ext):
            ext = mono.ext[:pos] + mono.ext[pos + 1 :]
            yexp = list(mono.yexp)
            yexp[i - 1] += 1
            key = (ext, tuple(yexp))
            out[key] = out.get(key, 0) + (-c if pos % 2 else c)
    return SuperPoly(f.p, f.n, out)


def total_power(f):
    """P(f) = sum over k of P^k(f)"""
    top = max((sum(m.yexp) for m, _ in f.terms()), default=0)
    out = SuperPoly.zero(f.p, f.n)
    for k in range(top + 1):
        out = out + apply_P(k, f)
    return out


def _d(p, n, m, i):
    if i == m:
        return SuperPoly.one(p, n)
    if i < 0:
        return SuperPoly.zero(p, n)
    return invariants.expand_symbol(p, n, d_sym(m, i))


@lru_cache(maxsize=None)
def dickson_sum(p, n, m):
    """D_m = d_{m,0} + ... + d_{m,m-1} + 1, the total power of L_m divided by L_m"""
    out = SuperPoly.zero(p, n)
    for j in range(m + 1):
        out = out + _d(p, n, m, j)
    return out


@lru_cache(maxsize=None)
def _dickson_sum_power(p, n, m, e):
    return dickson_sum(p, n, m) ** e


def dickson_sum_power_component(p, n, m, e, degree):
    if degree < 0:
        return SuperPoly.zero(p, n)
    return _dickson_sum_power(p, n, m, e).homogeneous_component(degree)


@lru_cache(maxsize=None)
def inverse_component(p, n, m, e):
    """Degree e part of the power series 1 / D_m"""
    if e < 0:
        return SuperPoly.zero(p, n)
    if e == 0:
        return SuperPoly.one(p, n)
    out = SuperPoly.zero(p, n)
    for j in range(m):
        step = p ** m - p ** j
        if step <= e:
            rest = inverse_component(p, n, m, e - step)
            if rest:
                out = out - _d(p, n, m, j) * rest
    return out


@lru_cache(maxsize=None)
def _moore_quotients(p, n, i):
    """P(L_{n,i}) / L_n split by degree

    P(L_{n,i}) is the sum, over ways of raising some exponent columns by one,
    of the Moore determinants with those columns; repeated columns vanish.
    Each such determinant is divisible by L_n.
    """
    rows = list(range(1, n + 1))
    cols = invariants.moore_columns(n, None if i == n else i)
    ln = invariants.make_L(p, n, n)
    out = {}
    for eps in itertools.product((0, 1), repeat=len(cols)):
        shifted = [c + e for c, e in zip(cols, eps)]
        if len(set(shifted)) != len(shifted):
            continue
        q = exact_div(invariants.moore(p, n, rows, shifted), ln)
        deg = q.degree()
        out[deg] = out.get(deg, SuperPoly.zero(p, n)) + q
    return out


def closed_form_P_d(p, n, i, q, l=0):
    """P^q(d_{n,i}^(p^l)) from P(d_{n,i}) = [P(L_{n,i}) / L_n] / D_n"""
    _require_odd(p)
    if not 0 <= i <= n:
        raise IndexRangeError("d[{},{}] needs 0 <= i <= n".format(n, i))
    if l:
        step = p ** l
        if q % step:
            return SuperPoly.zero(p, n)
        return closed_form_P_d(p, n, i, q // step).frobenius(l)
    target = p ** n - p ** i + q * (p - 1)
    out = SuperPoly.zero(p, n)
    for deg, part in sorted(_moore_quotients(p, n, i).items()):
        if deg <= target:
            out = out + part * inverse_component(p, n, n, target - deg)
    return out


def base_p_digits(value, p, length):
    """Little-endian digits, or None when value needs more than length digits

    >>> base_p_digits(7, 3, 2)
    [1, 2]
    """
    digits = []
    for _ in range(length):
        digits.append(value % p)
        value //= p
    return None if value else digits


def closed_form_P_d0(p, n, q, l=0):
    """Binomial product form of P^q(d_{n,0}^(p^l)) as a GenExpr

    Non-zero only for q = sum_t a_t p^(t+l) with p-1 >= a_{n-1} >= ... >= a_0 >= 0;
    the value is (-1)^a_{n-1} d_{n,0}^(p^l) prod_t C(a_t, a_{t-1}) d_{n,t}^(p^l (a_t - a_{t-1})).
    """
    _require_odd(p)
    zero = GenExpr(p, n)
    step = p ** l
    if q % step:
        return zero
    digits = base_p_digits(q // step, p, n)
    if digits is None or any(a > b for a, b in zip(digits, digits[1:])):
        return zero
    coeff = -1 if digits[-1] % 2 else 1
    factors = [(d_sym(n, 0), step)]
    prev = 0
    for t, a in enumerate(digits):
        coeff *= binom_mod_p(a, prev, p)
        if a - prev:
            factors.append((d_sym(n, t), step * (a - prev)))
        prev = a
    if not coeff % p:
        return zero
    return GenExpr.monomial(p, n, factors, coeff)


def closed_form_P_h(p, n, m):
    """P^m h_n = h_n [D_{n-1}^(p-1)]_{m(p-1)} + (h_n^p when m = p^(n-1))"""
    _require_odd(p)
    hn = invariants.make_h(p, n, n)
    out = hn * dickson_sum_power_component(p, n, n - 1, p - 1, m * (p - 1))
    if m == p ** (n - 1):
        out = out + hn ** p
    return out


def _mui_pieces(p, i, n):
    e = (p - 3) // 2
    lower = invariants.make_L(p, n, i - 1) ** e if i > 1 else SuperPoly.one(p, n)
    return e, lower


def closed_form_P_M(p, i, m, n=None):
    """P^m(M_{i,i-1} L_{i-1}^e), e = (p-3)/2, as sum_t M_{i,t} L_{i-1}^e [D_{i-1}^e]"""
    _require_odd(p)
    n = n or i
    e, lower = _mui_pieces(p, i, n)
    out = SuperPoly.zero(p, n)
    for t in range(i):
        deg = m * (p - 1) - (p ** (i - 1) - p ** t)
        part = dickson_sum_power_component(p, n, i - 1, e, deg)
        if part:
            out = out + invariants.make_M(p, n, i, (t,)) * lower * part
    return out


def closed_form_beta_P_M(p, i, m, n=None):
    """beta P^m(M_{i,i-1} L_{i-1}^e) = L_i L_{i-1}^e [D_{i-1}^e]"""
    _require_odd(p)
    n = n or i
    e, lower = _mui_pieces(p, i, n)
    part = dickson_sum_power_component(p, n, i - 1, e, m * (p - 1) - (p ** (i - 1) - 1))
    if not part:
        return SuperPoly.zero(p, n)
    return invariants.make_L(p, n, i) * lower * part


def closed_form_P_h1_power(p, n, l, k):
    """P^(p^l) (h_1^(p-1))^(p^k): -h_1^(2(p-1)p^k) when l = k, else 0"""
    _require_odd(p)
    if l != k:
        return SuperPoly.zero(p, n)
    return -(invariants.make_h(p, n, 1) ** (2 * (p - 1) * p ** k))


def _compare(tag, p, n, pairs):
    """CheckResult over (label, brute force, closed form) triples"""
    failures = []
    for label, lhs, rhs in pairs:
        if lhs != rhs:
            failures.append("{}: got {} expected {}".format(label, str(lhs)[:80], str(rhs)[:80]))
    detail = "; ".join(failures[:3]) if failures else "{} cases".format(len(pairs))
    return CheckResult(tag, p, n, not failures, detail[:400])


def verify_dickson_action(p, n, i, l, q):
    """P^q(d_{n,i}^(p^l)) by the Cartan formula against the closed forms

    For i = 0 the binomial product form is compared too; its agreement is
    reported in the detail and does not decide the result.
    """
    _require_odd(p)
    base = _d(p, n, n, i) ** (p ** l)
    lhs = apply_P(q, base)
    rhs = closed_form_P_d(p, n, i, q, l)
    res = _compare("dickson-action", p, n, [("i={} l={} q={}".format(i, l, q), lhs, rhs)])
    if i == 0:
        binomial = invariants.expand(closed_form_P_d0(p, n, q, l))
        res.detail += "; binomial-form={}".format(binomial == lhs)
    return res


def scan_dickson_action(p, n, ls=(0,), q_max=None):
    """verify_dickson_action over every i, l in ls and q up to q_max"""
    _require_odd(p)
    pairs = []
    binomial_ok = True
    for l in ls:
        for i in range(n):
            top = (p ** n - p ** i) * p ** l
            for q in range(min(top, q_max if q_max is not None else top) + 1):
                base_lhs = apply_P(q, _d(p, n, n, i) ** (p ** l))
                pairs.append(("i={} l={} q={}".format(i, l, q), base_lhs, closed_form_P_d(p, n, i, q, l)))
                if i == 0 and base_lhs != invariants.expand(closed_form_P_d0(p, n, q, l)):
                    binomial_ok = False
    res = _compare("dickson-action", p, n, pairs)
    res.detail += "; binomial-form={}".format(binomial_ok)
    return res


def verify_dickson_table(p, n):
    """P^(p^(i-1)) d_{n,i} = d_{n,i-1} and P^(p^(n-1)) d_{n,i} = -d_{n,i} d_{n,n-1}"""
    _require_odd(p)
    pairs = []
    for i in range(1, n):
        pairs.append(("P^{} d[{},{}]".format(p ** (i - 1), n, i), apply_P(p ** (i - 1), _d(p, n, n, i)), _d(p, n, n, i - 1)))
    for i in range(n):
        di = _d(p, n, n, i)
        pairs.append(("P^{} d[{},{}]".format(p ** (n - 1), n, i), apply_P(p ** (n - 1), di), -(di * _d(p, n, n, n - 1))))
    return _compare("dickson-table", p, n, pairs)


def verify_h_action(p, n, m=None):
    """P^m h_n against the closed form, for one m or for 0 <= m <= p^(n-1) + p

    The scan also confirms P^(p^(n-1)) h_n = h_n^p and P^m h_n = 0 beyond it.
    """
    _require_odd(p)
    hn = invariants.make_h(p, n, n)
    ms = [m] if m is not None else range(p ** (n - 1) + p + 1)
    pairs = [("m={}".format(k), apply_P(k, hn), closed_form_P_h(p, n, k)) for k in ms]
    top = p ** (n - 1)
    if m is None or m == top:
        pairs.append(("top", apply_P(top, hn), hn ** p))
    if m is None or m > top:
        pairs.append(("above top", apply_P(top + 1, hn), SuperPoly.zero(p, n)))
    return _compare("h-action", p, n, pairs)


def verify_M_action(p, i, m=None):
    """P^m and beta P^m on M_{i,i-1} L_{i-1}^((p-3)/2) against the closed forms"""
    _require_odd(p)
    n = i
    e, lower = _mui_pieces(p, i, n)
    base = invariants.make_M(p, n, i, (i - 1,)) * lower
    top = sum(p ** c for c in range(i - 1)) + e * (p ** (i - 1) - 1) // (p - 1) + p
    ms = [m] if m is not None else range(top + 1)
    pairs = []
    for k in ms:
        pk = apply_P(k, base)
        pairs.append(("P^{}".format(k), pk, closed_form_P_M(p, i, k)))
        pairs.append(("beta P^{}".format(k), apply_beta(pk), closed_form_beta_P_M(p, i, k)))
    return _compare("M-action", p, i, pairs)


def verify_h1_power_action(p, n):
    """P^(p^l) on (h_1^(p-1))^(p^k) for 0 <= l, k < n"""
    _require_odd(p)
    big_h = invariants.make_h(p, n, 1) ** (p - 1)
    pairs = []
    for k in range(n):
        f = big_h.frobenius(k)
        for l in range(n):
            pairs.append(("l={} k={}".format(l, k), apply_P(p ** l, f), closed_form_P_h1_power(p, n, l, k)))
    return _compare("h1-power-action", p, n, pairs)


def verify_total_power(p, n):
    """P(L_n) = L_n D_n and P(h_n) = h_n^p + h_n D_{n-1}^(p-1) by summing every P^k"""
    _require_odd(p)
    ln = invariants.make_L(p, n, n)
    hn = invariants.make_h(p, n, n)
    pairs = [
        ("P(L[{}])".format(n), total_power(ln), ln * dickson_sum(p, n, n)),
        ("P(h[{}])".format(n), total_power(hn), hn ** p + hn * _dickson_sum_power(p, n, n - 1, p - 1)),
    ]
    return _compare("total-power", p, n, pairs)


def verify_cartan(p, n, seed=None, samples=None):
    """P^k(fg) = sum_i P^i(f) P^(k-i)(g) on random pairs"""
    _require_odd(p)
    rng = random.Random(config.default_seed if seed is None else seed)
    pairs = []
    for s in range(samples or config.default_samples):
        f = random_superpoly(p, n, rng, max_degree=3, terms=3)
        g = random_superpoly(p, n, rng, max_degree=3, terms=3)
        k = rng.randint(1, 4)
        rhs = SuperPoly.zero(p, n)
        for i in range(k + 1):
            rhs = rhs + apply_P(i, f) * apply_P(k - i, g)
        pairs.append(("sample {} k={}".format(s, k), apply_P(k, f * g), rhs))
    return _compare("steenrod-cartan", p, n, pairs)


def verify_instability(p, n, seed=None, samples=None):
    """P^e f = f^p and P^(e+1) f = 0 for pure homogeneous f of degree e"""
    _require_odd(p)
    rng = random.Random(config.default_seed if seed is None else seed)
    pairs = []
    for s in range(samples or config.default_samples):
        e = rng.randint(1, 4)
        f = random_homogeneous(p, n, rng, e)
        pairs.append(("sample {} top".format(s), apply_P(e, f), f ** p))
        pairs.append(("sample {} above".format(s), apply_P(e + 1, f), SuperPoly.zero(p, n)))
    return _compare("steenrod-instability", p, n, pairs)


def _parity_part(f, parity):
    out = {}
    for mono, c in f.terms():
        if len(mono.ext) % 2 == parity:
            out[(mono.ext, mono.yexp)] = c
    return SuperPoly(f.p, f.n, out)


def verify_beta(p, n, seed=None, samples=None):
    """beta^2 = 0 and the signed Leibniz rule on random elements"""
    _require_odd(p)
    rng = random.Random(config.default_seed if seed is None else seed)
    pairs = []
    zero = SuperPoly.zero(p, n)
    for s in range(samples or config.default_samples):
        f = random_superpoly(p, n, rng, max_degree=3, terms=4)
        g = random_superpoly(p, n, rng, max_degree=3, terms=4)
        pairs.append(("sample {} square".format(s), apply_beta(apply_beta(f)), zero))
        rhs = zero
        for parity in (0, 1):
            part = _parity_part(f, parity)
            sign = -1 if parity else 1
            rhs = rhs + apply_beta(part) * g + (part * apply_beta(g)).scale(sign)
        pairs.append(("sample {} leibniz".format(s), apply_beta(f * g), rhs))
    return _compare("bockstein", p, n, pairs)


def closure_generators(p, n):
    """h_1^(p-1) and d_{n,i}(I), the generators of the P(1,n-1) invariants"""
    out = [GenExpr.symbol(p, n, h_sym(1), p - 1)]
    out += [GenExpr.symbol(p, n, dI_sym(n, i)) for i in range(1, n)]
    return out


def verify_closure(p, n):
    """Each P^(p^l) of a generator is a polynomial in the same generators"""
    import dickson.lib.modbasis as modbasis

    _require_odd(p)
    gens = closure_generators(p, n)
    failures = []
    found = []
    for g in gens:
        f = invariants.expand(g)
        for l in range(n):
            image = apply_P(p ** l, f)
            if not image:
                continue
            expr = modbasis.express_in_generators(image, gens)
            label = "P^{} {}".format(p ** l, g)
            if expr is None:
                failures.append("{} not in the generated ring".format(label))
            else:
                found.append("{} = {}".format(label, expr))
                LOG.debug(found[-1])
    detail = "; ".join(failures[:3]) if failures else "; ".join(found)
    return CheckResult("steenrod-closure", p, n, not failures, detail[:400])
