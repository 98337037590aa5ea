"""Named invariants of H*(V) and the identities among them

Every constructor works inside the ambient ring on n variables. A generator
of size m lives on y_1..y_m (and x_1..x_m); its hatted variant is the image
under the antidiagonal matrix omega, that is, on y_n..y_{n-m+1}.
"""
import itertools
import logging
import threading

import dickson.lib.glgroup as glgroup
import dickson.lib.linalg as linalg
from dickson.lib import CheckResult, GroupTag, SymbolKind
from dickson.lib.genexpr import (
    GenExpr,
    GenSymbol,
    L_sym,
    M_sym,
    d_sym,
    dI_sym,
    h_sym,
    moore_columns,
)
from dickson.lib.superpoly import SuperPoly, exact_div, substitute
from dickson.lib.utils import (
    IdentityError,
    IndexRangeError,
    UnsupportedError,
    q_number,
)

LOG = logging.getLogger(__name__)

_cache = {}
_cache_lock = threading.Lock()
_new_keys = set()


def _var(n, k, hat):
    return n + 1 - k if hat else k


def _perm_sign(perm):
    inversions = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
    return -1 if inversions % 2 else 1


def _require_odd(p):
    if p == 2:
        raise UnsupportedError("Exterior classes need an odd prime")


def orbit_product(p, n, target, span):
    """prod over v in <y_s : s in span> of (y_target - v)"""
    result = SuperPoly.y(p, n, target)
    ys = [SuperPoly.y(p, n, s) for s in span]
    for coeffs in itertools.product(range(p), repeat=len(span)):
        if not any(coeffs):
            continue
        form = SuperPoly.y(p, n, target)
        for c, y in zip(coeffs, ys):
            if c:
                form = form - y.scale(c)
        result = result * form
    return result


def moore(p, n, rows, cols):
    """det [ y_r^(p^c) ] with rows r in rows and columns c in cols"""
    if len(rows) != len(cols):
        raise IndexRangeError("Moore determinant needs as many rows as columns")
    if not rows:
        return SuperPoly.one(p, n)
    terms = {}
    for perm in itertools.permutations(range(len(cols))):
        yexp = [0] * n
        for r, c in zip(rows, perm):
            yexp[r - 1] += p ** cols[c]
        key = ((), tuple(yexp))
        terms[key] = terms.get(key, 0) + _perm_sign(perm)
    return SuperPoly(p, n, terms)


def make_h(p, n, i, hat=False):
    """h_i = prod over v in <y_1..y_{i-1}> of (y_i - v)"""
    if not 1 <= i <= n:
        raise IndexRangeError("h[{}] needs 1 <= i <= {}".format(i, n))
    return orbit_product(p, n, _var(n, i, hat), [_var(n, s, hat) for s in range(1, i)])


def make_h_variants(p, n, i, j, swap=False, hat=False):
    """h_i(j-hat) when swap is False, h_i(j) when swap is True"""
    if swap:
        if not 1 <= j <= i <= n:
            raise IndexRangeError("h_i(j) needs 1 <= j <= i <= n")
        span = [s for s in range(1, i + 1) if s != j]
        return orbit_product(p, n, _var(n, j, hat), [_var(n, s, hat) for s in span])
    if not 1 <= j < i <= n:
        raise IndexRangeError("h_i(j-hat) needs 1 <= j < i <= n")
    span = [s for s in range(1, i) if s != j]
    return orbit_product(p, n, _var(n, i, hat), [_var(n, s, hat) for s in span])


def _rows(n, m, omit, hat):
    if m > n or m < 1 or not 0 <= omit <= m:
        raise IndexRangeError("Size {} with omitted row {} does not fit n={}".format(m, omit, n))
    return [_var(n, r, hat) for r in range(1, m + 1) if r != omit]


def make_L(p, n, m, i=None, omit=0, hat=False):
    """Moore determinant L_m, L_{m,i} or L_{m,i}(t-hat)

    The rows are y_1..y_m without row ``omit``; with r rows the exponent
    columns are p^0..p^(r-1), or p^0..p^r without p^i when i is given.
    """
    rows = _rows(n, m, omit, hat)
    if i is not None and not 0 <= i <= len(rows):
        raise IndexRangeError("L[{},{}] index out of range".format(m, i))
    return moore(p, n, rows, moore_columns(len(rows), i))


def make_M(p, n, m, subset, omit=0, hat=False):
    """Mui class M_{m,S} or M_{m,S}(t-hat) by Laplace expansion

    The k exterior columns come first; each choice R of k rows contributes
    the sign of the row shuffle times x_R times the Moore minor on the
    remaining rows with exponent columns {0..r-1} minus S.
    """
    _require_odd(p)
    rows = _rows(n, m, omit, hat)
    r = len(rows)
    subset = tuple(subset)
    if list(subset) != sorted(set(subset)) or any(not 0 <= s < r for s in subset):
        raise IndexRangeError("M[{};{}] index out of range".format(m, subset))
    k = len(subset)
    ycols = [c for c in range(r) if c not in subset]
    out = SuperPoly.zero(p, n)
    for chosen in itertools.combinations(range(r), k):
        sign = -1 if sum(pos - j for j, pos in enumerate(chosen)) % 2 else 1
        xs = SuperPoly.monomial(p, n, tuple(rows[pos] for pos in chosen))
        rest = [rows[pos] for pos in range(r) if pos not in chosen]
        out = out + (xs * moore(p, n, rest, ycols)).scale(sign)
    return out


def _subset_sum(p, n, m, i, hat, avoid_first):
    """sum over j_1 < ... < j_s of prod h_{j_t}^((p-1) p^(m-s+t-j_t)), s = m - i"""
    s = m - i
    hp = {j: make_h(p, n, j, hat) ** (p - 1) for j in range(1, m + 1)}
    out = SuperPoly.zero(p, n)
    first = 2 if avoid_first else 1
    for js in itertools.combinations(range(first, m + 1), s):
        term = SuperPoly.one(p, n)
        for t, j in enumerate(js, start=1):
            term = term * hp[j].frobenius(m - s + t - j)
        out = out + term
    return out


def make_d(p, n, m, i, hat=False, cross_check=False):
    """Dickson invariant d_{m,i} from the subset-sum formula

    The quotient L_{m,i} / L_m is not computed by default; with cross_check
    it is, and a disagreement raises IdentityError. check_d_constructions is
    the check that compares both constructions for m = n and every i.
    """
    if i == m:
        return SuperPoly.one(p, n)
    if i < 0:
        return SuperPoly.zero(p, n)
    if not 1 <= m <= n or i > m:
        raise IndexRangeError("d[{},{}] needs 0 <= i <= m <= {}".format(m, i, n))
    d = _subset_sum(p, n, m, i, hat, avoid_first=False)
    if cross_check:
        other = make_d_by_division(p, n, m, i, hat)
        if other != d:
            raise IdentityError("d[{},{}] constructions disagree".format(m, i), d - other)
    return d


def make_d_by_division(p, n, m, i, hat=False):
    return exact_div(make_L(p, n, m, i, hat=hat), make_L(p, n, m, hat=hat))


def make_d_parab(p, n, m, i, hat=False):
    """d_{m,i}(I) for I = (1, m-1): the subset sum over subsets avoiding 1"""
    if i == m:
        return SuperPoly.one(p, n)
    if i <= 0:
        return SuperPoly.zero(p, n)
    if not 2 <= m <= n or i > m:
        raise IndexRangeError("dI[{},{}] needs 1 <= i <= m-1".format(m, i))
    return _subset_sum(p, n, m, i, hat, avoid_first=True)


def build_symbol(p, n, sym):
    """Expand one GenSymbol without touching the cache"""
    sym.validate(n)
    k = sym.kind
    if k == SymbolKind.X:
        return SuperPoly.x(p, n, sym.idx[0])
    if k == SymbolKind.Y:
        return SuperPoly.y(p, n, sym.idx[0])
    if k == SymbolKind.H:
        return make_h(p, n, sym.idx[0], sym.hat)
    if k in (SymbolKind.H_OMIT, SymbolKind.H_SWAP):
        i, j = sym.idx
        return make_h_variants(p, n, i, j, k == SymbolKind.H_SWAP, sym.hat)
    if k == SymbolKind.L:
        i = sym.idx[0] if sym.idx else None
        return make_L(p, n, sym.size, i, sym.omit, sym.hat)
    if k == SymbolKind.D:
        return make_d(p, n, sym.size, sym.idx[0], sym.hat)
    if k == SymbolKind.D_PARAB:
        return make_d_parab(p, n, sym.size, sym.idx[0], sym.hat)
    return make_M(p, n, sym.size, sym.idx, sym.omit, sym.hat)


def expand_symbol(p, n, sym):
    key = (p, n, sym.name())
    with _cache_lock:
        hit = _cache.get(key)
    if hit is not None:
        return hit
    value = build_symbol(p, n, sym)
    with _cache_lock:
        if key not in _cache:
            _cache[key] = value
            _new_keys.add(key)
        return _cache[key]


def expand(expr):
    """The homomorphism from named generators to H*(V)"""
    p, n = expr.p, expr.n
    out = SuperPoly.zero(p, n)
    for mono, c in expr.items():
        term = SuperPoly.const(p, n, c)
        for sym, e in mono:
            term = term * expand_symbol(p, n, sym) ** e
        out = out + term
    return out


def cache_records(only_new=True):
    """Records of cached expansions for persistence"""
    with _cache_lock:
        keys = sorted(_new_keys if only_new else _cache.keys())
        return [
            {"p": k[0], "n": k[1], "symbol": k[2], "poly": _cache[k].to_dict()} for k in keys
        ]


def seed_cache(records):
    loaded = 0
    with _cache_lock:
        for rec in records:
            key = (rec["p"], rec["n"], rec["symbol"])
            if key not in _cache:
                _cache[key] = SuperPoly.from_dict(rec["poly"])
                loaded += 1
    LOG.debug("Seeded {} cached expansions".format(loaded))
    return loaded


def clear_cache():
    with _cache_lock:
        _cache.clear()
        _new_keys.clear()


def sym_expr(p, n, sym, exp=1):
    return GenExpr.symbol(p, n, sym, exp)


def mui_product_sign(k):
    """Sign of M_{n,s_1} ... M_{n,s_k} against M_{n,S} L_n^(k-1)"""
    return -1 if (k * (k - 1) // 2) % 2 else 1


def _result(tag, p, n, failures, detail=""):
    if failures:
        detail = "; ".join(failures[:4])
    return CheckResult(tag, p, n, not failures, detail[:400])


def _residual(name, lhs, rhs, failures):
    if lhs != rhs:
        diff = lhs - rhs
        failures.append("{}: residual {}".format(name, str(diff)[:120]))


def check_d_constructions(p, n):
    """Subset-sum formula against L_{n,i}/L_n and L_{n,0} = L_n^p"""
    failures = []
    for i in range(n):
        _residual("d[{},{}]".format(n, i), make_d(p, n, n, i), make_d_by_division(p, n, n, i), failures)
    _residual("L[{},0]".format(n), make_L(p, n, n, 0), make_L(p, n, n) ** p, failures)
    prod = SuperPoly.one(p, n)
    for i in range(1, n + 1):
        prod = prod * make_h(p, n, i)
    _residual("L[{}]".format(n), make_L(p, n, n), prod, failures)
    return _result("dickson-formula", p, n, failures)


def check_dickson_recursion(p, n):
    """d_{n,k} = d_{n-1,k} h_n^(p-1) + d_{n-1,k-1}^p"""
    failures = []
    hn = make_h(p, n, n) ** (p - 1)
    for k in range(n):
        rhs = make_d(p, n, n - 1, k) * hn + make_d(p, n, n - 1, k - 1) ** p
        _residual("k={}".format(k), make_d(p, n, n, k), rhs, failures)
    return _result("dickson-recursion", p, n, failures)


def check_h_hat(p, n):
    """h_i = h_i(j-hat)^p - h_i(j-hat) h_{i-1}(j)^(p-1)"""
    failures = []
    for i in range(2, n + 1):
        for j in range(1, i):
            omit = make_h_variants(p, n, i, j)
            rhs = omit ** p - omit * make_h_variants(p, n, i - 1, j, swap=True) ** (p - 1)
            _residual("i={} j={}".format(i, j), make_h(p, n, i), rhs, failures)
    return _result("h-hat", p, n, failures)


def check_orbit_polynomial(p, n):
    """h_n = sum_t (-1)^t y_n^(p^(n-1-t)) d_{n-1,n-1-t}"""
    failures = []
    y = SuperPoly.y(p, n, n)
    rhs = SuperPoly.zero(p, n)
    for t in range(n):
        term = (y ** (p ** (n - 1 - t))) * make_d(p, n, n - 1, n - 1 - t)
        rhs = rhs + term.scale((-1) ** t)
    _residual("h[{}]".format(n), make_h(p, n, n), rhs, failures)
    return _result("orbit-polynomial", p, n, failures)


def check_L_expansion(p, n):
    """Row expansion of L_n along each row t"""
    failures = []
    ln = make_L(p, n, n)
    for t in range(1, n + 1):
        yt = SuperPoly.y(p, n, t)
        rhs = SuperPoly.zero(p, n)
        for i in range(n):
            rhs = rhs + ((yt ** (p ** i)) * make_L(p, n, n, i, omit=t)).scale((-1) ** i)
        _residual("t={}".format(t), ln, rhs.scale((-1) ** (t - 1)), failures)
    return _result("L-row-expansion", p, n, failures)


def check_M_expansion(p, n):
    """Row expansion of M_{n,n-1} along each row t"""
    _require_odd(p)
    failures = []
    mn = make_M(p, n, n, (n - 1,))
    for t in range(1, n + 1):
        yt = SuperPoly.y(p, n, t)
        rhs = SuperPoly.x(p, n, t) * make_L(p, n, n, n - 1, omit=t)
        for i in range(n - 1):
            term = (yt ** (p ** i)) * make_M(p, n, n, (i,), omit=t)
            rhs = rhs + term.scale((-1) ** (i + 1))
        _residual("t={}".format(t), mn, rhs.scale((-1) ** (t - 1)), failures)
    return _result("M-row-expansion", p, n, failures)


def check_mui_relations(p, n):
    """M_{n,s}^2 = 0 and M_{n,s_1}...M_{n,s_k} = sign(k) M_{n,S} L_n^(k-1)"""
    _require_odd(p)
    failures = []
    ln = make_L(p, n, n)
    singles = {s: make_M(p, n, n, (s,)) for s in range(n)}
    for s, m in singles.items():
        if m * m:
            failures.append("M[{};{}]^2 != 0".format(n, s))
    for k in range(2, n + 1):
        for subset in itertools.combinations(range(n), k):
            lhs = SuperPoly.one(p, n)
            for s in subset:
                lhs = lhs * singles[s]
            rhs = (make_M(p, n, n, subset) * ln ** (k - 1)).scale(mui_product_sign(k))
            _residual("S={}".format(subset), lhs, rhs, failures)
    return _result("mui-relations", p, n, failures)


def check_decomposition(p, n):
    """d_{n,k} = H^(p^k) d_{n,k+1}(I) + d_{n,k}(I) with H = h_1^(p-1), and the inverse formula"""
    failures = []
    big_h = make_h(p, n, 1) ** (p - 1)
    dI = {k: make_d_parab(p, n, n, k) for k in range(n + 1)}
    for k in range(n):
        rhs = big_h.frobenius(k) * dI[k + 1] + dI[k]
        _residual("k={}".format(k), make_d(p, n, n, k), rhs, failures)
    for k in range(n):
        delta = SuperPoly.zero(p, n)
        for t in range(k, n + 1):
            weight = q_number(p, t) - q_number(p, k)
            dt = make_d(p, n, n, t)
            delta = delta + (big_h ** weight * dt).scale((-1) ** (t - k))
        _residual("dI k={}".format(k), dI[k], delta, failures)
    return _result("parabolic-decomposition", p, n, failures)


def check_hat_consistency(p, n):
    """Direct hatted construction against substitution by omega"""
    w = glgroup.omega(n, p)
    failures = []
    syms = [h_sym(i) for i in range(1, n + 1)]
    syms += [d_sym(n, i) for i in range(n)] + [L_sym(m) for m in range(1, n + 1)]
    if n >= 2:
        syms += [dI_sym(n, i) for i in range(1, n)]
    if p != 2:
        syms += [M_sym(m, (m - 1,)) for m in range(1, n + 1)]
        syms += [M_sym(n, s) for k in range(1, n + 1) for s in itertools.combinations(range(n), k)]
    for sym in syms:
        hatted = GenSymbol(sym.kind, sym.size, sym.idx, sym.omit, True)
        _residual(hatted.name(), build_symbol(p, n, hatted), substitute(build_symbol(p, n, sym), w), failures)
    return _result("omega-hat", p, n, failures)


def solve_mui_product_top(p, n, subset):
    """Coefficients c_i with M_{n-1,S} h_n - M_{n,S} = sum_i c_i M_{n,(S-s_i)+(n-1)} d_{n-1,s_i}

    Returns the coefficient list, or None when no constant solution exists.
    """
    _require_odd(p)
    subset = tuple(subset)
    if not subset or any(s > n - 2 for s in subset):
        raise IndexRangeError("S must lie in 0..n-2")
    lhs = make_M(p, n, n - 1, subset) * make_h(p, n, n) - make_M(p, n, n, subset)
    columns = []
    for s in subset:
        rest = tuple(sorted(set(subset) - {s})) + (n - 1,)
        columns.append(make_M(p, n, n, rest) * make_d(p, n, n - 1, s))
    return solve_constants(lhs, columns)


def solve_constants(target, columns):
    """Constants c with target = sum c_i columns_i, or None"""
    p = target.p
    monos = sorted({m for f in columns + [target] for m, _ in f.terms()})
    if not monos:
        return [0] * len(columns)
    a = [[f.coefficient(m.ext, m.yexp) for f in columns] for m in monos]
    b = [target.coefficient(m.ext, m.yexp) for m in monos]
    sol = linalg.solve_mod_p(a, b, p) if columns else None
    if sol is None:
        return None if any(b) else []
    return [int(v) % p for v in sol]


def h_monomials(p, n, degree):
    """Exponent vectors r with sum r_i p^(i-1) = degree"""
    out = []

    def rec(i, left, acc):
        if i == 0:
            if left == 0:
                out.append(tuple(reversed(acc)))
            return
        step = p ** (i - 1)
        for e in range(left // step, -1, -1):
            rec(i - 1, left - e * step, acc + [e])

    rec(n, degree, [])
    return out


def solve_mui_product_lower(p, n, l, subset):
    """Find f_T in H_n with M_{l,S} h_{l+1}...h_n = M_{n,S} + sum_T M_{n,T} f_T

    Returns {T: GenExpr in h symbols} or None when no solution exists.
    """
    _require_odd(p)
    subset = tuple(subset)
    if not 1 <= l <= n or not subset or subset[-1] > l - 1:
        raise IndexRangeError("the lower product relation needs S inside 0..l-1")
    lhs = make_M(p, n, l, subset)
    for i in range(l + 1, n + 1):
        lhs = lhs * make_h(p, n, i)
    target = lhs - make_M(p, n, n, subset)
    if l == n:
        return {} if not target else None
    k = len(subset)
    deg = target.degree() if target else 0
    columns = []
    labels = []
    for t in itertools.combinations(range(n), k):
        if t == subset:
            continue
        mt = make_M(p, n, n, t)
        rest = deg - mt.degree()
        if rest < 0:
            continue
        for r in h_monomials(p, n, rest):
            f = mt
            for i, e in enumerate(r, start=1):
                if e:
                    f = f * make_h(p, n, i) ** e
            columns.append(f)
            labels.append((t, r))
    if not target:
        return {}
    sol = solve_constants(target, columns)
    if sol is None:
        return None
    out = {}
    for (t, r), c in zip(labels, sol):
        if c:
            mono = [(h_sym(i), e) for i, e in enumerate(r, start=1) if e]
            out[t] = out.get(t, GenExpr(p, n)) + GenExpr.monomial(p, n, mono, c)
    return out


def check_mui_products(p, n, case="top", subset=(0,), l=None):
    """Verify the relations between M_{n-1,S} h_n (or M_{l,S} h_{l+1}..h_n) and M_{n,*}"""
    tag = "mui-product-{}".format(case)
    if case == "top":
        coeffs = solve_mui_product_top(p, n, subset)
        if coeffs is None:
            return CheckResult(tag, p, n, False, "no constant solution for S={}".format(subset))
        k = len(subset)
        closed = [(-(-1) ** (k + i)) % p for i in range(1, k + 1)]
        detail = "S={} c={} closed-form-sign={}".format(list(subset), coeffs, coeffs == closed)
        return CheckResult(tag, p, n, True, detail)
    found = solve_mui_product_lower(p, n, n if l is None else l, subset)
    if found is None:
        return CheckResult(tag, p, n, False, "no H_n solution for S={}".format(subset))
    detail = "; ".join("T={}: {}".format(list(t), f) for t, f in sorted(found.items()))
    return CheckResult(tag, p, n, True, detail or "trivial")


def kuhn_mitchell_generators(p, n, comp):
    """d_{nu_i, nu_i - k} for 1 <= k <= n_i, each on the first nu_i variables"""
    comp = comp if isinstance(comp, glgroup.Composition) else glgroup.Composition(comp)
    out = []
    for size, nu in zip(comp.parts, comp.nu):
        for k in range(1, size + 1):
            out.append(sym_expr(p, n, d_sym(nu, nu - k)))
    return out


def parabolic_exterior_generators(p, n, comp):
    """M_{nu_i,S} L_{nu_i}^(p-2) with nu_{i-1} <= s_k"""
    _require_odd(p)
    comp = comp if isinstance(comp, glgroup.Composition) else glgroup.Composition(comp)
    out = []
    prev = 0
    for nu in comp.nu:
        for k in range(1, nu + 1):
            for subset in itertools.combinations(range(nu), k):
                if subset[-1] >= prev:
                    out.append(sym_expr(p, n, M_sym(nu, subset)) * sym_expr(p, n, L_sym(nu), p - 2))
        prev = nu
    return out


def restriction_image_generators(tag, p, n):
    """Generators of the restriction images as GenExprs

    gl: Dickson generators and M_{n,S} L_n^(p-2).
    sylow: hatted M_{i,i-1} L_{i-1}^((p-3)/2) and hatted h_i.
    p1n1: hatted h_1^(p-1), d_{n,i}(I), M_{1,0} h_1^(p-2) and M_{n,T} L_n^(p-2) with t_1 >= 1.
    pn11: hatted d_{n-1,i} and M_{n-1,S} L_{n-1}^(p-2), with d_{n,n-1} and M_{n,T+(n-1)} L_n^(p-2).
    """
    tag = GroupTag.from_str(tag)
    odd = p != 2
    out = []

    def s(sym, e=1):
        return sym_expr(p, n, sym, e)

    if tag == GroupTag.GL:
        out += [s(d_sym(n, i)) for i in range(n)]
        if odd:
            for k in range(1, n + 1):
                for subset in itertools.combinations(range(n), k):
                    out.append(s(M_sym(n, subset)) * s(L_sym(n), p - 2))
    elif tag == GroupTag.SYLOW:
        if odd:
            e = (p - 3) // 2
            for i in range(1, n + 1):
                gen = s(M_sym(i, (i - 1,), hat=True))
                if i > 1:
                    gen = gen * s(L_sym(i - 1, hat=True), e)
                out.append(gen)
        out += [s(h_sym(i, hat=True)) for i in range(1, n + 1)]
    elif tag == GroupTag.P1N1:
        out.append(s(h_sym(1, hat=True), p - 1))
        out += [s(dI_sym(n, i, hat=True)) for i in range(1, n)]
        if odd:
            out.append(s(M_sym(1, (0,), hat=True)) * s(h_sym(1, hat=True), p - 2))
            for k in range(1, n):
                for subset in itertools.combinations(range(1, n), k):
                    out.append(s(M_sym(n, subset, hat=True)) * s(L_sym(n, hat=True), p - 2))
    elif tag == GroupTag.PN11:
        if n < 2:
            raise UnsupportedError("P(n-1,1) needs n >= 2")
        out += [s(d_sym(n - 1, i, hat=True)) for i in range(n - 1)]
        out.append(s(d_sym(n, n - 1)))
        if odd:
            for k in range(1, n):
                for subset in itertools.combinations(range(n - 1), k):
                    gen = s(M_sym(n - 1, subset, hat=True)) * s(L_sym(n - 1, hat=True), p - 2)
                    out.append(gen)
            for k in range(0, n):
                for subset in itertools.combinations(range(n - 1), k):
                    out.append(s(M_sym(n, subset + (n - 1,))) * s(L_sym(n), p - 2))
    else:
        raise UnsupportedError("No restriction image for tag {}".format(tag))
    return out


def restriction_weyl_generators(tag, p, n):
    """Group each restriction-image family is invariant under"""
    tag = GroupTag.from_str(tag)
    if tag == GroupTag.GL:
        return glgroup.generators(GroupTag.GL, n, p)
    return glgroup.weyl_generators(tag, n, p)


def check_restriction_images(p, n, tag):
    failures = []
    gens = restriction_weyl_generators(tag, p, n)
    for expr in restriction_image_generators(tag, p, n):
        if not glgroup.is_invariant(expand(expr), gens):
            failures.append("{} not invariant".format(expr))
    return _result("restriction-{}".format(tag), p, n, failures)


def check_invariance(p, n):
    """Dickson, upper triangular and Borel invariants under their groups"""
    failures = []
    gl = glgroup.generators(GroupTag.GL, n, p)
    un = glgroup.generators(GroupTag.UN, n, p)
    bn = glgroup.generators(GroupTag.BN, n, p)
    for i in range(n):
        if not glgroup.is_invariant(make_d(p, n, n, i), gl):
            failures.append("d[{},{}]".format(n, i))
    for i in range(1, n + 1):
        h = make_h(p, n, i)
        if not glgroup.is_invariant(h, un):
            failures.append("h[{}] under U".format(i))
        if not glgroup.is_invariant(h ** (p - 1), bn):
            failures.append("h[{}]^(p-1) under B".format(i))
    return _result("dickson-mui-invariance", p, n, failures)


def check_parabolic_generators(p, n, comp):
    """Kuhn-Mitchell and exterior parabolic generators under P(I)"""
    comp = comp if isinstance(comp, glgroup.Composition) else glgroup.Composition(comp)
    gens = glgroup.parabolic_generators(comp, p)
    exprs = kuhn_mitchell_generators(p, n, comp)
    if p != 2:
        exprs += parabolic_exterior_generators(p, n, comp)
    failures = ["{} not invariant".format(e) for e in exprs if not glgroup.is_invariant(expand(e), gens)]
    return _result("parabolic-{}".format(",".join(str(v) for v in comp.parts)), p, n, failures)
