"""Transfer from a subgroup H of GL(n, F_p) to GL(n, F_p) on invariants

For f invariant under H, tau*(f) = sum over coset representatives g of g.f.
The representatives come from glgroup.coset_reps; when f is invariant under
the transposed or omega-conjugated subgroup instead, the matching variant of
the coset family is used.
"""
import itertools
import logging
import random
from dataclasses import dataclass, field
from typing import Optional

import dickson.lib.config as config
import dickson.lib.glgroup as glgroup
import dickson.lib.invariants as invariants
import dickson.lib.modbasis as modbasis
from dickson.lib import CheckResult, Family, GroupTag
from dickson.lib.genexpr import GenExpr, L_sym, M_sym, d_sym, h_sym
from dickson.lib.superpoly import SuperPoly, substitute
from dickson.lib.utils import IdentityError, NotInvariantError, UnsupportedError

LOG = logging.getLogger(__name__)

_SOURCES = (GroupTag.P1N1, GroupTag.PN11, GroupTag.UN, GroupTag.SYLOW)


@dataclass
class TransferTask:
    """An element together with the coset family its transfer is summed over"""

    source: GroupTag
    element: SuperPoly
    cosets: Optional[glgroup.CosetFamily] = field(default=None, repr=False)

    def resolve(self):
        """Pick the coset family variant whose subgroup fixes the element"""
        f = self.element
        base = glgroup.coset_reps(f.p, f.n, self.source)
        for variant in (base, base.transposed(), base.omega_conjugated()):
            if glgroup.is_invariant(f, variant.subgroup_generators()):
                LOG.info(
                    "Transfer from {} at p={} n={} uses the {} convention".format(
                        self.source, f.p, f.n, variant.variant
                    )
                )
                self.cosets = variant
                return variant
        raise NotInvariantError("Element is not invariant under {} or its variants".format(self.source))

    def run(self):
        cosets = self.cosets or self.resolve()
        f = self.element
        out = SuperPoly.zero(f.p, f.n)
        for g in cosets.reps:
            out = out + substitute(f, g)
        if not glgroup.is_invariant(out, glgroup.generators(GroupTag.GL, f.n, f.p)):
            raise IdentityError("Transfer of {} is not GL-invariant".format(f), out)
        return out


def _as_poly(f):
    return invariants.expand(f) if isinstance(f, GenExpr) else f


def transfer(f, tag, cosets=None):
    """tau*(f) for f invariant under the subgroup named by tag

    :param f: SuperPoly or GenExpr
    :param cosets: Optional CosetFamily to sum over instead of the resolved one
    """
    tag = GroupTag.from_str(tag)
    if tag not in _SOURCES:
        raise UnsupportedError("No transfer from {}".format(tag))
    return TransferTask(tag, _as_poly(f), cosets).run()


def normalized_transfer(f, tag):
    """[G:H]^-1 tau*(f); the identity on GL-invariants"""
    f = _as_poly(f)
    index = glgroup.subgroup_index(tag, f.n, f.p)
    return transfer(f, tag).scale(pow(index % f.p, f.p - 2, f.p))


def as_dickson(f):
    """f as a polynomial in d_{n,0..n-1}, or None when f is not in D_n"""
    gens = [GenExpr.symbol(f.p, f.n, d_sym(f.n, i)) for i in range(f.n)]
    return modbasis.express_in_generators(f, gens)


def _result(tag, p, n, failures, count):
    detail = "; ".join(failures[:3]) if failures else "{} cases".format(count)
    return CheckResult(tag, p, n, not failures, detail[:400])


def verify_p1n1_transfer(p, n):
    """tau*(H^m) = 0 for 1 <= m <= A_1, tau*(h_1^(p^n-1)) = (-1)^(n+1) d_{n,0}, tau*(1) = 1

    The sign comes from the monic relation of H = h_1^(p-1); it equals p - 1
    only for even n.
    """
    big_h = invariants.make_h(p, n, 1) ** (p - 1)
    zero = SuperPoly.zero(p, n)
    failures = []
    top = modbasis.family(Family.P1N1, p, n).top()
    if transfer(SuperPoly.one(p, n), GroupTag.P1N1) != 1:
        failures.append("tau*(1) != 1")
    for m in range(1, top + 1):
        if transfer(big_h ** m, GroupTag.P1N1) != zero:
            failures.append("tau*(H^{}) != 0".format(m))
    full = transfer(invariants.make_h(p, n, 1) ** (p ** n - 1), GroupTag.P1N1)
    if full != invariants.make_d(p, n, n, 0).scale((-1) ** (n + 1) % p):
        failures.append("tau*(h_1^{}) = {}".format(p ** n - 1, str(full)[:80]))
    return _result("p1n1-transfer", p, n, failures, top + 2)


def _random_generator_product(rng, gens, p, n, factors=3):
    expr = GenExpr.const(p, n, rng.randint(1, p - 1))
    for _ in range(rng.randint(1, factors)):
        expr = expr * rng.choice(gens) ** rng.randint(1, p)
    return expr


def verify_main(p, n, seed=None, samples=None):
    """tau* vanishes on the non-unit P(n-1,1) basis and equals xi on random elements"""
    fam = modbasis.family(Family.PN11, p, n)
    failures = []
    count = 0
    for b in fam.enumerate():
        if b == 1:
            continue
        count += 1
        value = transfer(b, GroupTag.PN11)
        if value:
            failures.append("tau*({}) = {}".format(b, str(value)[:80]))
    rng = random.Random(config.default_seed if seed is None else seed)
    gens = fam.generators()
    for _ in range(samples or config.default_samples):
        expr = _random_generator_product(rng, gens, p, n, factors=2)
        count += 1
        lhs = transfer(expr, GroupTag.PN11)
        rhs = invariants.expand(fam.xi(expr))
        if lhs != rhs:
            failures.append("{}: tau* != xi".format(expr))
    return _result("transfer-main", p, n, failures, count)


def exterior_example_element(p):
    """M_{1,0} h_1^(p^2-1-p) at n = 2"""
    return GenExpr.symbol(p, 2, M_sym(1, (0,))) * GenExpr.symbol(p, 2, h_sym(1), p * p - 1 - p)


def ideal_family_basis(p, n):
    """Pairs (head, b): head is 1 or M_{n,J} L_n^(p-2), b runs over the hatted upper triangular basis"""
    hn = modbasis.HnFamily(p, n, hat=True).enumerate()
    heads = [GenExpr.const(p, n)]
    if p != 2:
        lead = GenExpr.symbol(p, n, L_sym(n), p - 2)
        for k in range(1, n + 1):
            for subset in itertools.combinations(range(n), k):
                heads.append(GenExpr.symbol(p, n, M_sym(n, subset)) * lead)
    return [(head, b) for head in heads for b in hn]


def ideal_xi(f):
    """xi on the ideal (d_{n,0}) of the Sylow restriction image

    f = a + sum_J M_{n,J} L_n^(p-2) a_J with a, a_J in the hatted H_n, and
    xi(f) keeps the unit coefficient of each a_J.
    """
    p, n = f.p, f.n
    pairs = ideal_family_basis(p, n)
    coeffs = modbasis.oracle_decompose(f, [head * b for head, b in pairs], p, n)
    out = GenExpr(p, n)
    for (head, b), c in zip(pairs, coeffs):
        if c and b == 1:
            out = out + modbasis.dickson_expr(p, n, c) * head
    return out


def verify_exterior_transfer(p, n, seed=None, samples=None):
    """The exterior example at (3, 2), Dickson linearity, and coset independence"""
    if p == 2:
        raise UnsupportedError("Exterior transfer needs an odd prime")
    failures = []
    count = 0
    if (p, n) == (3, 2):
        lhs = transfer(exterior_example_element(p), GroupTag.UN)
        rhs = invariants.make_M(p, 2, 2, (1,)) * invariants.make_L(p, 2, 2) ** (p - 2)
        count += 1
        if lhs != rhs:
            failures.append("tau*(M[1;0] h[1]^{}) = {}".format(p * p - 1 - p, str(lhs)[:80]))
    rng = random.Random(config.default_seed if seed is None else seed)
    gens = invariants.restriction_image_generators(GroupTag.SYLOW, p, n)
    base = glgroup.coset_reps(p, n, GroupTag.UN).omega_conjugated()
    sub = base.subgroup_generators()
    for s in range(samples or config.default_samples):
        f = invariants.expand(_random_generator_product(rng, gens, p, n, factors=2))
        e = modbasis.expand_dickson_monomial(p, n, tuple(rng.randint(0, 1) for _ in range(n)))
        count += 1
        tf = transfer(f, GroupTag.SYLOW)
        if transfer(e * f, GroupTag.SYLOW) != e * tf:
            failures.append("sample {}: not D_n-linear".format(s))
        shuffled = []
        for g in base.reps:
            h = glgroup.GLMatrix.identity(n, p)
            for _ in range(2):
                h = h @ rng.choice(sub)
            shuffled.append(g @ h)
        other = glgroup.CosetFamily(base.tag, p, n, shuffled, base.variant)
        if transfer(f, GroupTag.SYLOW, cosets=other) != tf:
            failures.append("sample {}: depends on coset choice".format(s))
        if tf and tf.degrees() != f.degrees():
            failures.append("sample {}: degree changed".format(s))
    return _result("exterior-transfer", p, n, failures, count)


def verify_ideal_transfer(p, n, seed=None, samples=None):
    """Normalised transfer against xi on f d_{n,0} for f in the Sylow restriction image"""
    rng = random.Random(config.default_seed if seed is None else seed)
    gens = invariants.restriction_image_generators(GroupTag.SYLOW, p, n)
    d0 = invariants.make_d(p, n, n, 0)
    failures = []
    count = samples or config.default_samples
    for s in range(count):
        f = invariants.expand(_random_generator_product(rng, gens, p, n, factors=2)) * d0
        lhs = normalized_transfer(f, GroupTag.SYLOW)
        rhs = invariants.expand(ideal_xi(f))
        if lhs != rhs:
            failures.append("sample {}: residual {}".format(s, str(lhs - rhs)[:80]))
    return _result("ideal-transfer", p, n, failures, count)
