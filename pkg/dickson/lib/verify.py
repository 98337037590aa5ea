"""Verification suite over a grid of (p, n)

Every item returns a CheckResult; an item that raises is recorded as a failed
result carrying the error message, so a run always produces a full report.
"""
import itertools
import logging
import time

import dickson.lib.glgroup as glgroup
import dickson.lib.invariants as invariants
import dickson.lib.modbasis as modbasis
import dickson.lib.steenrod as steenrod
import dickson.lib.transfer as transfer
from dickson.lib import CheckResult, Family, GroupTag
from dickson.lib.utils import DicksonError, UnsupportedError

LOG = logging.getLogger(__name__)

FAST_GRID = ((2, 3), (3, 2))
FULL_GRID = FAST_GRID + ((3, 3), (5, 2), (2, 4))
# Cardinality-only points of the full scope
RANK_ONLY = ((2, 4), (3, 4))
SCOPES = ("fast", "full")


class SuiteItem(object):
    """One scheduled check: its tag, the grid point and the call producing it"""

    def __init__(self, tag, p, n, func, *args, **kwargs):
        self.tag = tag
        self.p = p
        self.n = n
        self.func = func
        self.args = args
        self.kwargs = kwargs

    def run(self):
        start = time.perf_counter()
        try:
            result = self.func(*self.args, **self.kwargs)
        except DicksonError as e:
            LOG.warning("{} at p={} n={} raised: {}".format(self.tag, self.p, self.n, e))
            result = CheckResult(self.tag, self.p, self.n, False, "{}: {}".format(e.__class__.__name__, e))
        result.seconds = time.perf_counter() - start
        return result


def _invariant_items(p, n, full):
    items = [
        SuiteItem("dickson-formula", p, n, invariants.check_d_constructions, p, n),
        SuiteItem("dickson-recursion", p, n, invariants.check_dickson_recursion, p, n),
        SuiteItem("h-hat", p, n, invariants.check_h_hat, p, n),
        SuiteItem("orbit-polynomial", p, n, invariants.check_orbit_polynomial, p, n),
        SuiteItem("L-row-expansion", p, n, invariants.check_L_expansion, p, n),
        SuiteItem("parabolic-decomposition", p, n, invariants.check_decomposition, p, n),
        SuiteItem("dickson-mui-invariance", p, n, invariants.check_invariance, p, n),
    ]
    if n > 3:
        return items
    items.append(SuiteItem("omega-hat", p, n, invariants.check_hat_consistency, p, n))
    for tag in (GroupTag.GL, GroupTag.SYLOW, GroupTag.P1N1, GroupTag.PN11):
        items.append(SuiteItem("restriction-{}".format(tag), p, n, invariants.check_restriction_images, p, n, tag))
    for comp in glgroup.compositions(n):
        label = "parabolic-{}".format(",".join(str(v) for v in comp))
        items.append(SuiteItem(label, p, n, invariants.check_parabolic_generators, p, n, comp))
    if p != 2:
        items.append(SuiteItem("M-row-expansion", p, n, invariants.check_M_expansion, p, n))
        items.append(SuiteItem("mui-relations", p, n, invariants.check_mui_relations, p, n))
        items.append(SuiteItem("mui-product-top", p, n, invariants.check_mui_products, p, n, "top", (0,)))
        if full and n == 3:
            items.append(SuiteItem("mui-product-lower", p, n, invariants.check_mui_products, p, n, "lower", (0,), 1))
    return items


def _steenrod_items(p, n, full, seed, samples):
    if p == 2 or n > 3:
        return []
    items = [
        SuiteItem("steenrod-cartan", p, n, steenrod.verify_cartan, p, n, seed=seed, samples=samples),
        SuiteItem("steenrod-instability", p, n, steenrod.verify_instability, p, n, seed=seed, samples=samples),
        SuiteItem("bockstein", p, n, steenrod.verify_beta, p, n, seed=seed, samples=samples),
        SuiteItem("dickson-table", p, n, steenrod.verify_dickson_table, p, n),
        SuiteItem("dickson-action", p, n, steenrod.scan_dickson_action, p, n, (0, 1) if full and (p, n) == (3, 2) else (0,)),
        SuiteItem("h-action", p, n, steenrod.verify_h_action, p, n),
        SuiteItem("h1-power-action", p, n, steenrod.verify_h1_power_action, p, n),
        SuiteItem("total-power", p, n, steenrod.verify_total_power, p, n),
        SuiteItem("steenrod-closure", p, n, steenrod.verify_closure, p, n),
    ]
    for i in sorted({1, n} if n == 2 else {n}):
        items.append(SuiteItem("M-action", p, i, steenrod.verify_M_action, p, i))
    return items


def _module_items(p, n, full, seed, samples):
    if n < 2:
        return []
    items = [SuiteItem("pn11-relations", p, n, modbasis.check_relations, p, n)]
    scan = (p, n) in FAST_GRID
    for tag in (Family.PN11, Family.P1N1):
        if scan:
            items.append(SuiteItem("freeness-{}".format(tag), p, n, modbasis.verify_freeness, tag, p, n))
        else:
            items.append(SuiteItem("cardinality-{}".format(tag), p, n, modbasis.verify_cardinality, tag, p, n))
        if n <= 3:
            items.append(
                SuiteItem(
                    "decompose-{}".format(tag), p, n, modbasis.check_decompositions, tag, p, n, samples=samples, seed=seed
                )
            )
    if n == 2 and (scan or full):
        items.append(SuiteItem("freeness-hn", p, n, modbasis.verify_freeness, Family.HN, p, n))
    if full and (p, n) == (3, 2):
        items.append(SuiteItem("freeness-sylow", p, n, modbasis.verify_freeness, Family.SYLOW, p, n))
    return items


def _transfer_items(p, n, full, seed, samples):
    if n > 3:
        return []
    items = [SuiteItem("p1n1-transfer", p, n, transfer.verify_p1n1_transfer, p, n)]
    if n >= 2:
        items.append(SuiteItem("transfer-main", p, n, transfer.verify_main, p, n, seed=seed, samples=samples))
    if p != 2 and n == 2:
        items.append(
            SuiteItem("exterior-transfer", p, n, transfer.verify_exterior_transfer, p, n, seed=seed, samples=samples)
        )
    if full and (p, n) == (3, 2):
        items.append(SuiteItem("ideal-transfer", p, n, transfer.verify_ideal_transfer, p, n, seed=seed, samples=samples))
    return items


def suite_items(scope="fast", seed=None, samples=None):
    """Items of a scope in scheduling order"""
    if scope not in SCOPES:
        raise UnsupportedError("Unknown scope {}, expected one of {}".format(scope, ", ".join(SCOPES)))
    full = scope == "full"
    grid = FULL_GRID if full else FAST_GRID
    items = []
    if (2, 3) in grid:
        items.append(SuiteItem("worked-example", 2, 3, modbasis.check_worked_example))
    for p, n in grid:
        items += _invariant_items(p, n, full)
        items += _steenrod_items(p, n, full, seed, samples)
        items += _module_items(p, n, full, seed, samples)
        items += _transfer_items(p, n, full, seed, samples)
    if full:
        for (p, n), tag in itertools.product(RANK_ONLY, (Family.PN11, Family.P1N1)):
            if (p, n) not in grid:
                items.append(SuiteItem("cardinality-{}".format(tag), p, n, modbasis.verify_cardinality, tag, p, n))
    return items


def run_verify_suite(scope="fast", seed=None, samples=None):
    """Run every item of a scope and return the results sorted by tag, p and n

    :param scope: fast or full
    :param seed: Seed of the randomized checks
    :param samples: Random elements per randomized check
    """
    items = suite_items(scope, seed, samples)
    LOG.info("Running {} verification items in {} scope".format(len(items), scope))
    results = []
    for item in items:
        res = item.run()
        LOG.info(
            "{} p={} n={}: {} in {:.2f}s".format(res.tag, res.p, res.n, "pass" if res else "FAIL", res.seconds)
        )
        results.append(res)
    return sorted(results, key=lambda r: (r.tag, r.p, r.n))
