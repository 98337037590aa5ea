#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import argparse
import json
import logging
import sys

from tabulate import tabulate

import dickson.lib.config as config
import dickson.lib.db as dbLib
import dickson.lib.glgroup as glgroup
import dickson.lib.invariants as invariants
import dickson.lib.modbasis as modbasis
import dickson.lib.steenrod as steenrod
import dickson.lib.transfer as transfer
from dickson.lib import Family, GroupTag
from dickson.lib.parser import parse_expr
from dickson.lib.utils import (
    DicksonError,
    ExpressionError,
    IndexRangeError,
    UnsupportedError,
    parse_composition,
)
from dickson.lib.verify import run_verify_suite

logging.basicConfig(
    level=logging.INFO, format="%(levelname)s [%(asctime)s] %(message)s"
)
LOG = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

FAMILIES = [f.value for f in Family]
TRANSFER_SOURCES = [t.value for t in (GroupTag.PN11, GroupTag.P1N1, GroupTag.UN, GroupTag.SYLOW)]


def common_args():
    """Flags shared by every subcommand"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", dest="p", type=int, default=3, help="Prime of the coefficient field. Default 3")
    common.add_argument("--n", dest="n", type=int, default=2, help="Number of variables. Default 2")
    common.add_argument(
        "--format",
        dest="fmt",
        choices=["text", "json"],
        default="text",
        help="Output format. json output is versioned with schema_version",
    )
    common.add_argument("--seed", dest="seed", type=int, default=None, help="Seed of the randomized checks")
    common.add_argument(
        "--samples", dest="samples", type=int, default=None, help="Random elements per randomized check"
    )
    common.add_argument(
        "--cache",
        action="store_true",
        default=False,
        dest="cache",
        help="Reuse and extend the expansion cache in platform specific user_data_dir",
    )
    common.add_argument("--verbose", action="store_true", default=False, dest="verbose", help="Debug logging")
    common.add_argument("--quiet", action="store_true", default=False, dest="quiet", help="Only log warnings")
    return common


def build_args(argv=None):
    """
    Constructs command line arguments for the dickson tool
    """
    common = common_args()
    parser = argparse.ArgumentParser(
        description="Exact computations with Dickson, Mui and parabolic invariants over F_p: Steenrod operations, free module bases over the Dickson algebra, the rewriting map xi and the transfer.",
    )
    sub = parser.add_subparsers(dest="command")
    sub.required = True

    expand = sub.add_parser("expand", parents=[common], help="Expand an expression in the generators to a polynomial")
    expand.add_argument("expr", help="Expression such as d[2,0]^2*d[2,1]^7")

    check = sub.add_parser("invariant-check", parents=[common], help="Test invariance under a subgroup")
    check.add_argument("expr")
    check.add_argument(
        "--tag", dest="tag", default="gl", choices=[t.value for t in GroupTag], help="Subgroup of GL(n, F_p)"
    )
    check.add_argument("--composition", dest="composition", help="Parabolic subgroup P(I), for example 1,2")
    check.add_argument(
        "--omega", action="store_true", default=False, dest="omega", help="Use the omega-conjugated subgroup"
    )

    st = sub.add_parser("steenrod", parents=[common], help="Apply Steenrod operations")
    st.add_argument("expr")
    st.add_argument("--op", dest="op", required=True, help="Operation such as P^3 or beta*P^1")

    basis = sub.add_parser("basis", parents=[common], help="List a free D_n-module basis")
    basis.add_argument("--family", dest="family", required=True, choices=FAMILIES)
    basis.add_argument(
        "--freeness", action="store_true", default=False, dest="freeness", help="Also run the freeness check"
    )
    basis.add_argument(
        "--degree-bound",
        dest="degree_bound",
        type=int,
        default=None,
        help="Degree cap of the freeness check. Default DICKSON_DEGREE_BOUND",
    )

    for name, text in (("rewrite", "Decompose over a family basis"), ("xi", "Apply the rewriting map xi")):
        cmd = sub.add_parser(name, parents=[common], help=text)
        cmd.add_argument("expr")
        cmd.add_argument("--family", dest="family", required=True, choices=FAMILIES)

    tr = sub.add_parser("transfer", parents=[common], help="Transfer to GL(n, F_p)")
    tr.add_argument("expr", nargs="?", default=None)
    tr.add_argument("--family", dest="family", required=True, choices=TRANSFER_SOURCES)
    tr.add_argument(
        "--report", action="store_true", default=False, dest="report", help="Run the transfer identity checks"
    )

    verify = sub.add_parser("verify", parents=[common], help="Run the verification suite")
    verify.add_argument("scope", nargs="?", default="fast", choices=["fast", "full", "all"])
    return parser.parse_args(argv)


def emit(args, doc, rows=None, headers=None, text=None):
    """Print a result as tabulated text or as a versioned JSON document

    :param doc: JSON payload
    :param rows: Table rows for text output
    :param text: Plain text for text output when there is no table
    """
    if args.fmt == "json":
        doc = dict(doc, schema_version=config.schema_version, command=args.command)
        print(json.dumps(doc, sort_keys=True, indent=2), flush=True)
        return
    if rows is not None:
        print(tabulate(rows, headers, tablefmt="grid"), flush=True)
    if text is not None:
        print(text, flush=True)


def print_results(args, results):
    """Pretty print a list of CheckResults"""
    rows = [[r.tag, r.p, r.n, "pass" if r.passed else "FAIL", "{:.2f}".format(r.seconds), r.detail] for r in results]
    emit(
        args,
        {"results": [r.to_dict() for r in results], "passed": all(results)},
        rows,
        ["Tag", "p", "n", "Status", "Seconds", "Detail"],
    )
    return EXIT_OK if all(results) else EXIT_FAILED


def _stream_poly(poly):
    """Print a polynomial one term per line"""
    if not poly:
        print("0", flush=True)
        return
    for k, term in enumerate(poly.term_strings()):
        print(term if k == 0 else "+ " + term)
    sys.stdout.flush()


def cmd_expand(args):
    expr = parse_expr(args.expr, args.p, args.n)
    poly = invariants.expand(expr)
    if args.fmt == "json":
        emit(args, {"input": str(expr), "p": args.p, "n": args.n, "result": poly.to_dict()})
    else:
        _stream_poly(poly)
    return EXIT_OK


def _check_group(args):
    if args.composition:
        comp = glgroup.Composition(parse_composition(args.composition, args.n))
        if args.omega:
            return "P({})^omega".format(args.composition), glgroup.weyl_generators(GroupTag.GL, args.n, args.p, comp)
        return "P({})".format(args.composition), glgroup.parabolic_generators(comp, args.p)
    tag = GroupTag.from_str(args.tag)
    if args.omega:
        return "{}^omega".format(tag), glgroup.weyl_generators(tag, args.n, args.p)
    return str(tag), glgroup.generators(tag, args.n, args.p)


def cmd_invariant_check(args):
    expr = parse_expr(args.expr, args.p, args.n)
    label, gens = _check_group(args)
    ok = glgroup.is_invariant(invariants.expand(expr), gens)
    emit(
        args,
        {"input": str(expr), "group": label, "p": args.p, "n": args.n, "invariant": ok},
        [[str(expr), label, ok]],
        ["Expression", "Group", "Invariant"],
    )
    return EXIT_OK if ok else EXIT_FAILED


def cmd_steenrod(args):
    ops = steenrod.SteenrodOp.parse(args.op)
    expr = parse_expr(args.expr, args.p, args.n)
    value = steenrod.apply_ops(ops, invariants.expand(expr))
    dickson = transfer.as_dickson(value) if value else None
    op_text = "*".join(str(o) for o in ops)
    emit(
        args,
        {
            "input": str(expr),
            "op": op_text,
            "result": value.to_dict(),
            "dickson": str(dickson) if dickson is not None else None,
        },
        [[op_text, str(expr), str(value), str(dickson) if dickson is not None else "-"]],
        ["Operation", "Input", "Result", "In D_n"],
    )
    return EXIT_OK


def cmd_basis(args):
    fam = modbasis.family(args.family, args.p, args.n)
    basis = fam.enumerate()
    rows = [[k, str(b), b.degree()] for k, b in enumerate(basis)]
    doc = {
        "family": args.family,
        "p": args.p,
        "n": args.n,
        "rank": len(basis),
        "expected_rank": modbasis.expected_rank(args.family, args.p, args.n),
        "basis": [{"element": str(b), "degree": b.degree()} for b in basis],
    }
    status = EXIT_OK
    if args.freeness:
        res = modbasis.verify_freeness(args.family, args.p, args.n, args.degree_bound)
        doc["freeness"] = res.to_dict()
        status = EXIT_OK if res else EXIT_FAILED
        rows.append(["freeness", "pass" if res else "FAIL", res.detail])
    emit(args, doc, rows, ["#", "Element", "Degree"])
    return status


def cmd_rewrite(args):
    expr = parse_expr(args.expr, args.p, args.n)
    dec = modbasis.rewrite(expr, args.family)
    rows = [[str(b), str(c)] for b, c in dec.pairs]
    emit(args, dec.to_dict(), rows, ["Basis element", "Coefficient in D_n ({})".format(dec.engine)])
    return EXIT_OK


def cmd_xi(args):
    expr = parse_expr(args.expr, args.p, args.n)
    value = modbasis.xi(expr, args.family)
    emit(args, {"family": args.family, "input": str(expr), "xi": str(value)}, text=str(value))
    return EXIT_OK


def cmd_transfer(args):
    if args.report:
        results = [transfer.verify_p1n1_transfer(args.p, args.n)]
        if args.family == GroupTag.PN11.value:
            results.append(transfer.verify_main(args.p, args.n, args.seed, args.samples))
        elif args.family in (GroupTag.UN.value, GroupTag.SYLOW.value):
            results.append(transfer.verify_exterior_transfer(args.p, args.n, args.seed, args.samples))
        return print_results(args, sorted(results, key=lambda r: r.tag))
    if args.expr is None:
        raise ExpressionError("transfer needs an expression unless --report is given", 0)
    expr = parse_expr(args.expr, args.p, args.n)
    value = transfer.transfer(expr, args.family)
    dickson = transfer.as_dickson(value) if value else None
    emit(
        args,
        {
            "source": args.family,
            "input": str(expr),
            "result": value.to_dict(),
            "dickson": str(dickson) if dickson is not None else None,
        },
        [[str(expr), str(value), str(dickson) if dickson is not None else "-"]],
        ["Input", "Transfer", "In D_n"],
    )
    return EXIT_OK


def cmd_verify(args):
    scope = "full" if args.scope == "all" else args.scope
    return print_results(args, run_verify_suite(scope, args.seed, args.samples))


COMMANDS = {
    "expand": cmd_expand,
    "invariant-check": cmd_invariant_check,
    "steenrod": cmd_steenrod,
    "basis": cmd_basis,
    "rewrite": cmd_rewrite,
    "xi": cmd_xi,
    "transfer": cmd_transfer,
    "verify": cmd_verify,
}


def main(argv=None):
    args = build_args(argv)
    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)
    elif args.quiet:
        logging.getLogger().setLevel(logging.WARNING)
    db = None
    if args.cache:
        db = dbLib.get()
        loaded = invariants.seed_cache(dbLib.search(db, args.p, args.n))
        LOG.info(
            "Loaded {} of {} cached expansions from {}".format(loaded, dbLib.index_count(db["db_file"]), db["db_file"])
        )
    try:
        status = COMMANDS[args.command](args)
    except (ExpressionError, IndexRangeError, UnsupportedError) as e:
        LOG.error(e)
        status = EXIT_USAGE
    except DicksonError as e:
        LOG.error(e)
        status = EXIT_FAILED
    if db is not None:
        dbLib.store(db, invariants.cache_records())
    return status


if __name__ == "__main__":
    sys.exit(main())
