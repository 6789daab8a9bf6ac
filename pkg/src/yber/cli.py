"""Command-line interface.

Exit codes: 0 success, 1 parse error, 2 predicate failure, 3 mathematical
precondition failure, 4 resource budget exceeded.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import catalog
from .core import FiniteSolution, PointMap, check_re, predicate_report
from .derive import derived_solution, exchange_law_holds, is_self_distributive, structure_shelf, verify_shelf_coincidence
from .errors import ParseError, PreconditionError, ResourceError
from .formats import format_solution, parse_reflection, read_solution
from .garside import find_entwining_failure, find_product_failure
from .monoid import find_action_failure, verify_graded_bijection
from .reflect import classify_derived, enumerate_reflections, equivalence_classes

EXIT_OK, EXIT_PARSE, EXIT_PREDICATE, EXIT_PRECONDITION, EXIT_RESOURCE = 0, 1, 2, 3, 4


def load_solution(source: str) -> FiniteSolution:
    """A solution file path, or a catalog name such as ``ex15`` or ``perm3:(123)``."""
    path = Path(source)
    if path.is_file():
        return read_solution(path)
    try:
        return catalog.get(source)
    except KeyError:
        raise ParseError(f"{source!r} is neither a readable file nor a catalog name") from None


def load_reflection(source: str, n: int) -> PointMap:
    """A reflection file path, or inline labels such as ``333`` or ``1,1,1,4``."""
    path = Path(source)
    if path.is_file():
        k = parse_reflection(path.read_text())
    else:
        try:
            k = PointMap.parse(source)
        except ValueError as exc:
            raise ParseError(f"bad reflection {source!r}: {exc}") from None
    if k.n != n:
        raise ParseError(f"reflection has {k.n} entries, solution has n={n}")
    return k


def _labels(k: PointMap) -> str:
    return " ".join(str(v) for v in k.labels())


def cmd_check(args) -> int:
    sol = load_solution(args.solution)
    report = predicate_report(sol)
    print("\n".join(report.lines()))
    return EXIT_OK if report.ybe else EXIT_PREDICATE


def cmd_reflections(args) -> int:
    sol = load_solution(args.solution)
    refls = enumerate_reflections(sol, criterion=args.criterion)
    if args.classes:
        blocks = equivalence_classes(sol, refls.reflections)
        print("\n\n".join("\n".join(_labels(k) for k in block) for block in blocks))
    else:
        for k in refls:
            print(_labels(k))
    return EXIT_OK


def cmd_derive(args) -> int:
    sol = load_solution(args.solution)
    if args.all or args.classify:
        refls = enumerate_reflections(sol).reflections
        if args.classify:
            chunks = []
            for i, (rep, members) in enumerate(classify_derived(sol, refls), start=1):
                header = f"# class {i}: " + "; ".join(_labels(k) for k in members)
                chunks.append(header + "\n" + format_solution(rep))
            sys.stdout.write("\n".join(chunks))
        else:
            chunks = [f"# k={_labels(k)}\n" + format_solution(derived_solution(sol, k)) for k in refls]
            sys.stdout.write("\n".join(chunks))
        return EXIT_OK
    if args.reflection is None:
        raise ParseError("derive needs a reflection or --all")
    k = load_reflection(args.reflection, sol.n)
    sys.stdout.write(format_solution(derived_solution(sol, k)))
    return EXIT_OK


def _verdict(ok):
    if ok is None:
        return "n/a"
    return "pass" if ok else "fail"


def cmd_verify(args) -> int:
    sol = load_solution(args.solution)
    k = load_reflection(args.reflection, sol.n)
    d = args.degree
    if sol.n ** d > 10**7:
        raise ResourceError(f"{sol.n}^{d} words exceed the verification budget")
    if not check_re(sol, k):
        print("reflection=fail")
        raise PreconditionError(f"{k} is not a reflection")
    results = [("reflection", True)]
    results.append(("entwining", all(find_entwining_failure(sol, k, m) is None for m in range(d + 1))))
    rnd = sol.is_rnd
    if rnd:
        product = all(
            find_product_failure(sol, k, p, q) is None
            for p in range(d + 1) for q in range(d + 1 - p)
        )
        results.append(("product_formulas", product))
        results.append(("graded_bijection", all(verify_graded_bijection(sol, k, m) for m in range(d + 1))))
        results.append(("monoid_action", all(find_action_failure(sol, k, m) is None for m in range(d + 1))))
        results.append(("exchange_law", exchange_law_holds(sol, k)))
        coincide, second = verify_shelf_coincidence(sol, k)
        results.append(("shelf_coincidence", coincide))
        results.append(("shelf_left_identity", second))
        results.append(("self_distributive", is_self_distributive(structure_shelf(sol))))
    else:
        for name in ("product_formulas", "graded_bijection", "monoid_action", "exchange_law",
                     "shelf_coincidence", "shelf_left_identity", "self_distributive"):
            results.append((name, None))
    for name, ok in results:
        print(f"{name}={_verdict(ok)}")
    failed = any(ok is False for _, ok in results)
    return EXIT_PREDICATE if failed else EXIT_OK


def cmd_strange(args) -> int:
    # numba is slow to import, so only this command pays for it
    from .strange import count_strange, list_strange

    iso = not args.raw
    if args.list:
        first = True
        for op in list_strange(args.n, up_to_isomorphism=iso):
            if not first:
                print()
            first = False
            print("\n".join(op.rows()))
        return EXIT_OK
    print(count_strange(args.n, up_to_isomorphism=iso, threads=args.threads))
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.name is None:
        for name in catalog.standard_names():
            print(f"{name}\t{catalog.describe(name)}")
        return EXIT_OK
    sys.stdout.write(format_solution(load_solution(args.name)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="yber", description="Finite Yang-Baxter solutions and their reflections.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="print the predicate report of a solution")
    p.add_argument("solution", help="solution file or catalog name")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("reflections", help="list all reflections")
    p.add_argument("solution")
    p.add_argument("--criterion", choices=["auto", "brute", "left", "right"], default="auto")
    p.add_argument("--classes", action="store_true", help="group into twist-equivalence classes")
    p.set_defaults(func=cmd_reflections)

    p = sub.add_parser("derive", help="print generalised derived solutions")
    p.add_argument("solution")
    p.add_argument("reflection", nargs="?", help="reflection file or labels such as 333")
    p.add_argument("--all", action="store_true", help="derive along every reflection")
    p.add_argument("--classify", action="store_true", help="one representative per isomorphism class")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("verify", help="check the entwining, product, monoid and shelf identities")
    p.add_argument("solution")
    p.add_argument("reflection")
    p.add_argument("--degree", type=int, default=3)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("strange", help="count or list strange operations")
    p.add_argument("n", type=int)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", help="print the number of operations (default)")
    mode.add_argument("--list", action="store_true", help="print the tables (n <= 3)")
    p.add_argument("--raw", action="store_true", help="count labelled tables instead of isomorphism classes")
    p.add_argument("--threads", type=int, default=None, help="worker threads (default: YBER_THREADS or the CPU count)")
    p.set_defaults(func=cmd_strange)

    p = sub.add_parser("catalog", help="list built-in solutions or print one")
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ResourceError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
