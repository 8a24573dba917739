"""liepoly command line: verify, singular, list-cases.

Exit codes: 0 all non-skipped checks pass, 1 some check failed, 2 usage
error, 3 a monomial cap was exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .cases import CASES, CheckResult, case_at, cases_for_context, generic_tasks, list_cases, run_task
from .lie import AlgebraError, parse_algebra
from .rep import RepresentationContext
from .slices import DEFAULT_MONOMIAL_CAP, SliceCapExceeded

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _nonnegative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def parse_grades(text: str | None, model: str) -> list | None:
    """``k``, ``a:b`` (inclusive) or ``l1,l2``; several separated by ``;``."""
    if text is None:
        return None
    out = []
    for part in text.split(";"):
        part = part.strip()
        try:
            if "," in part:
                a, b = part.split(",")
                out.append((int(a), int(b)))
            elif ":" in part:
                a, b = part.split(":")
                out += list(range(int(a), int(b) + 1))
            else:
                out.append(int(part))
        except ValueError:
            raise UsageError(f"bad grade {part!r}") from None
    want_pair = model == "B"
    if any(isinstance(g, tuple) != want_pair for g in out):
        raise UsageError("double-family grades are pairs l1,l2; single-family grades are integers")
    return out


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="liepoly", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--algebra", help="sp:2, so:4, so:5, so:2n+1 (with --n), sl:3, gl:3")
        sp.add_argument("--n", type=_positive, help="rank parameter n")
        sp.add_argument("--swap", help='comma-separated swapped indices T, e.g. "1,2" or ""')
        sp.add_argument("--model", choices=["A", "B"], default="A", help="B: the sl/gl double-family ring")
        sp.add_argument("--grade", help="k, a:b, or l1,l2 (several joined by ;); write --grade=-1:2 when it starts with -")
        sp.add_argument("--max-degree", type=_nonnegative, default=None, help="degree cap D (default 5)")
        sp.add_argument("--case", help="comma-separated case ids, or 'all'")
        sp.add_argument("--json", action="store_true", help="emit a JSON array")
        sp.add_argument("--jobs", type=_positive, default=1, help="worker processes")
        sp.add_argument("--cap-monomials", type=_positive, default=DEFAULT_MONOMIAL_CAP)

    common(sub.add_parser("verify", help="run verification checks"))
    common(sub.add_parser("singular", help="brute-force singular vectors and catalog match"))
    lc = sub.add_parser("list-cases", help="show the case registry")
    lc.add_argument("--json", action="store_true")
    return p


def _context_from_args(args) -> RepresentationContext | None:
    if args.algebra is None:
        if args.swap is not None:
            raise UsageError("--swap needs --algebra")
        return None
    try:
        spec = parse_algebra(args.algebra, args.n)
        return RepresentationContext.build(spec, args.swap or "", args.model)
    except (AlgebraError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def _selected_cases(args) -> list:
    if not args.case:
        return []
    ids = list(CASES) if args.case.strip() == "all" else [c.strip() for c in args.case.split(",") if c.strip()]
    unknown = [c for c in ids if c not in CASES]
    if unknown:
        raise UsageError(f"unknown case ids {unknown}; see 'liepoly list-cases'")
    try:
        return [case_at(c, args.n) for c in ids]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def plan_verify(args) -> list[tuple]:
    ctx = _context_from_args(args)
    cases = _selected_cases(args)
    D = 5 if args.max_degree is None else args.max_degree
    if ctx is None and not cases:
        raise UsageError("give --algebra or --case")
    model = ctx.model if ctx is not None else None
    tasks: list[tuple] = []
    if ctx is not None:
        parse_grades(args.grade, model)
        matched = cases_for_context(ctx)
        if not matched:
            tasks += generic_tasks(ctx)
        for c in matched:
            if c not in cases:
                cases.append(c)
    for c in cases:
        grades = parse_grades(args.grade, model or c.model)
        tasks += c.tasks(D, grades, args.cap_monomials)
    return tasks


def plan_singular(args) -> list[tuple]:
    from .singular import CATALOGS

    ctx = _context_from_args(args)
    cases = _selected_cases(args)
    D = 5 if args.max_degree is None else args.max_degree
    tasks = []
    if ctx is not None:
        cid = next((k for k, c in CATALOGS.items() if c.make_ctx(ctx.spec.n) == ctx), None)
        if cid is None:
            tasks.append(("singular_search", f"{ctx.spec.label}", {
                "family": ctx.spec.family, "n": ctx.spec.n, "swap": tuple(sorted(ctx.partition.T)),
                "model": ctx.model, "max_degree": D, "cap": args.cap_monomials}))
        else:
            tasks.append(("catalog", cid, {"catalog": cid, "n": ctx.spec.n, "max_degree": D,
                                           "cap": args.cap_monomials}))
    for c in cases:
        if c.catalog:
            tasks.append(("catalog", c.case_id, {"catalog": c.catalog, "n": c.n, "max_degree": D,
                                                 "cap": args.cap_monomials}))
    if not tasks:
        raise UsageError("give --algebra or a --case with a singular catalog")
    return tasks


def run_singular_search(case: str, family: str, n: int, swap, model: str, max_degree: int,
                        cap: int = DEFAULT_MONOMIAL_CAP) -> list[CheckResult]:
    from .cases import make_context
    from .singular import find_all_singular

    ctx = make_context(family, n, swap, model)
    found = find_all_singular(ctx, max_degree, cap)
    return [CheckResult("singular_search", case, {"context": ctx.describe(), "max_degree": max_degree},
                        "PASS", {"found": [sv.to_dict(ctx) for sv in found]})]


def _execute(task: tuple) -> list[CheckResult]:
    if task[0] == "singular_search":
        return run_singular_search(case=task[1], **task[2])
    return run_task(task)


def execute(tasks: list[tuple], jobs: int = 1) -> list[CheckResult]:
    if jobs <= 1 or len(tasks) <= 1:
        chunks = [_execute(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_execute, tasks))
    return [r for chunk in chunks for r in chunk]


def exit_status(results: list[CheckResult]) -> int:
    return EXIT_OK if all(r.verdict in ("PASS", "SKIPPED") for r in results) else EXIT_FAIL


def format_text(results: list[CheckResult]) -> str:
    lines = []
    for r in results:
        extra = ""
        for key in ("grade", "catalog", "family", "claim", "theorem", "config"):
            if key in r.params:
                extra += f" {key}={r.params[key]}"
        lines.append(f"{r.verdict:8} {r.check:20} {r.case}{extra}")
    n_fail = sum(r.verdict == "FAIL" for r in results)
    n_skip = sum(r.verdict == "SKIPPED" for r in results)
    lines.append(f"{len(results)} checks, {n_fail} failed, {n_skip} skipped")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command == "list-cases":
        rows = list_cases()
        if args.json:
            print(json.dumps(rows, indent=2))
        else:
            for r in rows:
                print(f"{r['case']:18} {r['anchor']:30} {r['context']}")
        return EXIT_OK
    try:
        tasks = plan_verify(args) if args.command == "verify" else plan_singular(args)
        results = execute(tasks, args.jobs)
    except UsageError as exc:
        print(f"liepoly: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SliceCapExceeded as exc:
        print(f"liepoly: monomial cap exceeded in {exc.what} ({exc.count} > {exc.cap})", file=sys.stderr)
        return EXIT_CAP
    if args.json:
        print(json.dumps([r.to_dict() for r in results], indent=2))
    else:
        print(format_text(results))
    return exit_status(results)


if __name__ == "__main__":
    sys.exit(main())
