"""Command-line driver: ``specseq <command> (FILE | --fixture NAME) [options]``.

Exit status is 0 on success, 1 when a check fails or ``--expect-agree`` sees
a disagreement, and 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .assembly import FilteredComplexError, assemble
from .audit import audit
from .document import DocumentError, dumps, parse
from .fixtures import fixture_names, get_fixture
from .homology import associated_graded, chain_homology
from .multicomplex import DEFAULT_SEED, Multicomplex, random_instance, validate
from .render import (
    expression,
    grid,
    names_in_degree,
    page_json,
    page_table,
    pages_dot,
    rep_strings,
    structure_str,
)
from .spectral import compare_page, induced_map_on_page, page, verify_convergence

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    pass


def _load(args) -> Multicomplex:
    if args.fixture and args.file:
        raise InputError("give either FILE or --fixture, not both")
    if args.fixture:
        try:
            return get_fixture(args.fixture, args.param_r)
        except (KeyError, ValueError) as exc:
            raise InputError(str(exc.args[0])) from None
    if not args.file:
        raise InputError("no input: give FILE or --fixture NAME")
    if args.param_r is not None:
        raise InputError("--param-r only applies to fixtures")
    try:
        return parse(args.file)
    except OSError as exc:
        raise InputError(f"cannot read {args.file}: {exc.strerror}") from None
    except DocumentError as exc:
        raise InputError(f"{args.file}: {exc}") from None


def _assembled(mc: Multicomplex):
    try:
        return assemble(mc)
    except FilteredComplexError as exc:
        raise InputError(str(exc)) from None


def cmd_validate(args, out) -> int:
    mc = _load(args)
    report = validate(mc)
    if report.ok:
        kind = "double complex" if mc.max_i <= 1 else f"multicomplex (d_i up to i={mc.max_i})"
        print(f"ok: {kind} with {sum(map(len, mc.generators.values()))} generators", file=out)
        return EXIT_OK
    for v in report.violations:
        print(f"violation: n={v.n} at ({v.p},{v.q}) residual {v.residual.tolist()}", file=out)
    return EXIT_FAIL


def cmd_homology(args, out) -> int:
    fc = _assembled(_load(args))
    h = chain_homology(fc)
    for n, g in h.groups.items():
        reps = ", ".join(expression(v, names_in_degree(fc, n)) for v in g.reps)
        print(f"H_{n} = {structure_str(g)}" + (f"  generated by [{reps}]" if reps else ""), file=out)
    gh = associated_graded(fc)
    size = max(fc.max_degree + 1, 1)
    print("GH", file=out)
    print(grid(gh.groups, size, size), file=out)
    return EXIT_OK


def cmd_pages(args, out) -> int:
    fc = _assembled(_load(args))
    if args.min_r < 0:
        raise InputError("--min-r must be >= 0")
    if args.max_r < args.min_r:
        raise InputError("--max-r must be at least --min-r")
    pages = [page(fc, r) for r in range(args.min_r, args.max_r + 1)]
    if args.format == "json":
        json.dump({"pages": [page_json(p) for p in pages]}, out, indent=2, ensure_ascii=False)
        out.write("\n")
    else:
        print("\n\n".join(page_table(p) for p in pages), file=out)
    if args.emit_dot:
        Path(args.emit_dot).write_text(pages_dot(pages), encoding="utf-8")
    return EXIT_OK


def cmd_diff(args, out) -> int:
    fc = _assembled(_load(args))
    if args.r < 0:
        raise InputError("--r must be >= 0")
    p = page(fc, args.r)
    s, t = args.s, args.t
    if (s, t) not in p.cells:
        raise InputError(f"({s},{t}) is outside the complex")
    d = p.differential(s, t)
    ts, tt = p.target(s, t)
    print(f"d^{args.r}: E^{args.r}_({s},{t}) = {structure_str(d.domain)} -> "
          f"E^{args.r}_({ts},{tt}) = {structure_str(d.codomain)}", file=out)
    print(f"matrix: {d.matrix.tolist()}", file=out)
    src_reps = rep_strings(fc, s, t, d.domain)
    tgt_reps = rep_strings(fc, ts, tt, d.codomain) if d.codomain.ngens else []
    for j, rep in enumerate(src_reps):
        image = d.matrix.column(j)
        terms = expression(image, [f"[{x}]" for x in tgt_reps]) if tgt_reps else "0"
        print(f"  [{rep}] -> {terms}", file=out)
    return EXIT_OK


def cmd_compare(args, out) -> int:
    mc = _load(args)
    fc = _assembled(mc)
    if args.r < 1:
        raise InputError("--r must be >= 1")
    if (args.s is None) != (args.t is None):
        raise InputError("give both --s and --t, or neither")
    if args.s is not None:
        reports = {(args.s, args.t): induced_map_on_page(mc, args.r, args.s, args.t)}
    else:
        reports = {st: c for st, c in compare_page(mc, args.r, fc).items() if not c.cell.is_zero()}
    all_agree = True
    for (s, t), c in sorted(reports.items()):
        all_agree &= c.agrees
        names = names_in_degree(fc, s + t)
        dom_reps = ", ".join(expression(v, names) for v in c.induced_domain.reps) or "0"
        tgt_names = names_in_degree(fc, s + t - 1)
        img_reps = ", ".join(expression(v, tgt_names) for v in c.induced_image.reps) or "0"
        print(
            f"r={c.r} ({s},{t}) -> ({s - c.r},{t + c.r - 1}): "
            f"E^r={structure_str(c.cell)} "
            f"dr_image={structure_str(c.dr_image)} "
            f"induced_domain={structure_str(c.induced_domain)} [{dom_reps}] "
            f"induced_image={structure_str(c.induced_image)} [{img_reps}] "
            f"agrees={'true' if c.agrees else 'false'}",
            file=out,
        )
    if not reports:
        print(f"r={args.r}: every cell of E^{args.r} is zero", file=out)
    return EXIT_FAIL if args.expect_agree and not all_agree else EXIT_OK


def cmd_converge(args, out) -> int:
    fc = _assembled(_load(args))
    report = verify_convergence(fc)
    size = max(fc.max_degree + 1, 1)
    print("E^inf", file=out)
    print(grid(report.e_infinity.cells, size, size), file=out)
    print("GH", file=out)
    print(grid(report.graded.groups, size, size), file=out)
    for st, a, b in report.mismatches:
        print(f"mismatch at {st}: E^inf {a} vs GH {b}", file=out)
    print("pass" if report.ok else "FAIL", file=out)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_fixtures(args, out) -> int:
    if args.action == "list":
        for name in fixture_names():
            print(name, file=out)
        return EXIT_OK
    if not args.name:
        raise InputError("fixtures dump needs a NAME")
    try:
        mc = get_fixture(args.name, args.param_r)
    except (KeyError, ValueError) as exc:
        raise InputError(str(exc.args[0])) from None
    out.write(dumps(mc))
    return EXIT_OK


def cmd_selftest(args, out) -> int:
    raw = os.environ.get("SPECSEQ_SEED")
    try:
        base = DEFAULT_SEED if raw is None else int(raw)
    except ValueError:
        raise InputError(f"SPECSEQ_SEED must be an integer, got {raw!r}") from None
    failed = 0
    for k in range(args.instances):
        seed = base + k
        mc = random_instance(seed, args.max_degree, args.max_rank)
        problems = audit(mc)
        if problems:
            failed += 1
            print(f"seed {seed}: " + "; ".join(problems), file=out)
    print(f"{args.instances - failed}/{args.instances} instances passed (base seed {base})", file=out)
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="specseq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p):
        p.add_argument("file", nargs="?", help="multicomplex JSON document")
        p.add_argument("--fixture", help="built-in fixture name (see 'fixtures list')")
        p.add_argument("--param-r", type=int, help="parameter r for example2 / example3-general")
        return p

    with_input(sub.add_parser("validate", help="check the multicomplex relations")).set_defaults(func=cmd_validate)
    with_input(sub.add_parser("homology", help="print H_n and GH_{s,t}")).set_defaults(func=cmd_homology)

    p = with_input(sub.add_parser("pages", help="print pages E^r"))
    p.add_argument("--max-r", type=int, required=True)
    p.add_argument("--min-r", type=int, default=1)
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.add_argument("--emit-dot", metavar="FILE", help="write a Graphviz diagram of the pages")
    p.set_defaults(func=cmd_pages)

    p = with_input(sub.add_parser("diff", help="print one differential d^r"))
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=cmd_diff)

    p = with_input(sub.add_parser("compare", help="compare d^r with the map induced by d_r"))
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--expect-agree", action="store_true", help="exit 1 if any cell disagrees")
    p.set_defaults(func=cmd_compare)

    with_input(sub.add_parser("converge", help="check E^inf against GH")).set_defaults(func=cmd_converge)

    p = sub.add_parser("fixtures", help="list or dump built-in fixtures")
    p.add_argument("action", choices=["list", "dump"], nargs="?", default="list")
    p.add_argument("name", nargs="?")
    p.add_argument("--param-r", type=int)
    p.set_defaults(func=cmd_fixtures)

    p = sub.add_parser("selftest", help="audit random multicomplexes (seed from SPECSEQ_SEED)")
    p.add_argument("--instances", type=int, default=50)
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--max-rank", type=int, default=12)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"specseq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
