"""Command-line interface.

Exit codes: 0 success or property holds, 1 violation or counterexample found,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import constructors
from .core import InvalidTable, find_violations, idempotent_pairs
from .enumeration import EnumSpec, Enumeration, census, to_structure
from .green import RELATIONS, partition, render_eggboxes
from .gsgp import GsgpSyntaxError, dumps, parse, to_structure as doc_to_structure
from .regularity import (
    irregular_elements,
    is_2_0_strongly_regular,
    is_intra_0_strongly_regular,
    is_left_0_strongly_regular,
    is_regular,
    is_right_0_strongly_regular,
    left_strongly_regular_report,
    right_strongly_regular_report,
    strong_regularity,
)
from .search import search_counterexample
from .structure import is_0_simple, is_completely_0_simple, is_union_of_gamma_groups
from .theoremcheck import STATEMENTS, check, check_all

OK, FOUND, USAGE = 0, 1, 2


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _load(path: str):
    text = _read(path)
    try:
        doc = parse(text)
    except GsgpSyntaxError as exc:
        raise InputError(f"{path}:{exc.line}:{exc.col}: {exc.msg}") from None
    try:
        return doc_to_structure(doc)
    except InvalidTable as exc:
        raise InputError(f"{path}: invalid table: {exc}") from None


def analyze(M) -> dict:
    """Property table for one structure; zero-only predicates are None without a zero."""
    sr = strong_regularity(M)
    props = {
        "m": M.m,
        "g": M.g,
        "zero": M.name(M.zero) if M.zero is not None else None,
        "regular": is_regular(M),
        "irregular-elements": M.names(irregular_elements(M)),
        "left-strongly-regular": left_strongly_regular_report(M).holds,
        "right-strongly-regular": right_strongly_regular_report(M).holds,
        "strongly-regular": sr.holds,
        "strongly-regular-anomaly": sr.detail["anomaly"],
        "union-of-gamma-groups": is_union_of_gamma_groups(M),
        "idempotents": [f"{M.name(e)}/{M.gamma_names[c]}" for e, c in idempotent_pairs(M)],
    }
    with_zero = {
        "2^0-strongly-regular": lambda: is_2_0_strongly_regular(M),
        "left-0-strongly-regular": lambda: is_left_0_strongly_regular(M),
        "right-0-strongly-regular": lambda: is_right_0_strongly_regular(M),
        "intra-0-strongly-regular": lambda: is_intra_0_strongly_regular(M),
        "0-simple": lambda: is_0_simple(M),
        "completely-0-simple": lambda: is_completely_0_simple(M),
    }
    for key, fn in with_zero.items():
        props[key] = fn() if M.zero is not None else None
    for rel in RELATIONS:
        props[f"{rel}-classes"] = [M.names(b) for b in partition(M, rel).blocks]
    return props


def _fmt_value(v) -> str:
    if v is None:
        return "n/a"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return " ".join("{" + ",".join(x) + "}" if isinstance(x, list) else str(x) for x in v) or "-"
    return str(v)


def cmd_validate(args) -> int:
    doc = _parse_only(args.file)
    violations = find_violations(doc.m, doc.g, doc.tables)
    if not violations:
        M = doc_to_structure(doc)
        zero = M.name(M.zero) if M.zero is not None else "none"
        print(f"valid m={M.m} g={M.g} zero={zero}")
        return OK
    for v in violations:
        print(f"{v.kind}\t{','.join(map(str, v.indices))}\t{v.detail}")
    return FOUND


def _parse_only(path):
    try:
        return parse(_read(path))
    except GsgpSyntaxError as exc:
        raise InputError(f"{path}:{exc.line}:{exc.col}: {exc.msg}") from None


def cmd_analyze(args) -> int:
    props = analyze(_load(args.file))
    if args.json:
        print(json.dumps(props, indent=2, sort_keys=False))
    else:
        for k, v in props.items():
            print(f"{k}={_fmt_value(v)}")
    return OK


def cmd_green(args) -> int:
    M = _load(args.file)
    if args.eggbox:
        print(render_eggboxes(M))
    else:
        for rel in RELATIONS:
            print(f"{rel}: " + " ".join("{" + ",".join(M.names(b)) + "}" for b in partition(M, rel).blocks))
    return OK


def cmd_check(args) -> int:
    M = _load(args.file)
    if args.statement:
        if args.statement not in STATEMENTS:
            raise InputError(f"unknown statement {args.statement!r}; choose from {', '.join(STATEMENTS)}")
        reports = [check(M, args.statement)]
    else:
        reports = check_all(M)
    if args.json:
        print(json.dumps([r.as_dict() for r in reports], indent=2))
    else:
        for r in reports:
            print(r.line())
    return FOUND if any(r.violated for r in reports) else OK


def cmd_enumerate(args) -> int:
    if args.census:
        counts = census(args.m, args.g, args.up_to_iso, args.anti_iso, args.require_zero, args.workers)
        print("m\tg\tcount")
        for (m, g), n in sorted(counts.items()):
            print(f"{m}\t{g}\t{n}")
        return OK
    spec = EnumSpec(args.m, args.g, args.up_to_iso, args.anti_iso, args.require_zero, args.budget)
    stream = Enumeration(spec, args.workers)
    out_dir = Path(args.out) if args.out else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
    count = 0
    for flat in stream.flats():
        text = dumps(to_structure(flat, spec.m, spec.g))
        if out_dir:
            (out_dir / f"m{spec.m}g{spec.g}_{count:06d}.gsgp").write_text(text)
        else:
            if count:
                print()
            sys.stdout.write(text)
        count += 1
    tail = f"# {count} structures, {stream.nodes} nodes"
    if stream.budget_exhausted:
        tail += ", budget exhausted"
    print(tail, file=sys.stderr if not out_dir else sys.stdout)
    return OK


def cmd_search(args) -> int:
    outcome = search_counterexample(args.problem, args.max_m, args.max_g, args.budget, args.up_to_iso)
    sys.stdout.write(outcome.to_json() if args.json else outcome.render())
    return FOUND if outcome.found else OK


def cmd_construct(args) -> int:
    if args.kind == "fixture":
        try:
            M = constructors.fixture(args.id)
        except KeyError as exc:
            raise InputError(str(exc.args[0])) from None
    else:
        try:
            gamma = [int(x) for x in args.gamma.split(",") if x.strip()]
            M = constructors.group_with_zero(constructors.cyclic_group(args.order), gamma)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    sys.stdout.write(dumps(M))
    return OK


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def _nonnegative(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gammasemi", description="Finite Gamma-semigroup toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check a GSGP file against the Gamma-semigroup laws")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("analyze", help="property table")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("green", help="Green's relations")
    s.add_argument("file")
    s.add_argument("--eggbox", action="store_true")
    s.set_defaults(func=cmd_green)

    s = sub.add_parser("check", help="evaluate theorem statements on one structure")
    s.add_argument("file")
    s.add_argument("--statement", metavar="ID")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("enumerate", help="enumerate structures or count them")
    s.add_argument("--m", type=_positive, required=True)
    s.add_argument("--g", type=_positive, required=True)
    s.add_argument("--up-to-iso", action="store_true")
    s.add_argument("--anti-iso", action="store_true", help="also identify anti-isomorphic copies")
    s.add_argument("--require-zero", action="store_true")
    s.add_argument("--budget", type=_nonnegative)
    s.add_argument("--workers", type=_positive)
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--census", action="store_true")
    mode.add_argument("--out", metavar="DIR")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("search", help="counterexample search for the open problems")
    s.add_argument("--problem", type=int, choices=(1, 2, 3), required=True)
    s.add_argument("--max-m", type=_positive, required=True)
    s.add_argument("--max-g", type=_positive, required=True)
    s.add_argument("--budget", type=_nonnegative, default=10_000_000)
    s.add_argument("--up-to-iso", action="store_true")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("construct", help="print a constructed structure as GSGP")
    csub = s.add_subparsers(dest="kind", required=True)
    c = csub.add_parser("group-zero", help="cyclic group of order N with a zero adjoined")
    c.add_argument("--order", type=_positive, required=True)
    c.add_argument("--gamma", required=True, help="comma-separated group elements 0..N-1")
    c = csub.add_parser("fixture")
    c.add_argument("id", choices=constructors.FIXTURE_IDS)
    s.set_defaults(func=cmd_construct)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
