"""Command-line front end.

Usage:
    twocircles generate --m 2 --n 1 --t 1
    twocircles classify --r1 560 --r2 315
    twocircles lengths --r1 2 --r2 1
    twocircles enumerate --max-r1 100000 --format csv
    twocircles search --equation minus --bound 200
    twocircles verify --r1 560 --r2 315
    twocircles figure --m 2 --n 1 --t 1 --out fig.svg

Exit codes: 0 success, 1 invalid input or I/O error, 2 verification failure.
The default output format comes from $TT_FORMAT (human, json or csv).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys

from .diophantine import Equation, search
from .errors import InvalidInput, TwoCirclesError, VerificationFailure
from .exact_arith import as_fraction
from .figure import render_svg
from .generator import CSV_FIELDS, FullConfig, enumerate_configs, generate
from .integrality import classify
from .lengths import (
    DISPLAY_NAMES,
    RadiiPair,
    assemble_triangles,
    compute_lengths,
    verify_pythagorean,
)
from .oracle import build_scene, check_angles, cross_check

FORMATS = ("human", "json", "csv")
EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _sci(x: float) -> str:
    return re.sub(r"e([+-])0+(\d)", r"e\1\2", f"{x:g}")


def _triangle_lines(triangles) -> list[str]:
    lines = []
    by_group: dict[int, list] = {}
    for tri in triangles:
        by_group.setdefault(tri.group, []).append(tri)
    for group, tris in by_group.items():
        t0 = tris[0]
        ok = all(verify_pythagorean(t) for t in tris)
        names = ", ".join(t.name for t in tris)
        lines.append(
            f"  ({group}) {names}: legs {t0.leg_a}, {t0.leg_b}; hyp {t0.hyp}"
            f"  [{'ok' if ok else 'FAIL'}]"
        )
    return lines


def _render_config(cfg: FullConfig, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(cfg.to_dict(), indent=2) + "\n"
    if fmt == "csv":
        row = cfg.row()
        return _csv_text(CSV_FIELDS, [[row[k] for k in CSV_FIELDS]])
    m, n = cfg.params
    lines = [
        f"(m, n, t) = ({m}, {n}, {cfg.t})",
        f"triple (r1, r2, r3) = {tuple(cfg.triple)}",
        f"delta = {cfg.delta}",
        f"R1 = {cfg.R1}",
        f"R2 = {cfg.R2}",
    ]
    lines += [f"{k} = {v}" for k, v in cfg.lengths.items()]
    ls = cfg.length_set()
    lines.append(f"d1 = {ls.d1}  (irrational)" if ls.d1.radicand > 1 else f"d1 = {ls.d1}")
    lines.append(f"d2 = {ls.d2}  (irrational)" if ls.d2.radicand > 1 else f"d2 = {ls.d2}")
    lines.append("sixteen Pythagorean triangles:")
    lines += _triangle_lines(cfg.triangles())
    return "\n".join(lines) + "\n"


def cmd_generate(args) -> int:
    cfg = generate(args.m, args.n, args.t)
    sys.stdout.write(_render_config(cfg, args.format))
    return EXIT_OK


def cmd_classify(args) -> int:
    report = classify(args.r1, args.r2)
    if args.format == "json":
        print(json.dumps(report.to_dict(), indent=2))
    elif args.format == "csv":
        d = report.to_dict()
        r = d.get("r", [])
        r += [""] * (3 - len(r))
        print(_csv_text(["R1", "R2", "tier", "delta", "r1", "r2", "r3", "t"],
                        [[args.r1, args.r2, d["tier"], d.get("delta", ""), *r, d.get("t", "")]]), end="")
    else:
        print(report.summary())
        for k, v in (report.lengths or {}).items():
            print(f"  {k} = {v}")
    return EXIT_OK


def cmd_lengths(args) -> int:
    radii = RadiiPair(args.r1, args.r2)
    ls = compute_lengths(radii)
    if args.format == "json":
        print(json.dumps(ls.to_json(), indent=2))
    elif args.format == "csv":
        print(_csv_text(["name", "value"], [[k, v] for k, v in ls.to_json().items()]), end="")
    else:
        for k, v in ls.as_dict().items():
            print(f"{DISPLAY_NAMES[k]} = {v}")
        print("sixteen right triangles:")
        print("\n".join(_triangle_lines(assemble_triangles(ls, radii))))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    configs = enumerate_configs(args.max_r1)
    if args.format == "json":
        print(json.dumps([c.to_dict() for c in configs], indent=2))
    elif args.format == "csv":
        rows = [[c.row()[k] for k in CSV_FIELDS] for c in configs]
        print(_csv_text(CSV_FIELDS, rows), end="")
    else:
        print(f"{len(configs)} fully integral configuration(s) with R1 <= {args.max_r1}")
        for c in configs:
            m, n = c.params
            print(f"  m={m} n={n} t={c.t} triple={tuple(c.triple)} R1={c.R1} R2={c.R2}")
    return EXIT_OK


def cmd_search(args) -> int:
    eq = Equation(args.equation)
    hits = search(eq, args.bound, any_parity=args.any_parity)
    if args.format == "json":
        print(json.dumps({"equation": eq.value, "bound": args.bound,
                          "hits": [[h.x, h.y, h.z] for h in hits]}))
        return EXIT_OK
    if args.format == "csv":
        print(_csv_text(["x", "y", "z"], [[h.x, h.y, h.z] for h in hits]), end="")
        return EXIT_OK
    for h in hits:
        print(f"{h.x} {h.y} {h.z}")
    if not hits:
        scope = "x + y odd, " if eq is Equation.PLUS14 and not args.any_parity else ""
        print(f"no solutions of {eq.value} with 1 <= x, y <= {args.bound} ({scope}gcd(x, y) = 1)")
    return EXIT_OK


def cmd_verify(args) -> int:
    radii = RadiiPair(args.r1, args.r2)
    ls = compute_lengths(radii)
    triangles = assemble_triangles(ls, radii)
    good = sum(verify_pythagorean(t) for t in triangles)
    failed = False
    print(f"{good}/{len(triangles)} triangles verified", end="")
    try:
        lengths_report = cross_check(radii, args.tol)
        print(f"; max rel dev < {_sci(args.tol)} (observed {lengths_report.max_deviation:.1e})")
    except VerificationFailure as exc:
        print(f"; {exc}")
        failed = True
    try:
        angle_report = check_angles(build_scene(radii), args.tol)
        print(f"{len(angle_report)}/{len(angle_report)} angle checks passed "
              f"(max dev {angle_report.max_deviation:.1e})")
    except VerificationFailure as exc:
        print(str(exc))
        failed = True
    if failed or good != len(triangles):
        return EXIT_VERIFY
    return EXIT_OK


def cmd_figure(args) -> int:
    cfg = generate(args.m, args.n, args.t)
    labels = dict(cfg.lengths, R1=cfg.R1, R2=cfg.R2)
    svg = render_svg(build_scene(cfg.radii), labels, title=f"m={args.m} n={args.n} t={args.t}")
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(f"wrote {args.out}")
    return EXIT_OK


def _rational(text: str):
    try:
        return as_fraction(text)
    except InvalidInput as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    default_fmt = os.environ.get("TT_FORMAT", "human")
    if default_fmt not in FORMATS:
        default_fmt = "human"
    parser = argparse.ArgumentParser(
        prog="twocircles",
        description="Pythagorean triangles from two externally tangent circles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=FORMATS, default=default_fmt)
        return p

    p = add("generate", cmd_generate, "fully integral configuration from (m, n, t)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, default=1)

    p = add("classify", cmd_classify, "integrality tier of an integer radii pair")
    p.add_argument("--r1", type=int, required=True)
    p.add_argument("--r2", type=int, required=True)

    p = add("lengths", cmd_lengths, "exact surd lengths for rational radii")
    p.add_argument("--r1", type=_rational, required=True)
    p.add_argument("--r2", type=_rational, required=True)

    p = add("enumerate", cmd_enumerate, "all fully integral configurations up to a bound")
    p.add_argument("--max-r1", type=int, required=True)

    p = add("search", cmd_search, "bounded search of the diagonal quartics")
    p.add_argument("--equation", choices=[e.value for e in Equation], required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--any-parity", action="store_true",
                   help="plus14 only: also scan pairs with x + y even")

    p = add("verify", cmd_verify, "check exact lengths against the coordinate oracle")
    p.add_argument("--r1", type=_rational, required=True)
    p.add_argument("--r2", type=_rational, required=True)
    p.add_argument("--tol", type=float, default=1e-9)

    p = add("figure", cmd_figure, "write an SVG drawing of a generated configuration")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--out", required=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; 2 is reserved for verification
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except VerificationFailure as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except TwoCirclesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
