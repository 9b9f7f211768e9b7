"""Command line front end.

Every command builds a JSON-compatible report (ints, bools, strings, lists
and dicts only) and prints it as text or JSON. Exit status: 0 ok,
2 bad arguments, 3 domain error, 4 resource limit, 5 internal failure.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from . import __version__
from .classifier import (
    DEFAULT_MAX_K,
    badk_witness_check,
    classify_both,
    d_set,
    is_2_collinear_bruteforce,
    is_2_collinear_theorem,
    survey,
)
from .errors import InvariantError, LatticeError
from .lattice_core import (
    COORD_LIMIT,
    LatticeTriangle,
    boundary_count,
    collinear,
    interior_count_pick,
    interior_points,
    scan_boundary_points,
    scan_interior_points,
    segment_interior_count,
    twice_area,
)
from .totient import factorize, generalized_totient
from .unimodular import normalize

EXIT_OK = 0
EXIT_USAGE = 2
PICK_CHECK_RANGE = 30


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        print(f"error invalid_arguments: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _int_at_least(lo: int):
    def conv(text: str) -> int:
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
        if v < lo:
            raise argparse.ArgumentTypeError(f"must be >= {lo}, got {v}")
        return v

    conv.__name__ = f"int>={lo}"
    return conv


def _coord(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if abs(v) > COORD_LIMIT:
        raise argparse.ArgumentTypeError(f"coordinate {v} outside [-2^30, 2^30]")
    return v


positive = _int_at_least(1)
nonnegative = _int_at_least(0)


def _points(pts) -> list[list[int]]:
    return [p.as_list() for p in pts]


def _triangle(args) -> LatticeTriangle:
    return LatticeTriangle.from_coords(*args.coords)


def cmd_analyze(args) -> dict:
    t = _triangle(args)
    pts = interior_points(t)
    return {
        "command": "analyze",
        "triangle": t.as_lists(),
        "twice_area": twice_area(t),
        "boundary": boundary_count(t),
        "edge_interior_counts": [segment_interior_count(p, q) for p, q in t.edges()],
        "interior_pick": interior_count_pick(t),
        "interior_oracle": len(pts),
        "interior_points": _points(pts),
        "collinear": collinear(pts),
    }


def cmd_normalize(args) -> dict:
    t = _triangle(args)
    canon, f = normalize(t)
    return {
        "command": "normalize",
        "triangle": t.as_lists(),
        "canonical": {"d": canon.d, "a": canon.a, "b": canon.b},
        "canonical_triangle": canon.triangle().as_lists(),
        "witness_map": f.to_dict(),
    }


def cmd_classify(args) -> dict:
    if args.method == "brute":
        res = is_2_collinear_bruteforce(args.k, args.max_k)
        return {"command": "classify", **res.to_dict()}
    if args.method == "theorem":
        return {"command": "classify", **is_2_collinear_theorem(args.k).to_dict()}
    row = classify_both(args.k, args.max_k)
    return {
        "command": "classify",
        "k": row.k,
        "method": "both",
        "is_2_collinear": row.is_2_collinear,
        "candidate_as": list(row.bruteforce.candidate_as),
        "bruteforce": row.bruteforce.to_dict(),
        "theorem": row.theorem.to_dict(),
    }


def cmd_witness(args) -> dict:
    res = is_2_collinear_theorem(args.k)
    out = {"command": "witness", "k": args.k, "is_2_collinear": res.is_2_collinear}
    if res.witness is None:
        out["notice"] = f"{args.k} is 2-collinear; no witness exists"
        out["witness"] = None
        return out
    a = res.witness.v3.x
    p, valid = badk_witness_check(args.k, a)
    out.update(
        {
            "a": a,
            "witness": res.witness.as_lists(),
            "boundary": boundary_count(res.witness),
            "interior": len(res.witness_interior),
            "interior_points": _points(res.witness_interior),
            "collinear": collinear(res.witness_interior),
            "points_on_x1": p,
            "bounds_hold": valid,
        }
    )
    return out


def cmd_totient(args) -> dict:
    return {
        "command": "totient",
        "k": args.k,
        "m": args.m,
        "factorization": [[p, c] for p, c in factorize(args.k).factors],
        "value": generalized_totient(args.k, args.m),
    }


def cmd_dset(args) -> dict:
    return {"command": "dset", **d_set(args.n).to_dict()}


def cmd_survey(args) -> dict:
    rows = survey(args.kmin, args.kmax, args.max_k, args.jobs)
    return {
        "command": "survey",
        "k_min": args.kmin,
        "k_max": args.kmax,
        "methods_agree": True,
        "results": [
            {
                "k": r.k,
                "is_2_collinear": r.is_2_collinear,
                "bruteforce": r.bruteforce.is_2_collinear,
                "theorem": r.theorem.is_2_collinear,
                "witness": r.theorem.witness.as_lists() if r.theorem.witness else None,
            }
            for r in rows
        ],
        "two_collinear": [r.k for r in rows if r.is_2_collinear],
    }


def random_triangles(n: int, seed: int, bound: int = PICK_CHECK_RANGE) -> list[LatticeTriangle]:
    """``n`` non-degenerate triangles with coordinates in [-bound, bound].

    Uses ``random.Random`` (Mersenne Twister), whose integer stream is the
    same on every platform for a given seed.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        c = [rng.randint(-bound, bound) for _ in range(6)]
        if (c[2] - c[0]) * (c[5] - c[1]) - (c[3] - c[1]) * (c[4] - c[0]) == 0:
            continue
        out.append(LatticeTriangle.from_coords(*c))
    return out


def cmd_pick_check(args) -> dict:
    interior_bad = boundary_bad = 0
    first_bad = None
    for t in random_triangles(args.n, args.seed):
        i_ok = interior_count_pick(t) == len(interior_points(t)) == len(scan_interior_points(t))
        b_ok = boundary_count(t) == len(scan_boundary_points(t))
        interior_bad += not i_ok
        boundary_bad += not b_ok
        if first_bad is None and not (i_ok and b_ok):
            first_bad = t.as_lists()
    report = {
        "command": "pick-check",
        "n": args.n,
        "seed": args.seed,
        "interior_mismatches": interior_bad,
        "boundary_mismatches": boundary_bad,
        "all_agree": interior_bad == boundary_bad == 0,
        "first_mismatch": first_bad,
    }
    return report


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", metavar="PATH", help="also write the JSON report to PATH")

    parser = _Parser(prog="trilattice", description="Lattice triangle and 2-collinearity tools.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, func, help_ in (
        ("analyze", cmd_analyze, "area, boundary and interior statistics of a triangle"),
        ("normalize", cmd_normalize, "canonical form (0,0),(d,0),(a,b) and the witness map"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("coords", nargs=6, type=_coord, metavar="X1 Y1 X2 Y2 X3 Y3")
        p.set_defaults(func=func)

    p = sub.add_parser("classify", parents=[common], help="decide whether k is 2-collinear")
    p.add_argument("k", type=positive)
    p.add_argument("--method", choices=("brute", "theorem", "both"), default="both")
    p.add_argument("--max-k", type=positive, default=DEFAULT_MAX_K)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("witness", parents=[common], help="non-collinear witness triangle for k")
    p.add_argument("k", type=positive)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("totient", parents=[common], help="generalized totient phi(k, m)")
    p.add_argument("k", type=positive)
    p.add_argument("m", type=nonnegative, nargs="?", default=1)
    p.set_defaults(func=cmd_totient)

    p = sub.add_parser("dset", parents=[common], help="residues a mod n with a, a-1 coprime to n")
    p.add_argument("n", type=positive)
    p.set_defaults(func=cmd_dset)

    p = sub.add_parser("survey", parents=[common], help="classify every k in a range by both methods")
    p.add_argument("kmin", type=positive)
    p.add_argument("kmax", type=positive)
    p.add_argument("--max-k", type=positive, default=DEFAULT_MAX_K)
    p.add_argument("--jobs", type=positive, default=1)
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("pick-check", parents=[common], help="Pick formula vs enumeration on random triangles")
    p.add_argument("n", type=nonnegative)
    p.add_argument("seed", type=int)
    p.set_defaults(func=cmd_pick_check)
    return parser


def _fmt_value(v) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    if v is None:
        return "-"
    if isinstance(v, list):
        if v and all(isinstance(x, list) and len(x) == 2 for x in v):
            return " ".join(f"({x},{y})" for x, y in v)
        return " ".join(_fmt_value(x) for x in v) if v else "[]"
    return str(v)


def render_text(report: dict, indent: str = "") -> str:
    lines = []
    for key, value in report.items():
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.append(render_text(value, indent + "  "))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{indent}{key}:")
            for item in value:
                lines.append(f"{indent}  - " + ", ".join(f"{k}={_fmt_value(v)}" for k, v in item.items()))
        else:
            lines.append(f"{indent}{key}: {_fmt_value(value)}")
    return "\n".join(lines)


def emit_json(report: dict) -> str:
    return json.dumps(report, separators=(", ", ": "))


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = args.func(args)
    except LatticeError as exc:
        msg = str(exc).replace("\n", " ")
        print(f"error {exc.code}: {msg}", file=sys.stderr)
        return exc.exit_code
    text = emit_json(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text if args.format == "json" else render_text(report))
    if report.get("all_agree") is False:
        print(f"error {InvariantError.code}: pick formula disagrees with enumeration", file=sys.stderr)
        return InvariantError.exit_code
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
