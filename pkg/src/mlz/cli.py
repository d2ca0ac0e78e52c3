"""Command-line front end: exact reports over JSON matroid/morphism files.

Every number is printed exactly (integers or p/q).  Exit codes: 0 all
checks consistent, 1 a counterexample/failed check, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import matroids as mt
from . import morphisms as mo
from . import verify
from .lefschetz import (
    InapplicablePointError,
    gradient_rank,
    hessian_inertia,
    hrr1,
    lorentzian_witness,
    slp1,
)
from .polynomials import (
    basis_poly,
    hessian_at,
    indep_poly,
    poly_json,
    poly_str,
    reduced_indep_poly,
)
from .sampling import derive, positive_point


class UsageError(Exception):
    pass


def _parse_rational(text: str) -> Fraction:
    try:
        if "/" in text:
            num, den = text.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad rational {text!r}: {exc}") from exc


def _parse_point(text: str) -> tuple[Fraction, ...]:
    return tuple(_parse_rational(part) for part in text.split(","))


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _load_matroid(args) -> mt.Matroid:
    if getattr(args, "uniform", None):
        try:
            r, n = (int(v) for v in args.uniform.split(","))
        except ValueError as exc:
            raise UsageError(f"--uniform expects r,n: {exc}") from exc
        return mt.uniform(r, n)
    if getattr(args, "graphic", None):
        data = _load_json(args.graphic)
        for key in ("vertices", "edges"):
            if key not in data:
                raise UsageError(f"graphic file misses field {key!r}")
        return mt.graphic(int(data["vertices"]), [tuple(e) for e in data["edges"]])
    if not args.file:
        raise UsageError("need a matroid file or --uniform/--graphic")
    data = _load_json(args.file)
    for key in ("n", "bases"):
        if key not in data:
            raise UsageError(f"matroid file misses field {key!r}")
    try:
        return mt.from_json_dict(data)
    except mt.MatroidError as exc:
        raise UsageError(f"invalid matroid: {exc}") from exc


def _pick_poly(m: mt.Matroid, kind: str):
    if kind == "basis":
        return basis_poly(m)
    if kind == "indep":
        return indep_poly(m)
    if kind == "reduced":
        return reduced_indep_poly(m)
    raise UsageError(f"unknown polynomial kind {kind!r}")


def _point_for(args, p) -> tuple[Fraction, ...]:
    if args.at:
        point = _parse_point(args.at)
        if len(point) != len(p.active):
            raise UsageError(
                f"--at needs {len(p.active)} coordinates "
                f"(variables x{p.active[0]}..x{p.active[-1]}), got {len(point)}"
            )
        return point
    return (Fraction(1),) * len(p.active)


def _cmd_matroid_info(args) -> int:
    m = _load_matroid(args)
    if args.format == "json":
        pd = m.parallel_decomposition
        out = {
            "matroid": m.to_json_dict(),
            "rank": m.rank,
            "simple": m.is_simple,
            "loops": list(mt.elems_of(m.loops)),
            "parallel_classes": [list(mt.elems_of(c)) for c in pd.classes],
            "girth": "inf" if m.girth == float("inf") else m.girth,
            "indep_counts": list(m.indep_profile.counts),
            "flats": [list(mt.elems_of(f)) for f in m.flats],
        }
        print(json.dumps(out, sort_keys=True))
    else:
        pd = m.parallel_decomposition
        print(f"n={m.n} rank={m.rank} bases={len(m.bases)}")
        print(f"simple={str(m.is_simple).lower()} loops={list(mt.elems_of(m.loops))}")
        print(f"parallel classes={[list(mt.elems_of(c)) for c in pd.classes]}")
        print(f"girth={m.girth}")
        print(f"independent counts={list(m.indep_profile.counts)}")
    return 0


def _cmd_poly(args) -> int:
    m = _load_matroid(args)
    p = _pick_poly(m, args.kind)
    if args.format == "json":
        print(json.dumps(poly_json(p), sort_keys=True))
    else:
        print(poly_str(p))
    return 0


def _cmd_hessian(args) -> int:
    m = _load_matroid(args)
    p = _pick_poly(m, args.kind)
    if p.degree < 2:
        raise UsageError(f"the {args.kind} polynomial has degree {p.degree} < 2")
    point = _point_for(args, p)
    h = hessian_at(p, point)
    ine = hessian_inertia(p, point)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "rows": [[str(v) for v in row] for row in h.rows],
                    "inertia": ine.to_json_dict(),
                },
                sort_keys=True,
            )
        )
    else:
        for row in h.rows:
            print(" ".join(str(v) for v in row))
        print(f"inertia=({ine.pos},{ine.neg},{ine.zero})")
    return 0


def _cmd_check(args) -> int:
    m = _load_matroid(args)
    p = _pick_poly(m, args.kind)
    if p.degree < 2:
        raise UsageError(f"the {args.kind} polynomial has degree {p.degree} < 2")
    if args.what == "lorentz-witness":
        if args.at:
            points = [_point_for(args, p)]
        else:
            rng = derive(args.seed, len(p.active))
            points = [positive_point(rng, len(p.active)) for _ in range(3)]
        rep = lorentzian_witness(p, points)
        status = "pass" if rep.passed else "fail"
        print(
            f"LORENTZ-WITNESS: {status} checked={rep.checked} "
            f"zero={rep.identically_zero} degree2={rep.exact_degree2} "
            f"sampled={rep.sampled} seed={args.seed}"
        )
        return 0 if rep.passed else 1
    point = _point_for(args, p)
    g = gradient_rank(p)
    try:
        if args.what == "slp1":
            verdict = slp1(p, point, grad_rank=g)
        else:
            verdict = hrr1(p, point, grad_rank=g)
    except InapplicablePointError:
        print(f"{args.what.upper()}: inapplicable (value not positive)")
        return 1
    ine = hessian_inertia(p, point)
    print(
        f"{args.what.upper()}: {str(verdict).lower()} "
        f"inertia=({ine.pos},{ine.neg},{ine.zero}) grad_rank={g}"
    )
    return 0 if verdict else 1


def _cmd_mason(args) -> int:
    m = _load_matroid(args)
    point = _parse_point(args.at) if args.at else None
    if args.what == "basis":
        if args.i is None or args.j is None:
            raise UsageError("mason basis needs --i and --j")
        try:
            rep = verify.mason_basis_check(m, args.i, args.j, point)
        except (ValueError, mt.MatroidError) as exc:
            raise UsageError(str(exc)) from exc
        print(
            f"counts |B|={rep.count_bases} |Bi|={rep.count_i} "
            f"|Bj|={rep.count_j} |Bij|={rep.count_ij}"
        )
        print(
            f"lhs={rep.lhs} rhs={rep.rhs} equal={str(rep.equal).lower()} "
            f"predicted_equal={str(rep.predicted_equal).lower()} "
            f"consistent={str(rep.consistent).lower()}"
            + ("" if rep.applicable else " (loop pair: not applicable)")
        )
        return 0 if (rep.lhs <= rep.rhs and (not rep.applicable or rep.consistent)) else 1
    if args.k is None:
        raise UsageError("mason indep needs --k")
    try:
        rep = verify.mason_indep_check(m, args.k, point)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print(
        f"k={rep.k} lhs={rep.lhs} rhs={rep.rhs} equal={str(rep.equal).lower()} "
        f"predicted_equal={str(rep.predicted_equal).lower()} "
        f"consistent={str(rep.consistent).lower()}"
    )
    return 0 if (rep.lhs <= rep.rhs and rep.consistent) else 1


def _load_morphism(args) -> mo.MatroidMorphism:
    data = _load_json(args.file)
    for key in ("source", "target", "map"):
        if key not in data:
            raise UsageError(f"morphism file misses field {key!r}")
    try:
        return mo.morphism_from_json_dict(data)
    except (mt.MatroidError, mo.MorphismError) as exc:
        raise UsageError(f"invalid morphism: {exc}") from exc


def _cmd_morphism(args) -> int:
    if args.what == "validate":
        phi = _load_morphism(args)
        print(
            f"valid morphism: n={phi.source.n} rank={phi.r} -> "
            f"target rank={phi.r_prime} phi-loops={list(mt.elems_of(phi.phi_loops))}"
        )
        return 0
    phi = _load_morphism(args)
    if args.what == "class":
        verdict = mo.degeneracy_class(phi)
        classes = "".join(sorted(verdict.classes)) or "-"
        if verdict.annihilator is None:
            print(f"classes={classes} annihilator=none")
        else:
            ann = ",".join(str(c) for c in verdict.annihilator)
            print(f"classes={classes} annihilator=({ann})")
        return 0
    entries = mo.eur_huh_profile(phi)
    if not entries:
        print("profile empty (no interior levels)")
        return 0
    bad = 0
    for e in entries:
        mark = "=" if e.equal else "<"
        if e.lhs > e.rhs:
            mark = ">"
            bad += 1
        print(f"k={e.k} lhs={e.lhs} {mark} rhs={e.rhs}")
    return 1 if bad else 0


def _cmd_survey(args) -> int:
    try:
        rep = verify.survey(args.n, seed=args.seed, morphisms=not args.no_morphisms)
    except mt.MatroidError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        for line in rep.to_jsonl_lines():
            print(line)
    elif args.format == "tsv":
        sys.stdout.write(rep.to_tsv())
    else:
        sys.stdout.write(rep.to_text())
    return 0 if rep.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mlz",
        description="exact matroid log-concavity checks and surveys",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_matroid_source(sp):
        sp.add_argument("file", nargs="?", help="matroid JSON file")
        sp.add_argument("--uniform", help="uniform matroid r,n instead of a file")
        sp.add_argument("--graphic", help="graph JSON file (vertices, edges)")

    sp = sub.add_parser("matroid-info", help="derived structure of a matroid")
    add_matroid_source(sp)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=_cmd_matroid_info)

    sp = sub.add_parser("poly", help="print a generating polynomial")
    add_matroid_source(sp)
    sp.add_argument("--kind", choices=("basis", "indep", "reduced"), default="basis")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=_cmd_poly)

    sp = sub.add_parser("hessian", help="exact Hessian and its inertia at a point")
    add_matroid_source(sp)
    sp.add_argument("--kind", choices=("basis", "indep", "reduced"), default="basis")
    sp.add_argument("--at", help="comma-separated rationals (p/q or integers)")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=_cmd_hessian)

    sp = sub.add_parser("check", help="degree-1 Lefschetz/Hodge-Riemann checks")
    sp.add_argument("what", choices=("slp1", "hrr1", "lorentz-witness"))
    add_matroid_source(sp)
    sp.add_argument("--kind", choices=("basis", "indep", "reduced"), default="basis")
    sp.add_argument("--at", help="evaluation point (comma-separated rationals)")
    sp.add_argument("--seed", type=int, default=1, help="seed for sampled points")
    sp.set_defaults(func=_cmd_check)

    sp = sub.add_parser("mason", help="count log-concavity checks")
    sp.add_argument("what", choices=("basis", "indep"))
    add_matroid_source(sp)
    sp.add_argument("--i", type=int, help="first element (basis variant)")
    sp.add_argument("--j", type=int, help="second element (basis variant)")
    sp.add_argument("--k", type=int, help="level (indep variant)")
    sp.add_argument("--at", help="positive weights (comma-separated rationals)")
    sp.set_defaults(func=_cmd_mason)

    sp = sub.add_parser("morphism", help="matroid morphism checks")
    sp.add_argument("what", choices=("validate", "class", "eurhuh"))
    sp.add_argument("file", help="morphism JSON file")
    sp.set_defaults(func=_cmd_morphism)

    sp = sub.add_parser("survey", help="exhaustive catalog verification")
    sp.add_argument("--n", type=int, required=True, help="max ground-set size")
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("--format", choices=("text", "json", "tsv"), default="text")
    sp.add_argument(
        "--no-morphisms", action="store_true", help="skip the morphism sweep"
    )
    sp.set_defaults(func=_cmd_survey)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    try:
        code = run()
    except BrokenPipeError:
        # downstream consumer (head, less) closed the stream mid-report
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        code = 0
    sys.exit(code)


if __name__ == "__main__":
    main()
