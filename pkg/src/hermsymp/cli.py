"""Command-line interface.

Commands: validate, m, triple, reduce, compose, torus-sweep, trefoil,
rho-diff.  All outputs are deterministic: identical inputs produce
byte-identical stdout.  Rationals are read and written as "p/q" strings and
floats are printed with 15 significant digits.

Exit codes:
    0  success
    2  invalid input (JSON schema, shapes, parameters, failed validation,
       violated preconditions) and other numerical-degeneracy failures
    3  eigenvalue too close to the branch point -1 to classify
    4  integrality guard failure
    5  closed-form/generic mismatch beyond 1e-9 in the torus sweep

Semantic errors are reported as JSON objects {"error", "message"} on stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import numpy as np

from . import serialization
from .bordism import compose as compose_relations
from .bordism import reduce as reduce_relation
from .errors import (
    EigenvalueAmbiguity,
    HermsympError,
    NonIntegerSum,
    ValidationError,
)
from .knotcalc import (
    DEFAULT_MONODROMY,
    chern_simons,
    cs_winding,
    holonomy_constraint,
    mapping_torus_condition,
    rho_difference_mod_z,
    torus_twisted_cohomology,
    trefoil_arc_point,
)
from .maslov import m_details, triple_index
from .spaces import EPS_ALG, EPS_RANK, validate_space
from .torus import torus_m_sweep

SWEEP_TOL = 1e-9


def _fmt(x: float) -> str:
    return "%.15g" % float(x)


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise ValidationError(f"{path}: {exc}") from exc


def _rational_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational p/q: {text!r}") from None


def _emit(args, payload: dict, plain_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in plain_lines:
            print(line)


def _cmd_validate(args) -> int:
    space = serialization.space_from_dict(_load_json(args.space))
    report = validate_space(space, eps_alg=args.tol_alg)
    payload = {
        "dim": space.dim,
        "signature": report.signature,
        "passed": report.passed,
        "checks": [
            {"name": c.name, "residual": c.residual, "passed": c.passed, "detail": c.detail}
            for c in report.checks
        ],
    }
    lines = [f"dim = {space.dim}"]
    for c in report.checks:
        verdict = "PASS" if c.passed else "FAIL"
        detail = f" {c.detail}" if c.detail else ""
        lines.append(f"{c.name}: residual={_fmt(c.residual)}{detail} {verdict}")
    lines.append(f"result = {'PASS' if report.passed else 'FAIL'}")
    _emit(args, payload, lines)
    return 0 if report.passed else 2


def _load_space_and_lagrangians(args, names):
    space = serialization.space_from_dict(_load_json(args.space))
    report = validate_space(space, eps_alg=args.tol_alg)
    if not report.passed:
        raise ValidationError("space fails validation; run the validate command")
    out = []
    for name in names:
        doc = _load_json(getattr(args, name))
        out.append(
            serialization.lagrangian_from_dict(
                space, doc, eps_alg=args.tol_alg, eps_rank=args.tol_rank
            )
        )
    return space, out


def _cmd_m(args) -> int:
    _, (v, w) = _load_space_and_lagrangians(args, ("v", "w"))
    details = m_details(v, w, eps_rank=args.tol_rank)
    eigen_strs = [f"{_fmt(z.real)}{'%+.15g' % z.imag}i" for z in details.eigenvalues]
    payload = {
        "m": details.value,
        "intersection_dim": details.intersection_dim,
        "eigenvalues": [serialization.complex_to_obj(z) for z in details.eigenvalues],
    }
    lines = [
        f"m = {_fmt(details.value)}",
        f"intersection_dim = {details.intersection_dim}",
        f"eigenvalues = {', '.join(eigen_strs)}",
    ]
    _emit(args, payload, lines)
    return 0


def _cmd_triple(args) -> int:
    _, (u, v, w) = _load_space_and_lagrangians(args, ("u", "v", "w"))
    value = triple_index(u, v, w, eps_rank=args.tol_rank)
    _emit(args, {"triple_index": value}, [f"triple_index = {value}"])
    return 0


def _cmd_reduce(args) -> int:
    rel = serialization.relation_from_dict(
        _load_json(args.relation), eps_alg=args.tol_alg, eps_rank=args.tol_rank
    )
    doc = _load_json(args.w)
    w = serialization.lagrangian_from_dict(
        rel.source, doc, eps_alg=args.tol_alg, eps_rank=args.tol_rank
    )
    result = reduce_relation(rel, w, eps_alg=args.tol_alg, eps_rank=args.tol_rank)
    print(json.dumps(serialization.lagrangian_to_dict(result), sort_keys=True))
    return 0


def _cmd_compose(args) -> int:
    rel1 = serialization.relation_from_dict(
        _load_json(args.rel1), eps_alg=args.tol_alg, eps_rank=args.tol_rank
    )
    rel2 = serialization.relation_from_dict(
        _load_json(args.rel2), eps_alg=args.tol_alg, eps_rank=args.tol_rank
    )
    result = compose_relations(rel1, rel2, eps_alg=args.tol_alg, eps_rank=args.tol_rank)
    print(json.dumps(serialization.relation_to_dict(result), sort_keys=True))
    return 0


def _cmd_torus_sweep(args) -> int:
    if args.steps < 1:
        raise ValidationError(f"steps must be >= 1, got {args.steps}")
    if not (0.0 < args.t_min <= args.t_max):
        raise ValidationError(
            f"need 0 < t_min <= t_max, got t_min={args.t_min} t_max={args.t_max}"
        )
    grid = np.linspace(args.t_min, args.t_max, args.steps)
    result = torus_m_sweep(args.a, args.b, args.A, args.B, grid)
    print("t,m_closed,m_generic,delta")
    for row in result.rows:
        print(
            f"{_fmt(row.t)},{_fmt(row.m_closed)},{_fmt(row.m_generic)},{_fmt(row.delta)}"
        )
    if result.max_delta >= SWEEP_TOL:
        print(
            json.dumps(
                {
                    "error": "SweepMismatch",
                    "message": f"closed-form/generic delta {result.max_delta:.3e} "
                    f"exceeds {SWEEP_TOL:.0e}",
                }
            ),
            file=sys.stderr,
        )
        return 5
    return 0


def _cmd_trefoil(args) -> int:
    rep = trefoil_arc_point(args.t)
    f = DEFAULT_MONODROMY
    cohomology = torus_twisted_cohomology(rep, eps_rank=args.tol_rank, eps_alg=args.tol_alg)
    condition = mapping_torus_condition(rep, f)
    constraint = holonomy_constraint(rep, f)
    winding = cs_winding(rep, f)
    cs = chern_simons(rep, f)
    payload = {
        "phi": str(rep.phi),
        "psi": str(rep.psi),
        "cohomology": list(cohomology),
        "condition": condition,
        "constraint": [str(x) for x in constraint],
        "winding": [str(x) for x in winding],
        "cs": str(cs),
    }
    lines = [
        f"phi = {rep.phi}",
        f"psi = {rep.psi}",
        f"cohomology = ({cohomology[0]}, {cohomology[1]}, {cohomology[2]})",
        f"condition = {'true' if condition else 'false'}",
        f"constraint = ({constraint[0]}, {constraint[1]})",
        f"winding = ({winding[0]}, {winding[1]})",
        f"cs = {cs}",
    ]
    _emit(args, payload, lines)
    return 0


def _cmd_rho_diff(args) -> int:
    rep1 = trefoil_arc_point(args.t1)
    rep2 = trefoil_arc_point(args.t2)
    f = DEFAULT_MONODROMY
    cs1 = chern_simons(rep1, f)
    cs2 = chern_simons(rep2, f)
    diff = rho_difference_mod_z(rep1, rep2, f)
    payload = {"cs1": str(cs1), "cs2": str(cs2), "rho_diff": str(diff)}
    lines = [f"cs1 = {cs1}", f"cs2 = {cs2}", f"rho_diff = {diff}"]
    _emit(args, payload, lines)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hermsymp",
        description="Lagrangian pair/triple invariants of Hermitian symplectic "
        "spaces, symplectic reduction across bordisms, and exact torus-bundle "
        "Chern-Simons arithmetic.",
        allow_abbrev=False,
    )
    parser.add_argument("--tol-alg", type=float, default=EPS_ALG, dest="tol_alg",
                        help="tolerance for algebraic identities (default %(default)g)")
    parser.add_argument("--tol-rank", type=float, default=EPS_RANK, dest="tol_rank",
                        help="singular-value threshold for rank decisions (default %(default)g)")
    parser.add_argument("--json", action="store_true",
                        help="emit a JSON object on stdout instead of plain text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a space document's invariants")
    p.add_argument("space")
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("m", help="pair invariant of two Lagrangians")
    p.add_argument("space")
    p.add_argument("v")
    p.add_argument("w")
    p.set_defaults(handler=_cmd_m)

    p = sub.add_parser("triple", help="integer triple index of three Lagrangians")
    p.add_argument("space")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("w")
    p.set_defaults(handler=_cmd_triple)

    p = sub.add_parser("reduce", help="propagate a Lagrangian across a relation")
    p.add_argument("relation")
    p.add_argument("w")
    p.set_defaults(handler=_cmd_reduce)

    p = sub.add_parser("compose", help="compose two bordism relations")
    p.add_argument("rel1")
    p.add_argument("rel2")
    p.set_defaults(handler=_cmd_compose)

    p = sub.add_parser("torus-sweep",
                       help="CSV of the torus pair invariant over a stretch grid")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("A", type=int)
    p.add_argument("B", type=int)
    p.add_argument("t_min", type=float)
    p.add_argument("t_max", type=float)
    p.add_argument("steps", type=int)
    p.set_defaults(handler=_cmd_torus_sweep)

    p = sub.add_parser("trefoil", help="arc point pipeline: cohomology, condition, cs")
    p.add_argument("--t", type=_rational_arg, required=True,
                   help="arc parameter, rational p/q in (1/12, 5/12)")
    p.set_defaults(handler=_cmd_trefoil)

    p = sub.add_parser("rho-diff",
                       help="scaled Chern-Simons difference mod Z of two arc points")
    p.add_argument("--t1", type=_rational_arg, required=True)
    p.add_argument("--t2", type=_rational_arg, required=True)
    p.set_defaults(handler=_cmd_rho_diff)

    return parser


def _fail(code: int, exc: Exception) -> int:
    print(
        json.dumps({"error": type(exc).__name__, "message": str(exc)}),
        file=sys.stderr,
    )
    return code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except EigenvalueAmbiguity as exc:
        return _fail(3, exc)
    except NonIntegerSum as exc:
        return _fail(4, exc)
    except ValidationError as exc:
        return _fail(2, exc)
    except HermsympError as exc:
        return _fail(2, exc)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
