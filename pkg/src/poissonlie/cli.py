"""Command-line front end.

Subcommands: ``check`` (full verdict for a triple document), ``milnor``
(metric Lie algebra decomposition only), ``classify`` (exact cocycle solution
spaces), ``catalog`` (list / show / verify the built-in models) and
``numcheck`` (floating-point verification of the group models).

Exit codes: 0 all decided conditions hold, 1 some condition is violated,
2 invalid input or unknown name, 3 every decidable condition holds but the
volume condition is only settled up to its necessary part.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import classify, documents, numcheck
from .bialgebra import BialgebraError
from .hawkins import HawkinsReport, full_report, triple as make_triple
from .lie import JacobiError, LieError, MetricError, MilnorReport, milnor_check
from .linalg import rat_to_str

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_INVALID = 2
EXIT_UNDECIDABLE = 3

SCHEMA_VERSION = 1


def _machine(payload: dict) -> str:
    return json.dumps({"schema": SCHEMA_VERSION, **payload}, indent=2)


def _vector_strs(v) -> list[str]:
    return [rat_to_str(x) for x in v]


def _milnor_payload(report: MilnorReport) -> dict:
    return {
        "is_milnor": report.is_milnor,
        "s_abelian": report.s_abelian,
        "derived_abelian": report.derived_abelian,
        "orthogonality_holds": report.orthogonality_holds,
        "s_basis": [_vector_strs(b) for b in report.s_basis.basis],
        "derived_basis": [_vector_strs(b) for b in report.derived_basis.basis],
        "witness": None if report.witness is None else report.witness[0],
    }


def _report_payload(report: HawkinsReport) -> dict:
    return {
        "flat": report.is_flat,
        "metaflat": report.is_metaflat,
        "volume": report.volume_verdict,
        "volume_regime": report.volume_regime,
        "status": report.status(),
        "kappa": _vector_strs(report.kappa),
        "primal_unimodular": report.primal_unimodular,
        "primal_abelian": report.primal_abelian,
        "linear_case_note": report.linear_case_note,
        "dual_milnor": _milnor_payload(report.dual_milnor),
        "witnesses": [
            {"kind": w.kind, "location": w.location, "entries": w.entries}
            for w in report.witnesses
        ],
    }


def _render_report_text(report: HawkinsReport) -> str:
    lines = [
        f"flat:      {'yes' if report.is_flat else 'NO'}",
        f"metaflat:  {'yes' if report.is_metaflat else 'NO'}",
        f"volume:    {report.volume_verdict} ({report.volume_regime})",
        f"kappa:     ({', '.join(_vector_strs(report.kappa))})",
        f"status:    {report.status()}",
    ]
    if report.linear_case_note:
        lines.append(f"note:      {report.linear_case_note}")
    for w in report.witnesses:
        lines.append(f"witness:   [{w.kind}] {w.location} {w.entries}")
    return "\n".join(lines)


def _load_document(path: str) -> documents.TripleDocument:
    with open(path, "r", encoding="utf-8") as handle:
        return documents.parse_document(handle.read())


def _report_exit_code(report: HawkinsReport) -> int:
    status = report.status()
    if status == "satisfied":
        return EXIT_OK
    if status == "undecidable":
        return EXIT_UNDECIDABLE
    return EXIT_VIOLATED


def _cmd_check(args) -> int:
    try:
        doc = _load_document(args.file)
        alg, g, xi = documents.document_to_parts(doc, validate=True)
        t = make_triple(alg, xi, g, check=True)
    except (documents.DocumentError, LieError, JacobiError, MetricError, BialgebraError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    report = full_report(t)
    if args.format == "machine":
        print(_machine({"command": "check", "report": _report_payload(report)}))
    else:
        print(_render_report_text(report))
    return _report_exit_code(report)


def _cmd_milnor(args) -> int:
    try:
        doc = _load_document(args.file)
        alg, g, _ = documents.document_to_parts(doc, validate=True)
    except (documents.DocumentError, LieError, JacobiError, MetricError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    report = milnor_check(alg, g)
    if args.format == "machine":
        print(_machine({"command": "milnor", "report": _milnor_payload(report)}))
    else:
        lines = [
            f"milnor:          {'yes' if report.is_milnor else 'NO'}",
            f"S abelian:       {report.s_abelian} (dim {report.s_basis.size})",
            f"derived abelian: {report.derived_abelian} (dim {report.derived_basis.size})",
            f"orthogonality:   {report.orthogonality_holds}",
        ]
        if report.witness is not None:
            lines.append(f"witness:         {report.witness[0]}")
        print("\n".join(lines))
    return EXIT_OK if report.is_milnor else EXIT_VIOLATED


def _cmd_classify(args) -> int:
    if args.dim == 3:
        alg, g = classify.milnor_dim3(), classify.identity_metric(3)
    else:
        alg, g = classify.milnor_dim4(), classify.identity_metric(4)
    try:
        flags = classify.normalize_flags(args.flags.split(",")) if args.flags else frozenset()
        space = classify.cocycle_space(alg, g, flags)
    except classify.ClassifyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    quadratics = classify.quadratic_constraints(space) if args.quadratics else []
    if args.format == "machine":
        payload = {
            "command": "classify",
            "dim": args.dim,
            "flags": sorted(space.flags),
            "dimension": space.dimension,
            "basis": [_vector_strs(b) for b in space.basis],
        }
        if args.quadratics:
            payload["quadratic_constraints"] = [
                {
                    "triple": list(q.triple),
                    "component": q.component,
                    "polynomial": q.render(),
                }
                for q in quadratics
            ]
        print(_machine(payload))
    else:
        print(f"solution space dimension: {space.dimension}")
        for b in space.basis:
            print("  basis:", " ".join(_vector_strs(b)))
        if args.quadratics:
            print("quadratic constraints (Jacobi obstructions):")
            for q in quadratics:
                print(f"  {q.triple} component {q.component}: {q.render()}")
    return EXIT_OK


def _entry_payload(entry: classify.CatalogEntry) -> dict:
    return {
        "name": entry.name,
        "description": entry.description,
        "expected": entry.expected,
        "numeric_model": entry.numeric_model,
    }


def _cmd_catalog(args) -> int:
    if args.action == "list":
        entries = classify.catalog()
        if args.format == "machine":
            print(_machine({"command": "catalog-list", "entries": [_entry_payload(e) for e in entries]}))
        else:
            for e in entries:
                print(f"{e.name:24s} {e.description}")
        return EXIT_OK
    if not args.name:
        print("error: catalog show/verify needs a name", file=sys.stderr)
        return EXIT_INVALID
    try:
        entry = classify.catalog_entry(args.name)
    except KeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.action == "show":
        doc = documents.document_from_parts(
            entry.algebra,
            entry.geometry,
            entry.cocycle,
            metadata={
                "name": entry.name,
                "description": entry.description,
                "expected": entry.expected,
            },
        )
        print(documents.serialize_document(doc), end="")
        return EXIT_OK
    result = classify.catalog_verify(args.name)
    if args.format == "machine":
        print(
            _machine(
                {
                    "command": "catalog-verify",
                    "name": args.name,
                    "ok": result.ok,
                    "diffs": list(result.diffs),
                    "report": _report_payload(result.report),
                }
            )
        )
    else:
        print(f"{args.name}: {'PASS' if result.ok else 'FAIL'}")
        for d in result.diffs:
            print(f"  diff: {d}")
    return EXIT_OK if result.ok else EXIT_VIOLATED


def _cmd_numcheck(args) -> int:
    try:
        model = numcheck.get_model(args.model)
    except KeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    volume = numcheck.check_volume_condition(
        model, points=args.points, step=args.step, tol=args.tol, seed=args.seed
    )
    mult = None
    if model.group_law is not None:
        mult = numcheck.check_multiplicativity(
            model, step=args.step, tol=args.tol, seed=args.seed
        )
    passed = volume.passed and (mult is None or mult.passed)
    if args.format == "machine":
        payload = {
            "command": "numcheck",
            "model": model.name,
            "volume": {
                "max_residual": volume.max_residual,
                "closed_form_max_dev": volume.closed_form_max_dev,
                "points": volume.points,
                "step": volume.step,
                "tol": volume.tol,
                "passed": volume.passed,
            },
            "passed": passed,
        }
        if mult is not None:
            payload["multiplicativity"] = {
                "max_deviation": mult.max_deviation,
                "pairs": mult.pairs,
                "passed": mult.passed,
            }
        print(_machine(payload))
    else:
        print(f"model {model.name}: {'PASS' if passed else 'FAIL'}")
        print(
            f"  volume residual max |d(i_pi mu)| = {volume.max_residual:.3e} "
            f"(tol {volume.tol:.1e}, {volume.points} points, step {volume.step:.1e})"
        )
        if volume.closed_form_max_dev is not None:
            print(f"  contraction vs closed form: {volume.closed_form_max_dev:.3e}")
        if mult is not None:
            print(
                f"  multiplicativity deviation = {mult.max_deviation:.3e} "
                f"({mult.pairs} pairs)"
            )
    return EXIT_OK if passed else EXIT_VIOLATED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="poissonlie",
        description="exact workbench for compatibility conditions on Riemannian Poisson-Lie groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="decide all conditions for a triple document")
    p_check.add_argument("file")
    p_check.add_argument("--format", choices=("text", "machine"), default="text")
    p_check.set_defaults(func=_cmd_check)

    p_milnor = sub.add_parser("milnor", help="metric Lie algebra decomposition only")
    p_milnor.add_argument("file")
    p_milnor.add_argument("--format", choices=("text", "machine"), default="text")
    p_milnor.set_defaults(func=_cmd_milnor)

    p_classify = sub.add_parser("classify", help="exact cocycle solution spaces")
    p_classify.add_argument("--dim", type=int, choices=(3, 4), required=True)
    p_classify.add_argument(
        "--flags",
        default="cocycle,flat",
        help="comma list of: cocycle, flat, volume, unimodular",
    )
    p_classify.add_argument("--quadratics", action="store_true", help="print Jacobi obstructions")
    p_classify.add_argument("--format", choices=("text", "machine"), default="text")
    p_classify.set_defaults(func=_cmd_classify)

    p_catalog = sub.add_parser("catalog", help="list, show or verify the built-in models")
    p_catalog.add_argument("action", choices=("list", "show", "verify"))
    p_catalog.add_argument("name", nargs="?")
    p_catalog.add_argument("--format", choices=("text", "machine"), default="text")
    p_catalog.set_defaults(func=_cmd_catalog)

    p_num = sub.add_parser("numcheck", help="floating-point verification of a group model")
    p_num.add_argument("model")
    p_num.add_argument("--points", type=int, default=numcheck.DEFAULT_POINTS)
    p_num.add_argument("--step", type=float, default=numcheck.DEFAULT_STEP)
    p_num.add_argument("--tol", type=float, default=numcheck.DEFAULT_TOL)
    p_num.add_argument("--seed", type=int, default=numcheck.DEFAULT_SEED)
    p_num.add_argument("--format", choices=("text", "machine"), default="text")
    p_num.set_defaults(func=_cmd_numcheck)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
