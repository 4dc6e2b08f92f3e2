"""Command-line driver.

Subcommands:

    validate <manifest>                     structural layer only (frame.*/acm.*)
    curvature <manifest> --connection lc|gtw   connection/torsion/curvature tables
    verify <manifest> [--suite ...]         graded check suites
    zoo <label> [--lambda R | --symbolic]   built-in examples by label
    deform --kappa R --mu R --a R [--literal-c]   deformed nullity pair
    boeckx --kappa R --mu R                 the (1 - mu/2)/sqrt(1 - kappa) invariant

Every subcommand accepts --format json|text (default text).  Exit status is
0 when the run produced no failing check (non-report commands count as having
none), 1 when a report contains failures, and 2 for unusable input (bad
manifest, unknown label, domain errors, bad arguments).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .contact import StructureInconsistencyError, compute_h, detect_kappa
from .curvature import (
    ConnectionConsistencyError,
    levi_civita,
    ricci,
    riemann,
    scalar_curvature,
)
from .manifest import (
    ManifestError,
    dump_manifest,
    load_manifest_file,
    manifest_hash,
)
from .report import emit
from .suite import SUITES, run_suite
from .tanaka_webster import build_gtw_package
from .zoo import ZooDomainError, boeckx_invariant, dhomothetic_invariants, zoo_entry
from .frames import FrameVector, render_vector

_FORMATS = ("json", "text")


def _rational(text: str) -> Fraction:
    return Fraction(text)


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=_FORMATS,
        default=argparse.SUPPRESS,
        help="output format (default text)",
    )

    parser = argparse.ArgumentParser(
        prog="contactframe",
        description="exact checks for contact metric frame manifolds",
    )
    parser.add_argument("--format", choices=_FORMATS, default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "validate", parents=[common], help="grade the structural layer of a manifest"
    )
    p.add_argument("manifest", help="path to a JSON manifest")

    p = sub.add_parser(
        "curvature", parents=[common], help="print connection and curvature tables"
    )
    p.add_argument("manifest", help="path to a JSON manifest")
    p.add_argument("--connection", choices=("lc", "gtw"), default="lc")

    p = sub.add_parser("verify", parents=[common], help="run graded check suites")
    p.add_argument("manifest", help="path to a JSON manifest")
    p.add_argument("--suite", choices=SUITES, default="all")

    p = sub.add_parser("zoo", parents=[common], help="emit a built-in example")
    p.add_argument("label", help="zoo label (lambda, sasakian3)")
    group = p.add_mutually_exclusive_group()
    group.add_argument(
        "--lambda",
        dest="lam",
        type=_rational,
        default=None,
        help="rational parameter value for the lambda family",
    )
    group.add_argument(
        "--symbolic",
        action="store_true",
        help="keep the parameter symbolic (default for the lambda label)",
    )

    p = sub.add_parser(
        "deform", parents=[common], help="deformed nullity pair (kappa_bar, mu_bar)"
    )
    p.add_argument("--kappa", type=_rational, required=True)
    p.add_argument("--mu", type=_rational, required=True)
    p.add_argument("--a", type=_rational, required=True)
    p.add_argument(
        "--literal-c",
        action="store_true",
        help="use the literal numerator reading mu + 2(a-1) - 2",
    )

    p = sub.add_parser(
        "boeckx", parents=[common], help="the (1 - mu/2)/sqrt(1 - kappa) invariant"
    )
    p.add_argument("--kappa", type=_rational, required=True)
    p.add_argument("--mu", type=_rational, required=True)

    return parser


def _fail(message: str) -> int:
    print(message, file=sys.stderr)
    return 2


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _vector_strings(v: FrameVector) -> list[str]:
    return [str(c) for c in v.components]


def _cmd_validate(args, fmt: str) -> int:
    m, s = load_manifest_file(args.manifest)
    digest = manifest_hash(dump_manifest(m, s))
    report = run_suite(m, s, suite="frame", manifest_hash=digest)
    print(emit(report, fmt))
    return 1 if report.has_failures else 0


def _cmd_verify(args, fmt: str) -> int:
    m, s = load_manifest_file(args.manifest)
    digest = manifest_hash(dump_manifest(m, s))
    report = run_suite(m, s, suite=args.suite, manifest_hash=digest)
    print(emit(report, fmt))
    return 1 if report.has_failures else 0


def _cmd_curvature(args, fmt: str) -> int:
    m, s = load_manifest_file(args.manifest)
    digest = manifest_hash(dump_manifest(m, s))
    lc = levi_civita(m)
    r_lc = riemann(m, lc)
    if args.connection == "gtw":
        try:
            h = compute_h(m, s)
            pkg = build_gtw_package(m, s, lc, h)
        except (StructureInconsistencyError, ConnectionConsistencyError) as exc:
            return _fail(
                "the torsionful connection needs a valid contact metric "
                f"structure: {exc}"
            )
        conn, curv = pkg.conn, pkg.curv
        ricci_form, tau = pkg.ricci, pkg.tau
        torsion = pkg.torsion
    else:
        conn, curv = lc, r_lc
        ricci_form = ricci(m, curv)
        tau = scalar_curvature(m, ricci_form)
        torsion = None
    kappa = detect_kappa(m, s, r_lc)

    derivatives = []
    for i in range(m.dim):
        for j in range(m.dim):
            v = conn.derivative_basis(i, j)
            if not v.is_zero():
                derivatives.append({"i": i + 1, "j": j + 1, "value": _vector_strings(v)})
    torsion_entries = []
    if torsion is not None:
        for i in range(m.dim):
            for j in range(i + 1, m.dim):
                v = torsion[i][j]
                if not v.is_zero():
                    torsion_entries.append(
                        {"i": i + 1, "j": j + 1, "value": _vector_strings(v)}
                    )
    curvature_entries = []
    for i in range(m.dim):
        for j in range(i + 1, m.dim):
            for k in range(m.dim):
                v = curv.vector(i, j, k)
                if not v.is_zero():
                    curvature_entries.append(
                        {"i": i + 1, "j": j + 1, "k": k + 1, "value": _vector_strings(v)}
                    )
    ricci_matrix = [
        [str(ricci_form.components[i][j]) for j in range(m.dim)] for i in range(m.dim)
    ]

    if fmt == "json":
        payload = {
            "connection": args.connection,
            "dimension": m.dim,
            "parameters": list(m.params),
            "manifest_hash": digest,
            "derivatives": derivatives,
            "curvature": curvature_entries,
            "ricci": ricci_matrix,
            "scalar_curvature": str(tau),
            "kappa": str(kappa) if kappa is not None else None,
        }
        if torsion is not None:
            payload["torsion"] = torsion_entries
        _emit_json(payload)
        return 0

    lines = [
        f"connection: {args.connection}",
        f"dimension: {m.dim}" + (f"  parameters: {', '.join(m.params)}" if m.params else ""),
        "covariant derivatives (nonzero):",
    ]
    if derivatives:
        for entry in derivatives:
            lines.append(
                f"  D_E{entry['i']} E{entry['j']} = "
                + render_vector(conn.derivative_basis(entry["i"] - 1, entry["j"] - 1).components)
            )
    else:
        lines.append("  (all zero)")
    if torsion is not None:
        lines.append("torsion (nonzero, i<j):")
        if torsion_entries:
            for entry in torsion_entries:
                lines.append(
                    f"  T(E{entry['i']},E{entry['j']}) = "
                    + render_vector(torsion[entry["i"] - 1][entry["j"] - 1].components)
                )
        else:
            lines.append("  (all zero)")
    lines.append("curvature (nonzero, i<j):")
    if curvature_entries:
        for entry in curvature_entries:
            lines.append(
                f"  R(E{entry['i']},E{entry['j']})E{entry['k']} = "
                + render_vector(
                    curv.vector(entry["i"] - 1, entry["j"] - 1, entry["k"] - 1).components
                )
            )
    else:
        lines.append("  (all zero)")
    lines.append("ricci (nonzero):")
    any_ricci = False
    for i in range(m.dim):
        for j in range(m.dim):
            value = ricci_form.components[i][j]
            if not value.is_zero():
                lines.append(f"  S(E{i + 1},E{j + 1}) = {value}")
                any_ricci = True
    if not any_ricci:
        lines.append("  (all zero)")
    lines.append(f"scalar curvature: {tau}")
    lines.append(f"kappa: {kappa if kappa is not None else 'none'}")
    print("\n".join(lines))
    return 0


def _cmd_zoo(args, fmt: str) -> int:
    entry = zoo_entry(args.label, None if args.symbolic else args.lam)
    document = dump_manifest(entry.manifold, entry.structure)
    digest = manifest_hash(document)
    if fmt == "json":
        _emit_json(
            {
                "label": entry.label,
                "dimension": entry.manifold.dim,
                "parameters": list(entry.manifold.params),
                "expected_kappa": str(entry.expected_kappa),
                "notes": list(entry.notes),
                "manifest": document,
                "manifest_hash": digest,
            }
        )
        return 0
    m = entry.manifold
    lines = [
        f"label: {entry.label}",
        f"dimension: {m.dim}" + (f"  parameters: {', '.join(m.params)}" if m.params else ""),
        f"expected kappa: {entry.expected_kappa}",
        "brackets (i<j, nonzero):",
    ]
    any_bracket = False
    for i in range(m.dim):
        for j in range(i + 1, m.dim):
            v = FrameVector(tuple(m.c[i][j]))
            if not v.is_zero():
                lines.append(f"  [E{i + 1},E{j + 1}] = {render_vector(v.components)}")
                any_bracket = True
    if not any_bracket:
        lines.append("  (all zero)")
    lines.append("notes:")
    for note in entry.notes:
        lines.append(f"  - {note}")
    lines.append(f"manifest hash: {digest}")
    lines.append("(use --format json to obtain the manifest document)")
    print("\n".join(lines))
    return 0


def _cmd_deform(args, fmt: str) -> int:
    kappa_bar, mu_bar = dhomothetic_invariants(
        args.kappa, args.mu, args.a, literal_c=args.literal_c
    )
    if fmt == "json":
        _emit_json(
            {
                "kappa": str(args.kappa),
                "mu": str(args.mu),
                "a": str(args.a),
                "literal_c": args.literal_c,
                "kappa_bar": str(kappa_bar),
                "mu_bar": str(mu_bar),
            }
        )
        return 0
    print(f"kappa_bar = {kappa_bar}")
    print(f"mu_bar = {mu_bar}")
    if args.literal_c:
        print("(literal-c numerator mu + 2(a-1) - 2)")
    return 0


def _cmd_boeckx(args, fmt: str) -> int:
    result = boeckx_invariant(args.kappa, args.mu)
    if fmt == "json":
        _emit_json(
            {
                "kappa": str(args.kappa),
                "mu": str(args.mu),
                "is_exact": result.is_exact,
                "value": str(result.value) if result.value is not None else None,
                "square": str(result.square),
                "sign": result.sign,
                "approx": result.approx,
            }
        )
        return 0
    if result.is_exact:
        print(f"I = {result.value} (exact)")
    else:
        sign = {1: "+1", 0: "0", -1: "-1"}[result.sign]
        print(
            f"I^2 = {result.square}, sign = {sign}, approx = {result.approx} "
            "(approximate: 1 - kappa is not a rational square)"
        )
    return 0


_COMMANDS = {
    "validate": _cmd_validate,
    "verify": _cmd_verify,
    "curvature": _cmd_curvature,
    "zoo": _cmd_zoo,
    "deform": _cmd_deform,
    "boeckx": _cmd_boeckx,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", "text")
    try:
        return _COMMANDS[args.command](args, fmt)
    except ManifestError as exc:
        for issue in exc.issues:
            print(str(issue), file=sys.stderr)
        return 2
    except (ZooDomainError, ValueError) as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
