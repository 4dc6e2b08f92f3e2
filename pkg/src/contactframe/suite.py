"""Ordered verification driver.

run_suite assembles one report from the layered check suites:

    frame.*   bracket antisymmetry and the Jacobi identity
    acm.*     almost-contact axioms, the contact condition, the h laws,
              and an informational classification entry
    nkappa.*  nullity-condition identities of the Levi-Civita curvature
    gtw.*     the torsionful connection: parallelism, torsion, curvature,
              Ricci/scalar values, space-form decomposition
    conc.*    the concircular tensor: contraction identities and the
              non-flatness obstructions

The structural layer (frame.* and acm.*) is always graded honestly.  The
derived suites presuppose a contact metric structure satisfying the nullity
condition; when the structural layer fails, or no single nullity constant
fits the curvature, those suites are emitted as not_applicable entries
carrying a gate note instead of misgrading identities whose hypotheses are
absent.  Named suites ("nkappa", "gtw", "concircular") emit only their own
section, gated the same way; "frame" emits only the structural layer; "all"
emits everything in order.

run_suite never raises on mathematical grounds: every outcome, including a
broken input structure, is a report entry.
"""

from __future__ import annotations

from fractions import Fraction

from .concircular import concircular, verify_concircular_suite
from .contact import (
    AlmostContactData,
    classify,
    detect_kappa,
    h_property_checks,
    validate_acm,
)
from .curvature import ConnectionConsistencyError, levi_civita, riemann, verify_nkappa_suite
from .frames import FrameManifold
from .report import VerificationReport
from .tanaka_webster import build_gtw_package, verify_gtw_suite
from .version import ENGINE_VERSION

SUITES = ("all", "frame", "nkappa", "gtw", "concircular")

NKAPPA_CHECK_NAMES = (
    "nkappa.nullity_constant",
    "nkappa.xi_covariant_derivative",
    "nkappa.xi_covariant_derivative_reference_form",
    "nkappa.phi_covariant_derivative",
    "nkappa.h_square",
    "nkappa.h_covariant_derivative",
    "nkappa.eta_covariant_derivative",
    "nkappa.curvature_xi_xi",
    "nkappa.curvature_pair_xi",
    "nkappa.curvature_xi_argument",
    "nkappa.ricci_closed_form",
    "nkappa.ricci_xi_values",
    "nkappa.scalar_curvature_value",
    "nkappa.sasakian_curvature_xi_orientation",
)

GTW_CHECK_NAMES = (
    "gtw.metric_parallel",
    "gtw.xi_parallel",
    "gtw.eta_parallel",
    "gtw.phi_derivative_relation",
    "gtw.phi_parallel",
    "gtw.h_derivative_relation",
    "gtw.h_derivative_relation_reference_form",
    "gtw.torsion_nonzero",
    "gtw.torsion_closed_form",
    "gtw.torsion_closed_form_reference_form",
    "gtw.curvature_first_pair_antisymmetry",
    "gtw.curvature_last_pair_antisymmetry",
    "gtw.curvature_xi_pair",
    "gtw.curvature_xi_first",
    "gtw.curvature_xi_double",
    "gtw.curvature_closed_form",
    "gtw.curvature_closed_form_crosscheck",
    "gtw.pair_interchange_crosscheck",
    "gtw.cyclic_sum_crosscheck",
    "gtw.ricci_closed_form",
    "gtw.ricci_alternative_form",
    "gtw.ricci_xi_degenerate",
    "gtw.ricci_symmetry",
    "gtw.scalar_curvature_value",
    "gtw.scalar_curvature_relation",
    "gtw.space_form_decomposition",
    "gtw.eta_einstein_fit",
)

CONC_CHECK_NAMES = (
    "conc.xi_double_contraction",
    "conc.xi_double_contraction_phi_square_variant",
    "conc.xi_pair",
    "conc.xi_argument",
    "conc.eta_contraction",
    "conc.eta_contraction_reference_form",
    "conc.xi_flatness_obstruction",
    "conc.phi_flatness",
    "conc.ricci_action_obstruction",
    "conc.ricci_action_slice",
    "conc.self_action_obstruction",
)


def _gate_section(
    report: VerificationReport, names: tuple[str, ...], note: str
) -> None:
    for name in names:
        report.not_applicable(name, notes=(note,))


def run_suite(
    m: FrameManifold,
    s: AlmostContactData,
    suite: str = "all",
    manifest_hash: str | None = None,
) -> VerificationReport:
    """Run the requested section(s); see the module docstring for gating."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; known: {', '.join(SUITES)}")
    report = VerificationReport(
        manifest_hash=manifest_hash, engine_version=ENGINE_VERSION
    )

    frame_rep = m.validate_frame()
    acm_rep = validate_acm(m, s)
    h = m.lie_derive_endo(s.xi, s.phi).scale(Fraction(1, 2))
    h_rep = h_property_checks(m, s, h)
    structural_ok = not (
        frame_rep.has_failures or acm_rep.has_failures or h_rep.has_failures
    )

    lc = levi_civita(m)
    r_lc = riemann(m, lc)
    kappa = detect_kappa(m, s, r_lc) if structural_ok else None

    if not structural_ok:
        gate_note = (
            "gated: the structural layer (frame.*/acm.*) fails on this input; "
            "run suite=all or suite=frame for the failing entries"
        )
    elif kappa is None:
        gate_note = (
            "gated: no single nullity constant reproduces R(X, Y)xi on this "
            "instance, so the nullity-based identities have no hypothesis to test"
        )
    else:
        gate_note = ""
    gate_ok = gate_note == ""

    if suite in ("all", "frame"):
        report.extend(frame_rep)
        report.extend(acm_rep)
        report.extend(h_rep)
        cls = classify(m, s, lc, r_lc)
        report.holds(
            "acm.classification",
            witness={
                "is_contact_metric": str(cls.is_contact_metric).lower(),
                "is_K_contact": str(cls.is_K_contact).lower(),
                "is_Sasakian": str(cls.is_Sasakian).lower(),
                "kappa": str(cls.kappa) if cls.kappa is not None else "none",
            },
            notes=("informational classification; the values are data",),
        )

    if suite in ("all", "nkappa"):
        if gate_ok:
            report.extend(verify_nkappa_suite(m, s, h, lc, r_lc, kappa))
        else:
            _gate_section(report, NKAPPA_CHECK_NAMES, gate_note)

    needs_gtw = suite in ("all", "gtw")
    needs_conc = suite in ("all", "concircular")
    if needs_gtw or needs_conc:
        if gate_ok:
            try:
                pkg = build_gtw_package(m, s, lc, h)
            except ConnectionConsistencyError as exc:
                for name in (GTW_CHECK_NAMES if needs_gtw else ()) + (
                    CONC_CHECK_NAMES if needs_conc else ()
                ):
                    report.fails(
                        name,
                        witness={"residual": str(exc)},
                        notes=("the torsionful connection could not be built",),
                    )
                return report
            if needs_gtw:
                report.extend(verify_gtw_suite(m, s, h, kappa, lc, r_lc, pkg))
            if needs_conc:
                z = concircular(m, pkg.curv)
                report.extend(verify_concircular_suite(m, s, z, pkg.ricci))
        else:
            if needs_gtw:
                _gate_section(report, GTW_CHECK_NAMES, gate_note)
            if needs_conc:
                _gate_section(report, CONC_CHECK_NAMES, gate_note)

    return report
