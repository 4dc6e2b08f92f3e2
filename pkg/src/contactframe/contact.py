"""Almost contact metric structures on a frame manifold.

The structure data is a triple (phi, xi, eta): an endomorphism, the
characteristic vector field, and its dual 1-form (stored by components,
so eta(X) = g(eta_dual, X) on the orthonormal frame).  The validator
checks the axioms

    phi xi = 0,   eta(xi) = 1,   eta o phi = 0,
    phi^2 = -I + eta (x) xi,
    g(phi X, phi Y) = g(X, Y) - eta(X) eta(Y),

together with the contact condition d eta(X, Y) = g(X, phi Y), where on
constant frames d eta(E_i, E_j) = -1/2 eta([E_i, E_j]) under the
half-convention for the exterior derivative.  The opposite-slot variant
d eta(X, Y) = g(phi X, Y) circulates in the literature; it is evaluated
and reported as data, never silently adopted - the half-convention with
phi in the second slot is the unique assignment validating the worked
3-dimensional family.

The operator h = 1/2 L_xi phi is computed from the Lie derivative and
checked against its classical properties (symmetric, anticommutes with
phi, trace-free, kills xi).  ``detect_kappa`` recovers the nullity
constant of a curvature tensor when one exists, and ``classify`` sorts an
instance into contact metric / K-contact / Sasakian.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curvature import Connection, Curvature4Tensor
from .frames import Endomorphism, FrameManifold, FrameVector, render_vector
from .report import VerificationReport
from .scalars import Scalar, exact_div


class StructureInconsistencyError(Exception):
    """Raised when derived structure operators violate their defining laws."""


@dataclass(frozen=True)
class AlmostContactData:
    phi: Endomorphism
    xi: FrameVector
    eta: FrameVector

    def eta_of(self, m: FrameManifold, x: FrameVector) -> Scalar:
        return m.inner(self.eta, x)


@dataclass(frozen=True)
class StructureClass:
    is_contact_metric: bool
    is_K_contact: bool
    is_Sasakian: bool
    kappa: Scalar | None


_PHI_SQUARE_NOTE = (
    "phi^2 = -I + eta (x) xi is the adopted convention; the opposite-sign "
    "variant (phi^2 = I - eta (x) xi, with the matching metric relation "
    "g(phi X, phi Y) = -g(X, Y) + eta(X) eta(Y)) is treated as a sign slip "
    "because it is inconsistent with the worked 3-dimensional family"
)


def validate_acm(m: FrameManifold, s: AlmostContactData) -> VerificationReport:
    """Check the almost-contact axioms and the contact condition exactly."""
    report = VerificationReport()
    phi, xi, eta = s.phi, s.xi, s.eta

    def eta_of(x: FrameVector) -> Scalar:
        return m.inner(eta, x)

    vec = phi.apply(xi)
    report.graded(
        "acm.phi_kills_xi",
        vec.is_zero(),
        None if vec.is_zero() else {"residual": render_vector(vec.components)},
    )

    value = eta_of(xi) - m.one_scalar()
    report.graded(
        "acm.eta_of_xi",
        value.is_zero(),
        None if value.is_zero() else {"residual": str(value)},
    )

    witness = None
    for i in range(m.dim):
        value = eta_of(phi.apply(m.basis(i)))
        if not value.is_zero():
            witness = {"indices": [i + 1], "residual": str(value)}
            break
    report.graded("acm.eta_after_phi", witness is None, witness)

    witness = None
    for j in range(m.dim):
        ej = m.basis(j)
        residual = phi.apply(phi.apply(ej)) + ej - xi.scale(eta_of(ej))
        if not residual.is_zero():
            witness = {"indices": [j + 1], "residual": render_vector(residual.components)}
            break
    report.graded("acm.phi_square", witness is None, witness, notes=(_PHI_SQUARE_NOTE,))

    witness = None
    for i in range(m.dim):
        for j in range(m.dim):
            ei, ej = m.basis(i), m.basis(j)
            residual = (
                m.inner(phi.apply(ei), phi.apply(ej))
                - m.inner(ei, ej)
                + eta_of(ei) * eta_of(ej)
            )
            if not residual.is_zero():
                witness = {"indices": [i + 1, j + 1], "residual": str(residual)}
                break
        if witness:
            break
    report.graded(
        "acm.phi_metric_compatibility", witness is None, witness, notes=(_PHI_SQUARE_NOTE,)
    )

    # d eta(E_i, E_j) = -1/2 eta([E_i, E_j]) on constant frames (half-convention)
    half = Fraction(1, 2)

    def d_eta(i: int, j: int) -> Scalar:
        return (-eta_of(m.bracket_basis(i, j))).scale(half)

    witness = None
    for i in range(m.dim):
        for j in range(m.dim):
            residual = d_eta(i, j) - m.inner(m.basis(i), phi.apply(m.basis(j)))
            if not residual.is_zero():
                witness = {"indices": [i + 1, j + 1], "residual": str(residual)}
                break
        if witness:
            break
    report.graded(
        "acm.contact_condition",
        witness is None,
        witness,
        notes=(
            "adopted convention: d eta(X, Y) = 1/2 (X eta(Y) - Y eta(X) - eta([X, Y])) "
            "and contact condition d eta(X, Y) = g(X, phi Y)",
        ),
    )

    # reference variant with phi in the first slot: d eta(X, Y) = g(phi X, Y)
    ref_witness = None
    for i in range(m.dim):
        for j in range(m.dim):
            residual = d_eta(i, j) - m.inner(phi.apply(m.basis(i)), m.basis(j))
            if not residual.is_zero():
                ref_witness = {"indices": [i + 1, j + 1], "residual": str(residual)}
                break
        if ref_witness:
            break
    if ref_witness is None:
        report.holds("acm.contact_condition_reference_form")
    else:
        report.not_applicable(
            "acm.contact_condition_reference_form",
            witness=ref_witness,
            notes=(
                "reference variant d eta(X, Y) = g(phi X, Y) disagrees with the "
                "computed exterior derivative; recorded as data",
            ),
        )

    return report


def compute_h(m: FrameManifold, s: AlmostContactData) -> Endomorphism:
    """h = 1/2 L_xi phi; raises if the classical h-laws are violated."""
    h = m.lie_derive_endo(s.xi, s.phi).scale(Fraction(1, 2))
    for check in h_property_checks(m, s, h).checks:
        if check.status == "fails":
            raise StructureInconsistencyError(
                f"{check.name} violated: {check.witness}"
            )
    return h


def h_property_checks(
    m: FrameManifold, s: AlmostContactData, h: Endomorphism
) -> VerificationReport:
    """The classical properties of h as report entries."""
    report = VerificationReport()

    report.graded(
        "acm.h_symmetric",
        h.is_symmetric(),
        None
        if h.is_symmetric()
        else _endo_witness(h - Endomorphism(tuple(zip(*h.matrix)))),
    )

    anti = h.compose(s.phi) + s.phi.compose(h)
    report.graded(
        "acm.h_phi_anticommute",
        anti.is_zero(),
        None if anti.is_zero() else _endo_witness(anti),
    )

    trace = h.trace()
    report.graded(
        "acm.h_trace_free",
        trace.is_zero(),
        None if trace.is_zero() else {"residual": str(trace)},
    )

    vec = h.apply(s.xi)
    report.graded(
        "acm.h_kills_xi",
        vec.is_zero(),
        None if vec.is_zero() else {"residual": render_vector(vec.components)},
    )

    return report


def _endo_witness(a: Endomorphism) -> dict:
    for j in range(a.dim):
        for i in range(a.dim):
            if not a.matrix[i][j].is_zero():
                return {"indices": [i + 1, j + 1], "residual": str(a.matrix[i][j])}
    return {"residual": "0"}


def detect_kappa(
    m: FrameManifold, s: AlmostContactData, r: Curvature4Tensor
) -> Scalar | None:
    """Solve R(E_i, E_j)xi = kappa (eta(E_j)E_i - eta(E_i)E_j) for one kappa.

    Componentwise this is a family of one-unknown linear equations; a result
    is returned only when every equation is consistent (cross-differences
    vanish exactly) and the common solution is polynomial.  Degenerate
    systems (every equation 0 = 0) return None.
    """
    num: Scalar | None = None  # numerator of the first determining equation
    den: Scalar | None = None
    for i in range(m.dim):
        for j in range(m.dim):
            lhs = r.apply(m.basis(i), m.basis(j), s.xi)
            rhs = m.basis(i).scale(s.eta_of(m, m.basis(j))) - m.basis(j).scale(
                s.eta_of(m, m.basis(i))
            )
            for k in range(m.dim):
                a = lhs.components[k]
                b = rhs.components[k]
                if b.is_zero():
                    if not a.is_zero():
                        return None  # kappa * 0 = nonzero: inconsistent
                    continue
                if num is None:
                    num, den = a, b
                else:
                    # consistency of a/b with num/den by cross-multiplication
                    if not (a * den - num * b).is_zero():
                        return None
    if num is None or den is None:
        return None
    return exact_div(num, den)


def classify(
    m: FrameManifold,
    s: AlmostContactData,
    conn: Connection,
    r: Curvature4Tensor,
) -> StructureClass:
    """Sort an instance into contact metric / K-contact / Sasakian classes."""
    acm_ok = not validate_acm(m, s).has_failures
    h = m.lie_derive_endo(s.xi, s.phi).scale(Fraction(1, 2))
    k_contact = acm_ok and h.is_zero()

    sasakian = acm_ok
    if acm_ok:
        for i in range(m.dim):
            if not sasakian:
                break
            for j in range(m.dim):
                ei, ej = m.basis(i), m.basis(j)
                lhs = conn.derivative_endo(m, i, s.phi).column(j)
                rhs = s.xi.scale(m.inner(ei, ej)) - ei.scale(s.eta_of(m, ej))
                if not (lhs - rhs).is_zero():
                    sasakian = False
                    break

    return StructureClass(
        is_contact_metric=acm_ok,
        is_K_contact=k_contact,
        is_Sasakian=sasakian,
        kappa=detect_kappa(m, s, r) if acm_ok else None,
    )
