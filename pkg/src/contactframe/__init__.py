"""Exact verification engine for contact metric frame manifolds.

Everything is computed over an orthonormal frame with polynomial structure
constants: curvature of the Levi-Civita and of the torsionful (generalized
Tanaka-Webster) connection, the concircular tensor, and graded check suites
for the identities these objects satisfy on nullity-type instances.  All
arithmetic is exact (rational coefficients, sparse polynomials); no floats
enter any verdict.
"""

from .concircular import (
    DERIVATION_CONVENTION,
    REFERENCE_CONVENTION,
    ConcircularTensor,
    concircular,
    tensor_dot_form,
    tensor_dot_tensor,
    verify_concircular_suite,
)
from .contact import (
    AlmostContactData,
    StructureClass,
    StructureInconsistencyError,
    classify,
    compute_h,
    detect_kappa,
    h_property_checks,
    validate_acm,
)
from .curvature import (
    BilinearForm,
    Connection,
    ConnectionConsistencyError,
    Curvature4Tensor,
    levi_civita,
    metric_form,
    ricci,
    riemann,
    scalar_curvature,
    verify_nkappa_suite,
)
from .frames import Endomorphism, FrameManifold, FrameVector, render_vector
from .linear import LinearSolution, solve_linear
from .manifest import (
    ManifestError,
    ManifestIssue,
    dump_manifest,
    load_manifest,
    load_manifest_file,
    manifest_hash,
)
from .report import Check, VerificationReport, emit
from .scalars import Scalar, ScalarError, exact_div, parse_scalar
from .suite import SUITES, run_suite
from .tanaka_webster import (
    GssfCoefficients,
    GtwPackage,
    build_gtw_package,
    eta_einstein_fit,
    gssf_decompose,
    gssf_template_terms,
    gtw_connection,
    gtw_torsion,
    verify_gtw_suite,
)
from .version import ENGINE_VERSION
from .zoo import (
    BoeckxInvariant,
    Example1Constants,
    Example1Report,
    ZooDomainError,
    ZooEntry,
    boeckx_invariant,
    dhomothetic_invariants,
    example1_pipeline,
    make_abelian3,
    make_example1_constants,
    make_lambda_family,
    make_sasakian3,
    zoo_entry,
)

__version__ = ENGINE_VERSION

__all__ = [
    "AlmostContactData",
    "BilinearForm",
    "BoeckxInvariant",
    "Check",
    "ConcircularTensor",
    "DERIVATION_CONVENTION",
    "REFERENCE_CONVENTION",
    "Connection",
    "ConnectionConsistencyError",
    "Curvature4Tensor",
    "ENGINE_VERSION",
    "Endomorphism",
    "Example1Constants",
    "Example1Report",
    "FrameManifold",
    "FrameVector",
    "GssfCoefficients",
    "GtwPackage",
    "LinearSolution",
    "ManifestError",
    "ManifestIssue",
    "Scalar",
    "ScalarError",
    "StructureClass",
    "StructureInconsistencyError",
    "SUITES",
    "VerificationReport",
    "ZooDomainError",
    "ZooEntry",
    "boeckx_invariant",
    "build_gtw_package",
    "classify",
    "compute_h",
    "concircular",
    "detect_kappa",
    "dhomothetic_invariants",
    "dump_manifest",
    "emit",
    "eta_einstein_fit",
    "exact_div",
    "example1_pipeline",
    "gssf_decompose",
    "gssf_template_terms",
    "gtw_connection",
    "gtw_torsion",
    "h_property_checks",
    "levi_civita",
    "load_manifest",
    "load_manifest_file",
    "make_abelian3",
    "make_example1_constants",
    "make_lambda_family",
    "make_sasakian3",
    "manifest_hash",
    "metric_form",
    "parse_scalar",
    "render_vector",
    "ricci",
    "riemann",
    "run_suite",
    "scalar_curvature",
    "solve_linear",
    "tensor_dot_form",
    "tensor_dot_tensor",
    "validate_acm",
    "verify_concircular_suite",
    "verify_gtw_suite",
    "verify_nkappa_suite",
    "zoo_entry",
]
