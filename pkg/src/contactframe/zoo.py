"""Built-in example manifolds and (kappa, mu) bookkeeping utilities.

The centerpiece is a one-parameter three-dimensional family whose frame
brackets are

    [E1, E2] = (1 + lambda) E3,   [E2, E3] = 2 E1,   [E3, E1] = (1 - lambda) E2,

with xi = E1, phi E2 = E3, phi E3 = -E2.  Its tensor h has eigenvalues
(0, lambda, -lambda) and the curvature satisfies the nullity condition with
kappa = 1 - lambda^2; lambda = 0 is Sasakian.  A reference presentation of
this family prints (1 - lambda) for the [E1, E2] coefficient as well, but
that sign is inconsistent with the presentation's own covariant-derivative
table, with h E2 = lambda E2, and with kappa = 1 - lambda^2; the (1 + lambda)
form used here is forced by the Koszul formula and reproduces every
downstream value.  The discrepancy is recorded on the entry's notes.

Bookkeeping utilities (pure rational/symbolic arithmetic, no frames):

- dhomothetic_invariants: the transformed nullity pair under a constant
  rescaling of the structure,
      kappa_bar = (kappa + a^2 - 1)/a,   mu_bar = (mu + 2a - 2)/a.
  The mu_bar numerator is quoted with a "2c" in one source; reading c as a
  is the consistent interpretation (it makes the identity deformation a = 1
  fix (kappa, mu) and sends the standard c-pipeline to mu_bar = 0), and the
  literal reading c = a - 1, i.e. mu_bar = (mu + 2a - 4)/a, stays available
  behind the literal_c flag.
- boeckx_invariant: I = (1 - mu/2)/sqrt(1 - kappa), exact when 1 - kappa is
  a rational square, otherwise returned as (square, sign) plus a flagged
  decimal approximation.
- make_example1_constants / example1_pipeline: the constants
  c = (sqrt(n) +/- 1)^2/(n - 1), a = 1 + c, the induced
  kappa = c(2 - c), mu = -2c, and the deformed pair, reported next to the
  target value 1 - 1/n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .contact import AlmostContactData
from .frames import Endomorphism, FrameManifold
from .scalars import RationalLike, Scalar, exact_div

LAMBDA_PARAM = "lambda"


class ZooDomainError(ValueError):
    """An input outside a bookkeeping operation's domain."""


@dataclass(frozen=True)
class ZooEntry:
    """A ready-made frame manifold with its contact structure and metadata."""

    manifold: FrameManifold
    structure: AlmostContactData
    label: str
    expected_kappa: Scalar
    notes: tuple[str, ...] = ()


_BRACKET_NOTE = (
    "bracket [E1,E2] = (1+lambda) E3: a reference presentation of this family "
    "prints (1-lambda) here, which contradicts its own covariant-derivative "
    "table, the h eigenvalues (0, lambda, -lambda), and kappa = 1 - lambda^2; "
    "the (1+lambda) coefficient is the one forced by the Koszul formula"
)


def _lambda_structure(m: FrameManifold) -> AlmostContactData:
    zero, one = m.zero_scalar(), m.one_scalar()
    phi = Endomorphism(
        (
            (zero, zero, zero),
            (zero, zero, -one),
            (zero, one, zero),
        )
    )
    return AlmostContactData(phi=phi, xi=m.basis(0), eta=m.basis(0))


def make_lambda_family(
    lam: RationalLike | None = None, label: str | None = None
) -> ZooEntry:
    """The 3-dimensional family; symbolic when lam is None, else at that value."""
    if lam is None:
        params: tuple[str, ...] = (LAMBDA_PARAM,)
        lam_scalar = Scalar.variable(params, LAMBDA_PARAM)
        value_note = "symbolic lambda"
    else:
        params = ()
        lam_scalar = Scalar.constant(params, Fraction(lam))
        value_note = f"lambda = {Fraction(lam)}"
    one = Scalar.one(params)
    two = Scalar.constant(params, 2)
    m = FrameManifold.from_pairs(
        3,
        params,
        {
            (0, 1, 2): one + lam_scalar,
            (1, 2, 0): two,
            (0, 2, 1): -(one - lam_scalar),
        },
    )
    return ZooEntry(
        manifold=m,
        structure=_lambda_structure(m),
        label=label or "lambda",
        expected_kappa=one - lam_scalar * lam_scalar,
        notes=(value_note, _BRACKET_NOTE),
    )


def make_sasakian3() -> ZooEntry:
    """The lambda = 0 member: a 3-dimensional Sasakian instance (kappa = 1)."""
    return make_lambda_family(0, label="sasakian3")


def make_abelian3() -> ZooEntry:
    """All brackets zero, same (phi, xi, eta).

    Not a contact metric structure (d eta = 0 while g(X, phi Y) is not);
    shipped to demonstrate honest gating.  Its curvature vanishes, so the
    nullity equations force kappa = 0.
    """
    params: tuple[str, ...] = ()
    m = FrameManifold.from_pairs(3, params, {})
    return ZooEntry(
        manifold=m,
        structure=_lambda_structure(m),
        label="abelian3",
        expected_kappa=Scalar.zero(params),
        notes=("flat abelian frame; fails the contact condition by design",),
    )


ZOO_LABELS: tuple[str, ...] = ("lambda", "sasakian3")


def zoo_entry(label: str, lam: RationalLike | None = None) -> ZooEntry:
    """Resolve a CLI label; lam applies to the 'lambda' label only."""
    if label == "lambda":
        return make_lambda_family(lam)
    if label == "sasakian3":
        if lam is not None and Fraction(lam) != 0:
            raise ZooDomainError("sasakian3 is the lambda = 0 member; drop --lambda")
        return make_sasakian3()
    raise ZooDomainError(f"unknown zoo label {label!r}; known: {', '.join(ZOO_LABELS)}")


def _as_scalar(value: Scalar | RationalLike, params: tuple[str, ...]) -> Scalar:
    if isinstance(value, Scalar):
        if value.params != params:
            raise ZooDomainError(
                f"mixed parameter tuples {value.params} vs {params}"
            )
        return value
    return Scalar.constant(params, Fraction(value))


def dhomothetic_invariants(
    kappa: Scalar | RationalLike,
    mu: Scalar | RationalLike,
    a: Scalar | RationalLike,
    literal_c: bool = False,
) -> tuple[Scalar, Scalar]:
    """The deformed nullity pair (kappa_bar, mu_bar) under the rescaling a.

    kappa_bar = (kappa + a^2 - 1)/a.  mu_bar = (mu + 2a - 2)/a by default;
    literal_c=True substitutes c = a - 1 into the quoted numerator "mu + 2c - 2",
    giving (mu + 2a - 4)/a.  Division must be exact; symbolic a that does not
    divide the numerator raises.
    """
    params: tuple[str, ...] = ()
    for value in (kappa, mu, a):
        if isinstance(value, Scalar):
            params = value.params
            break
    kappa_s = _as_scalar(kappa, params)
    mu_s = _as_scalar(mu, params)
    a_s = _as_scalar(a, params)
    if a_s.is_zero():
        raise ZooDomainError("deformation constant a must be invertible")
    one = Scalar.one(params)
    two = Scalar.constant(params, 2)
    offset = Scalar.constant(params, 4) if literal_c else two
    kappa_bar = exact_div(kappa_s + a_s * a_s - one, a_s)
    mu_bar = exact_div(mu_s + two * a_s - offset, a_s)
    if kappa_bar is None or mu_bar is None:
        raise ZooDomainError(
            "deformation constant a does not divide the transformed numerator "
            "exactly; supply a rational a or a divisible symbolic one"
        )
    return kappa_bar, mu_bar


@dataclass(frozen=True)
class BoeckxInvariant:
    """I = (1 - mu/2)/sqrt(1 - kappa), exact when the square root is rational.

    is_exact=True: value holds the exact Fraction.  Otherwise value is None
    and the exact content is (square, sign) with square = I^2 and sign the
    sign of 1 - mu/2; approx is a decimal approximation in both cases, only
    trustworthy as an approximation when is_exact is False.
    """

    is_exact: bool
    value: Fraction | None
    square: Fraction
    sign: int
    approx: float


def boeckx_invariant(
    kappa: RationalLike, mu: RationalLike
) -> BoeckxInvariant:
    """The invariant (1 - mu/2)/sqrt(1 - kappa); requires kappa < 1."""
    kappa_f, mu_f = Fraction(kappa), Fraction(mu)
    if kappa_f >= 1:
        raise ZooDomainError(
            f"the invariant needs kappa < 1 (got kappa = {kappa_f}); "
            "kappa = 1 is the Sasakian boundary where it is undefined"
        )
    radicand = 1 - kappa_f
    numerator = 1 - mu_f / 2
    square = numerator * numerator / radicand
    sign = (numerator > 0) - (numerator < 0)
    if numerator == 0:
        return BoeckxInvariant(
            is_exact=True, value=Fraction(0), square=square, sign=0, approx=0.0
        )
    root_num, root_den = isqrt(radicand.numerator), isqrt(radicand.denominator)
    approx = float(numerator) / math.sqrt(float(radicand))
    if (
        root_num * root_num == radicand.numerator
        and root_den * root_den == radicand.denominator
    ):
        value = numerator / Fraction(root_num, root_den)
        return BoeckxInvariant(
            is_exact=True, value=value, square=square, sign=sign, approx=approx
        )
    return BoeckxInvariant(
        is_exact=False, value=None, square=square, sign=sign, approx=approx
    )


@dataclass(frozen=True)
class Example1Constants:
    """c = (sqrt(n) +/- 1)^2/(n - 1) and a = 1 + c; exact iff sqrt(n) is."""

    c: Fraction | float
    a: Fraction | float
    is_exact: bool


_SIGNS = ("plus", "minus")


def make_example1_constants(n: int, sign: str = "plus") -> Example1Constants:
    """The deformation constants for the N(1 - 1/n, 0) target; n >= 2."""
    if sign not in _SIGNS:
        raise ZooDomainError(f"sign must be one of {_SIGNS}, got {sign!r}")
    if not isinstance(n, int) or n < 1:
        raise ZooDomainError(f"n must be a positive integer, got {n!r}")
    if n == 1:
        raise ZooDomainError("n = 1 makes the denominator n - 1 vanish")
    offset = 1 if sign == "plus" else -1
    root = isqrt(n)
    if root * root == n:
        c = Fraction((root + offset) ** 2, n - 1)
        return Example1Constants(c=c, a=1 + c, is_exact=True)
    c_approx = (math.sqrt(n) + offset) ** 2 / (n - 1)
    return Example1Constants(c=c_approx, a=1 + c_approx, is_exact=False)


@dataclass(frozen=True)
class Example1Report:
    """The c-pipeline: constants, induced (kappa, mu), deformed pair, target.

    kappa = c(2 - c) and mu = -2c; the deformation by a = 1 + c targets
    kappa_bar = 1 - 1/n.  difference = kappa_bar - target is reported rather
    than asserted: the plus branch at n = 4 lands at kappa_bar = 3, not 3/4.
    """

    n: int
    sign: str
    c: Fraction | float
    a: Fraction | float
    kappa: Fraction | float
    mu: Fraction | float
    kappa_bar: Fraction | float
    mu_bar: Fraction | float
    target: Fraction
    difference: Fraction | float
    is_exact: bool


def example1_pipeline(
    n: int, sign: str = "plus", literal_c: bool = False
) -> Example1Report:
    """Run the constants through the deformation and compare with 1 - 1/n."""
    constants = make_example1_constants(n, sign)
    target = Fraction(n - 1, n)
    if constants.is_exact:
        c = constants.c
        a = constants.a
        kappa = c * (2 - c)
        mu = -2 * c
        kappa_bar_s, mu_bar_s = dhomothetic_invariants(
            kappa, mu, a, literal_c=literal_c
        )
        kappa_bar = kappa_bar_s.constant_value()
        mu_bar = mu_bar_s.constant_value()
    else:
        c = constants.c
        a = constants.a
        kappa = c * (2 - c)
        mu = -2 * c
        offset = 4.0 if literal_c else 2.0
        kappa_bar = (kappa + a * a - 1) / a
        mu_bar = (mu + 2 * a - offset) / a
    return Example1Report(
        n=n,
        sign=sign,
        c=c,
        a=a,
        kappa=kappa,
        mu=mu,
        kappa_bar=kappa_bar,
        mu_bar=mu_bar,
        target=target,
        difference=kappa_bar - target,
        is_exact=constants.is_exact,
    )
