"""Orthonormal frames with constant structure constants.

A homogeneous manifold is presented here by an orthonormal frame
``E_1, ..., E_dim`` whose Lie brackets have constant (parameter-polynomial)
coefficients:

    [E_i, E_j] = sum_k c[i][j][k] * E_k .

Everything downstream (connections, curvature, the verification suites)
quantifies over frame basis vectors, which suffices because every checked
identity is pointwise multilinear.  Vector fields are therefore restricted
to constant frame coefficients, and the metric is the identity on the frame.

Indices are 0-based throughout the code; reports and manifests use 1-based
indices at the boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .report import VerificationReport
from .scalars import RationalLike, Scalar


class FrameError(Exception):
    """Raised on malformed frame data (shape problems, bad dimensions)."""


@dataclass(frozen=True)
class FrameVector:
    """A constant-coefficient vector field over the frame."""

    components: tuple[Scalar, ...]

    def __post_init__(self) -> None:
        if not self.components:
            raise FrameError("a frame vector needs at least one component")

    @property
    def dim(self) -> int:
        return len(self.components)

    @property
    def params(self) -> tuple[str, ...]:
        return self.components[0].params

    def __add__(self, other: "FrameVector") -> "FrameVector":
        return FrameVector(tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other: "FrameVector") -> "FrameVector":
        return FrameVector(tuple(a - b for a, b in zip(self.components, other.components)))

    def __neg__(self) -> "FrameVector":
        return FrameVector(tuple(-a for a in self.components))

    def scale(self, factor: Scalar | RationalLike) -> "FrameVector":
        if isinstance(factor, Scalar):
            return FrameVector(tuple(factor * a for a in self.components))
        return FrameVector(tuple(a.scale(factor) for a in self.components))

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.components)

    def __str__(self) -> str:
        return render_vector(self.components)


def render_vector(components: Sequence[Scalar]) -> str:
    """Render frame-vector components as e.g. ``-2/3*E2`` or ``(lambda+1)*E3``."""
    pieces: list[str] = []
    for idx, coeff in enumerate(components):
        if coeff.is_zero():
            continue
        text = str(coeff)
        label = f"E{idx + 1}"
        if text == "1":
            piece = label
        elif text == "-1":
            piece = "-" + label
        elif len(coeff.terms) > 1:
            piece = f"({text})*{label}"
        else:
            piece = f"{text}*{label}"
        pieces.append(piece)
    if not pieces:
        return "0"
    out = pieces[0]
    for piece in pieces[1:]:
        out += piece if piece.startswith("-") else "+" + piece
    return out


@dataclass(frozen=True)
class Endomorphism:
    """A (1,1)-tensor as a frame matrix; column j holds the image of E_j."""

    matrix: tuple[tuple[Scalar, ...], ...]  # matrix[i][j] = component i of A(E_j)

    @property
    def dim(self) -> int:
        return len(self.matrix)

    @staticmethod
    def from_columns(columns: Sequence[FrameVector]) -> "Endomorphism":
        dim = len(columns)
        return Endomorphism(
            tuple(tuple(columns[j].components[i] for j in range(dim)) for i in range(dim))
        )

    @staticmethod
    def zero(dim: int, params: tuple[str, ...]) -> "Endomorphism":
        z = Scalar.zero(params)
        return Endomorphism(tuple(tuple(z for _ in range(dim)) for _ in range(dim)))

    @staticmethod
    def identity(dim: int, params: tuple[str, ...]) -> "Endomorphism":
        z, o = Scalar.zero(params), Scalar.one(params)
        return Endomorphism(
            tuple(tuple(o if i == j else z for j in range(dim)) for i in range(dim))
        )

    def apply(self, x: FrameVector) -> FrameVector:
        return FrameVector(
            tuple(
                sum(
                    (row[j] * x.components[j] for j in range(self.dim)),
                    Scalar.zero(x.params),
                )
                for row in self.matrix
            )
        )

    def column(self, j: int) -> FrameVector:
        return FrameVector(tuple(self.matrix[i][j] for i in range(self.dim)))

    def compose(self, other: "Endomorphism") -> "Endomorphism":
        """Matrix product self @ other, i.e. X -> self(other(X))."""
        return Endomorphism.from_columns(
            [self.apply(other.column(j)) for j in range(self.dim)]
        )

    def __add__(self, other: "Endomorphism") -> "Endomorphism":
        return Endomorphism(
            tuple(
                tuple(a + b for a, b in zip(row_a, row_b))
                for row_a, row_b in zip(self.matrix, other.matrix)
            )
        )

    def __sub__(self, other: "Endomorphism") -> "Endomorphism":
        return Endomorphism(
            tuple(
                tuple(a - b for a, b in zip(row_a, row_b))
                for row_a, row_b in zip(self.matrix, other.matrix)
            )
        )

    def __neg__(self) -> "Endomorphism":
        return Endomorphism(tuple(tuple(-a for a in row) for row in self.matrix))

    def scale(self, factor: Scalar | RationalLike) -> "Endomorphism":
        if isinstance(factor, Scalar):
            return Endomorphism(tuple(tuple(factor * a for a in row) for row in self.matrix))
        return Endomorphism(tuple(tuple(a.scale(factor) for a in row) for row in self.matrix))

    def trace(self) -> Scalar:
        params = self.matrix[0][0].params
        return sum((self.matrix[i][i] for i in range(self.dim)), Scalar.zero(params))

    def is_zero(self) -> bool:
        return all(a.is_zero() for row in self.matrix for a in row)

    def is_symmetric(self) -> bool:
        return all(
            (self.matrix[i][j] - self.matrix[j][i]).is_zero()
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
        )


@dataclass(frozen=True)
class FrameManifold:
    """Odd-dimensional manifold presented by frame structure constants."""

    dim: int
    params: tuple[str, ...]
    c: tuple[tuple[tuple[Scalar, ...], ...], ...]  # c[i][j][k]

    def __post_init__(self) -> None:
        if self.dim < 1 or self.dim % 2 == 0:
            raise FrameError(f"dimension must be odd and positive, got {self.dim}")
        if len(self.c) != self.dim or any(
            len(plane) != self.dim or any(len(row) != self.dim for row in plane)
            for plane in self.c
        ):
            raise FrameError("structure-constant array must be dim x dim x dim")

    @property
    def n(self) -> int:
        """The n of dim = 2n + 1."""
        return (self.dim - 1) // 2

    @staticmethod
    def from_pairs(
        dim: int,
        params: tuple[str, ...],
        pairs: Mapping[tuple[int, int, int], Scalar],
    ) -> "FrameManifold":
        """Build from sparse (i, j, k) -> coefficient with i < j (0-based);
        the i > j half is filled in by antisymmetry."""
        zero = Scalar.zero(params)
        table = [[[zero for _ in range(dim)] for _ in range(dim)] for _ in range(dim)]
        for (i, j, k), coeff in pairs.items():
            if not (0 <= i < j < dim and 0 <= k < dim):
                raise FrameError(f"structure index ({i},{j},{k}) out of range for i<j<dim")
            table[i][j][k] = table[i][j][k] + coeff
            table[j][i][k] = table[j][i][k] - coeff
        frozen = tuple(tuple(tuple(row) for row in plane) for plane in table)
        return FrameManifold(dim=dim, params=params, c=frozen)

    # -- primitives -----------------------------------------------------------

    def zero_scalar(self) -> Scalar:
        return Scalar.zero(self.params)

    def one_scalar(self) -> Scalar:
        return Scalar.one(self.params)

    def constant(self, value: RationalLike) -> Scalar:
        return Scalar.constant(self.params, value)

    def zero_vector(self) -> FrameVector:
        return FrameVector(tuple(self.zero_scalar() for _ in range(self.dim)))

    def basis(self, i: int) -> FrameVector:
        return FrameVector(
            tuple(
                self.one_scalar() if k == i else self.zero_scalar()
                for k in range(self.dim)
            )
        )

    def vector(self, components: Iterable[RationalLike | Scalar]) -> FrameVector:
        comps = []
        for value in components:
            comps.append(value if isinstance(value, Scalar) else self.constant(value))
        if len(comps) != self.dim:
            raise FrameError(f"expected {self.dim} components, got {len(comps)}")
        return FrameVector(tuple(comps))

    def bracket_basis(self, i: int, j: int) -> FrameVector:
        return FrameVector(tuple(self.c[i][j][k] for k in range(self.dim)))

    def bracket(self, x: FrameVector, y: FrameVector) -> FrameVector:
        """Bilinear antisymmetric extension of the structure constants."""
        out = [self.zero_scalar() for _ in range(self.dim)]
        for i in range(self.dim):
            xi = x.components[i]
            if xi.is_zero():
                continue
            for j in range(self.dim):
                yj = y.components[j]
                if yj.is_zero():
                    continue
                coeff = xi * yj
                for k in range(self.dim):
                    cij = self.c[i][j][k]
                    if not cij.is_zero():
                        out[k] = out[k] + coeff * cij
        return FrameVector(tuple(out))

    def inner(self, x: FrameVector, y: FrameVector) -> Scalar:
        """The orthonormal-frame metric: g(X, Y) = sum_i x_i y_i."""
        return sum(
            (a * b for a, b in zip(x.components, y.components)),
            self.zero_scalar(),
        )

    def lie_derive_endo(self, xi: FrameVector, a: Endomorphism) -> Endomorphism:
        """(L_xi A)(X) = [xi, A X] - A [xi, X], columnwise on the frame."""
        columns = []
        for j in range(self.dim):
            ej = self.basis(j)
            columns.append(self.bracket(xi, a.apply(ej)) - a.apply(self.bracket(xi, ej)))
        return Endomorphism.from_columns(columns)

    # -- well-posedness --------------------------------------------------------

    def validate_frame(self) -> VerificationReport:
        """Check antisymmetry of the structure constants and the Jacobi identity."""
        report = VerificationReport()

        witness = None
        for i in range(self.dim):
            for j in range(self.dim):
                for k in range(self.dim):
                    residual = self.c[i][j][k] + self.c[j][i][k]
                    if not residual.is_zero():
                        witness = {
                            "indices": [i + 1, j + 1, k + 1],
                            "residual": str(residual),
                        }
                        break
                if witness:
                    break
            if witness:
                break
        report.graded("frame.bracket_antisymmetry", witness is None, witness)

        witness = None
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                for k in range(j + 1, self.dim):
                    ei, ej, ek = self.basis(i), self.basis(j), self.basis(k)
                    cyclic = (
                        self.bracket(self.bracket(ei, ej), ek)
                        + self.bracket(self.bracket(ej, ek), ei)
                        + self.bracket(self.bracket(ek, ei), ej)
                    )
                    for l in range(self.dim):
                        if not cyclic.components[l].is_zero():
                            witness = {
                                "indices": [i + 1, j + 1, k + 1, l + 1],
                                "residual": str(cyclic.components[l]),
                            }
                            break
                    if witness:
                        break
                if witness:
                    break
            if witness:
                break
        report.graded("frame.jacobi_identity", witness is None, witness)

        return report


def outer_product(x: FrameVector, y: FrameVector) -> Endomorphism:
    """The endomorphism Z -> g(y, Z) x, as the frame matrix x_i * y_j."""
    return Endomorphism(
        tuple(
            tuple(x.components[i] * y.components[j] for j in range(x.dim))
            for i in range(x.dim)
        )
    )
