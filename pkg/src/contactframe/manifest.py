"""Manifest ingestion and emission.

A manifest is a JSON document describing a frame manifold and its contact
structure:

    {
      "dimension": 3,
      "parameters": ["lambda"],
      "structure_constants": [
        {"i": 1, "j": 2, "k": 3, "coeff": "1+lambda"},
        {"i": 1, "j": 3, "k": 2, "coeff": "-1+lambda"},
        {"i": 2, "j": 3, "k": 1, "coeff": "2"}
      ],
      "contact": {
        "xi": 1,
        "eta": ["1", "0", "0"],
        "phi": [["0", "0", "0"], ["0", "0", "-1"], ["0", "1", "0"]]
      }
    }

Conventions:

- indices are 1-based; structure constants are sparse with i < j (the k-th
  coefficient of [E_i, E_j]); omitted triples are zero;
- every coefficient is an expression string in the exact-scalar grammar
  over the declared parameters;
- "xi" is either a single 1-based frame index or a component list;
  "eta" is a component list; "phi" is the dim x dim matrix whose entry
  [r][c] is the r-th component of phi(E_{c+1}) (columns are images);
- the dimension must be odd (the structures modeled here do not exist on
  even-dimensional frames).

Loading either returns the constructed objects or raises ManifestError
carrying every problem found, each tagged with the JSON path it refers to
(e.g. "contact.phi" or "structure_constants[2].coeff").  dump_manifest is
the inverse on canonical documents, and manifest_hash fingerprints the
canonical compact serialization.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Any

from .contact import AlmostContactData
from .frames import Endomorphism, FrameManifold, FrameVector
from .scalars import Scalar, ScalarError, parse_scalar


@dataclass(frozen=True)
class ManifestIssue:
    path: str
    message: str

    def __str__(self) -> str:
        return f"{self.path}: {self.message}" if self.path else self.message


class ManifestError(ValueError):
    """One or more problems in a manifest document, each with its path."""

    def __init__(self, issues: list[ManifestIssue]):
        self.issues = tuple(issues)
        super().__init__("; ".join(str(issue) for issue in self.issues))


def _parse_component_list(
    raw: Any,
    dim: int,
    params: tuple[str, ...],
    path: str,
    issues: list[ManifestIssue],
) -> FrameVector | None:
    if not isinstance(raw, list) or len(raw) != dim:
        issues.append(ManifestIssue(path, f"expected a list of {dim} expressions"))
        return None
    components = []
    ok = True
    for idx, entry in enumerate(raw):
        if not isinstance(entry, str):
            issues.append(ManifestIssue(f"{path}[{idx}]", "expected an expression string"))
            ok = False
            continue
        try:
            components.append(parse_scalar(entry, params))
        except ScalarError as exc:
            issues.append(ManifestIssue(f"{path}[{idx}]", str(exc)))
            ok = False
    return FrameVector(tuple(components)) if ok else None


def load_manifest(document: Any) -> tuple[FrameManifold, AlmostContactData]:
    """Validate a parsed JSON document and build the frame objects."""
    issues: list[ManifestIssue] = []
    if not isinstance(document, dict):
        raise ManifestError([ManifestIssue("", "manifest must be a JSON object")])

    known = {"dimension", "parameters", "structure_constants", "contact"}
    for key in document:
        if key not in known:
            issues.append(ManifestIssue(key, "unknown field"))

    dim = document.get("dimension")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        issues.append(ManifestIssue("dimension", "expected a positive integer"))
        raise ManifestError(issues)
    if dim % 2 == 0:
        issues.append(
            ManifestIssue("dimension", f"must be odd, got {dim}")
        )

    raw_params = document.get("parameters", [])
    params: tuple[str, ...] = ()
    if not isinstance(raw_params, list) or not all(
        isinstance(p, str) for p in raw_params
    ):
        issues.append(ManifestIssue("parameters", "expected a list of names"))
    else:
        seen: set[str] = set()
        for idx, p in enumerate(raw_params):
            if not p.isidentifier():
                issues.append(
                    ManifestIssue(f"parameters[{idx}]", f"invalid name {p!r}")
                )
            elif p in seen:
                issues.append(ManifestIssue(f"parameters[{idx}]", f"duplicate {p!r}"))
            seen.add(p)
        params = tuple(raw_params)

    pairs: dict[tuple[int, int, int], Scalar] = {}
    raw_constants = document.get("structure_constants", [])
    if not isinstance(raw_constants, list):
        issues.append(ManifestIssue("structure_constants", "expected a list"))
    else:
        for idx, entry in enumerate(raw_constants):
            path = f"structure_constants[{idx}]"
            if not isinstance(entry, dict):
                issues.append(ManifestIssue(path, "expected an object"))
                continue
            triple = []
            bad = False
            for field in ("i", "j", "k"):
                value = entry.get(field)
                if not isinstance(value, int) or isinstance(value, bool):
                    issues.append(ManifestIssue(f"{path}.{field}", "expected an integer"))
                    bad = True
                elif not 1 <= value <= dim:
                    issues.append(
                        ManifestIssue(
                            f"{path}.{field}", f"index {value} outside 1..{dim}"
                        )
                    )
                    bad = True
                else:
                    triple.append(value)
            extra = set(entry) - {"i", "j", "k", "coeff"}
            for key in sorted(extra):
                issues.append(ManifestIssue(f"{path}.{key}", "unknown field"))
            if bad:
                continue
            i, j, k = triple
            if not i < j:
                issues.append(ManifestIssue(f"{path}.i", f"require i < j, got ({i},{j})"))
                continue
            coeff = entry.get("coeff")
            if not isinstance(coeff, str):
                issues.append(ManifestIssue(f"{path}.coeff", "expected an expression string"))
                continue
            try:
                scalar = parse_scalar(coeff, params)
            except ScalarError as exc:
                issues.append(ManifestIssue(f"{path}.coeff", str(exc)))
                continue
            key0 = (i - 1, j - 1, k - 1)
            if key0 in pairs:
                issues.append(
                    ManifestIssue(path, f"duplicate triple (i,j,k)=({i},{j},{k})")
                )
                continue
            pairs[key0] = scalar

    contact = document.get("contact")
    xi = eta = None
    phi = None
    if not isinstance(contact, dict):
        issues.append(ManifestIssue("contact", "expected an object with xi, eta, phi"))
    else:
        extra = set(contact) - {"xi", "eta", "phi"}
        for key in sorted(extra):
            issues.append(ManifestIssue(f"contact.{key}", "unknown field"))

        raw_xi = contact.get("xi")
        if raw_xi is None:
            issues.append(ManifestIssue("contact.xi", "missing"))
        elif isinstance(raw_xi, int) and not isinstance(raw_xi, bool):
            if 1 <= raw_xi <= dim:
                components = tuple(
                    Scalar.one(params) if idx == raw_xi - 1 else Scalar.zero(params)
                    for idx in range(dim)
                )
                xi = FrameVector(components)
            else:
                issues.append(
                    ManifestIssue("contact.xi", f"index {raw_xi} outside 1..{dim}")
                )
        else:
            xi = _parse_component_list(raw_xi, dim, params, "contact.xi", issues)

        raw_eta = contact.get("eta")
        if raw_eta is None:
            issues.append(ManifestIssue("contact.eta", "missing"))
        else:
            eta = _parse_component_list(raw_eta, dim, params, "contact.eta", issues)

        raw_phi = contact.get("phi")
        if raw_phi is None:
            issues.append(ManifestIssue("contact.phi", "missing"))
        elif not isinstance(raw_phi, list) or len(raw_phi) != dim:
            issues.append(
                ManifestIssue("contact.phi", f"expected a {dim}x{dim} expression matrix")
            )
        else:
            rows = []
            ok = True
            for r, raw_row in enumerate(raw_phi):
                if not isinstance(raw_row, list) or len(raw_row) != dim:
                    issues.append(
                        ManifestIssue(
                            f"contact.phi[{r}]", f"expected a row of {dim} expressions"
                        )
                    )
                    ok = False
                    continue
                row = []
                for c, cell in enumerate(raw_row):
                    if not isinstance(cell, str):
                        issues.append(
                            ManifestIssue(
                                f"contact.phi[{r}][{c}]", "expected an expression string"
                            )
                        )
                        ok = False
                        continue
                    try:
                        row.append(parse_scalar(cell, params))
                    except ScalarError as exc:
                        issues.append(ManifestIssue(f"contact.phi[{r}][{c}]", str(exc)))
                        ok = False
                rows.append(tuple(row))
            if ok:
                phi = Endomorphism(tuple(rows))

    if issues:
        raise ManifestError(issues)

    manifold = FrameManifold.from_pairs(dim, params, pairs)
    structure = AlmostContactData(phi=phi, xi=xi, eta=eta)
    return manifold, structure


def load_manifest_file(path: str) -> tuple[FrameManifold, AlmostContactData]:
    """Read and parse a JSON manifest file, then load it."""
    try:
        with open(path, encoding="utf-8") as handle:
            document = json.load(handle)
    except OSError as exc:
        raise ManifestError([ManifestIssue("", f"cannot read {path}: {exc}")]) from exc
    except json.JSONDecodeError as exc:
        raise ManifestError([ManifestIssue("", f"invalid JSON: {exc}")]) from exc
    return load_manifest(document)


def dump_manifest(m: FrameManifold, s: AlmostContactData) -> dict:
    """The canonical document for these objects (component-list xi, sorted keys)."""
    constants = []
    for i in range(m.dim):
        for j in range(i + 1, m.dim):
            for k in range(m.dim):
                coeff = m.c[i][j][k]
                if not coeff.is_zero():
                    constants.append(
                        {"i": i + 1, "j": j + 1, "k": k + 1, "coeff": str(coeff)}
                    )
    return {
        "dimension": m.dim,
        "parameters": list(m.params),
        "structure_constants": constants,
        "contact": {
            "xi": [str(c) for c in s.xi.components],
            "eta": [str(c) for c in s.eta.components],
            "phi": [
                [str(s.phi.matrix[r][c]) for c in range(m.dim)]
                for r in range(m.dim)
            ],
        },
    }


def manifest_hash(document: Any) -> str:
    """SHA-256 of the canonical compact JSON serialization."""
    canonical = json.dumps(document, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()
