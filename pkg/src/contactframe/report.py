"""Named verification checks and deterministic report serialization.

A report is an ordered list of checks.  Each check has one of three statuses:

- ``holds``          - the identity/property was verified exactly;
- ``fails``          - it was violated; a witness is mandatory;
- ``not_applicable`` - the check does not apply to this instance (wrong
  structure class, or an informational cross-check whose reference form
  disagrees with the computed value - the disagreement is then data, not
  an error).

Witnesses are plain JSON-ready dictionaries: indices are 1-based frame
indices, scalar values are rendered through the canonical expression
grammar, vectors through the frame-vector rendering ("-2/3*E2").

Serialization is deterministic: no timestamps, stable key order, check
order fixed by construction order.  Two runs over the same input must
produce byte-identical JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

HOLDS = "holds"
FAILS = "fails"
NOT_APPLICABLE = "not_applicable"

_STATUSES = (HOLDS, FAILS, NOT_APPLICABLE)


class ReportError(Exception):
    """Raised on malformed check construction (e.g. failure without witness)."""


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    witness: dict | None = None
    convention_notes: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.status not in _STATUSES:
            raise ReportError(f"unknown status {self.status!r} for check {self.name!r}")
        if self.status == FAILS and self.witness is None:
            raise ReportError(f"failing check {self.name!r} must carry a witness")

    def to_dict(self) -> dict:
        data: dict = {"name": self.name, "status": self.status}
        data["witness"] = self.witness
        data["convention_notes"] = list(self.convention_notes)
        return data


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)
    manifest_hash: str | None = None
    engine_version: str = "0.0.0"

    # -- construction --------------------------------------------------------

    def add(
        self,
        name: str,
        status: str,
        witness: dict | None = None,
        notes: tuple[str, ...] | list[str] = (),
    ) -> Check:
        check = Check(name=name, status=status, witness=witness, convention_notes=tuple(notes))
        self.checks.append(check)
        return check

    def holds(self, name: str, witness: dict | None = None, notes=()) -> Check:
        return self.add(name, HOLDS, witness, notes)

    def fails(self, name: str, witness: dict, notes=()) -> Check:
        return self.add(name, FAILS, witness, notes)

    def not_applicable(self, name: str, witness: dict | None = None, notes=()) -> Check:
        return self.add(name, NOT_APPLICABLE, witness, notes)

    def graded(self, name: str, ok: bool, witness: dict | None = None, notes=()) -> Check:
        """holds when ok, fails (with the witness) otherwise."""
        if ok:
            return self.holds(name, notes=notes)
        return self.fails(name, witness if witness is not None else {}, notes=notes)

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)

    # -- queries --------------------------------------------------------------

    @property
    def has_failures(self) -> bool:
        return any(c.status == FAILS for c in self.checks)

    def counts(self) -> dict[str, int]:
        out = {HOLDS: 0, FAILS: 0, NOT_APPLICABLE: 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    def by_name(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    # -- serialization ---------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "checks": [c.to_dict() for c in self.checks],
            "provenance": {
                "manifest_hash": self.manifest_hash,
                "engine_version": self.engine_version,
            },
        }


def emit(report: VerificationReport, format: str = "json") -> str:
    """Render a report deterministically as JSON or aligned text."""
    if format == "json":
        return json.dumps(report.to_dict(), sort_keys=True, indent=2) + "\n"
    if format == "text":
        return _emit_text(report)
    raise ValueError(f"unknown format {format!r}")


_TEXT_TAGS = {HOLDS: "[holds]", FAILS: "[FAILS]", NOT_APPLICABLE: "[ n/a ]"}


def _emit_text(report: VerificationReport) -> str:
    lines = ["verification report"]
    hash_text = report.manifest_hash if report.manifest_hash else "-"
    lines.append(f"engine {report.engine_version}  manifest {hash_text}")
    for check in report.checks:
        line = f"{_TEXT_TAGS[check.status]} {check.name}"
        if check.witness:
            line += f"  witness: {_render_witness(check.witness)}"
        lines.append(line)
        for note in check.convention_notes:
            lines.append(f"        note: {note}")
    counts = report.counts()
    lines.append(
        f"summary: {counts[HOLDS]} holds, {counts[FAILS]} fails, "
        f"{counts[NOT_APPLICABLE]} not applicable"
    )
    return "\n".join(lines) + "\n"


def _render_witness(witness: dict) -> str:
    parts = []
    for key in sorted(witness):
        value = witness[key]
        if isinstance(value, (list, tuple)):
            rendered = "(" + ",".join(str(v) for v in value) + ")"
        else:
            rendered = str(value)
        parts.append(f"{key}={rendered}")
    return " ".join(parts)
