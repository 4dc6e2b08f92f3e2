"""Shared fixtures: the one-parameter family and its derived tensors.

The symbolic builds are the expensive ones, so they are session-scoped;
every golden-value test reads from the same instances.
"""

from __future__ import annotations

import pytest

from contactframe import (
    build_gtw_package,
    compute_h,
    concircular,
    detect_kappa,
    levi_civita,
    make_lambda_family,
    ricci,
    riemann,
)


class FamilyBundle:
    """Everything derived from one family member, built once."""

    def __init__(self, lam):
        entry = make_lambda_family(lam)
        self.entry = entry
        self.m = entry.manifold
        self.s = entry.structure
        self.lc = levi_civita(self.m)
        self.h = compute_h(self.m, self.s)
        self.r = riemann(self.m, self.lc)
        self.ricci = ricci(self.m, self.r)
        self.kappa = detect_kappa(self.m, self.s, self.r)
        self.pkg = build_gtw_package(self.m, self.s, self.lc, self.h)
        self.z = concircular(self.m, self.pkg.curv)


@pytest.fixture(scope="session")
def fam():
    """The family with the parameter kept symbolic."""
    return FamilyBundle(None)


@pytest.fixture(scope="session")
def fam0():
    """The Sasakian member (parameter 0)."""
    return FamilyBundle(0)


ACCEPTANCE_LINES: list[str] = []
"""Verdict lines appended by the acceptance gate, one per criterion."""


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
