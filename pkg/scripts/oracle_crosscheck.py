#!/usr/bin/env python3
"""Cross-check the exact engine against the independent sympy recomputation.

Rebuilds every core tensor of the one-parameter family twice — once with
this package's exact polynomial arithmetic, once with sympy from first
principles (tests/sympy_oracle.py) — and compares component by component:
Levi-Civita and torsionful connection tables, both curvature tensors, both
Ricci forms, h, and the concircular tensor.  Any mismatch is printed and the
script exits nonzero.  Requires sympy (a test extra, not a runtime
dependency).
"""

from __future__ import annotations

import os
import sys
from fractions import Fraction

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "tests"))

import sympy as sp

import sympy_oracle as oracle
from contactframe import (
    build_gtw_package,
    compute_h,
    concircular,
    levi_civita,
    make_lambda_family,
    ricci,
    riemann,
)

# the oracle spells the family's parameter "lam"
_SYMBOLS = {"lambda": oracle.lam}


def to_sympy(scalar) -> sp.Expr:
    """Exact Scalar -> sympy expression over the oracle's symbols."""
    expr = sp.Integer(0)
    for mono, coeff in scalar.terms:
        term = sp.Rational(coeff.numerator, coeff.denominator)
        for name, power in zip(scalar.params, mono):
            if power:
                term *= _SYMBOLS.get(name, sp.symbols(name)) ** power
        expr += term
    return expr


def main() -> int:
    entry = make_lambda_family()
    m, s = entry.manifold, entry.structure
    dim = m.dim

    lc = levi_civita(m)
    h = compute_h(m, s)
    r = riemann(m, lc)
    s_form = ricci(m, r)
    pkg = build_gtw_package(m, s, lc, h)
    z = concircular(m, pkg.curv)

    d = oracle.build_all()
    mismatches = 0

    def compare(label: str, engine_scalar, oracle_expr) -> None:
        nonlocal mismatches
        delta = sp.simplify(to_sympy(engine_scalar) - oracle_expr)
        if delta != 0:
            mismatches += 1
            print(f"MISMATCH {label}: engine - oracle = {delta}")

    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                compare(f"lc_gamma[{i}][{j}][{k}]", lc.gamma[i][j][k], d["gamma"][i][j][k])
                compare(f"gtw_gamma[{i}][{j}][{k}]", pkg.conn.gamma[i][j][k], d["gt"][i][j][k])

    for i in range(dim):
        for j in range(dim):
            compare(f"h[{i}][{j}]", h.matrix[i][j], d["h"][i, j])
            compare(f"ricci[{i}][{j}]", s_form.components[i][j], d["s"][i, j])
            compare(f"gtw_ricci[{i}][{j}]", pkg.ricci.components[i][j], d["s_gt"][i, j])

    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                for l in range(dim):
                    compare(
                        f"riemann[{i}][{j}][{k}][{l}]",
                        r.components[i][j][k][l],
                        d["r"][i][j][k][l],
                    )
                    compare(
                        f"gtw_riemann[{i}][{j}][{k}][{l}]",
                        pkg.curv.components[i][j][k][l],
                        d["r_gt"][i][j][k][l],
                    )
                    compare(
                        f"concircular[{i}][{j}][{k}][{l}]",
                        z.components[i][j][k][l],
                        d["z"][i][j][k][l],
                    )

    compare("K", z.K, d["k_const"])

    total = 2 * dim**3 + 3 * dim**2 + 3 * dim**4 + 1
    if mismatches:
        print(f"{mismatches} of {total} compared components disagree")
        return 1
    print(f"all {total} compared components agree exactly")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
