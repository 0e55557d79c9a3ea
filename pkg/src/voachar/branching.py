"""Branching functions B_lambda(q) via two independent formulas, plus the
so(2n+1) denominator identity that links them.

The product form multiplies P(q)^n against (1 - q^{(lam+rho0, alpha)}) over
the n^2 positive so(2n+1) roots; the Weyl-sum form is P(q)^n times an
alternating sum over signed permutations.  Their exact equality is the
artifact's restatement of the derivation chain and is enforced by tests.
"""

from __future__ import annotations

from .qseries import TruncSeries, partition_power
from .rootsys import (
    DEFAULT_WEYL_CAP,
    Weight,
    apply_weyl,
    build_root_data,
    conformal_h_int,
    inner,
    weyl_elements,
)
from .weylchar import LaurentPoly, alternating_sum


def branching_product(lam: Weight, n: int, trunc: int) -> TruncSeries:
    """q^{h(lam)} P(q)^n prod_{alpha in Phi+} (1 - q^{(lam+rho0, alpha)})."""
    if lam.n != n:
        raise ValueError("rank mismatch")
    if not lam.is_dominant():
        raise ValueError(f"weight {lam.coords2} is not dominant")
    rd = build_root_data(n)
    shifted = lam + rd.rho0
    out = partition_power(n, trunc)
    for alpha in rd.phi_plus:
        ex = inner(shifted, alpha)
        if ex.denominator != 1 or ex <= 0:
            raise AssertionError("pairing (lam+rho0, alpha) must be a positive integer")
        out = out * (TruncSeries.one(trunc) - TruncSeries.monomial(ex.numerator, trunc))
    return out.shift(conformal_h_int(lam))


def branching_weylsum(
    lam: Weight, n: int, trunc: int, cap: int = DEFAULT_WEYL_CAP
) -> TruncSeries:
    """P(q)^n sum_w (-1)^{l(w)} q^{(w(lam+rho0)-rho, w(lam+rho0)-rho)/2 - (rho1,rho1)/2}."""
    if lam.n != n:
        raise ValueError("rank mismatch")
    if not lam.is_dominant():
        raise ValueError(f"weight {lam.coords2} is not dominant")
    rd = build_root_data(n)
    shifted = lam + rd.rho0
    half_rho1 = inner(rd.rho1, rd.rho1) / 2
    alt = TruncSeries.zero(trunc)
    for w in weyl_elements(n, cap):
        v = apply_weyl(w, shifted) - rd.rho
        ex = inner(v, v) / 2 - half_rho1
        if ex.denominator != 1 or ex < 0:
            raise AssertionError(
                f"exponent {ex} is not a non-negative integer; inner-product "
                "convention is broken"
            )
        alt = alt + TruncSeries.monomial(ex.numerator, trunc, w.parity)
    return partition_power(n, trunc) * alt


def denominator_identity_check(
    n: int, cap: int = DEFAULT_WEYL_CAP
) -> tuple[LaurentPoly, LaurentPoly]:
    """Return (lhs, rhs) of e^rho prod (1 - e^{-alpha}) = alt sum of e^{w(rho)}
    over the positive roots / Weyl group of so(2n+1); asserts equality."""
    rd = build_root_data(n)
    lhs = LaurentPoly.monomial(rd.rho)
    one = LaurentPoly.one(n)
    for alpha in rd.phi_plus:
        lhs = lhs * (one - LaurentPoly.monomial(-alpha))
    rhs = alternating_sum(rd.rho, cap)
    if lhs != rhs:
        raise AssertionError(f"denominator identity failed at rank {n}")
    return lhs, rhs
