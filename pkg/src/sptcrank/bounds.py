"""Analytic threshold f(m) and the even-n lower bound on X^(m)(n).

All real arithmetic here is 64-bit binary floating point.  Strict
inequalities are asserted through a near-tie policy: a margin within
1e-9 (relative) of zero is classified as a near-tie and treated as a
failure, never a pass.  The derived bounds have macroscopic margins, so a
near-tie signals a transcription bug rather than a rounding artifact.

"log 2" in the threshold is the natural logarithm: the constant originates
from the hyperbola-area integral of dx/x, and the quadratic-root
derivation of f(m) inherits the same base.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

LN2 = math.log(2.0)

NEAR_TIE_SLACK = 1e-9


class StrictOutcome(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    NEAR_TIE = "near-tie"


def classify_strict(smaller: float, larger: float, slack: float = NEAR_TIE_SLACK) -> StrictOutcome:
    """Classify the strict inequality smaller < larger under relative slack."""
    scale = max(1.0, abs(smaller), abs(larger))
    margin = larger - smaller
    if margin > slack * scale:
        return StrictOutcome.PASS
    if margin < -slack * scale:
        return StrictOutcome.FAIL
    return StrictOutcome.NEAR_TIE


def f_of_m(m: int) -> float:
    """Threshold beyond which the even-n lower bound on X^(m) is nonnegative:
    f(m) = (2*(6 + sqrt(36 + (m+2)*ln 2)) / ln 2)^2."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return (2.0 * (6.0 + math.sqrt(36.0 + (m + 2) * LN2)) / LN2) ** 2


@dataclass(frozen=True)
class ThresholdProfile:
    m: int
    f_value: float
    twenty_m: int
    f_exceeds_20m: bool


def threshold_profile(m: int) -> ThresholdProfile:
    """f(m) against 20m, with the comparison under the near-tie policy."""
    fv = f_of_m(m)
    outcome = classify_strict(20.0 * m, fv)
    if outcome is StrictOutcome.NEAR_TIE:
        raise ArithmeticError(f"near-tie comparing f({m}) with 20*{m}")
    return ThresholdProfile(m, fv, 20 * m, outcome is StrictOutcome.PASS)


def theorem2_lower_bound(m: int, n: int) -> float:
    """(ln2/4)*(n+1) - 6*sqrt(n+1) - m - 2; derived only for even n >= 2."""
    if n < 2 or n % 2 != 0:
        raise ValueError("the lower bound is derived only for even n >= 2")
    if m < 0:
        raise ValueError("m must be non-negative")
    return LN2 / 4 * (n + 1) - 6 * math.sqrt(n + 1) - m - 2


def m2_minus_m1_bound_check(m: int, n: int, slack: float = NEAR_TIE_SLACK) -> bool:
    """Re-verify the combination step: the Omega'/Omega bound difference must
    dominate the even-n lower bound on X^(m)(n)."""
    from . import lattice

    lhs = lattice.m2_lower_bound(m, n) - lattice.m1_upper_bound(m, n)
    rhs = theorem2_lower_bound(m, n)
    scale = max(1.0, abs(lhs), abs(rhs))
    return lhs >= rhs - slack * scale
