"""Double-precision ground truth and derivation checks.

Everything here is plain float math: the sigmoid/tanh reference the fixed-point
pipeline is measured against, the convergence-range and gain-compensation
constants, and the SRT selection-interval overlap checks that justify the
radix-4 digit thresholds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class ConvergenceSpec:
    """One micro-rotation schedule: radix, iteration span, max digit magnitude."""

    radix: int
    j_start: int
    j_end: int
    d_max: int

    def __post_init__(self):
        if self.radix not in (2, 4):
            raise ValueError(f"radix must be 2 or 4, got {self.radix}")
        if self.j_start > self.j_end:
            raise ValueError("j_start must be <= j_end")
        if self.d_max not in (1, 2):
            raise ValueError(f"d_max must be 1 or 2, got {self.d_max}")


@dataclass(frozen=True)
class SrtBounds:
    """Admissible interval [L, U] of the scaled residual for one digit choice."""

    j: int
    sigma: int
    lower: float
    upper: float


def sigmoid_ref(x: float) -> float:
    """1 / (1 + e^-x), evaluated without overflow for large |x|."""
    if x >= 0:
        return 1.0 / (1.0 + math.exp(-x))
    e = math.exp(x)
    return e / (1.0 + e)


def tanh_identity_check(x: float) -> float:
    """Sigmoid via the tanh identity: (1 + tanh(x/2)) / 2."""
    return 0.5 * (1.0 + math.tanh(0.5 * x))


def elementary_angle(radix: int, j: int, d: int) -> float:
    """atanh(d * radix^-j), the rotation angle applied at iteration j."""
    t = d * float(radix) ** (-j)
    if abs(t) >= 1.0:
        raise ValueError(f"atanh argument {t} outside (-1, 1)")
    return math.atanh(t)


def convergence_range(spec: ConvergenceSpec) -> float:
    """Largest |z0| the schedule can rotate to zero (sum of max step angles)."""
    return math.fsum(
        elementary_angle(spec.radix, j, spec.d_max)
        for j in range(spec.j_start, spec.j_end + 1)
    )


def scale_factor_kh(j_start: int, j_end: int) -> float:
    """Accumulated radix-2 hyperbolic gain: prod of cosh(atanh(2^-j)).

    Each micro-rotation step attenuates the (x, y) vector by
    sqrt(1 - 2^-2j) = 1/cosh(atanh(2^-j)); initializing x0 with this product
    makes the net gain across the schedule exactly one.
    """
    if j_start < 1:
        raise ValueError("j_start must be >= 1")
    k = 1.0
    for j in range(j_start, j_end + 1):
        k *= 1.0 / math.sqrt(1.0 - 2.0 ** (-2 * j))
    return k


def srt_interval(j: int, sigma: int) -> SrtBounds:
    """SRT selection interval for digit sigma at radix-4 iteration j.

    P[s] = 4^j * atanh(s * 4^-j); the scaled residual must lie in
    [P[sigma] - (2/3) P[1], P[sigma] + (2/3) P[1]] for sigma to be a
    valid digit choice.
    """
    if j < 1:
        raise ValueError("j must be >= 1")
    if abs(sigma) > 2:
        raise ValueError(f"|sigma| must be <= 2, got {sigma}")
    p1 = 4.0**j * elementary_angle(4, j, 1)
    p = 4.0**j * elementary_angle(4, j, sigma) if sigma else 0.0
    margin = (2.0 / 3.0) * p1
    return SrtBounds(j=j, sigma=sigma, lower=p - margin, upper=p + margin)


# comparator thresholds of the hardware digit selector
DIGIT_THRESHOLDS = (0.5, 1.5)


def verify_digit_thresholds(j_start: int, j_end: int) -> list[dict]:
    """Check each comparator threshold sits strictly inside its SRT overlap.

    For every iteration j the threshold between digits s and s+1 must lie in
    the open interval (L[s+1], U[s]); same for the mirrored negative digits.
    Returns one report row per (j, threshold), nothing is raised on failure.
    """
    reports = []
    for j in range(j_start, j_end + 1):
        for s, threshold in enumerate(DIGIT_THRESHOLDS):
            lo = srt_interval(j, s + 1).lower
            hi = srt_interval(j, s).upper
            for sign in (+1, -1):
                t = sign * threshold
                lower, upper = (lo, hi) if sign > 0 else (-hi, -lo)
                reports.append(
                    {
                        "check": f"srt_overlap_digit_{sign * (s + 1)}",
                        "j": j,
                        "lower": lower,
                        "upper": upper,
                        "threshold": t,
                        "pass": lower < t < upper,
                    }
                )
    return reports
