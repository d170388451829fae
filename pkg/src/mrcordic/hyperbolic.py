"""Mixed-radix hyperbolic rotation core: cosh/sinh from shift-add iterations.

Eight radix-2 rotation stages (j = 2..9) pull the residual angle below the
radix-4 convergence range, then four radix-4 stages (j = 4..7) finish it off
two result bits at a time.  The radix-2 gain is compensated up front by
initializing x with the accumulated cosh product; the radix-4 stages start
late enough that their gain is below one LSB and needs no compensation.

The radix-4 residual is tracked pre-scaled (w = 4^j * z) in a register four
integer bits wider than the datapath, so the five-way digit selector can use
fixed comparator thresholds +/-0.5 and +/-1.5.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from .fixedpoint import (
    Fx,
    QFormat,
    fx_add,
    fx_from_real,
    fx_shl,
    fx_shr,
    fx_sub,
)
from .reference import elementary_angle, scale_factor_kh

R2_SCHEDULE = tuple(range(2, 10))
R4_SCHEDULE = tuple(range(4, 8))

# integer-bit headroom of the scaled-residual register (|w| stays under 8/3)
W_EXTRA_INT_BITS = 4


class RangeError(ValueError):
    """Input angle outside the schedule's convergence range."""


def w_format(fmt: QFormat) -> QFormat:
    return QFormat(
        fmt.total_bits + W_EXTRA_INT_BITS, fmt.frac_bits, fmt.rounding, fmt.overflow
    )


@dataclass(frozen=True)
class AngleTables:
    """The constant ROMs of the datapath, quantized to the working format.

    r4 angle entries are stored pre-scaled into the w domain
    (4^j * atanh(sigma * 4^-j)) so the residual update never needs a
    per-stage threshold shift.
    """

    fmt: QFormat
    r2_angles: dict[int, Fx]
    r4_w_angles: dict[tuple[int, int], Fx]  # (j, |sigma|) -> w-domain angle
    x_init: Fx
    thresholds: tuple[Fx, ...]

    @property
    def w_fmt(self) -> QFormat:
        return w_format(self.fmt)


def build_angle_tables(fmt: QFormat) -> AngleTables:
    wfmt = w_format(fmt)
    r2 = {j: fx_from_real(elementary_angle(2, j, 1), fmt) for j in R2_SCHEDULE}
    r4 = {
        (j, mag): fx_from_real(4.0**j * elementary_angle(4, j, mag), wfmt)
        for j in R4_SCHEDULE
        for mag in (1, 2)
    }
    x_init = fx_from_real(scale_factor_kh(R2_SCHEDULE[0], R2_SCHEDULE[-1]), fmt)
    thresholds = tuple(fx_from_real(t, wfmt) for t in (-1.5, -0.5, 0.5, 1.5))
    return AngleTables(fmt, r2, r4, x_init, thresholds)


@dataclass(frozen=True)
class HrcState:
    x: Fx
    y: Fx
    z: Fx
    w: Optional[Fx]  # scaled residual, live during radix-4 stages only
    stage: int


def r2_hrc_step(s: HrcState, j: int, t: AngleTables) -> HrcState:
    """One radix-2 hyperbolic rotation; d = sign(z) with d=+1 on z=0."""
    if s.z.mantissa >= 0:
        x = fx_add(s.x, fx_shr(s.y, j))
        y = fx_add(s.y, fx_shr(s.x, j))
        z = fx_sub(s.z, t.r2_angles[j])
    else:
        x = fx_sub(s.x, fx_shr(s.y, j))
        y = fx_sub(s.y, fx_shr(s.x, j))
        z = fx_add(s.z, t.r2_angles[j])
    return HrcState(x, y, z, None, s.stage + 1)


def r4_digit_select(w: Fx) -> int:
    """Five-valued digit from the scaled residual.

    Only the sign, integer bits, and top fraction bit of w are examined
    (an arithmetic shift leaving w in units of 0.5), so the selector is a
    4-bit comparator: digit 2 for w >= 1.5, 1 for 0.5 <= w < 1.5,
    0 for -0.5 <= w < 0.5, -1 for -1.5 <= w < -0.5, -2 for w < -1.5.
    """
    halves = w.mantissa >> (w.fmt.frac_bits - 1)
    if halves >= 3:
        return 2
    if halves >= 1:
        return 1
    if halves >= -1:
        return 0
    if halves >= -3:
        return -1
    return -2


def r4_hrc_step(s: HrcState, j: int, t: AngleTables) -> HrcState:
    """One radix-4 rotation: digit select, shift-add update, residual rescale.

    sigma * 4^-j is realized as a single shift (2j for |sigma|=1, 2j-1 for
    |sigma|=2); no gain compensation is applied.
    """
    sigma = r4_digit_select(s.w)
    x, y, w = s.x, s.y, s.w
    if sigma != 0:
        shift = 2 * j - (1 if abs(sigma) == 2 else 0)
        angle = t.r4_w_angles[(j, abs(sigma))]
        if sigma > 0:
            x = fx_add(s.x, fx_shr(s.y, shift))
            y = fx_add(s.y, fx_shr(s.x, shift))
            w = fx_sub(w, angle)
        else:
            x = fx_sub(s.x, fx_shr(s.y, shift))
            y = fx_sub(s.y, fx_shr(s.x, shift))
            w = fx_add(w, angle)
    w = fx_shl(w, 2)
    return HrcState(x, y, s.z, w, s.stage + 1)


def run_r2_stages(z_in: Fx, t: AngleTables) -> HrcState:
    """Run the radix-2 schedule from the standard (x_init, 0, z_in) start."""
    s = HrcState(
        x=t.x_init,
        y=Fx(0, t.fmt),
        z=z_in,
        w=None,
        stage=0,
    )
    for j in R2_SCHEDULE:
        s = r2_hrc_step(s, j, t)
    return s


def enter_r4_domain(s: HrcState, t: AngleTables) -> HrcState:
    """Pre-scale the residual into the widened w register: w = 4^j_start * z."""
    w = Fx(s.z.mantissa << (2 * R4_SCHEDULE[0]), t.w_fmt)
    return replace(s, w=w)


def mrhrc_run(z_in: Fx, t: AngleTables) -> tuple[Fx, Fx]:
    """Full mixed-radix run: returns (cosh(z_in), sinh(z_in)) in fixed point.

    z_in must satisfy |z_in| <= 0.5, the design's convergence contract.
    """
    if abs(z_in.to_real()) > 0.5:
        raise RangeError(f"|z_in| = {abs(z_in.to_real())} exceeds 0.5")
    s = run_r2_stages(z_in, t)
    s = enter_r4_domain(s, t)
    for j in R4_SCHEDULE:
        s = r4_hrc_step(s, j, t)
    return s.x, s.y


def export_table_lines(t: AngleTables) -> list[str]:
    """Render the ROM contents as "name index hex decimal" lines.

    Order: r2 angles ascending j, r4 angles ascending j then digit magnitude,
    the x initialization constant, then the four comparator thresholds.
    """
    lines = []
    for j in R2_SCHEDULE:
        a = t.r2_angles[j]
        lines.append(f"r2_angle {j} {a.to_hex()} {a.to_real():.10g}")
    for j in R4_SCHEDULE:
        for mag in (1, 2):
            a = t.r4_w_angles[(j, mag)]
            lines.append(f"r4_w_angle_m{mag} {j} {a.to_hex()} {a.to_real():.10g}")
    lines.append(f"x_init 0 {t.x_init.to_hex()} {t.x_init.to_real():.10g}")
    for i, th in enumerate(t.thresholds):
        lines.append(f"threshold {i} {th.to_hex()} {th.to_real():.10g}")
    return lines
