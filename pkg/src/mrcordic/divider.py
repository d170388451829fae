"""Radix-2 linear vectoring CORDIC: a shift-add divider.

Drives y toward zero while accumulating the quotient y0/x0 in z; x is
bit-identical across iterations (linear mode has no scale factor).  Used to
form tanh = sinh/cosh from the rotation core's outputs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fixedpoint import Fx, fx_add, fx_shr, fx_sub


class DomainError(ValueError):
    """Divisor not strictly positive."""


@dataclass(frozen=True)
class LvcState:
    x: Fx  # divisor, constant
    y: Fx  # residual numerator
    z: Fx  # quotient accumulator
    stage: int


def quotient_step_constant(fmt, j: int) -> Fx:
    """The 2^-j added to the quotient at iteration j, in the working format."""
    return Fx(fmt.scale >> j, fmt)


def r2_lvc_step(s: LvcState, j: int) -> LvcState:
    """One vectoring iteration; d = +1 when y >= 0 (drives y to zero)."""
    step = quotient_step_constant(s.x.fmt, j)
    if s.y.mantissa >= 0:
        y = fx_sub(s.y, fx_shr(s.x, j))
        z = fx_add(s.z, step)
    else:
        y = fx_add(s.y, fx_shr(s.x, j))
        z = fx_sub(s.z, step)
    return LvcState(s.x, y, z, s.stage + 1)


def lvc_divide(cosh_in: Fx, sinh_in: Fx, stages: int | None = None) -> Fx:
    """Quotient sinh_in/cosh_in via iterations j = 1..stages.

    The default schedule runs to frac_bits+1 so the quantization of z is the
    accuracy floor.  The quotient range covered is sum(2^-j) -> 1, which
    holds for every valid rotation-core output (|tanh| <= tanh(0.5) ~ 0.46).
    """
    if cosh_in.mantissa <= 0:
        raise DomainError(f"divisor must be > 0, got {cosh_in.to_real()}")
    if stages is None:
        stages = cosh_in.fmt.frac_bits + 1
    s = LvcState(cosh_in, sinh_in, Fx(0, cosh_in.fmt), 0)
    for j in range(1, stages + 1):
        s = r2_lvc_step(s, j)
    return s.z
