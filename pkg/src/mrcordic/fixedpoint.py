"""Two's-complement fixed-point arithmetic matching a hardware datapath.

Values are stored as signed integer mantissas with an attached Q-format
descriptor.  Only the operations a shift-add datapath needs are provided:
add, subtract, negate, arithmetic right shift, and real<->fixed conversion.
There is deliberately no multiply or divide.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

Rounding = Literal["truncate", "nearest_even"]
Overflow = Literal["saturate", "wrap"]


class FormatError(ValueError):
    """Invalid Q-format or mismatched operand formats."""


class ShiftRangeError(ValueError):
    """Shift count outside [0, total_bits)."""


@dataclass(frozen=True)
class QFormat:
    """Qm.n descriptor: m integer bits (sign included) and n fraction bits.

    ``rounding`` governs only real->fixed conversion; hardware-style shifts
    always truncate toward -inf regardless of this field.
    """

    total_bits: int = 16
    frac_bits: int = 14
    rounding: Rounding = "nearest_even"
    overflow: Overflow = "saturate"

    def __post_init__(self):
        if not (0 < self.frac_bits < self.total_bits):
            raise FormatError(
                f"need 0 < frac_bits < total_bits, got {self.frac_bits}/{self.total_bits}"
            )
        if self.total_bits > 32:
            raise FormatError("model limit: total_bits <= 32")
        if self.rounding not in ("truncate", "nearest_even"):
            raise FormatError(f"unknown rounding mode {self.rounding!r}")
        if self.overflow not in ("saturate", "wrap"):
            raise FormatError(f"unknown overflow mode {self.overflow!r}")

    @property
    def int_bits(self) -> int:
        return self.total_bits - self.frac_bits

    @property
    def scale(self) -> int:
        return 1 << self.frac_bits

    @property
    def lsb(self) -> float:
        return 2.0 ** -self.frac_bits

    @property
    def min_int(self) -> int:
        return -(1 << (self.total_bits - 1))

    @property
    def max_int(self) -> int:
        return (1 << (self.total_bits - 1)) - 1

    @property
    def min_real(self) -> float:
        return self.min_int / self.scale

    @property
    def max_real(self) -> float:
        return self.max_int / self.scale

    def __str__(self) -> str:
        return f"Q{self.int_bits}.{self.frac_bits}"


@dataclass(frozen=True)
class Fx:
    """One fixed-point sample: real value = mantissa * 2^-frac_bits."""

    mantissa: int
    fmt: QFormat

    def __post_init__(self):
        if not (self.fmt.min_int <= self.mantissa <= self.fmt.max_int):
            raise FormatError(
                f"mantissa {self.mantissa} not representable in {self.fmt}"
            )

    def to_real(self) -> float:
        return self.mantissa / self.fmt.scale

    def to_hex(self) -> str:
        nibbles = (self.fmt.total_bits + 3) // 4
        u = self.mantissa & ((1 << self.fmt.total_bits) - 1)
        return f"{u:0{nibbles}x}"

    def __str__(self) -> str:
        return f"{self.to_real():.10g} ({self.mantissa} / 0x{self.to_hex()}, {self.fmt})"


def _apply_overflow(m: int, fmt: QFormat) -> int:
    if fmt.min_int <= m <= fmt.max_int:
        return m
    if fmt.overflow == "saturate":
        return max(fmt.min_int, min(fmt.max_int, m))
    modulus = 1 << fmt.total_bits
    m %= modulus
    if m > fmt.max_int:
        m -= modulus
    return m


def fx_from_real(v: float, fmt: QFormat) -> Fx:
    """Quantize a real value; saturates or wraps per the format policy."""
    scaled = v * fmt.scale
    if fmt.rounding == "truncate":
        m = math.floor(scaled)
    else:
        # round half to even
        f = math.floor(scaled)
        r = scaled - f
        m = f
        if r > 0.5 or (r == 0.5 and (f & 1)):
            m += 1
    return Fx(_apply_overflow(m, fmt), fmt)


def fx_to_real(a: Fx) -> float:
    return a.to_real()


def _check_same_format(a: Fx, b: Fx):
    if a.fmt != b.fmt:
        raise FormatError(f"format mismatch: {a.fmt} vs {b.fmt}")


def fx_add(a: Fx, b: Fx) -> Fx:
    _check_same_format(a, b)
    return Fx(_apply_overflow(a.mantissa + b.mantissa, a.fmt), a.fmt)


def fx_sub(a: Fx, b: Fx) -> Fx:
    _check_same_format(a, b)
    return Fx(_apply_overflow(a.mantissa - b.mantissa, a.fmt), a.fmt)


def fx_neg(a: Fx) -> Fx:
    return Fx(_apply_overflow(-a.mantissa, a.fmt), a.fmt)


def fx_shr(a: Fx, k: int) -> Fx:
    """Arithmetic right shift; truncates toward -inf like a hardware barrel shift."""
    if not (0 <= k < a.fmt.total_bits):
        raise ShiftRangeError(f"shift {k} outside [0, {a.fmt.total_bits})")
    return Fx(a.mantissa >> k, a.fmt)


def fx_shl(a: Fx, k: int) -> Fx:
    """Left shift (scale by 2^k) with the format's overflow policy applied."""
    if not (0 <= k < a.fmt.total_bits):
        raise ShiftRangeError(f"shift {k} outside [0, {a.fmt.total_bits})")
    return Fx(_apply_overflow(a.mantissa << k, a.fmt), a.fmt)


def fx_extend(a: Fx, extra_int_bits: int, extra_frac_bits: int) -> Fx:
    """Losslessly widen into a format with more integer and/or fraction bits."""
    fmt = QFormat(
        a.fmt.total_bits + extra_int_bits + extra_frac_bits,
        a.fmt.frac_bits + extra_frac_bits,
        a.fmt.rounding,
        a.fmt.overflow,
    )
    return Fx(a.mantissa << extra_frac_bits, fmt)


def fx_round_to(a: Fx, fmt: QFormat) -> Fx:
    """Re-quantize into a narrower format, rounding dropped fraction bits.

    Uses round-to-nearest-even on the dropped bits when the target format
    rounds, plain truncation otherwise.
    """
    drop = a.fmt.frac_bits - fmt.frac_bits
    if drop < 0:
        return Fx(_apply_overflow(a.mantissa << -drop, fmt), fmt)
    m = a.mantissa >> drop
    if fmt.rounding == "nearest_even" and drop > 0:
        rem = a.mantissa - (m << drop)
        half = 1 << (drop - 1)
        if rem > half or (rem == half and (m & 1)):
            m += 1
    return Fx(_apply_overflow(m, fmt), fmt)
