"""End-to-end sigmoid: halve, rotate, divide, scale-and-offset.

sigmoid(x) = (1 + tanh(x/2)) / 2 for normalized inputs |x| <= 1.  The whole
datapath runs in a guard-bit-extended working format and rounds once back to
the I/O format at the exit, mirroring a pipelined hardware implementation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .divider import lvc_divide
from .fixedpoint import Fx, QFormat, fx_add, fx_extend, fx_from_real, fx_round_to, fx_shr
from .hyperbolic import AngleTables, R2_SCHEDULE, R4_SCHEDULE, RangeError, build_angle_tables, mrhrc_run


@dataclass(frozen=True)
class PipelineConfig:
    io_format: QFormat = QFormat()
    guard_bits: int = 2
    lvc_stages: int = 15
    clamp: bool = False  # clamp out-of-range inputs to +/-1 instead of erroring
    tables: AngleTables = field(init=False)

    def __post_init__(self):
        if self.guard_bits < 0:
            raise ValueError("guard_bits must be >= 0")
        if self.lvc_stages < 0:
            raise ValueError("lvc_stages must be >= 0")
        object.__setattr__(self, "tables", build_angle_tables(self.working_format))

    @property
    def working_format(self) -> QFormat:
        return QFormat(
            self.io_format.total_bits + self.guard_bits,
            self.io_format.frac_bits + self.guard_bits,
            self.io_format.rounding,
            self.io_format.overflow,
        )


@dataclass(frozen=True)
class LatencyReport:
    """Pipeline stage counts; one cycle per dedicated iteration stage."""

    normalize_stages: int
    r2_stages: int
    r4_stages: int
    lvc_stages: int
    scale_offset_stages: int

    @property
    def total_cycles(self) -> int:
        return (
            self.normalize_stages
            + self.r2_stages
            + self.r4_stages
            + self.lvc_stages
            + self.scale_offset_stages
        )


def latency_report(cfg: PipelineConfig) -> LatencyReport:
    return LatencyReport(
        normalize_stages=1,
        r2_stages=len(R2_SCHEDULE),
        r4_stages=len(R4_SCHEDULE),
        lvc_stages=cfg.lvc_stages,
        scale_offset_stages=1,
    )


def sigmoid_eval(x: Fx, cfg: PipelineConfig) -> Fx:
    """Fixed-point sigmoid of a normalized input; result in the I/O format.

    Inputs with |x| > 1 raise RangeError unless cfg.clamp is set, in which
    case they are clamped to +/-1 first.
    """
    xv = x.to_real()
    if abs(xv) > 1.0:
        if not cfg.clamp:
            raise RangeError(f"|x| = {abs(xv)} exceeds 1; callers must normalize")
        x = fx_from_real(1.0 if xv > 0 else -1.0, x.fmt)
    wide = fx_extend(x, 0, cfg.guard_bits)
    z_in = fx_shr(wide, 1)
    cosh_w, sinh_w = mrhrc_run(z_in, cfg.tables)
    tanh_w = lvc_divide(cosh_w, sinh_w, cfg.lvc_stages)
    half = fx_from_real(0.5, cfg.working_format)
    out_w = fx_add(fx_shr(tanh_w, 1), half)
    return fx_round_to(out_w, cfg.io_format)


def sigmoid_eval_batch(xs, cfg: PipelineConfig) -> list[Fx]:
    """Element-wise sigmoid_eval; the first bad input is reported with its index."""
    out = []
    for i, x in enumerate(xs):
        try:
            out.append(sigmoid_eval(x, cfg))
        except RangeError as e:
            raise RangeError(f"input {i}: {e}") from None
    return out
