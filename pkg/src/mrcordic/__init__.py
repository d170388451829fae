"""Bit-accurate mixed-radix hyperbolic CORDIC sigmoid model.

A software twin of a multiplier-free fixed-point sigmoid datapath: radix-2
then radix-4 hyperbolic rotations produce cosh/sinh, a linear vectoring
stage divides them into tanh, and a final shift-and-offset maps tanh to the
sigmoid.  A double-precision oracle and verification checks accompany the
fixed-point model.
"""

from .divider import DomainError, LvcState, lvc_divide, r2_lvc_step
from .fixedpoint import (
    FormatError,
    Fx,
    QFormat,
    ShiftRangeError,
    fx_add,
    fx_extend,
    fx_from_real,
    fx_neg,
    fx_round_to,
    fx_shl,
    fx_shr,
    fx_sub,
    fx_to_real,
)
from .hyperbolic import (
    R2_SCHEDULE,
    R4_SCHEDULE,
    AngleTables,
    HrcState,
    RangeError,
    build_angle_tables,
    export_table_lines,
    mrhrc_run,
    r2_hrc_step,
    r4_digit_select,
    r4_hrc_step,
    run_r2_stages,
)
from .pipeline import (
    LatencyReport,
    PipelineConfig,
    latency_report,
    sigmoid_eval,
    sigmoid_eval_batch,
)
from .reference import (
    ConvergenceSpec,
    SrtBounds,
    convergence_range,
    elementary_angle,
    scale_factor_kh,
    sigmoid_ref,
    srt_interval,
    tanh_identity_check,
    verify_digit_thresholds,
)

__version__ = "0.1.0"
