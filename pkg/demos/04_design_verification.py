"""Machine-check the design derivations behind the iteration schedule.

Covers: the radix-2 and radix-4 convergence ranges, the measured residual
handed from the radix-2 to the radix-4 stages, the SRT selection-interval
overlaps that justify the comparator thresholds, and the radix-4 gain bound
that lets the design skip scale compensation.

Run:  python3 demos/04_design_verification.py
"""

import math

from mrcordic import (
    ConvergenceSpec,
    PipelineConfig,
    R4_SCHEDULE,
    convergence_range,
    srt_interval,
    verify_digit_thresholds,
)
from mrcordic.cli import measure_r2_residual

r2 = convergence_range(ConvergenceSpec(2, 2, 9, 1))
r4 = convergence_range(ConvergenceSpec(4, 4, 7, 2))
print(f"radix-2 range (j=2..9):  {r2:.6f}  (must cover the +/-0.5 input)")
print(f"radix-4 range (j=4..7):  {r4:.6f}  (must cover the radix-2 residual)")

cfg = PipelineConfig()
resid = measure_r2_residual(cfg, grid_points=2001)
print(f"measured residual after the radix-2 block: {resid:.6f} "
      f"({'inside' if resid <= r4 else 'OUTSIDE'} the radix-4 range)")

print("\nSRT selection intervals at j=4 (digit -> [L, U] of the scaled residual):")
for sigma in range(-2, 3):
    b = srt_interval(4, sigma)
    print(f"  sigma={sigma:+d}: [{b.lower:+.5f}, {b.upper:+.5f}]")

rows = verify_digit_thresholds(4, 7)
print(f"\ncomparator thresholds strictly inside their overlaps: "
      f"{sum(r['pass'] for r in rows)}/{len(rows)} checks pass")

gain = 1.0
for j in R4_SCHEDULE:
    gain *= 1.0 / math.sqrt(1.0 - 4.0 * 4.0 ** (-2 * j))
print(f"\nworst-case radix-4 gain: {gain:.9f} "
      f"({'below' if gain < 1 + 2**-14 else 'above'} one LSB of Q2.14 -> no compensation needed)")
