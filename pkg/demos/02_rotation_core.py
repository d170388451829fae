"""Watch the mixed-radix rotation core converge, stage by stage.

Shows the radix-2 stages grinding the residual angle down, the handoff into
the pre-scaled radix-4 domain, and the final cosh/sinh against the double
precision oracle.

Run:  python3 demos/02_rotation_core.py
"""

import math

from mrcordic import (
    Fx,
    HrcState,
    QFormat,
    R2_SCHEDULE,
    R4_SCHEDULE,
    build_angle_tables,
    fx_from_real,
    r2_hrc_step,
    r4_digit_select,
    r4_hrc_step,
)
from mrcordic.hyperbolic import enter_r4_domain

fmt = QFormat(18, 16)  # 16-bit I/O plus 2 guard bits
tables = build_angle_tables(fmt)
z_target = 0.37

s = HrcState(tables.x_init, Fx(0, fmt), fx_from_real(z_target, fmt), None, 0)
print(f"rotating to z = {z_target}   (x starts at the gain product {tables.x_init.to_real():.6f})\n")

print("radix-2 stages (digit = sign of residual):")
for j in R2_SCHEDULE:
    d = "+1" if s.z.mantissa >= 0 else "-1"
    s = r2_hrc_step(s, j, tables)
    print(f"  j={j}  d={d}  x={s.x.to_real():.6f}  y={s.y.to_real():.6f}  z={s.z.to_real():+.6f}")

s = enter_r4_domain(s, tables)
print(f"\nresidual {s.z.to_real():+.6f} enters the radix-4 domain as w = 4^4*z = {s.w.to_real():+.4f}")

print("radix-4 stages (five-valued digit from the 4-bit comparator):")
for j in R4_SCHEDULE:
    sigma = r4_digit_select(s.w)
    s = r4_hrc_step(s, j, tables)
    print(f"  j={j}  sigma={sigma:+d}  x={s.x.to_real():.6f}  y={s.y.to_real():.6f}  w={s.w.to_real():+.4f}")

print(f"\ncosh({z_target}) = {s.x.to_real():.6f}  oracle {math.cosh(z_target):.6f}")
print(f"sinh({z_target}) = {s.y.to_real():.6f}  oracle {math.sinh(z_target):.6f}")
lsb = 2**-14
print(f"errors: {abs(s.x.to_real() - math.cosh(z_target)) / lsb:.2f} and "
      f"{abs(s.y.to_real() - math.sinh(z_target)) / lsb:.2f} I/O LSB")
