"""Tour of the fixed-point layer: Q-formats, quantization, and hardware shifts.

Run:  python3 demos/01_fixed_point_basics.py
"""

from mrcordic import Fx, QFormat, fx_add, fx_from_real, fx_neg, fx_shr

fmt = QFormat(16, 14)  # the default datapath word: Q2.14
print(f"format {fmt}: range [{fmt.min_real}, {fmt.max_real}], LSB {fmt.lsb:.3e}")

for v in (0.5, 0.958151, -0.25, 1.9999, 3.0):
    x = fx_from_real(v, fmt)
    print(f"  {v:>9} -> mantissa {x.mantissa:>6}  0x{x.to_hex()}  back {x.to_real():.6f}")

print("\nsaturating add at the positive rail:")
top = Fx(fmt.max_int, fmt)
print(f"  max + 1 LSB = {fx_add(top, Fx(1, fmt)).to_real()} (unchanged)")

print("\narithmetic shifts truncate toward -inf, like hardware wires:")
a = fx_from_real(-0.3, fmt)
for k in range(4):
    print(f"  -0.3 >> {k} = {fx_shr(a, k).to_real():.6f}")
print(f"  -1 LSB >> 1 stays {fx_shr(Fx(-1, fmt), 1).mantissa} (sign extension)")

print("\nnegating the most negative value saturates:")
print(f"  neg(min) = {fx_neg(Fx(fmt.min_int, fmt)).to_real()}")
