"""Accuracy of the full sigmoid pipeline over the normalized input range.

Reproduces the headline measurement: mean absolute error of the 16-bit
pipeline against the double-precision sigmoid over 4001 points in [-1, 1].

Run:  python3 demos/03_accuracy_sweep.py
"""

import numpy as np

from mrcordic import PipelineConfig, fx_from_real, latency_report, sigmoid_eval, sigmoid_ref

cfg = PipelineConfig()
print(f"I/O format {cfg.io_format}, working format {cfg.working_format}, "
      f"{cfg.lvc_stages} divider stages")
print(f"pipeline depth: {latency_report(cfg).total_cycles} stages\n")

xs = np.linspace(-1.0, 1.0, 4001)
errs = []
for xv in xs:
    out = sigmoid_eval(fx_from_real(xv, cfg.io_format), cfg).to_real()
    errs.append(abs(out - sigmoid_ref(xv)))
errs = np.asarray(errs)

print(f"samples {len(xs)}")
print(f"MAE     {errs.mean():.3e}")
print(f"max     {errs.max():.3e} at x = {xs[errs.argmax()]:+.4f}")
print(f"(one LSB of {cfg.io_format} is {cfg.io_format.lsb:.3e})")

print("\nspot checks:")
for xv in (-1.0, -0.5, 0.0, 0.5, 1.0):
    out = sigmoid_eval(fx_from_real(xv, cfg.io_format), cfg)
    print(f"  sigmoid({xv:+.1f}) = {out.to_real():.6f}  "
          f"(oracle {sigmoid_ref(xv):.6f}, mantissa 0x{out.to_hex()})")
