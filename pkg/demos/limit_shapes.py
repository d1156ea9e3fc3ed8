"""Limit shapes of the scaled log counts, and the tau boundedness series.

Writes the plot data as CSV next to this script (psi_50.csv,
psi_150.csv, tau_srec.csv) and, when matplotlib is importable, renders
limit_shapes.png with the three panels.

Run:  python3 demos/limit_shapes.py
"""

import math
import pathlib

from recstats import curve_samples, sup_deviation, tau_series
from recstats.scaling import curve_csv, tau_csv

HERE = pathlib.Path(__file__).resolve().parent

# Rescaled by n ln n, the srec log counts hug sqrt(1 - x); the rec ones
# hug 1 - x.  Sampling at the breakpoints captures the full step curve.
curves = {n: curve_samples(n, "srec") for n in (50, 150)}
for n, curve in curves.items():
    path = HERE / f"psi_{n}.csv"
    path.write_text(curve_csv(curve))
    print(f"wrote {path.name}: {len(curve.samples)} breakpoint samples")

# The sup deviation from the target shape, times ln n, stays bounded;
# that is the O(1/ln n) uniform convergence rate made finite.
reports = tau_series("srec", 2, 150)
(HERE / "tau_srec.csv").write_text(tau_csv([r for r in reports if r.n <= 50]))
print("wrote tau_srec.csv: tau(n) for n = 2..50")

window = max(r.tau for r in reports if r.n <= 50)
tail = max(r.tau for r in reports if r.n > 50)
print(f"max tau over n <= 50 : {window:.4f}")
print(f"max tau over 51..150 : {tail:.4f}  (bounded, no growth)")

for n in (50, 150):
    dev = sup_deviation(n, "srec")
    print(f"sup |psi_{n} - sqrt(1-x)| = {dev.sup_dev:.5f} at x = {dev.argmax_x:.4f}"
          f"   tau = {dev.tau:.4f}")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not available; skipping the png")
else:
    fig, axes = plt.subplots(1, 3, figsize=(15, 4))
    for ax, n in zip(axes[:2], (50, 150)):
        xs = [x for x, _ in curves[n].samples]
        ys = [y for _, y in curves[n].samples]
        ax.step(xs, ys, where="post", lw=0.8, label=f"scaled log counts, n={n}")
        grid = [i / 400 for i in range(401)]
        ax.plot(grid, [math.sqrt(1 - x) for x in grid], "k--", lw=1, label="sqrt(1-x)")
        ax.set_xlabel("x")
        ax.legend()
    axes[2].plot([r.n for r in reports if r.n <= 50],
                 [r.tau for r in reports if r.n <= 50], "o-", ms=3)
    axes[2].set_xlabel("n")
    axes[2].set_title("tau(n) = ln n * sup deviation, n = 2..50")
    fig.tight_layout()
    fig.savefig(HERE / "limit_shapes.png", dpi=120)
    print("wrote limit_shapes.png")
