"""The Motzkin, Robinson and Choi-Lam forms as order-6 tensors in 3 variables.

All three are nonnegative but not sums of squares, and each has zeros in the
interior of the simplex, which makes them hard for simplicial partitioning.
Adding a small multiple of E lifts the zeros; the smaller the multiple, the
deeper the partition has to go.
"""

from coptensor import DetectorConfig, detect
from coptensor.instances import SEXTICS
from coptensor.tensor import eval_form, ones

cfg = DetectorConfig(max_iterations=500)
print(f"{'tensor':<10} {'sigma':>8}  {'verdict':<15} {'it':>4} {'depth':>5}")
for name, make in SEXTICS.items():
    A = make()
    print(f"{name:<10} value at (1,1,1)/3: {eval_form(A, [1 / 3] * 3):.2e}")
    for sigma in (0.01, 0.001, 0.0001, 0.0):
        v = detect(A + sigma * ones(6, 3), cfg)
        print(f"{'':<10} {sigma:>8g}  {v.status.value:<15} {v.iterations:>4} {v.stats.max_depth:>5}")
