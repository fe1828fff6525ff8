"""Seeded benchmark on eta*I - B with B random in (0, 1).

With eta = rho(B) - 1 every instance has a negative H-eigenvalue and the
detector finds a witness; with eta = rho(B) + 1 or + 10 the root is
certified at once.
"""

from coptensor.bench import BenchSpec, format_report, run_bench

for m, n in [(3, 3), (3, 4), (4, 3), (4, 4), (6, 3)]:
    for offset in (-1, 1, 10):
        report = run_bench(BenchSpec(m, n, offset, trials=10, seed=2017))
        print(format_report(report))
