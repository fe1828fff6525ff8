"""Seeded benchmark on ``A = eta*I - B`` with random symmetric ``B`` in (0, 1).

One uniform draw is made per permutation orbit of the index set, so ``B``
is symmetric and every entry is marginally uniform.  ``eta`` is set to
``rho(B) + eta_offset``.  The generator is numpy's PCG64 seeded with the
given integer, so the same spec always yields the same tensors.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .detector import DEFAULT_DETECTOR, DetectorConfig, Status, detect
from .spectral import spectral_radius
from .tensor import SymTensor, identity, orbit_representatives

SCHEMA_VERSION = 1
RNG_NAME = "PCG64"


@dataclass(frozen=True)
class BenchSpec:
    m: int
    n: int
    eta_offset: float
    trials: int = 10
    seed: int = 0

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")


def random_symmetric(m: int, n: int, rng: np.random.Generator) -> SymTensor:
    k = len(orbit_representatives(m, n))
    # uniform on the open interval: redraw exact zeros (probability ~2**-53)
    vals = rng.random(k)
    while np.any(vals == 0.0):
        vals[vals == 0.0] = rng.random(int(np.sum(vals == 0.0)))
    return SymTensor.from_orbit_values(m, n, vals)


def trial_tensors(spec: BenchSpec, power=None):
    """Yield ``(B, rho, A)`` for each trial."""
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    for _ in range(spec.trials):
        B = random_symmetric(spec.m, spec.n, rng)
        rho = spectral_radius(B, power or DEFAULT_DETECTOR.power).rho
        A = (rho + spec.eta_offset) * identity(spec.m, spec.n) - B
        yield B, rho, A


def _run_one(args):
    A, cfg = args
    return detect(A, cfg)


def run_bench(spec: BenchSpec, cfg: DetectorConfig = DEFAULT_DETECTOR, timing: bool = True, workers: int = 1) -> dict:
    t0 = time.perf_counter()
    made = list(trial_tensors(spec, cfg.power))
    jobs = [(A, cfg) for _, _, A in made]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            verdicts = list(pool.map(_run_one, jobs))
    else:
        verdicts = [_run_one(j) for j in jobs]
    trials = []
    for i, ((_, rho, _), v) in enumerate(zip(made, verdicts)):
        row = {"trial": i, "rho": rho, "eta": rho + spec.eta_offset, **v.to_dict(timing)}
        trials.append(row)
    its = [v.iterations for v in verdicts]
    report = {
        "schema": SCHEMA_VERSION,
        "rng": RNG_NAME,
        "seed": spec.seed,
        "m": spec.m,
        "n": spec.n,
        "eta_offset": spec.eta_offset,
        "cone": cfg.cone.value,
        "max_iter": cfg.max_iterations,
        "n_yes": sum(v.status is Status.COPOSITIVE for v in verdicts),
        "n_no": sum(v.status is Status.NOT_COPOSITIVE for v in verdicts),
        "n_undecided": sum(v.status is Status.UNDECIDED for v in verdicts),
        "min_it": min(its),
        "max_it": max(its),
        "trials": trials,
    }
    if timing:
        times = [v.stats.wall_time for v in verdicts]
        report["min_cpu"] = min(times)
        report["max_cpu"] = max(times)
        report["total_time"] = time.perf_counter() - t0
    return report


def format_report(report: dict) -> str:
    lines = [
        f"m={report['m']} n={report['n']} eta=rho{report['eta_offset']:+g} seed={report['seed']} ({report['rng']})",
        f"  MinIT={report['min_it']} MaxIT={report['max_it']} Nyes={report['n_yes']} Nno={report['n_no']}"
        + (f" Nundecided={report['n_undecided']}" if report["n_undecided"] else ""),
    ]
    if "min_cpu" in report:
        lines.append(f"  MinCPU={report['min_cpu']:.4f}s MaxCPU={report['max_cpu']:.4f}s")
    return "\n".join(lines)

