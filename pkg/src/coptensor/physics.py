"""Vacuum stability of the Z3-symmetric scalar dark matter potential.

In terms of the nonnegative field magnitudes ``(h1, h2, s)`` the quartic
potential is

    V = l1 h1^4 + l2 h2^4 + (l3 + l4 rho^2) h1^2 h2^2 + lS s^4
        + lS1 s^2 h1^2 + lS2 s^2 h2^2 - |lS12| rho s^2 h1 h2,

with an orbit parameter ``rho`` in [0, 1].  The potential is bounded from
below iff its order-4, dimension-3 coupling tensor is copositive for every
``rho``.
"""

from __future__ import annotations

import cmath
import math
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields

import numpy as np

from .detector import DEFAULT_DETECTOR, DetectorConfig, Status, Verdict, detect
from .tensor import OrbitEntrySpec, SymTensor, build

PERTURBATIVE_LIMIT = 4 * math.pi
DEFAULT_RHO_POINTS = 21


class PerturbativityWarning(UserWarning):
    pass


@dataclass(frozen=True)
class QuarticCouplings:
    l1: float
    l2: float
    ls: float
    l3: float
    l4: float
    ls1: float
    ls2: float
    ls12: float

    def __post_init__(self):
        big = [f.name for f in fields(self) if abs(getattr(self, f.name)) > PERTURBATIVE_LIMIT * (1 + 1e-12)]
        if big:
            warnings.warn(f"couplings {', '.join(big)} exceed the perturbative bound 4*pi", PerturbativityWarning, stacklevel=3)

    @classmethod
    def from_dict(cls, data: dict) -> "QuarticCouplings":
        return cls(**{f.name: float(data[f.name]) for f in fields(cls)})

    def to_dict(self) -> dict:
        return asdict(self)


def _normalize_mode(mode: str) -> str:
    if mode in ("paper", "paper_listing"):
        return "paper_listing"
    if mode == "monomial":
        return "monomial"
    raise ValueError(f"unknown build mode {mode!r}; expected 'paper' or 'monomial'")


def coupling_tensor(c: QuarticCouplings, rho: float, mode: str = "paper_listing") -> SymTensor:
    """Order-4, dimension-3 coupling tensor in the variables ``(h1, h2, s)``.

    ``paper_listing`` uses ``V_1233 = -|lS12|/12`` independent of ``rho``;
    ``monomial`` uses ``-|lS12| rho / 12`` so the tensor's form is exactly
    the potential above.
    """
    mode = _normalize_mode(mode)
    if not 0.0 <= rho <= 1.0:
        raise ValueError(f"rho must lie in [0, 1], got {rho}")
    mixed = -abs(c.ls12) * (rho if mode == "monomial" else 1.0)
    # orbit sums: each value is spread evenly over the permutations of its index
    entries = (
        ((1, 1, 1, 1), c.l1),
        ((2, 2, 2, 2), c.l2),
        ((3, 3, 3, 3), c.ls),
        ((1, 1, 2, 2), c.l3 + c.l4 * rho**2),
        ((1, 1, 3, 3), c.ls1),
        ((2, 2, 3, 3), c.ls2),
        ((1, 2, 3, 3), mixed),
    )
    return build(OrbitEntrySpec(4, 3, "orbit_sum", entries))


def potential(c: QuarticCouplings, rho: float, h1: float, h2: float, s: float) -> float:
    return (
        c.l1 * h1**4
        + c.l2 * h2**4
        + c.l3 * h1**2 * h2**2
        + c.l4 * rho**2 * h1**2 * h2**2
        + c.ls * s**4
        + c.ls1 * s**2 * h1**2
        + c.ls2 * s**2 * h2**2
        - abs(c.ls12) * rho * s**2 * h1 * h2
    )


@dataclass(frozen=True)
class AnalyticStability:
    """Stationary point of the potential on the unit sphere and its value.

    ``rho`` is the modulus of the orbit parameter; ``rho_imaginary`` is set
    when ``h1^2 * h2^2 < 0`` makes it non-real.
    """

    rho: float
    rho_imaginary: bool
    h1_sq: float
    h2_sq: float
    s_sq: float
    v_min: float
    t: float
    degenerate: bool = False

    def format_rho(self, digits: int = 2) -> str:
        if self.degenerate or math.isnan(self.rho):
            return "nan"
        return f"{self.rho:.{digits}f}" + ("i" if self.rho_imaginary else "")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["rho_text"] = self.format_rho()
        return {k: (None if isinstance(v, float) and not math.isfinite(v) else v) for k, v in d.items()}


def analytic_stationary(c: QuarticCouplings) -> AnalyticStability:
    l1, l2, ls, l3, l4, s1, s2 = c.l1, c.l2, c.ls, c.l3, c.l4, c.ls1, c.ls2
    a = abs(c.ls12)
    d = 4 * ls * l4 - a * a
    t = (l1 + l2 - l3) * d + l4 * (
        4 * l1 * l2 - l3**2 - 4 * l1 * s2 - 4 * l2 * s1 + 2 * l3 * (s1 + s2) - (s1 - s2) ** 2
    )
    if t == 0:
        nan = float("nan")
        return AnalyticStability(nan, False, nan, nan, nan, nan, 0.0, degenerate=True)
    h1_sq = 0.5 * ((2 * l2 - l3) * d + 2 * l4 * ((l3 + s1) * s2 - 2 * l2 * s1 - s2**2)) / t
    h2_sq = 0.5 * ((2 * l1 - l3) * d + 2 * l4 * ((l3 + s2) * s1 - 2 * l1 * s2 - s1**2)) / t
    s_sq = l4 * (4 * l1 * l2 - l3**2 - 2 * l1 * s2 - 2 * l2 * s1 + l3 * (s1 + s2)) / t
    v_min = 0.25 * ((4 * l1 * l2 - l3**2) * d - 4 * l4 * (l1 * s2**2 + l2 * s1**2 - l3 * s1 * s2)) / t
    prod = h1_sq * h2_sq
    if prod == 0 or l4 == 0:
        rho, imaginary = float("nan"), False
    else:
        z = a * s_sq / (2 * l4 * cmath.sqrt(prod))
        rho, imaginary = abs(z), prod < 0
    return AnalyticStability(rho, imaginary, h1_sq, h2_sq, s_sq, v_min, t)


@dataclass
class VacuumReport:
    result: str  # "Yes" | "No" | "Undecided"
    per_rho: list  # [(rho, Verdict)]
    analytic: AnalyticStability
    mode: str

    @property
    def max_iterations(self) -> int:
        return max(v.iterations for _, v in self.per_rho)

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "result": self.result,
            "mode": self.mode,
            "analytic": self.analytic.to_dict(),
            "per_rho": [{"rho": r, **v.to_dict(timing)} for r, v in self.per_rho],
        }


def default_rho_grid(points: int = DEFAULT_RHO_POINTS) -> list[float]:
    if points < 1:
        raise ValueError("rho grid needs at least one point")
    if points == 1:
        return [1.0]
    return [float(r) for r in np.linspace(0.0, 1.0, points)]


def _detect_rho(args) -> Verdict:
    c, rho, cfg, mode = args
    return detect(coupling_tensor(c, rho, mode), cfg)


def vacuum_stability(
    c: QuarticCouplings,
    cfg: DetectorConfig = DEFAULT_DETECTOR,
    rho_grid=None,
    mode: str = "paper_listing",
    workers: int = 1,
) -> VacuumReport:
    """Scan ``rho`` and run the detector on the coupling tensor at every grid point.

    ``Yes`` needs a Copositive verdict everywhere, ``No`` a single
    NotCopositive one; anything else is ``Undecided``.
    """
    mode = _normalize_mode(mode)
    grid = default_rho_grid() if rho_grid is None else [float(r) for r in rho_grid]
    if not grid:
        raise ValueError("rho grid is empty")
    for r in grid:
        if not 0.0 <= r <= 1.0:
            raise ValueError(f"rho grid value {r} outside [0, 1]")
    jobs = [(c, r, cfg, mode) for r in grid]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            verdicts = list(pool.map(_detect_rho, jobs))
    else:
        verdicts = [_detect_rho(j) for j in jobs]
    statuses = {v.status for v in verdicts}
    if Status.NOT_COPOSITIVE in statuses:
        result = "No"
    elif statuses == {Status.COPOSITIVE}:
        result = "Yes"
    else:
        result = "Undecided"
    return VacuumReport(result, list(zip(grid, verdicts)), analytic_stationary(c), mode)
