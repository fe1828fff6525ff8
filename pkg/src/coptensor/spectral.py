"""Spectral radius of nonnegative tensors and minimum H-eigenvalues of Z-tensors.

The spectral radius is computed with the Ng-Qi-Zhou power iteration

    x <- (B' x^{m-1})^{1/(m-1)},  normalised so that sum(x) == 1,

where ``B' = B + eps * E`` is a strictly positive perturbation that makes
the iteration converge for reducible inputs.  Each sweep yields the
Collatz-Wielandt bounds ``min_i r_i <= rho(B') <= max_i r_i`` with
``r_i = (B' x^{m-1})_i / x_i^{m-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .tensor import SymTensor, TensorError


@dataclass(frozen=True)
class PowerConfig:
    tol: float = 1e-10
    max_sweeps: int = 10000
    perturbation: float = 1e-12

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError(f"tol must be positive, got {self.tol}")
        if self.max_sweeps < 1:
            raise ValueError(f"max_sweeps must be >= 1, got {self.max_sweeps}")
        if self.perturbation < 0:
            raise ValueError(f"perturbation must be >= 0, got {self.perturbation}")


@dataclass(frozen=True)
class SpectralResult:
    rho: float
    lower: float
    upper: float
    sweeps: int
    converged: bool
    vector: np.ndarray | None = None


DEFAULT_POWER = PowerConfig()


def _contract(vals: np.ndarray, x: np.ndarray, times: int) -> np.ndarray:
    for _ in range(times):
        vals = vals @ x
    return vals


def _power_sweeps(B: SymTensor, cfg: PowerConfig):
    """Yield ``(sweep, lower, upper, x)`` for successive power-method sweeps."""
    m, n = B.order, B.dim
    vals = B.values + cfg.perturbation if cfg.perturbation else B.values
    x = np.full(n, 1.0 / n)
    for sweep in range(1, cfg.max_sweeps + 1):
        y = _contract(vals, x, m - 1)
        pos = x > 0
        ratios = y[pos] / x[pos] ** (m - 1)
        yield sweep, float(ratios.min()), float(ratios.max()), x
        x = y ** (1.0 / (m - 1))
        s = x.sum()
        if s == 0:
            # B' is the zero tensor
            return
        x = x / s


def _check_nonnegative(B: SymTensor) -> None:
    if np.any(B.values < 0):
        raise TensorError("spectral_radius requires a nonnegative tensor")


def spectral_radius(B: SymTensor, cfg: PowerConfig = DEFAULT_POWER) -> SpectralResult:
    """Spectral radius of a nonnegative symmetric tensor.

    ``lower``/``upper`` are the raw Collatz-Wielandt bounds for the perturbed
    tensor; ``rho`` is their midpoint, clamped to
    ``[max(0, lower - eps * n**(m-1)), upper]``.
    """
    _check_nonnegative(B)
    inflation = cfg.perturbation * B.dim ** (B.order - 1)
    lower = upper = 0.0
    sweep = 0
    x = None
    converged = False
    for sweep, lower, upper, x in _power_sweeps(B, cfg):
        if upper - lower <= cfg.tol:
            converged = True
            break
    else:
        if sweep == 0 or np.all(B.values == 0):
            converged = True
    mid = 0.5 * (lower + upper)
    rho = min(max(mid, max(0.0, lower - inflation)), upper)
    return SpectralResult(rho, lower, upper, sweep, converged, None if x is None else x.copy())


def radius_at_most(B: SymTensor, bound: float, cfg: PowerConfig = DEFAULT_POWER) -> bool:
    """Certify ``rho(B) <= bound`` from the power-method upper bound.

    Stops as soon as the decision is settled either way.  Returns False when
    the iteration runs out of sweeps before an upper bound below ``bound`` is
    found, so a True answer is always backed by a computed bound.
    """
    _check_nonnegative(B)
    if bound < 0:
        return False
    for _, lower, upper, _ in _power_sweeps(B, cfg):
        if upper <= bound:
            return True
        if lower > bound or upper - lower <= cfg.tol:
            return False
    return False


def z_split(Z: SymTensor) -> tuple[float, SymTensor]:
    """Write a Z-tensor as ``t*I - C`` with ``t`` its largest diagonal entry and ``C >= 0``."""
    off = Z.off_diagonal_mask()
    if np.any(Z.values[off] > 0):
        raise TensorError("not a Z-tensor: positive off-diagonal entry")
    t = float(Z.diag.max())
    C = t * SymTensor.identity(Z.order, Z.dim) - Z
    # exact zeros where t equals a diagonal entry; clip rounding on the diagonal
    vals = np.where(C.values < 0, 0.0, C.values)
    return t, SymTensor._trusted(vals)


def z_min_h_eigenvalue(Z: SymTensor, cfg: PowerConfig = DEFAULT_POWER) -> float:
    """Minimum H-eigenvalue of a Z-tensor, ``t - rho(t*I - Z)``."""
    t, C = z_split(Z)
    return t - spectral_radius(C, cfg).rho
