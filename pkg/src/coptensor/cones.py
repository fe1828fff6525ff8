"""Membership oracles for subcones of the copositive tensor cone.

Two cones are supported:

``nn``
    the nonnegative tensors;
``zsplit``
    tensors ``A`` whose Z-part ``A - N(A)`` is positive semidefinite (even
    order) or copositive (odd order), where ``N(A)`` collects the positive
    off-diagonal entries.  For a Z-tensor ``t*I - C`` both properties are
    equivalent to ``t >= rho(C)``, which is what gets checked.
"""

from __future__ import annotations

import enum

import numpy as np

from .spectral import DEFAULT_POWER, PowerConfig, radius_at_most, z_split
from .tensor import SymTensor

DEFAULT_TOL_PSD = 1e-9


class ConeKind(str, enum.Enum):
    NONNEG = "nn"
    ZSPLIT = "zsplit"

    @classmethod
    def parse(cls, value) -> "ConeKind":
        if isinstance(value, cls):
            return value
        aliases = {"nn": cls.NONNEG, "nonneg": cls.NONNEG, "zsplit": cls.ZSPLIT}
        try:
            return aliases[str(value).lower()]
        except KeyError:
            raise ValueError(f"unknown cone {value!r}; expected 'nn' or 'zsplit'") from None


def n_part(A: SymTensor) -> SymTensor:
    """Strictly positive off-diagonal entries of ``A``; everything else zero."""
    keep = (A.values > 0) & A.off_diagonal_mask()
    return SymTensor._trusted(np.where(keep, A.values, 0.0))


def z_part(A: SymTensor) -> SymTensor:
    """``A - N(A)``, a Z-tensor."""
    keep = (A.values > 0) & A.off_diagonal_mask()
    return SymTensor._trusted(np.where(keep, 0.0, A.values))


def zsplit_member(A: SymTensor, cfg: PowerConfig = DEFAULT_POWER, tol_psd: float = DEFAULT_TOL_PSD) -> bool:
    """True when the Z-part's minimum H-eigenvalue is certified to be at least ``-tol_psd``."""
    Z = z_part(A)
    d = Z.diag
    # lambda_min <= min diagonal entry (take x = e_i)
    if d.min() < -tol_psd:
        return False
    if not np.any(Z.values[Z.off_diagonal_mask()]):
        return True
    t, C = z_split(Z)
    return radius_at_most(C, t + tol_psd, cfg)


def member(
    A: SymTensor,
    cone: ConeKind | str = ConeKind.ZSPLIT,
    cfg: PowerConfig = DEFAULT_POWER,
    tol_psd: float = DEFAULT_TOL_PSD,
) -> bool:
    """Decide ``A in M`` for the chosen subcone ``M``.

    Never raises.  A True answer implies ``A`` is copositive up to the
    ``tol_psd`` slack on the Z-part eigenvalue.  The slack only applies to a
    computed upper bound on ``rho(C)``: if the power method cannot bring that
    bound below ``t + tol_psd`` within its sweep budget the answer is False.
    """
    cone = ConeKind.parse(cone)
    if np.all(A.values >= 0):
        return True
    if cone is ConeKind.NONNEG:
        return False
    return zsplit_member(A, cfg, tol_psd)
