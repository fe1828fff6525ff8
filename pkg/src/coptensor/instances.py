"""Named test tensors: ``eta*I - E`` and the Motzkin, Robinson and Choi-Lam sextics."""

from __future__ import annotations

from .tensor import OrbitEntrySpec, SymTensor, build, identity, ones


def eta_identity_minus_ones(eta: float, m: int, n: int) -> SymTensor:
    return eta * identity(m, n) - ones(m, n)


def _sextic(*entries) -> SymTensor:
    return build(OrbitEntrySpec(6, 3, "orbit_sum", entries))


def motzkin() -> SymTensor:
    """x^4 y^2 + x^2 y^4 + z^6 - 3 x^2 y^2 z^2."""
    return _sextic(
        ((1, 1, 1, 1, 2, 2), 1.0),
        ((1, 1, 2, 2, 2, 2), 1.0),
        ((3, 3, 3, 3, 3, 3), 1.0),
        ((1, 1, 2, 2, 3, 3), -3.0),
    )


def robinson() -> SymTensor:
    """x^6 + y^6 + z^6 - sum of the six x^4 y^2 terms + 3 x^2 y^2 z^2."""
    return _sextic(
        ((1, 1, 1, 1, 1, 1), 1.0),
        ((2, 2, 2, 2, 2, 2), 1.0),
        ((3, 3, 3, 3, 3, 3), 1.0),
        ((1, 1, 1, 1, 2, 2), -1.0),
        ((1, 1, 2, 2, 2, 2), -1.0),
        ((1, 1, 1, 1, 3, 3), -1.0),
        ((1, 1, 3, 3, 3, 3), -1.0),
        ((2, 2, 2, 2, 3, 3), -1.0),
        ((2, 2, 3, 3, 3, 3), -1.0),
        ((1, 1, 2, 2, 3, 3), 3.0),
    )


def choi_lam() -> SymTensor:
    """x^4 y^2 + y^4 z^2 + z^4 x^2 - 3 x^2 y^2 z^2."""
    return _sextic(
        ((1, 1, 1, 1, 2, 2), 1.0),
        ((2, 2, 2, 2, 3, 3), 1.0),
        ((3, 3, 3, 3, 1, 1), 1.0),
        ((1, 1, 2, 2, 3, 3), -3.0),
    )


SEXTICS = {"motzkin": motzkin, "robinson": robinson, "choi_lam": choi_lam}
