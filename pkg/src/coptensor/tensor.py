"""Dense symmetric tensors and the multilinear algebra the detector needs.

A :class:`SymTensor` stores all ``n**m`` entries of an order-``m``,
dimension-``n`` real symmetric tensor as a read-only numpy array of shape
``(n,) * m``.  Multi-indices in user-facing specs and JSON files are
1-based; numpy arrays are 0-based as usual.
"""

from __future__ import annotations

import itertools
import json
import math
from collections import Counter
from fractions import Fraction
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

SYMMETRY_RTOL = 1e-12


class TensorError(ValueError):
    """Raised for malformed tensor input (bad shape, index, symmetry)."""


@lru_cache(maxsize=None)
def _orbit_labels(m: int, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Return (labels, counts) for the permutation orbits of ``[n]**m``.

    ``labels[k]`` is the flat index of the sorted representative of flat
    index ``k``; ``counts[k]`` is the size of its orbit.
    """
    idx = np.indices((n,) * m).reshape(m, -1)
    rep = np.sort(idx, axis=0)
    labels = np.ravel_multi_index(tuple(rep), (n,) * m)
    counts = np.bincount(labels, minlength=n**m)[labels]
    labels.flags.writeable = False
    counts.flags.writeable = False
    return labels, counts


def orbit_size(index: Sequence[int]) -> int:
    """Number of distinct permutations of a multi-index."""
    size = math.factorial(len(index))
    for mult in Counter(index).values():
        size //= math.factorial(mult)
    return size


def orbit_representatives(m: int, n: int) -> list[tuple[int, ...]]:
    """Sorted 0-based multi-indices, one per orbit, in lexicographic order."""
    return list(itertools.combinations_with_replacement(range(n), m))


def _symmetrize(values: np.ndarray) -> np.ndarray:
    m, n = values.ndim, values.shape[0]
    labels, counts = _orbit_labels(m, n)
    flat = values.ravel()
    if np.array_equal(flat[labels], flat):
        # already exactly symmetric; averaging could perturb the last bit
        return values.copy()
    sums = np.bincount(labels, weights=values.ravel(), minlength=n**m)
    return (sums[labels] / counts).reshape(values.shape)


def _asymmetry(values: np.ndarray) -> float:
    """Largest relative deviation of an entry from its orbit mean."""
    sym = _symmetrize(values)
    scale = max(float(np.max(np.abs(values), initial=0.0)), 1.0)
    return float(np.max(np.abs(values - sym), initial=0.0)) / scale


class SymTensor:
    """Immutable dense symmetric tensor of order ``m`` and dimension ``n``."""

    __slots__ = ("_values",)

    def __init__(self, values, *, check: bool = True):
        arr = np.array(values, dtype=float)
        if arr.ndim < 2:
            raise TensorError(f"order must be >= 2, got {arr.ndim}")
        n = arr.shape[0]
        if n < 2 or any(s != n for s in arr.shape):
            raise TensorError(f"tensor must be cubical with dim >= 2, got shape {arr.shape}")
        if check:
            dev = _asymmetry(arr)
            if dev > SYMMETRY_RTOL:
                raise TensorError(f"input is not symmetric (relative deviation {dev:.3g})")
        arr = _symmetrize(arr)
        arr.flags.writeable = False
        self._values = arr

    @classmethod
    def _trusted(cls, values: np.ndarray) -> "SymTensor":
        # bypasses the symmetry check for arrays that are symmetric by construction
        obj = cls.__new__(cls)
        values.flags.writeable = False
        obj._values = values
        return obj

    @classmethod
    def identity(cls, m: int, n: int) -> "SymTensor":
        vals = np.zeros((n,) * m)
        vals[(np.arange(n),) * m] = 1.0
        return cls._trusted(vals)

    @classmethod
    def ones(cls, m: int, n: int) -> "SymTensor":
        return cls._trusted(np.ones((n,) * m))

    @classmethod
    def zeros(cls, m: int, n: int) -> "SymTensor":
        return cls._trusted(np.zeros((n,) * m))

    @classmethod
    def diagonal(cls, m: int, diag) -> "SymTensor":
        diag = np.asarray(diag, dtype=float)
        n = diag.size
        vals = np.zeros((n,) * m)
        vals[(np.arange(n),) * m] = diag
        return cls._trusted(vals)

    @classmethod
    def from_orbit_values(cls, m: int, n: int, values: Sequence[float]) -> "SymTensor":
        """Tensor whose entry on the k-th orbit (see :func:`orbit_representatives`) is ``values[k]``."""
        reps = orbit_representatives(m, n)
        if len(values) != len(reps):
            raise TensorError(f"expected {len(reps)} orbit values, got {len(values)}")
        flat = np.zeros(n**m)
        rep_flat = np.ravel_multi_index(tuple(np.array(reps).T), (n,) * m)
        flat[rep_flat] = values
        labels, _ = _orbit_labels(m, n)
        return cls._trusted(flat[labels].reshape((n,) * m))

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def order(self) -> int:
        return self._values.ndim

    @property
    def dim(self) -> int:
        return self._values.shape[0]

    @property
    def diag(self) -> np.ndarray:
        n = self.dim
        return self._values[(np.arange(n),) * self.order].copy()

    def off_diagonal_mask(self) -> np.ndarray:
        mask = np.ones(self._values.shape, dtype=bool)
        mask[(np.arange(self.dim),) * self.order] = False
        return mask

    def _coerce(self, other) -> np.ndarray:
        if isinstance(other, SymTensor):
            if other._values.shape != self._values.shape:
                raise TensorError(
                    f"shape mismatch: order/dim ({self.order},{self.dim}) vs ({other.order},{other.dim})"
                )
            return other._values
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return SymTensor._trusted(self._values + o)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return SymTensor._trusted(self._values - o)

    def __neg__(self):
        return SymTensor._trusted(-self._values)

    def __mul__(self, scalar):
        if isinstance(scalar, (int, float, np.floating, np.integer)):
            return SymTensor._trusted(self._values * float(scalar))
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymTensor):
            return NotImplemented
        return self._values.shape == other._values.shape and bool(np.array_equal(self._values, other._values))

    __hash__ = None

    def allclose(self, other: "SymTensor", rtol: float = 1e-9, atol: float = 1e-12) -> bool:
        return self._values.shape == other._values.shape and bool(
            np.allclose(self._values, other._values, rtol=rtol, atol=atol)
        )

    def __repr__(self) -> str:
        return f"SymTensor(order={self.order}, dim={self.dim})"


def identity(m: int, n: int) -> SymTensor:
    return SymTensor.identity(m, n)


def ones(m: int, n: int) -> SymTensor:
    return SymTensor.ones(m, n)


def zeros(m: int, n: int) -> SymTensor:
    return SymTensor.zeros(m, n)


# --------------------------------------------------------------------------
# construction from orbit/entry specs

@dataclass(frozen=True)
class OrbitEntrySpec:
    """Input encoding for a symmetric tensor.

    ``entries`` holds ``(multi_index, value)`` pairs with 1-based indices.
    In ``orbit_sum`` mode the value is the sum over all distinct
    permutations of the index; in ``per_entry`` mode it is the entry itself
    and the listed entries must already be symmetric.
    """

    order: int
    dim: int
    mode: str = "orbit_sum"
    entries: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple((tuple(int(i) for i in idx), float(v)) for idx, v in self.entries))


def build(spec: OrbitEntrySpec) -> SymTensor:
    m, n = spec.order, spec.dim
    if m < 2 or n < 2:
        raise TensorError(f"order and dim must be >= 2, got order={m}, dim={n}")
    if spec.mode not in ("orbit_sum", "per_entry"):
        raise TensorError(f"unknown mode {spec.mode!r}")
    vals = np.zeros((n,) * m)
    seen: set[tuple[int, ...]] = set()
    for idx, val in spec.entries:
        if len(idx) != m:
            raise TensorError(f"multi-index {idx} has length {len(idx)}, expected {m}")
        if any(i < 1 or i > n for i in idx):
            raise TensorError(f"multi-index {idx} out of range [1, {n}]")
        zidx = tuple(i - 1 for i in idx)
        if spec.mode == "orbit_sum":
            key = tuple(sorted(zidx))
            if key in seen:
                raise TensorError(f"duplicate orbit for multi-index {idx}")
            seen.add(key)
            share = val / orbit_size(key)
            for perm in set(itertools.permutations(key)):
                vals[perm] = share
        else:
            if zidx in seen:
                raise TensorError(f"duplicate entry {idx}")
            seen.add(zidx)
            vals[zidx] = val
    if spec.mode == "orbit_sum":
        return SymTensor._trusted(vals)
    return SymTensor(vals)


# --------------------------------------------------------------------------
# multilinear operations

def _check_vector(A: SymTensor, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (A.dim,):
        raise TensorError(f"vector of shape {x.shape} does not match dim {A.dim}")
    return x


def eval_form(A: SymTensor, x) -> float:
    """Homogeneous form ``A x^m`` (sum over all ``n**m`` index tuples)."""
    x = _check_vector(A, x)
    v = A.values
    for _ in range(A.order):
        v = v @ x
    return float(v)


def eval_form_exact(A: SymTensor, x) -> Fraction:
    """``A x^m`` in exact rational arithmetic on the stored float entries and ``x``."""
    x = _check_vector(A, x)
    xs = [Fraction(float(v)) for v in x]
    total = Fraction(0)
    for rep in orbit_representatives(A.order, A.dim):
        a = A.values[rep]
        if a == 0:
            continue
        term = Fraction(orbit_size(rep)) * Fraction(float(a))
        for i in rep:
            term *= xs[i]
        total += term
    return total


def form_rounding_bound(A: SymTensor, x) -> float:
    """Generous bound on the float rounding error of :func:`eval_form` at ``x``."""
    x = np.abs(_check_vector(A, x))
    v = np.abs(A.values)
    for _ in range(A.order):
        v = v @ x
    return 4.0 * (A.order + A.dim ** A.order) * np.finfo(float).eps * float(v)


def eval_contraction(A: SymTensor, x) -> np.ndarray:
    """The vector ``A x^{m-1}``."""
    x = _check_vector(A, x)
    v = A.values
    for _ in range(A.order - 1):
        v = v @ x
    return np.asarray(v, dtype=float)


def rank_one_inner(A: SymTensor, *us) -> float:
    """Pairing ``<A, u_1 o u_2 o ... o u_m>``."""
    if len(us) != A.order:
        raise TensorError(f"expected {A.order} vectors, got {len(us)}")
    v = A.values
    for u in reversed(us):
        v = v @ _check_vector(A, u)
    return float(v)


def congruence(A: SymTensor, V) -> SymTensor:
    """Pull ``A`` back along the columns of ``V``: entry ``(i1..im)`` is
    ``<A, V[:, i1] o ... o V[:, im]>``, so that ``congruence(A, V) x^m == A (V x)^m``."""
    V = np.asarray(V, dtype=float)
    n = A.dim
    if V.shape != (n, n):
        raise TensorError(f"matrix of shape {V.shape} does not match dim {n}")
    T = A.values
    for _ in range(A.order):
        # contract the leading axis; the new axis lands last, so m passes restore order
        T = np.tensordot(T, V, axes=([0], [0]))
    labels, _ = _orbit_labels(A.order, n)
    return SymTensor._trusted(T.reshape(-1)[labels].reshape(T.shape))


def inner(A: SymTensor, B: SymTensor) -> float:
    if A.values.shape != B.values.shape:
        raise TensorError(f"shape mismatch: ({A.order},{A.dim}) vs ({B.order},{B.dim})")
    return float(np.vdot(A.values, B.values))


def norm(A: SymTensor) -> float:
    return math.sqrt(inner(A, A))


def outer_power(x, m: int) -> SymTensor:
    """Symmetric rank-one tensor ``x o x o ... o x`` (m factors)."""
    x = np.asarray(x, dtype=float)
    T = x
    for _ in range(m - 1):
        T = np.multiply.outer(T, x)
    return SymTensor._trusted(np.array(T))


# --------------------------------------------------------------------------
# JSON files

def spec_from_dict(data: dict) -> OrbitEntrySpec:
    try:
        order = int(data["order"])
        dim = int(data["dim"])
        mode = data.get("mode", "orbit_sum")
        entries = [(e["idx"], e["val"]) for e in data["entries"]]
    except (KeyError, TypeError) as exc:
        raise TensorError(f"malformed tensor document: missing or invalid field {exc}") from None
    return OrbitEntrySpec(order, dim, mode, tuple(entries))


def tensor_to_dict(A: SymTensor) -> dict:
    """Per-entry document listing every nonzero entry; reads back to an equal tensor."""
    nz = np.argwhere(A.values != 0)
    entries = [{"idx": [int(i) + 1 for i in idx], "val": float(A.values[tuple(idx)])} for idx in nz]
    return {"order": A.order, "dim": A.dim, "mode": "per_entry", "entries": entries}


def load_tensor(path) -> SymTensor:
    with open(path) as fh:
        data = json.load(fh)
    return build(spec_from_dict(data))


def save_tensor(A: SymTensor, path) -> None:
    with open(path, "w") as fh:
        json.dump(tensor_to_dict(A), fh)


__all__ = [
    "SymTensor",
    "OrbitEntrySpec",
    "TensorError",
    "build",
    "congruence",
    "eval_contraction",
    "eval_form",
    "eval_form_exact",
    "form_rounding_bound",
    "identity",
    "inner",
    "load_tensor",
    "norm",
    "ones",
    "orbit_representatives",
    "orbit_size",
    "outer_power",
    "rank_one_inner",
    "save_tensor",
    "spec_from_dict",
    "tensor_to_dict",
    "zeros",
]
