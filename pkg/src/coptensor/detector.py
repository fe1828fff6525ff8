"""Simplicial branch-and-bound copositivity detector.

Starting from the standard simplex, each examined simplex ``S`` with vertex
matrix ``V`` is either

* rejected, when some vertex ``u`` has ``A u^m < 0`` (``u`` is a witness),
* discarded, when ``V^T A V`` lies in the chosen subcone (``A`` is then
  nonnegative on ``S``), or
* split in two along its longest edge.

Simplices are kept on a LIFO stack.  An empty stack proves copositivity.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field

import numpy as np

from .cones import DEFAULT_TOL_PSD, ConeKind, member
from .spectral import DEFAULT_POWER, PowerConfig
from .tensor import SymTensor, congruence, eval_form, eval_form_exact, form_rounding_bound


class Status(str, enum.Enum):
    COPOSITIVE = "copositive"
    NOT_COPOSITIVE = "not_copositive"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class Simplex:
    """Simplex in R^n stored as the n x n matrix whose columns are its vertices."""

    matrix: np.ndarray
    depth: int = 0

    def __post_init__(self):
        V = np.array(self.matrix, dtype=float)
        if V.ndim != 2 or V.shape[0] != V.shape[1]:
            raise ValueError(f"simplex needs n vertices in R^n, got matrix of shape {V.shape}")
        V.flags.writeable = False
        object.__setattr__(self, "matrix", V)

    @classmethod
    def standard(cls, n: int) -> "Simplex":
        return cls(np.eye(n))

    @property
    def vertices(self) -> list[np.ndarray]:
        return [self.matrix[:, i] for i in range(self.matrix.shape[1])]

    def longest_edge(self) -> tuple[int, int, float]:
        """``(p, q, length)`` of the longest edge, ties going to the lexicographically smallest pair."""
        V = self.matrix
        n = V.shape[1]
        best = (0, 1, -1.0)
        for p in range(n - 1):
            d = np.linalg.norm(V[:, p + 1 :] - V[:, [p]], axis=0)
            for off, length in enumerate(d):
                # tolerant comparison so float noise does not reorder ties
                if length > best[2] * (1 + 1e-12):
                    best = (p, p + 1 + off, float(length))
        return best

    def diameter(self) -> float:
        return self.longest_edge()[2]

    def barycentric(self, x) -> np.ndarray:
        return np.linalg.solve(self.matrix, np.asarray(x, dtype=float))


def bisect(S: Simplex) -> tuple[Simplex, Simplex]:
    """Split ``S`` at the midpoint of its longest edge.

    Returns ``(S with u_p -> v, S with u_q -> v)``.
    """
    p, q, length = S.longest_edge()
    if not length > 0:
        raise ValueError("cannot bisect a degenerate simplex")
    v = 0.5 * (S.matrix[:, p] + S.matrix[:, q])
    left = S.matrix.copy()
    left[:, p] = v
    right = S.matrix.copy()
    right[:, q] = v
    return Simplex(left, S.depth + 1), Simplex(right, S.depth + 1)


@dataclass(frozen=True)
class DetectorConfig:
    cone: ConeKind = ConeKind.ZSPLIT
    max_iterations: int = 100
    power: PowerConfig = DEFAULT_POWER
    vertex_tol: float = 0.0
    tol_psd: float = DEFAULT_TOL_PSD
    record_partition: bool = False

    def __post_init__(self):
        object.__setattr__(self, "cone", ConeKind.parse(self.cone))
        if self.max_iterations < 1:
            raise ValueError(f"max_iterations must be >= 1, got {self.max_iterations}")
        if self.vertex_tol < 0:
            raise ValueError(f"vertex_tol must be >= 0, got {self.vertex_tol}")


@dataclass
class DetectorStats:
    iterations: int = 0
    simplices: int = 1
    max_depth: int = 0
    wall_time: float = 0.0
    frontier_diameter: float | None = None


@dataclass
class Verdict:
    status: Status
    witness: np.ndarray | None = None
    stats: DetectorStats = field(default_factory=DetectorStats)
    discarded: list[Simplex] | None = None
    frontier: list[Simplex] | None = None

    @property
    def iterations(self) -> int:
        return self.stats.iterations

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "status": self.status.value,
            "witness": None if self.witness is None else [float(v) for v in self.witness],
            "iterations": self.stats.iterations,
            "simplices": self.stats.simplices,
            "max_depth": self.stats.max_depth,
        }
        if self.stats.frontier_diameter is not None:
            out["frontier_diameter"] = self.stats.frontier_diameter
        if timing:
            out["wall_time"] = self.stats.wall_time
        return out


DEFAULT_DETECTOR = DetectorConfig()


def _negative_vertex(A: SymTensor, u: np.ndarray, vertex_tol: float) -> bool:
    value = eval_form(A, u)
    if value >= -vertex_tol:
        return False
    if value < -vertex_tol - form_rounding_bound(A, u):
        return True
    # too close to call in floating point
    return eval_form_exact(A, u) < -vertex_tol


def detect(A: SymTensor, cfg: DetectorConfig = DEFAULT_DETECTOR) -> Verdict:
    """Decide copositivity of ``A`` by simplicial partitioning of the standard simplex.

    ``stats.simplices`` counts the simplices of the partition built so far
    (one more than the number of cuts); on a Copositive verdict it equals
    ``(iterations + 1) / 2``.
    """
    start = time.perf_counter()
    n = A.dim
    stats = DetectorStats()
    stack = [Simplex.standard(n)]
    discarded: list[Simplex] | None = [] if cfg.record_partition else None

    def finish(status, witness=None):
        stats.wall_time = time.perf_counter() - start
        frontier = None
        if status is Status.UNDECIDED:
            deepest = max(stack, key=lambda s: s.depth)
            stats.frontier_diameter = deepest.diameter()
            if cfg.record_partition:
                frontier = list(stack)
        return Verdict(status, witness, stats, discarded, frontier)

    while stack:
        if stats.iterations >= cfg.max_iterations:
            return finish(Status.UNDECIDED)
        stats.iterations += 1
        S = stack[-1]
        stats.max_depth = max(stats.max_depth, S.depth)
        for u in S.vertices:
            if _negative_vertex(A, u, cfg.vertex_tol):
                return finish(Status.NOT_COPOSITIVE, u.copy())
        if member(congruence(A, S.matrix), cfg.cone, cfg.power, cfg.tol_psd):
            stack.pop()
            if discarded is not None:
                discarded.append(S)
            continue
        stack.pop()
        left, right = bisect(S)
        # the u_q-replaced child goes on top and is examined next
        stack.append(left)
        stack.append(right)
        stats.simplices += 1
    return finish(Status.COPOSITIVE)
