"""Uniform hypergraphs, adjacency tensors and copositive coclique bounds.

For an m-uniform hypergraph with adjacency tensor ``A`` the coclique number
satisfies ``omega(G) <= k`` whenever ``k**(m-1) * (A + I) - E`` is copositive.
:func:`coclique_upper_bound` scans ``k`` upward and runs the detector on
each candidate.
"""

from __future__ import annotations

import itertools
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .detector import DEFAULT_DETECTOR, DetectorConfig, Status, Verdict, detect
from .tensor import SymTensor, identity, ones


class HypergraphError(ValueError):
    pass


@dataclass(frozen=True)
class UniformHypergraph:
    """m-uniform hypergraph on vertices ``1..n``; edges are sorted 1-based tuples."""

    n: int
    m: int
    edges: frozenset

    def __init__(self, n: int, m: int, edges):
        if m < 3:
            raise HypergraphError(f"edge size m must be >= 3, got {m}")
        if n < m:
            raise HypergraphError(f"need n >= m, got n={n}, m={m}")
        canon = set()
        for e in edges:
            e = tuple(sorted(int(v) for v in e))
            if len(e) != m or len(set(e)) != m:
                raise HypergraphError(f"edge {e} must have exactly {m} distinct vertices")
            if e[0] < 1 or e[-1] > n:
                raise HypergraphError(f"edge {e} has a vertex outside [1, {n}]")
            canon.add(e)
        if not canon:
            raise HypergraphError("hypergraph must have at least one edge")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "m", int(m))
        object.__setattr__(self, "edges", frozenset(canon))

    @classmethod
    def complete(cls, n: int, m: int) -> "UniformHypergraph":
        return cls(n, m, itertools.combinations(range(1, n + 1), m))

    @classmethod
    def hyperstar(cls, m: int) -> "UniformHypergraph":
        """Single edge on ``m`` vertices."""
        return cls(m, m, [tuple(range(1, m + 1))])

    def to_dict(self) -> dict:
        return {"n": self.n, "m": self.m, "edges": [list(e) for e in sorted(self.edges)]}

    @classmethod
    def from_dict(cls, data: dict) -> "UniformHypergraph":
        try:
            return cls(int(data["n"]), int(data["m"]), data["edges"])
        except (KeyError, TypeError) as exc:
            raise HypergraphError(f"malformed hypergraph document: missing or invalid field {exc}") from None


def load_hypergraph(path) -> UniformHypergraph:
    with open(path) as fh:
        return UniformHypergraph.from_dict(json.load(fh))


def save_hypergraph(G: UniformHypergraph, path) -> None:
    with open(path, "w") as fh:
        json.dump(G.to_dict(), fh)


def adjacency_tensor(G: UniformHypergraph) -> SymTensor:
    """Entries ``1/(m-1)!`` on every permutation of every edge, zero elsewhere."""
    vals = np.zeros((G.n,) * G.m)
    w = 1.0 / math.factorial(G.m - 1)
    for e in G.edges:
        for perm in itertools.permutations(v - 1 for v in e):
            vals[perm] = w
    return SymTensor._trusted(vals)


def bound_tensor(G: UniformHypergraph, k: int) -> SymTensor:
    """``k**(m-1) * (A + I) - E``."""
    if k < 1:
        raise HypergraphError(f"k must be >= 1, got {k}")
    lam = float(k ** (G.m - 1))
    return lam * (adjacency_tensor(G) + identity(G.m, G.n)) - ones(G.m, G.n)


@dataclass
class CocliqueBound:
    bound: int
    per_k: list  # [(k, Verdict)]
    certified: bool

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "bound": self.bound,
            "certified": self.certified,
            "per_k": [{"k": k, **v.to_dict(timing)} for k, v in self.per_k],
        }


def _detect_k(args) -> Verdict:
    G, k, cfg = args
    return detect(bound_tensor(G, k), cfg)


def coclique_upper_bound(G: UniformHypergraph, cfg: DetectorConfig = DEFAULT_DETECTOR, workers: int = 1) -> CocliqueBound:
    """Smallest ``k`` in ``m-1..n`` whose bound tensor is certified copositive.

    Undecided verdicts never certify.  Without any certificate the trivial
    bound ``n`` is returned with ``certified=False``.  With ``workers > 1``
    all candidate ``k`` run in a process pool; the result is the same as the
    sequential scan.
    """
    ks = list(range(G.m - 1, G.n + 1))
    per_k: list[tuple[int, Verdict]] = []
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            verdicts = list(pool.map(_detect_k, [(G, k, cfg) for k in ks]))
        for k, v in zip(ks, verdicts):
            per_k.append((k, v))
            if v.status is Status.COPOSITIVE:
                return CocliqueBound(k, per_k, True)
    else:
        for k in ks:
            v = _detect_k((G, k, cfg))
            per_k.append((k, v))
            if v.status is Status.COPOSITIVE:
                return CocliqueBound(k, per_k, True)
    return CocliqueBound(G.n, per_k, False)


def is_coclique(G: UniformHypergraph, vertices) -> bool:
    U = set(vertices)
    return not any(U.issuperset(e) for e in G.edges)


def brute_force_coclique(G: UniformHypergraph) -> int:
    """Coclique number by exhaustive search (``n <= 20``)."""
    if G.n > 20:
        raise HypergraphError(f"brute force limited to n <= 20, got n={G.n}")
    masks = [sum(1 << (v - 1) for v in e) for e in G.edges]
    for size in range(G.n, 0, -1):
        for U in itertools.combinations(range(G.n), size):
            um = sum(1 << v for v in U)
            if all(um & em != em for em in masks):
                return size
    return 0
