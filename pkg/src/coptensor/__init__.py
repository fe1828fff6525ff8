"""Copositivity detection for symmetric tensors by simplicial branch and bound,
with applications to hypergraph coclique bounds and scalar vacuum stability."""

__version__ = "0.1.0"

from .cones import ConeKind, member, n_part, z_part
from .detector import DetectorConfig, Simplex, Status, Verdict, bisect, detect
from .hypergraph import (
    UniformHypergraph,
    adjacency_tensor,
    bound_tensor,
    brute_force_coclique,
    coclique_upper_bound,
)
from .physics import QuarticCouplings, analytic_stationary, coupling_tensor, vacuum_stability
from .spectral import PowerConfig, SpectralResult, spectral_radius, z_min_h_eigenvalue
from .tensor import (
    OrbitEntrySpec,
    SymTensor,
    build,
    congruence,
    eval_contraction,
    eval_form,
    identity,
    inner,
    norm,
    ones,
    rank_one_inner,
    zeros,
)
