"""Upper bounds on the coclique number of small uniform hypergraphs.

If k**(m-1) * (A + I) - E is copositive then no coclique has more than k
vertices.  The scan starts at k = m - 1 and stops at the first certificate;
the exhaustive search gives the true value for comparison.
"""

import numpy as np

from coptensor import UniformHypergraph, bound_tensor, brute_force_coclique, coclique_upper_bound, detect
from coptensor.tensor import eval_form

star = UniformHypergraph.hyperstar(3)
T = bound_tensor(star, 2)
print("3-uniform hyper-star, f(1,1,1) for k=2:", eval_form(T, [1, 1, 1]))
v = detect(T)
print("  detector:", v.status.value, "after", v.iterations, "iterations, witness", np.round(v.witness, 4))

graphs = {
    "hyper-star m=3": star,
    "hyper-star m=4": UniformHypergraph.hyperstar(4),
    "complete K(4,3)": UniformHypergraph.complete(4, 3),
    "path on 5": UniformHypergraph(5, 3, [(1, 2, 3), (2, 3, 4), (3, 4, 5)]),
}
for name, G in graphs.items():
    res = coclique_upper_bound(G)
    scan = ", ".join(f"k={k}:{v.status.value}" for k, v in res.per_k)
    print(f"{name:<16} omega={brute_force_coclique(G)}  bound={res.bound}  [{scan}]")
