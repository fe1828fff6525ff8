"""Copositivity of eta*I - E around the threshold eta = n**(m-1).

The all-ones tensor E has spectral radius n**(m-1), so eta*I - E is
copositive exactly when eta >= n**(m-1).  Below the threshold the detector
finds a vertex with a negative form value; above it the root simplex is
already certified.
"""

import numpy as np

from coptensor import detect
from coptensor.instances import eta_identity_minus_ones
from coptensor.tensor import eval_form

for m, n, etas in [(3, 3, [1, 8.99, 9, 9.01, 19]), (4, 4, [10, 64, 74])]:
    print(f"m={m} n={n}  threshold n^(m-1) = {n ** (m - 1)}")
    for eta in etas:
        A = eta_identity_minus_ones(eta, m, n)
        v = detect(A)
        line = f"  eta={eta:<6g} {v.status.value:<15} iterations={v.iterations:<4d} simplices={v.stats.simplices}"
        if v.witness is not None:
            w = np.round(v.witness, 4)
            line += f"  witness={w} value={eval_form(A, v.witness):.3g}"
        print(line)

# At eta = n**(m-1) the smallest H-eigenvalue of the Z-part is exactly zero,
# so the tensor sits on the boundary of the cone and is certified with slack.
