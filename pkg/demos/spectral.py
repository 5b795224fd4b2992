# Eigenvalue and eigenvectors of an irreducible matrix
#
# The eigenvalue is the largest mean weight of a cycle in the graph of A.
# Eigenvectors are the fixed points of A shifted by minus the eigenvalue.

import numpy as np

from maxplus import TropMatrix, TropVector
from maxplus.linalg import metric, scale
from maxplus.solvers import eigenvalue, eigenvectors

A = TropMatrix([[2, 4, 4], [2, 3, 5], [3, 2, 3]])
lam = eigenvalue(A)
print("eigenvalue:", lam)

spec = eigenvectors(A)
g = spec.eigen_generators.column(0)
print("eigenvector:", g, "A g =", A @ g, "=", scale(lam, g))

# %% no vector is moved less than an eigenvector
# The Chebyshev distance between A x and x never drops below the eigenvalue.

rng = np.random.default_rng(1)
worst = min(metric(A @ (x := TropVector(rng.uniform(-10, 10, 3))), x).value for _ in range(1000))
print("least distance over 1000 random vectors:", round(worst, 3))
