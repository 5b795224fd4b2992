# The equation A x (+) b = x
#
# Whether it has solutions depends on the heaviest closed walk of the graph
# of A. When that weight is 0 the solutions form a family: one particular
# solution plus anything spanned by the generator columns.

import numpy as np

from maxplus import TropMatrix, TropVector
from maxplus.linalg import add, big_trace, generator, star
from maxplus.solvers import solve_bellman

A = TropMatrix([[0, -2, None, None], [None, 0, 3, -1], [-1, None, 0, -4], [2, None, None, 0]])
print("heaviest closed walk:", big_trace(A))
print("closure A* =")
print(star(A))
print("generators =")
print(generator(A))

# %% non-homogeneous equation

b = TropVector([1, 1, 2, 1])
out = solve_bellman(A, b)
print(out.classification.name, "particular =", out.particular)

# %% every member of the family satisfies the equation

rng = np.random.default_rng(0)
for _ in range(3):
    v = TropVector(rng.integers(4, 10, size=out.generators.shape[1]).astype(float))
    x = add(out.particular, out.generators @ v)
    print(x, "->", add(A @ x, b))
