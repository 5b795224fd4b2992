# Solving A x = d and what to do when it has no solution
#
# The greatest x with A x <= d is obtained by residuation. Comparing A applied
# to it with d gives a scalar residual: 0 when the equation is solvable, and
# otherwise the Chebyshev distance from d to the closest reachable vector,
# doubled.

from maxplus import TropMatrix, TropVector
from maxplus.linalg import metric
from maxplus.solvers import solve_first_kind

A = TropMatrix([[8, 10, None, None], [None, 5, 4, 8], [6, 12, 11, 7], [None, None, None, 12]])

# %% a right-hand side in the image of A

out = solve_first_kind(A, TropVector([14, 11, 16, 15]))
print("residual:", out.delta)
print("greatest solution:", out.exact_max_solution)

# %% a right-hand side outside the image

d = TropVector([15, 15, 15, 15])
out = solve_first_kind(A, d)
print("residual:", out.delta)
for name in ("0", "1", "2"):
    x, y = getattr(out, "x" + name), getattr(out, "y" + name)
    print(f"x{name} = {x}  A x{name} = {y}  distance to d = {metric(y, d)}")

# x1 undershoots d, x2 overshoots it, and x0 sits halfway: its image is the
# best approximation of d in the Chebyshev sense.
