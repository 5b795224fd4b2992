# Max-plus arithmetic in a few lines
#
# Addition is max, multiplication is ordinary +, and the additive zero is -inf.
# Scalars carry Zero as a tagged value so that -inf never leaks into ordinary
# float arithmetic by accident.

from fractions import Fraction

from maxplus import ONE, ZERO, TropMatrix, TropScalar, TropVector, inv, oplus, otimes, power

# %% scalars

print(oplus(3, 5))            # 5
print(otimes(3, 5))           # 8
print(oplus(ZERO, 7))         # 7: Zero is neutral for max
print(otimes(ZERO, 7))        # -inf: and absorbing for +
print(inv(5), ONE)            # -5 0
print(power(4, Fraction(1, 2)))  # 2: square roots halve the value

# %% vectors and matrices
# None marks a Zero entry in constructor input.

A = TropMatrix([[0, -2, None], [None, 0, 3], [-1, None, 0]])
x = TropVector([1, 2, 3])
print(A)
print("A x =", A @ x)
print("A A =")
print(A @ A)

# %% rows, columns and scalars

row = TropVector([0, 1, 2], row=True)
print("row x =", row @ x)     # a scalar: max of the pairwise sums
print(TropScalar(2.5) > ZERO)
