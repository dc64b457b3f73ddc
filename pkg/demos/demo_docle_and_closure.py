"""Docles of monomial ideals and the closure operator.

A walk through the combinatorial core: the docle (maximal monomials outside
an ideal), the inverse ideal of an antichain, and the closure operator that
is monotone for the refined order but not for plain inclusion.
"""

from apolar import (
    Antichain,
    Context,
    ExponentVector,
    closure,
    docle,
    inverse_ideal,
    is_subideal,
    parse_ideal,
    sq_leq,
)
from apolar.cli import _staircase_grid

ctx = Context.of_dim(2)

# The unique zero-dimensional monomial ideal with docle {x^2 y} is (x^3, y^2).
j = parse_ideal("(x1^3, x2^2)", ctx)
print("J =", j)
print("docle(J) =", docle(j))

m = Antichain(ctx, (ExponentVector(ctx, (2, 1)),))
print("inverse_ideal({x1^2*x2}) =", inverse_ideal(m))

# A staircase picture: '#' lies in the ideal, '*' marks the docle.
print("\nstaircase of J:")
for row in reversed(_staircase_grid(j)):
    print("".join(row))

# Round trip on a bigger example.
i = parse_ideal("(x1^4, x1^2*x2^2, x2^5)", ctx)
print("\nI =", i)
print("docle(I) =", docle(i))
print("inverse_ideal(docle(I)) == I:", inverse_ideal(docle(i)) == i)

# The closure of an ideal keeps everything outside the downset of its docle.
emmy = parse_ideal("(x1^2, x1*x2)", ctx)
print("\nclosure of", emmy, "is", closure(emmy))

# Closure is not monotone for plain inclusion: U = (x y) sits inside
# V = (x, y), yet the closure of U is the whole monoid while V is closed.
u = parse_ideal("(x1*x2)", ctx)
v = parse_ideal("(x1, x2)", ctx)
print("\nU =", u, " V =", v)
print("U subset of V:", is_subideal(u, v))
cu = closure(u)
print("closure(U) =", cu, "(whole poset)" if cu.whole_poset else "")
print("closure(V) =", closure(v))
print("closure(U) subset of closure(V):", is_subideal(cu, closure(v)))

# For the refined order (inclusion + reverse docle containment) the closure
# is a genuine closure operator: extensive, idempotent, monotone.
print("\nU sq_leq closure(U):", sq_leq(u, cu))
print("closure(closure(U)) == closure(U):", closure(cu) == cu)
