"""Coalgebras as structure tensors, and the duality with algebras.

A finite-dimensional cocommutative coalgebra is a matrix pair (delta,
epsilon); transposing them gives a commutative algebra and vice versa.  The
smallest interesting example is the "dual numbers" coalgebra, the dual of
F_2[x]/(x^2): a group-like g and a primitive t with

    delta(g) = g (x) g,   delta(t) = g (x) t + t (x) g.
"""

from coalgkit.coalgebra import (
    diagonal_coalgebra,
    direct_sum,
    dual_algebra,
    dual_coalgebra,
    generated_subcoalgebra,
    polynomial_quotient_algebra,
    sub,
    validate,
)
from coalgkit.errors import NotASubcoalgebra
from coalgkit.fields import GF
from coalgkit.linalg import Subspace
from coalgkit.polys import Polynomial

F2 = GF(2)

A = polynomial_quotient_algebra(F2, Polynomial.from_ints(F2, [0, 0, 1]))
D = dual_coalgebra(A)
print("dual numbers coalgebra: dim", D.dim, "axioms:", validate(D) or "all hold")
print("its dual algebra is F_2[x]/(x^2) again:", dual_algebra(D) == A)

print()
print("== pointwise coalgebras on sets ==")
X3 = diagonal_coalgebra(3, F2)
print("k^delta on 3 points: every basis vector is group-like, dim", X3.dim)
S, _, _ = direct_sum(diagonal_coalgebra(1, F2), diagonal_coalgebra(1, F2))
print("k (+) k equals the pointwise coalgebra on 2 points:", S == diagonal_coalgebra(2, F2))

print()
print("== subcoalgebras ==")
span_g = Subspace.from_vectors(F2, 2, [[1, 0]])
Dg, _ = sub(D, span_g)
print("span{g} is a subcoalgebra of dimension", Dg.dim)
try:
    sub(D, Subspace.from_vectors(F2, 2, [[0, 1]]))
except NotASubcoalgebra as exc:
    print("span{t} is not one: witness vector", exc.witness)

gen, _ = generated_subcoalgebra(D, Subspace.from_vectors(F2, 2, [[0, 1]]))
print("the subcoalgebra generated by t has dimension", gen.dim, "(all of D)")
