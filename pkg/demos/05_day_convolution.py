"""Day convolution over a finite linear monoidal category.

The convolution of two presheaves is computed per object as an explicit
coequalizer over the category's basis morphisms.  Representables multiply
like their objects (h_X (*) h_Y = h_{X(x)Y}), convolution over a
group-discrete category is the graded tensor product, and over the
one-object category on a commutative algebra R it is the module tensor
product over R.
"""

from coalgkit.coalgebra import polynomial_quotient_algebra
from coalgkit.day import (
    cyclic_group_category,
    day_convolve,
    internal_hom,
    nat_space,
    one_object_algebra_category,
    poset_max_category,
    representable,
    unit_day_coalgebra,
    yoneda_iso,
)
from coalgkit.fields import GF
from coalgkit.linalg import Matrix
from coalgkit.day import DayPresheaf
from coalgkit.polys import Polynomial

F2 = GF(2)
Z2 = cyclic_group_category(F2, 2)

print("== Yoneda monoidality on the Z/2 category ==")
for X in range(2):
    for Y in range(2):
        T = day_convolve(representable(Z2, X), representable(Z2, Y))
        fwd, back = yoneda_iso(T, X, Y)
        ok = fwd.compose(back).is_identity() and back.compose(fwd).is_identity()
        print(f"h_{X} (*) h_{Y} = h_{(X + Y) % 2}:", ok)

print()
print("== graded convolution ==")


def graded(dims):
    actions = {(a, b, i): Matrix.identity(F2, dims[a]) for (a, b, i) in Z2.all_basis_mors()}
    return DayPresheaf(Z2, dims, actions)


F, G = graded([2, 1]), graded([1, 3])
T = day_convolve(F, G)
print("dims of F:", F.dims, " G:", G.dims, " F (*) G:", T.presheaf.dims,
      "(graded pieces 2*1+1*3 and 2*3+1*1)")

print()
print("== convolution as tensor over a ring ==")
R = polynomial_quotient_algebra(F2, Polynomial.from_ints(F2, [0, 0, 1]))
OB = one_object_algebra_category(F2, R)
M = representable(OB, 0)  # R as a module over itself
print("R (*) R over R = k[t]/(t^2) has dimension", day_convolve(M, M).dim(0))

print()
print("== internal hom and the adjunction ==")
P2 = poset_max_category(F2, 2)
Fp = representable(P2, 1)
Gp = graded_poset = representable(P2, 0)
IH = internal_hom(Fp, Gp)
T = day_convolve(Gp, Fp)
print("dim Nat(G (*) F, F) =", len(nat_space(T.presheaf, Fp)),
      " = dim Nat(G, [F, F]) =", len(nat_space(Gp, internal_hom(Fp, Fp).presheaf)))

print()
print("== the unit coalgebra ==")
print("h_1 with the inverse Yoneda coproduct satisfies the comonoid axioms:",
      unit_day_coalgebra(Z2).validate() == [])
