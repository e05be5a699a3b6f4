"""Purity, invariance, and generated subcoalgebras for Day convolution.

Convolution does not preserve injections: over R = k[t]/(t^2), the submodule
tR of R dies after tensoring with the residue module k.  pure_closure repairs
this by adjoining the tensor legs of each kernel witness; invariant_closure
does the same for coproduct values; alternating the two grows any
sub-presheaf of a Day coalgebra into a subcoalgebra, which is what makes
small generators exist.
"""

from coalgkit.coalgebra import polynomial_quotient_algebra
from coalgkit.day import (
    DayCoalgebra,
    DayPresheaf,
    DayTensor,
    cyclic_group_category,
    identity_nat,
    is_day_morphism,
    NatTransform,
    one_object_algebra_category,
    representable,
)
from coalgkit.dayclosure import (
    SubPresheaf,
    generated_day_subcoalgebra,
    invariant_closure,
    pure_closure,
    purity_kernels,
    separate_by_generator,
)
from coalgkit.fields import GF
from coalgkit.linalg import Matrix
from coalgkit.polys import Polynomial

F2 = GF(2)


def graded_dual_numbers():
    """The Z/2-graded dual numbers, built by hand: a group-like g in degree
    e and a primitive t in degree sigma with delta(t) = g(x)t + t(x)g."""
    cat = cyclic_group_category(F2, 2)
    F = DayPresheaf(cat, [1, 1],
                    {k: Matrix.identity(F2, 1) for k in cat.all_basis_mors()})
    conv = DayTensor(F, F)
    dg = conv.insert(0, 0, 0, [1], [1], [1])
    dt1 = conv.insert(1, 0, 1, [1], [1], [1])
    dt2 = conv.insert(1, 1, 0, [1], [1], [1])
    delta = NatTransform(F, conv.presheaf, [
        Matrix.from_cols(F2, [dg], conv.dim(0)),
        Matrix.from_cols(F2, [[F2.add(a, b) for a, b in zip(dt1, dt2)]], conv.dim(1)),
    ])
    eps = NatTransform(F, representable(cat, cat.unit),
                       [Matrix.from_int_rows(F2, [[1]]), Matrix.zeros(F2, 0, 1)])
    return DayCoalgebra(F, delta, eps, conv)

print("== a purity kernel and its repair ==")
R = polynomial_quotient_algebra(F2, Polynomial.from_ints(F2, [0, 0, 1]))
OB = one_object_algebra_category(F2, R)
M = representable(OB, 0)                      # R as a module
N = DayPresheaf(OB, [1], {(0, 0, 0): Matrix.identity(F2, 1),
                          (0, 0, 1): Matrix.zeros(F2, 1, 1)})  # the residue k
tR = SubPresheaf.from_vectors(M, {0: [[0, 1]]})
kernels, _, _, _ = purity_kernels(M, tR.close(), N)
print("tR (x)_R k -> R (x)_R k has kernel of dimension", kernels[0].dim)
grown = pure_closure(M, tR, N)
print("pure closure grows tR to dimension", grown.dims(), "(all of R)")

print()
print("== invariance and generation in a graded coalgebra ==")
GD = graded_dual_numbers()  # Z/2-graded dual numbers: g in degree e, t in degree sigma
line_t = SubPresheaf.from_vectors(GD.presheaf, {1: [[1]]})
print("the coproduct of t has legs g and t, so the invariant closure of",
      "span{t} is", invariant_closure(GD, line_t).dims())
sub, incl, spaces = generated_day_subcoalgebra(GD, line_t)
print("generated subcoalgebra dims:", spaces.dims(),
      "; axioms:", sub.validate() or "all hold",
      "; inclusion is a comonoid map:", is_day_morphism(sub, GD, incl))

print()
print("== separating two morphisms by a small subobject ==")
eta = identity_nat(GD.presheaf)
psi = NatTransform(GD.presheaf, GD.presheaf,
                   [Matrix.identity(F2, 1), Matrix.zeros(F2, 1, 1)])  # kills t
subc, _, witness = separate_by_generator(GD, eta, psi)
print("identity vs t-collapse are separated on a subcoalgebra of dims",
      witness.dims())
