"""The constructive heart: Hensel lifting and the etale decomposition.

Dualizing a coalgebra gives an Artinian algebra, which splits into local
pieces through lifted idempotents; Hensel/Newton iteration finds the unique
subfield K with A = K (+) m in each piece, and transposing everything back
yields the simple subcoalgebras, the etale part, and the unique coalgebra
retraction onto it.
"""

from coalgkit.coalgebra import dual_coalgebra, polynomial_quotient_algebra, validate
from coalgkit.fields import GF
from coalgkit.polys import Polynomial
from coalgkit.structure import (
    brute_force_group_likes,
    etale_part,
    group_likes,
    hensel_lift_root,
    irreducible_components,
    local_decomposition,
)

F2 = GF(2)

print("== Hensel lifting in F_2[x]/((x^2+x+1)^2) ==")
p = Polynomial.from_ints(F2, [1, 1, 1])
A = polynomial_quotient_algebra(F2, p * p)
root = hensel_lift_root(A, p, [0, 1, 0, 0])  # start from the residue root xbar
print("Newton lifts xbar to", root, "(= xbar^2 + 1), and p(root) = 0 exactly")

dec = local_decomposition(A)
print("local decomposition: dims", [c.dim for c in dec.components],
      "residue degrees", [c.residue.dim for c in dec.components])

print()
print("== etale part of a coalgebra ==")
C = dual_coalgebra(polynomial_quotient_algebra(F2, Polynomial.from_ints(F2, [0, 1, 0, 1])))
data = etale_part(C)  # dual of F_2[x]/(x^3+x) = F_2[x]/(x (x+1)^2)
print("dim C =", C.dim, " dim Et(C) =", data.etale.dim)
print("retraction splits the inclusion:",
      (data.retraction.matrix @ data.inclusion.matrix).data)
comps, iso = irreducible_components(C)
print("irreducible components of dims", [c.dim for c, _ in comps],
      "; the sum maps isomorphically onto C:", validate(iso) == [])

print()
print("== group-likes ==")
gl = group_likes(C, data)
print("structural computation finds", len(gl), "group-likes:", gl.elements)
print("exhaustive search agrees:", brute_force_group_likes(C).elements == sorted(gl.elements))

C4 = dual_coalgebra(polynomial_quotient_algebra(F2, p))
print("the dual of F_4 has", len(group_likes(C4)), "group-likes over F_2",
      "(no algebra map F_4 -> F_2 exists)")
