"""Exact arithmetic and polynomial factorization.

The kernel computes over Q, prime fields F_p and extensions F_q = F_p[x]/(f)
with no floating point anywhere: Fractions, residues, coefficient tuples.
Run with:  python demos/01_exact_fields_and_factoring.py
"""

from fractions import Fraction

from coalgkit.factor import factor_polynomial, roots_in_field
from coalgkit.fields import GF, QQ
from coalgkit.linalg import Matrix, minimal_polynomial
from coalgkit.polys import Polynomial

print("== field arithmetic ==")
half, third = QQ.element(Fraction(1, 2)), QQ.element(Fraction(1, 3))
print("1/2 + 1/3 =", half + third)

F4 = GF(2, [1, 1, 1])  # F_4 = F_2[x]/(x^2+x+1)
x = F4.element((0, 1))
print("in F_4: inverse of x is", x.inverse(), "since x*(x+1) =", x * x.inverse())

print()
print("== factorization ==")
f = Polynomial.from_ints(GF(2), [1, 0, 1, 0, 1])  # x^4 + x^2 + 1
unit, factors = factor_polynomial(f)
print("x^4+x^2+1 over F_2 factors as", [(str(g), m) for g, m in factors])

g = Polynomial.from_ints(QQ, [-2, 0, 1])
print("x^2-2 over Q:", [(str(h), m) for h, m in factor_polynomial(g)[1]], "(irreducible)")

h = Polynomial.from_ints(QQ, [6, -5, 1])
print("x^2-5x+6 over Q has roots", [str(r) for r, _ in roots_in_field(h)])

print()
print("== minimal polynomials of matrices ==")
J = Matrix.from_int_rows(GF(3), [[0, 0], [1, 0]])
print("nilpotent Jordan block over F_3:", minimal_polynomial(J))
C = Matrix.from_int_rows(GF(2), [[0, 1], [1, 1]])
print("companion matrix of x^2+x+1:", minimal_polynomial(C))
