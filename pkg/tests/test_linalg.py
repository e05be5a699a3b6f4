import itertools
import random

import pytest
from fractions import Fraction

from coalgkit.errors import AmbientMismatch
from coalgkit.fields import GF, QQ
from coalgkit.linalg import (
    Matrix,
    Subspace,
    coequalizer,
    kernel,
    kronecker,
    minimal_polynomial,
    quotient_maps,
    rref,
    subspace_ops,
    tensor_swap,
)
from coalgkit.polys import Polynomial

F2 = GF(2)
F3 = GF(3)
F5 = GF(5)
FIELDS = [QQ, F2, F3, F5]


def rand_matrix(rng, field, rows, cols):
    return Matrix(
        field, rows, cols, [[field.random(rng) for _ in range(cols)] for _ in range(rows)]
    )


def test_rref_examples():
    Z = Matrix.zeros(QQ, 2, 2)
    R, rank = rref(Z)
    assert R == Z and rank == 0

    M = Matrix.from_rows(QQ, [[Fraction(2), Fraction(4)], [Fraction(1), Fraction(2)]])
    R, rank = rref(M)
    assert rank == 1
    assert R.data == [[Fraction(1), Fraction(2)], [Fraction(0), Fraction(0)]]


def test_rref_invertible_det_oracle():
    rng = random.Random(4)
    found = 0
    while found < 12:
        M = rand_matrix(rng, F3, 5, 5)
        if F3.is_zero(M.det()):  # cofactor-expansion oracle
            continue
        R, rank = rref(M)
        assert rank == 5 and R == Matrix.identity(F3, 5)
        found += 1


def test_rref_idempotent():
    rng = random.Random(5)
    for field in FIELDS:
        for _ in range(60):
            M = rand_matrix(rng, field, rng.randint(1, 5), rng.randint(1, 5))
            R, _ = rref(M)
            R2, _ = rref(R)
            assert R2 == R


def test_kernel_examples():
    assert kernel(Matrix.identity(F5, 4)).dim == 0
    K = kernel(Matrix.from_int_rows(F2, [[1, 1]]))
    assert K.vectors() == [[1, 1]]


def test_kernel_rank3_rational():
    # a 4x6 rational matrix of rank exactly 3 has a 3-dimensional kernel
    rng = random.Random(3)
    while True:
        rows = [[QQ.random(rng) for _ in range(6)] for _ in range(3)]
        base = Matrix.from_rows(QQ, rows, 6)
        if base.rank() == 3:
            break
    mix = [QQ.random(rng) for _ in range(3)]
    fourth = [
        sum((mix[i] * rows[i][j] for i in range(3)), start=QQ.zero)
        for j in range(6)
    ]
    M = Matrix.from_rows(QQ, rows + [fourth], 6)
    assert M.rank() == 3
    K = kernel(M)
    assert K.dim == 3
    for v in K.vectors():
        assert all(QQ.is_zero(c) for c in M.apply(v))


def test_rank_nullity():
    rng = random.Random(6)
    for field in FIELDS:
        for _ in range(250):
            rows, cols = rng.randint(1, 6), rng.randint(1, 6)
            M = rand_matrix(rng, field, rows, cols)
            K = kernel(M)
            assert K.dim + M.rank() == cols
            for v in K.vectors():
                assert all(field.is_zero(c) for c in M.apply(v))


def test_subspace_examples():
    A = Subspace.from_vectors(F2, 3, [[1, 0, 0], [0, 1, 0]])
    Z = Subspace.zero(F2, 3)
    assert subspace_ops(A, Z, "sum") == A
    e1 = Subspace.from_vectors(QQ, 2, [[Fraction(1), Fraction(0)]])
    e2 = Subspace.from_vectors(QQ, 2, [[Fraction(0), Fraction(1)]])
    assert subspace_ops(e1, e2, "intersect").dim == 0
    assert subspace_ops(A, Subspace.from_vectors(F2, 3, [[1, 1, 0]]), "contains")
    assert subspace_ops(A, [1, 1, 0], "member")
    with pytest.raises(AmbientMismatch):
        A.sum(Subspace.zero(F2, 4))


def test_subspace_canonical_form():
    rng = random.Random(7)
    for _ in range(100):
        vecs = [[F3.random(rng) for _ in range(4)] for _ in range(3)]
        A = Subspace.from_vectors(F3, 4, vecs)
        shuffled = list(vecs)
        rng.shuffle(shuffled)
        scaled = [[F3.mul(2, c) for c in v] for v in shuffled]
        B = Subspace.from_vectors(F3, 4, scaled + vecs)
        assert A.contains(B) and B.contains(A)
        assert A.basis == B.basis  # identical canonical representation


def test_modular_law_with_enumeration_oracle():
    """dim A + dim B = dim(A+B) + dim(A^B) on 500 random pairs, ambient 6 over
    F_2, with the intersection double-checked by exhaustive enumeration."""
    rng = random.Random(8)
    all_vectors = list(itertools.product([0, 1], repeat=6))
    for trial in range(500):
        A = Subspace.from_vectors(
            F2, 6, [[F2.random(rng) for _ in range(6)] for _ in range(rng.randint(1, 4))]
        )
        B = Subspace.from_vectors(
            F2, 6, [[F2.random(rng) for _ in range(6)] for _ in range(rng.randint(1, 4))]
        )
        S = A.sum(B)
        I = A.intersect(B)
        assert A.dim + B.dim == S.dim + I.dim
        if trial % 25 == 0:
            members = [
                list(v)
                for v in all_vectors
                if A.contains_vector(list(v)) and B.contains_vector(list(v))
            ]
            expected = Subspace.from_vectors(F2, 6, members)
            assert expected == I


def test_kronecker_examples():
    assert kronecker(Matrix.identity(QQ, 2), Matrix.identity(QQ, 3)) == Matrix.identity(QQ, 6)
    rng = random.Random(9)
    for _ in range(30):
        A = rand_matrix(rng, F5, 3, 3)
        B = rand_matrix(rng, F5, 3, 3)
        u = [F5.random(rng) for _ in range(3)]
        v = [F5.random(rng) for _ in range(3)]
        uv = [F5.mul(a, b) for a in u for b in v]
        lhs = kronecker(A, B).apply(uv)
        Au, Bv = A.apply(u), B.apply(v)
        rhs = [F5.mul(a, b) for a in Au for b in Bv]
        assert lhs == rhs


def test_tensor_swap():
    rng = random.Random(10)
    tau = tensor_swap(F5, 2, 2)
    u = [F5.random(rng) for _ in range(2)]
    v = [F5.random(rng) for _ in range(2)]
    uv = [F5.mul(a, b) for a in u for b in v]
    vu = [F5.mul(a, b) for a in v for b in u]
    assert tau.apply(uv) == vu


def test_kronecker_associative():
    rng = random.Random(11)
    A = rand_matrix(rng, F3, 2, 3)
    B = rand_matrix(rng, F3, 2, 2)
    C = rand_matrix(rng, F3, 3, 2)
    assert kronecker(kronecker(A, B), C) == kronecker(A, kronecker(B, C))


def test_coequalizer_examples():
    rng = random.Random(12)
    f = rand_matrix(rng, F5, 4, 3)
    coeq = coequalizer(f, f)
    assert coeq.dim == 4 and coeq.projection == Matrix.identity(F5, 4)

    # f - g surjective -> dim 0
    f = Matrix.identity(F5, 3)
    g = Matrix.zeros(F5, 3, 3)
    assert coequalizer(f, g).dim == 0

    for field in FIELDS:
        for _ in range(40):
            rows, cols = rng.randint(1, 6), rng.randint(1, 6)
            f = rand_matrix(rng, field, rows, cols)
            g = rand_matrix(rng, field, rows, cols)
            coeq = coequalizer(f, g)
            h = f - g
            assert coeq.dim + h.rank() == rows
            assert (coeq.projection @ h).is_zero()
            assert coeq.projection.rank() == coeq.dim


def test_coequalizer_universal_property():
    rng = random.Random(13)
    for _ in range(40):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        f = rand_matrix(rng, QQ, rows, cols)
        g = rand_matrix(rng, QQ, rows, cols)
        coeq = coequalizer(f, g)
        u = rand_matrix(rng, QQ, 3, coeq.dim)
        h = u @ coeq.projection  # a cone: h(f - g) = 0
        recovered = coeq.factor(h)
        assert recovered == u  # uniqueness: projection is surjective


def test_quotient_maps():
    S = Subspace.from_vectors(F2, 4, [[1, 0, 1, 0], [0, 1, 1, 1]])
    q, s = quotient_maps(S)
    assert q.rows == 2 and (q @ s) == Matrix.identity(F2, 2)
    for v in S.vectors():
        assert all(F2.is_zero(c) for c in q.apply(v))


def test_minimal_polynomial_examples():
    assert minimal_polynomial(Matrix.identity(QQ, 3)) == Polynomial.from_ints(QQ, [-1, 1])
    J = Matrix.from_int_rows(F3, [[0, 0], [1, 0]])
    assert minimal_polynomial(J) == Polynomial.from_ints(F3, [0, 0, 1])
    C = Matrix.from_int_rows(F2, [[0, 1], [1, 1]])
    m = minimal_polynomial(C)
    assert m == Polynomial.from_ints(F2, [1, 1, 1])
    # direct matrix substitution oracle
    acc = Matrix.zeros(F2, 2, 2)
    power = Matrix.identity(F2, 2)
    for c in m.coeffs:
        acc = acc + power.scale(c)
        power = power @ C
    assert acc.is_zero()


def test_minimal_polynomial_divides_characteristic_and_is_minimal():
    rng = random.Random(14)
    for _ in range(40):
        T = rand_matrix(rng, F2, 3, 3)
        m = minimal_polynomial(T)
        # m(T) = 0
        acc = Matrix.zeros(F2, 3, 3)
        power = Matrix.identity(F2, 3)
        for c in m.coeffs:
            acc = acc + power.scale(c)
            power = power @ T
        assert acc.is_zero()
        # no proper monic divisor annihilates T: divide out each factor once
        from coalgkit.factor import factor_polynomial

        _, factors = factor_polynomial(m)
        for g, _ in factors:
            q = m // g
            acc = Matrix.zeros(F2, 3, 3)
            power = Matrix.identity(F2, 3)
            for c in q.coeffs:
                acc = acc + power.scale(c)
                power = power @ T
            assert not acc.is_zero()


def test_bareiss_against_plain_gauss_jordan():
    """Fraction-free elimination agrees with a dense Fraction oracle on
    mid-size rational matrices with planted row dependencies."""
    rng = random.Random(888)

    def plain_rref(rows_in):
        rows = [list(r) for r in rows_in]
        nr, nc = len(rows), len(rows[0])
        piv = []
        r = 0
        for c in range(nc):
            pr = next((i for i in range(r, nr) if rows[i][c] != 0), None)
            if pr is None:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            inv = Fraction(1) / rows[r][c]
            rows[r] = [a * inv for a in rows[r]]
            for i in range(nr):
                if i != r and rows[i][c] != 0:
                    f = rows[i][c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            piv.append(c)
            r += 1
            if r == nr:
                break
        return rows, piv

    for trial in range(6):
        nr, nc = rng.randint(10, 24), rng.randint(10, 24)
        data = [
            [Fraction(rng.randint(-50, 50), rng.randint(1, 20)) for _ in range(nc)]
            for _ in range(nr)
        ]
        for _ in range(rng.randint(0, 4)):
            i, j = rng.randrange(nr), rng.randrange(nr)
            c = Fraction(rng.randint(-3, 3))
            data[i] = [a + c * b for a, b in zip(data[i], data[j])]
        M = Matrix(QQ, nr, nc, [list(r) for r in data])
        R, rank, pivots = M.rref()
        oracle_rows, oracle_piv = plain_rref(data)
        assert pivots == oracle_piv
        assert R.data[: len(pivots)] == oracle_rows[: len(oracle_piv)]
