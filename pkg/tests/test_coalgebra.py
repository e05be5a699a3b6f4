import random

import pytest

from coalgkit import corpus
from coalgkit.coalgebra import (
    Coalgebra,
    CoalgebraMorphism,
    counit_morphism,
    diagonal_coalgebra,
    direct_sum,
    dual_algebra,
    dual_coalgebra,
    dual_morphism,
    generated_subcoalgebra,
    polynomial_quotient_algebra,
    pushout,
    quotient,
    sub,
    tensor,
    trivial_coalgebra,
    validate,
)
from coalgkit.errors import NotACoideal, NotASubcoalgebra
from coalgkit.fields import GF, QQ
from coalgkit.linalg import Matrix, Subspace, kronecker
from coalgkit.oracles import minimal_subcoalgebra
from coalgkit.polys import Polynomial
from coalgkit.structure import brute_force_group_likes

F2 = GF(2)
F3 = GF(3)


def dual_numbers(field=F2):
    delta = Matrix.zeros(field, 4, 2)
    delta.data[0][0] = field.one  # g -> g (x) g
    delta.data[1][1] = field.one  # t -> g (x) t
    delta.data[2][1] = field.one  #      + t (x) g
    eps = Matrix(field, 1, 2, [[field.one, field.zero]])
    return Coalgebra(field, 2, delta, eps)


def test_validate_examples():
    assert validate(trivial_coalgebra(F2)) == []
    assert validate(dual_numbers()) == []
    # breaking the counit: delta(t) = t (x) t fails with witness index 1
    delta = Matrix.zeros(F2, 4, 2)
    delta.data[0][0] = 1
    delta.data[3][1] = 1
    bad = Coalgebra(F2, 2, delta, Matrix(F2, 1, 2, [[1, 0]]))
    report = validate(bad)
    assert ("counit-left", 1) in report and ("counit-right", 1) in report


def test_dual_examples():
    # pointwise coalgebra on two points dualizes to the split product algebra
    A = dual_algebra(diagonal_coalgebra(2, F2))
    assert A.mul([1, 0], [1, 0]) == [1, 0]
    assert A.mul([1, 0], [0, 1]) == [0, 0]
    assert validate(A) == []

    # F2[x]/(x^2) dualizes to the dual-numbers coalgebra
    Ax = polynomial_quotient_algebra(F2, Polynomial.from_ints(F2, [0, 0, 1]))
    assert dual_coalgebra(Ax) == dual_numbers()


def test_double_dual_round_trip():
    rng = random.Random(21)
    for i in range(100):
        field = [QQ, F2, F3][i % 3]
        C = corpus.random_coalgebra(rng, field, 5)
        assert dual_coalgebra(dual_algebra(C)) == C
        A = corpus.random_algebra(rng, field, rng.randint(1, 4))
        assert dual_algebra(dual_coalgebra(A)) == A


def test_dual_morphism_contravariant():
    rng = random.Random(22)
    for i in range(40):
        field = [QQ, F2, F3][i % 3]
        phi = corpus.random_morphism(rng, field, 4)
        M = dual_morphism(phi)
        A, B = dual_algebra(phi.target), dual_algebra(phi.source)
        # M: A -> B is an algebra morphism
        assert M.apply(A.unit) == list(B.unit)
        assert M @ A.mult == B.mult @ kronecker(M, M)
        # transposing back recovers phi on the double duals
        back = CoalgebraMorphism(
            dual_coalgebra(dual_algebra(phi.source)),
            dual_coalgebra(dual_algebra(phi.target)),
            M.transpose(),
        )
        assert validate(back) == [] and back.matrix == phi.matrix


def test_diagonal_examples():
    empty = diagonal_coalgebra(0, F2)
    assert empty.dim == 0 and validate(empty) == []
    assert diagonal_coalgebra(1, F2) == trivial_coalgebra(F2)
    D3 = diagonal_coalgebra(3, F2)
    assert validate(D3) == []
    gl = brute_force_group_likes(D3)
    assert sorted(gl.elements) == sorted(
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    )


def test_direct_sum_is_diagonal_on_points():
    k = trivial_coalgebra(F2)
    S, i1, i2 = direct_sum(k, k)
    assert S == diagonal_coalgebra(2, F2)
    assert validate(i1) == [] and validate(i2) == []


def test_sub_examples():
    D = dual_numbers()
    Dg, incl = sub(D, Subspace.from_vectors(F2, 2, [[1, 0]]))
    assert Dg == trivial_coalgebra(F2)
    assert validate(incl) == []
    with pytest.raises(NotASubcoalgebra) as err:
        sub(D, Subspace.from_vectors(F2, 2, [[0, 1]]))
    assert err.value.witness == [0, 1]


def test_quotient_examples():
    D = dual_numbers()
    Q, proj = quotient(D, Subspace.from_vectors(F2, 2, [[0, 1]]))
    assert Q.dim == 1 and validate(Q) == [] and validate(proj) == []
    with pytest.raises(NotACoideal):
        quotient(D, Subspace.from_vectors(F2, 2, [[1, 0]]))  # eps(g) = 1 != 0


def test_pushout():
    D = dual_numbers()
    k = trivial_coalgebra(F2)
    eps = counit_morphism(D)
    P, fB, fC = pushout(eps, eps)
    assert validate(P) == [] and validate(fB) == [] and validate(fC) == []
    assert fB @ eps == fC @ eps  # pushout square commutes
    # pushout along identities collapses to the object itself
    ident = CoalgebraMorphism(D, D, Matrix.identity(F2, 2))
    P2, g1, g2 = pushout(ident, ident)
    assert P2.dim == 2 and g1.matrix == g2.matrix


def test_generated_subcoalgebra_examples():
    D = dual_numbers()
    span_g = Subspace.from_vectors(F2, 2, [[1, 0]])
    span_t = Subspace.from_vectors(F2, 2, [[0, 1]])
    G1, _ = generated_subcoalgebra(D, span_g)
    G2, i2 = generated_subcoalgebra(D, span_t)
    assert G1.dim == 1 and G2.dim == 2
    assert i2.image().contains(span_t)

    # (F2[x]/(x^3))^dual: generated by the top dual vector is everything
    A3 = polynomial_quotient_algebra(F2, Polynomial.from_ints(F2, [0, 0, 0, 1]))
    C3 = dual_coalgebra(A3)
    top, _ = generated_subcoalgebra(C3, Subspace.from_vectors(F2, 3, [[0, 0, 1]]))
    assert top.dim == 3
    mid, _ = generated_subcoalgebra(C3, Subspace.from_vectors(F2, 3, [[0, 1, 0]]))
    assert mid.dim == 2
    # brute-force minimal subcoalgebra agrees
    oracle = minimal_subcoalgebra(C3, Subspace.from_vectors(F2, 3, [[0, 0, 1]]))
    assert oracle.dim == 3


def test_generated_equals_intersection_of_subcoalgebras():
    """Exhaustive check that the generated subcoalgebra is the minimal one,
    over F_2 at dim <= 4."""
    rng = random.Random(23)
    done = 0
    while done < 40:
        C = corpus.random_coalgebra(rng, F2, 4)
        if not 1 <= C.dim <= 4:
            continue
        v = corpus.random_vector(rng, F2, C.dim, nonzero=True)
        S = Subspace.from_vectors(F2, C.dim, [v])
        D, incl = generated_subcoalgebra(C, S)
        assert incl.image() == minimal_subcoalgebra(C, S)
        done += 1


def test_constructions_all_validate():
    rng = random.Random(24)
    for i in range(60):
        field = [QQ, F2, F3][i % 3]
        C = corpus.random_coalgebra(rng, field, 6)
        assert validate(C) == []


def test_tensor_group_likes_on_diagonals():
    C = diagonal_coalgebra(2, F2)
    D = diagonal_coalgebra(2, F2)
    T = tensor(C, D)
    assert validate(T) == []
    gl = brute_force_group_likes(T)
    expected = []
    for i in range(2):
        for j in range(2):
            v = [0] * 4
            v[i * 2 + j] = 1
            expected.append(v)
    assert sorted(gl.elements) == sorted(expected)


def test_zero_dimensional_coalgebra():
    Z = diagonal_coalgebra(0, F2)
    assert validate(Z) == []
    S, _, _ = direct_sum(Z, trivial_coalgebra(F2))
    assert S.dim == 1


def test_pushout_universal_property():
    D = dual_coalgebra(
        polynomial_quotient_algebra(F2, Polynomial.from_ints(F2, [0, 0, 1]))
    )
    eps = counit_morphism(D)
    P, fB, fC = pushout(eps, eps)
    k = trivial_coalgebra(F2)
    u = CoalgebraMorphism(k, k, Matrix.identity(F2, 1))
    # (u, u) is a cocone since u o eps = u o eps; it factors through P
    stacked = fB.matrix.hstack(fC.matrix)
    cocone = u.matrix.hstack(u.matrix)
    w = stacked.transpose().solve_matrix(cocone.transpose())
    assert w is not None
    w = w.transpose()
    assert w @ fB.matrix == u.matrix and w @ fC.matrix == u.matrix
    assert validate(CoalgebraMorphism(P, k, w)) == []
    # uniqueness: (fB, fC) jointly surject onto P
    assert stacked.rank() == P.dim
