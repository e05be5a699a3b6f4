import itertools
import random


from coalgkit import corpus
from coalgkit.coalgebra import (
    Coalgebra,
    CoalgebraMorphism,
    counit_morphism,
    diagonal_coalgebra,
    dual_coalgebra,
    polynomial_quotient_algebra,
    validate,
)
from coalgkit.fields import GF, QQ
from coalgkit.linalg import Matrix, Subspace
from coalgkit.oracles import unique_retraction
from coalgkit.polys import Polynomial
from coalgkit.structure import (
    brute_force_group_likes,
    etale_part,
    gp_adjunction_checks,
    group_likes,
    hensel_lift_root,
    irreducible_components,
    local_decomposition,
    naturality_suite,
    radical,
    trace_form_nondegenerate,
    wedderburn_splitting,
)

F2 = GF(2)
F3 = GF(3)
F5 = GF(5)


def pqa(field, ints):
    return polynomial_quotient_algebra(field, Polynomial.from_ints(field, ints))


def dual_numbers():
    delta = Matrix.zeros(F2, 4, 2)
    delta.data[0][0] = 1
    delta.data[1][1] = 1
    delta.data[2][1] = 1
    return Coalgebra(F2, 2, delta, Matrix(F2, 1, 2, [[1, 0]]))


# -- radical ----------------------------------------------------------------


def test_radical_of_field_is_zero():
    assert radical(pqa(F2, [1, 1, 1])).dim == 0
    assert radical(pqa(QQ, [-2, 0, 1])).dim == 0


def test_radical_dual_numbers():
    assert radical(pqa(F2, [0, 0, 1])).vectors() == [[0, 1]]
    assert radical(pqa(QQ, [0, 0, 1])).vectors() == [[QQ.zero, QQ.one]]


def test_radical_squared_quadratic_by_enumeration():
    # F2[x]/((x^2+x+1)^2): nilpotents found by walking all 16 elements
    A = pqa(F2, [1, 0, 1, 0, 1])
    expected = []
    for bits in itertools.product([0, 1], repeat=4):
        x = list(bits)
        if all(F2.is_zero(c) for c in A.power(x, 4)) and any(bits):
            expected.append(x)
    R = radical(A)
    assert R.dim == 2
    members = [
        list(v)
        for v in itertools.product([0, 1], repeat=4)
        if any(v) and R.contains_vector(list(v))
    ]
    assert sorted(expected) == sorted(members)


def test_semisimple_quotient_has_nondegenerate_trace_form():
    rng = random.Random(31)
    from coalgkit.structure import quotient_algebra

    for i in range(40):
        field = [QQ, F2, F3, F5][i % 4]
        A = corpus.random_algebra(rng, field, rng.randint(1, 5))
        Abar, _, _ = quotient_algebra(A, radical(A))
        assert trace_form_nondegenerate(Abar)


# -- local decomposition ------------------------------------------------------


def test_local_decomposition_split_quadratic():
    dec = local_decomposition(pqa(F2, [0, 1, 1]))  # x^2 + x = x(x+1)
    assert [c.dim for c in dec.components] == [1, 1]
    assert sorted(dec.idempotents) == [[0, 1], [1, 1]]


def test_local_decomposition_local_quartic():
    dec = local_decomposition(pqa(F2, [1, 0, 1, 0, 1]))  # (x^2+x+1)^2
    assert [c.dim for c in dec.components] == [4]
    assert [c.residue.dim for c in dec.components] == [2]
    assert dec.components[0].nilpotency_index == 2


def test_local_decomposition_crt():
    # x^3 + x = x (x+1)^2 over F2: components of dims 1 and 2
    dec = local_decomposition(pqa(F2, [0, 1, 0, 1]))
    assert [c.dim for c in dec.components] == [1, 2]
    A = dec.algebra
    for c in dec.components:
        assert A.mul(c.idempotent, c.idempotent) == c.idempotent


def test_local_decomposition_random_reassembly():
    rng = random.Random(32)
    for i in range(40):
        field = [QQ, F2, F3, F5][i % 4]
        A = corpus.random_algebra(rng, field, rng.randint(1, 5))
        dec = local_decomposition(A)
        assert sum(c.dim for c in dec.components) == A.dim
        total = [field.zero] * A.dim
        for c in dec.components:
            total = [field.add(a, b) for a, b in zip(total, c.idempotent)]
        assert total == list(A.unit)
        for c in dec.components:
            assert (c.projection @ c.embedding) == Matrix.identity(field, c.dim)
            assert c.radical.dim == c.dim - c.residue.dim


# -- Wedderburn / Hensel -------------------------------------------------------


def test_hensel_witness():
    p = Polynomial.from_ints(F2, [1, 1, 1])
    A = pqa(F2, [1, 0, 1, 0, 1])
    lifted = hensel_lift_root(A, p, [0, 1, 0, 0])
    assert lifted == [1, 0, 1, 0]  # xbar^2 + 1, in one Newton step (p' = 1)
    roots = [
        list(x)
        for x in itertools.product([0, 1], repeat=4)
        if all(F2.is_zero(c) for c in A.eval_poly(p, list(x)))
    ]
    assert lifted in roots and len(roots) == 2


def test_wedderburn_field_case():
    A = pqa(F2, [1, 1, 1])  # already a field
    comp = local_decomposition(A).components[0]
    w = wedderburn_splitting(comp)
    assert w.field_datum.dim == 2
    assert w.retract @ w.embedding == Matrix.identity(F2, 2)
    assert comp.radical.dim == 0


def test_wedderburn_trivial_residue():
    A = pqa(F3, [0, 0, 1])  # F3[x]/(x^2), residue F3
    comp = local_decomposition(A).components[0]
    w = wedderburn_splitting(comp)
    assert w.field_datum.dim == 1
    # the retract kills xbar
    assert w.retract.apply([0, 1]) == [0]


def test_wedderburn_local_quartic():
    A = pqa(F2, [1, 0, 1, 0, 1])
    comp = local_decomposition(A).components[0]
    w = wedderburn_splitting(comp)
    K_span = Subspace.from_vectors(F2, 4, [w.embedding.col(j) for j in range(2)])
    assert K_span == Subspace.from_vectors(F2, 4, [[1, 0, 0, 0], [1, 0, 1, 0]])
    stacked = Matrix.from_cols(
        F2, [w.embedding.col(j) for j in range(2)] + comp.radical.vectors(), 4
    )
    assert stacked.rank() == 4  # A = K (+) m


# -- etale part ------------------------------------------------------------------


def test_etale_examples():
    X = diagonal_coalgebra(3, F2)
    data = etale_part(X)
    assert data.etale.dim == 3 and data.inclusion.matrix.rank() == 3

    D = dual_numbers()
    dataD = etale_part(D)
    assert dataD.etale.dim == 1
    assert dataD.retraction.matrix.data == [[1, 0]]  # r(t) = 0

    C3 = dual_coalgebra(pqa(F2, [0, 1, 0, 1]))
    assert etale_part(C3).etale.dim == 2


def test_etale_idempotent_fixed_point():
    rng = random.Random(39)
    for i in range(30):
        field = [QQ, F2, F3, F5][i % 4]
        C = corpus.random_coalgebra(rng, field, 6)
        data = etale_part(C)
        again = etale_part(data.etale)
        assert again.etale == data.etale
        assert again.inclusion.matrix == Matrix.identity(field, data.etale.dim)
        assert again.retraction.matrix == Matrix.identity(field, data.etale.dim)


def test_etale_data_invariants():
    rng = random.Random(33)
    for i in range(60):
        field = [QQ, F2, F3, F5][i % 4]
        C = corpus.random_coalgebra(rng, field, 6)
        data = etale_part(C)
        assert validate(data.inclusion) == [] and validate(data.retraction) == []
        ident = Matrix.identity(field, data.etale.dim)
        assert data.retraction.matrix @ data.inclusion.matrix == ident
        # delta(Et) <= Et (x) Et holds because the inclusion is a morphism
        for simple, inc in data.simples:
            assert validate(inc) == []
            assert validate(simple) == []


def test_etale_simples_have_no_proper_subcoalgebras():
    """Exhaustive at dim <= 4 over F2; dual-field check in general."""
    from coalgkit.oracles import enumerate_subspaces
    from coalgkit.coalgebra import is_subcoalgebra

    rng = random.Random(34)
    done = 0
    while done < 20:
        C = corpus.random_coalgebra(rng, F2, 4)
        if C.dim > 4 or C.dim == 0:
            continue
        data = etale_part(C)
        for simple, _ in data.simples:
            subs = [
                S
                for S in enumerate_subspaces(F2, simple.dim)
                if 0 < S.dim < simple.dim and is_subcoalgebra(simple, S)
            ]
            assert subs == []
        done += 1


def test_irreducible_components_examples():
    comps, iso = irreducible_components(diagonal_coalgebra(3, F2))
    assert [c.dim for c, _ in comps] == [1, 1, 1]
    assert validate(iso) == []

    comps, _ = irreducible_components(dual_numbers())
    assert [c.dim for c, _ in comps] == [2]

    comps, iso = irreducible_components(dual_coalgebra(pqa(F2, [0, 1, 0, 1])))
    assert sorted(c.dim for c, _ in comps) == [1, 2]
    assert iso.matrix.rank() == 3


def test_components_contain_one_simple_exhaustively():
    from coalgkit.oracles import enumerate_subspaces
    from coalgkit.coalgebra import is_subcoalgebra, sub

    rng = random.Random(35)
    done = 0
    while done < 15:
        C = corpus.random_coalgebra(rng, F2, 4)
        if C.dim > 4 or C.dim == 0:
            continue
        comps, _ = irreducible_components(C)
        for comp, _ in comps:
            simples = []
            for S in enumerate_subspaces(F2, comp.dim):
                if S.dim == 0 or not is_subcoalgebra(comp, S):
                    continue
                D, _ = sub(comp, S)
                proper = [
                    T
                    for T in enumerate_subspaces(F2, D.dim)
                    if 0 < T.dim < D.dim and is_subcoalgebra(D, T)
                ]
                if not proper:
                    simples.append(S)
            assert len(simples) == 1
        done += 1


# -- group-likes -------------------------------------------------------------------


def test_group_like_examples():
    assert len(group_likes(diagonal_coalgebra(3, F2))) == 3
    C4 = dual_coalgebra(pqa(F2, [1, 1, 1]))
    assert len(group_likes(C4)) == 0
    assert len(brute_force_group_likes(C4)) == 0
    D = dual_numbers()
    assert group_likes(D).elements == [[1, 0]]
    assert brute_force_group_likes(D).elements == [[1, 0]]


def test_group_like_count_equals_rational_components():
    rng = random.Random(36)
    for i in range(40):
        field = [F2, F3, F5][i % 3]
        C = corpus.random_coalgebra(rng, field, 5)
        data = etale_part(C)
        gl = group_likes(C, data)
        rational = sum(
            1 for c in data.decomposition.components if c.residue.dim == 1
        )
        assert len(gl) == rational
        if field.order ** C.dim <= 10**4:
            brute = brute_force_group_likes(C)
            assert {tuple(v) for v in gl.elements} == {tuple(v) for v in brute.elements}


def test_gp_adjunction_examples():
    assert gp_adjunction_checks(X=2, field=F2)["ok"]
    D = dual_numbers()
    rep = gp_adjunction_checks(C=D)
    assert rep["ok"] and ("split-counit-iso-onto-etale", True) in rep["checks"]
    C4 = dual_coalgebra(pqa(F2, [1, 1, 1]))
    rep = gp_adjunction_checks(C=C4)
    assert rep["ok"]
    assert all(name != "split-counit-iso-onto-etale" for name, _ in rep["checks"])


# -- retraction uniqueness and naturality ---------------------------------------------


def test_retraction_uniqueness_exhaustive():
    """Any coalgebra morphism splitting the inclusion equals the computed
    retraction: full enumeration over F2 at dim <= 3."""
    rng = random.Random(37)
    done = 0
    while done < 12:
        C = corpus.random_coalgebra(rng, F2, 3)
        if C.dim > 3 or C.dim == 0:
            continue
        data = etale_part(C)
        retractions = unique_retraction(C, data)
        assert retractions == [data.retraction.matrix]
        done += 1


def test_naturality_examples():
    D = dual_numbers()
    ident = CoalgebraMorphism(D, D, Matrix.identity(F2, 2))
    assert naturality_suite(ident)["ok"]
    assert naturality_suite(counit_morphism(D))["ok"]
    comps, iso = irreducible_components(dual_coalgebra(pqa(F2, [0, 1, 0, 1])))
    for _, inc in comps:
        assert naturality_suite(inc)["ok"]
    assert naturality_suite(iso)["ok"]


def test_naturality_randomized():
    rng = random.Random(38)
    for i in range(60):
        field = [QQ, F2, F3, F5][i % 4]
        phi = corpus.random_morphism(rng, field, 5)
        assert naturality_suite(phi)["ok"]


def test_zero_dimensional_through_the_machinery():
    Z = diagonal_coalgebra(0, F2)
    data = etale_part(Z)
    assert data.etale.dim == 0 and len(group_likes(Z, data)) == 0
    comps, iso = irreducible_components(Z)
    assert comps == [] and iso.matrix.rows == 0
    assert gp_adjunction_checks(C=Z)["ok"]
