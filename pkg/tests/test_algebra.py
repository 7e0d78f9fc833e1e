import pytest

from trikit import catalog
from trikit.algebra import algebra_from_relations, quotient_basis, truncate
from trikit.errors import CapExceeded
from trikit.gdata import GData
from trikit.invariants import (
    cartan_det,
    cartan_matrix,
    gram_matrix,
    hh0_rigidity,
    symmetrizing_form_exists,
)
from trikit.linalg import determinant
from trikit.paths import PathAlgebra
from trikit.presentations import (
    brauer_dimension_oracle,
    brauer_presentation,
    jacobian_presentation,
    triangulation_presentation,
)


def _tri(q, m=1, c=None):
    return quotient_basis(triangulation_presentation(q, GData.build(q, m, c)))


def _brauer(q, m=1, c=None):
    return quotient_basis(brauer_presentation(q, GData.build(q, m, c)))


@pytest.mark.parametrize(
    "name,m,dim",
    [
        ("monogon", 2, 8),
        ("monogon", 3, 12),
        ("punctured-monogon", {"alpha": 4}, 13),
        ("torus", 1, 36),
        ("torus", 2, 72),
        ("sphere", 2, 24),
        ("triangle", 1, 36),
    ],
)
def test_triangulation_equals_brauer_equals_oracle(name, m, dim):
    q = catalog.QUIVERS[name]()
    data = GData.build(q, m)
    tri = quotient_basis(triangulation_presentation(q, data))
    br = quotient_basis(brauer_presentation(q, data))
    assert tri.dimension == br.dimension == sum(brauer_dimension_oracle(q, data)) == dim


def test_brauer_oracle_per_vertex():
    q = catalog.punctured_monogon()
    data = GData.build(q, {"alpha": 4})
    A = quotient_basis(brauer_presentation(q, data))
    rows = [sum(r) for r in cartan_matrix(A)]
    assert rows == brauer_dimension_oracle(q, data)


def test_tetrahedron_with_one_raised_g_cycle():
    q = catalog.tetrahedron()
    m = [2 if q.g_cycle_of[a] == 0 else 1 for a in range(q.num_arrows)]
    data = GData.build(q, m)
    assert _tri(q, m).dimension == _brauer(q, m).dimension == sum(brauer_dimension_oracle(q, data)) == 45


def test_exceptional_algebras_are_finite():
    q = catalog.punctured_monogon()
    A = quotient_basis(triangulation_presentation(q, GData.build(q, {"alpha": 3}, {"alpha": 2})))
    assert A.dimension == 12
    t = catalog.tetrahedron()
    c = [1] * t.num_arrows
    for a in t.g_cycles[0]:
        c[a] = 2
    assert _tri(t, 1, c).dimension == 36


TRUNCATION_CASES = [
    ("monogon", 2),
    ("monogon", 3),
    ("torus", 1),
    ("sphere", 2),
    ("triangle", 1),
    ("punctured-monogon", {"alpha": 4}),
]


def _same_ideal_after_truncation(A, smaller):
    # smaller ⊆ I and J^N ⊆ I, so equal dimensions force smaller + J^N = I
    assert all(A.reduces_to_zero(r) for r in smaller.relations)
    n = A.loewy_length
    return all(quotient_basis(truncate(smaller, k)).dimension == A.dimension for k in (n, n + 1))


@pytest.mark.parametrize("name,m", TRUNCATION_CASES)
def test_single_zero_relation_suffices_in_completion(name, m):
    q = catalog.QUIVERS[name]()
    data = GData.build(q, m)
    A = quotient_basis(triangulation_presentation(q, data))
    assert _same_ideal_after_truncation(A, triangulation_presentation(q, data, zero_relations="one"))


def test_single_zero_relation_is_not_enough_without_completion():
    q = catalog.torus()
    with pytest.raises(CapExceeded):
        quotient_basis(triangulation_presentation(q, GData.build(q), zero_relations="one"))


@pytest.mark.parametrize("name,m", [("torus", 1), ("sphere", 2), ("tetrahedron", 2)])
def test_jacobian_ideal_matches_in_completion(name, m):
    q = catalog.QUIVERS[name]()
    data = GData.build(q, m)
    A = quotient_basis(triangulation_presentation(q, data))
    assert _same_ideal_after_truncation(A, jacobian_presentation(q, data))


@pytest.mark.parametrize("name,m", [("monogon", 2), ("monogon", 3), ("triangle", 1), ("punctured-monogon", {"alpha": 4})])
def test_jacobian_with_f_fixed_loops(name, m):
    # dimensions still agree, but the ideals differ (3*alpha^2 is not a relation of the triangulation algebra)
    q = catalog.QUIVERS[name]()
    data = GData.build(q, m)
    A = quotient_basis(triangulation_presentation(q, data))
    J = jacobian_presentation(q, data)
    assert not all(A.reduces_to_zero(r) for r in J.relations)
    n = A.loewy_length
    assert quotient_basis(truncate(J, n + 1)).dimension == A.dimension


def test_loewy_length():
    A = _tri(catalog.monogon(), 2)
    assert A.loewy_length == 5
    assert algebra_from_relations(catalog.single_vertex(), []).loewy_length == 1


def test_basis_monogon():
    A = _tri(catalog.monogon(), 2)
    words = sorted((len(p), A.paths.format_path(p)) for p in A.basis)
    assert len(words) == 8
    assert A.top_degree >= 3
    assert A.assert_subword_closed()


def test_products_expand_in_basis():
    A = _tri(catalog.torus())
    for i in range(0, A.dimension, 5):
        for j in range(A.dimension):
            for k in A.product(i, j):
                assert 0 <= k < A.dimension


def test_associativity_on_sample():
    A = _tri(catalog.monogon(), 2)
    n = A.dimension
    for i in range(n):
        for j in range(n):
            for k in range(n):
                x, y, z = {i: A.one}, {j: A.one}, {k: A.one}
                assert A.mul(A.mul(x, y), z) == A.mul(x, A.mul(y, z))


def test_cartan_monogon_and_torus():
    A = _tri(catalog.monogon(), 2)
    assert cartan_matrix(A) == [[8]]
    assert cartan_det(A) == 8
    T = _tri(catalog.torus())
    C = cartan_matrix(T)
    assert [sum(r) for r in C] == [12, 12, 12]
    assert C == [list(r) for r in zip(*C)]


def test_cartan_single_vertex():
    A = algebra_from_relations(catalog.single_vertex(), [])
    assert A.dimension == 1
    assert cartan_matrix(A) == [[1]]


@pytest.mark.parametrize("name,m", [("monogon", 2), ("torus", 1), ("sphere", 2), ("triangle", 1)])
def test_symmetric_with_witness(name, m):
    A = _tri(catalog.QUIVERS[name](), m)
    res = symmetrizing_form_exists(A)
    assert res.symmetric and res.certified
    lam = res.witness
    G = gram_matrix(A, lam)
    assert determinant(G, A.zero, A.one) != 0
    assert G == [list(r) for r in zip(*G)]
    C = cartan_matrix(A)
    assert C == [list(r) for r in zip(*C)]


def test_a2_is_not_symmetric():
    A = algebra_from_relations(catalog.a2(), [])
    assert A.dimension == 3
    res = symmetrizing_form_exists(A)
    assert not res.symmetric and res.certified


def test_rigidity():
    assert not hh0_rigidity(_tri(catalog.monogon(), 2)).rigid
    assert not hh0_rigidity(_tri(catalog.torus())).rigid
    res = hh0_rigidity(algebra_from_relations(catalog.single_vertex(), []))
    assert res.rigid and res.hh0_dimension == 1


def test_hh0_dimensions():
    assert hh0_rigidity(_tri(catalog.monogon(), 2)).hh0_dimension == 5
    assert hh0_rigidity(_tri(catalog.torus())).hh0_dimension == 4


def test_cap_exceeded_on_infinite_quotient():
    q = catalog.monogon()
    alg = PathAlgebra(q)
    a = q.arrow_index["alpha"]
    # only alpha*alpha = 0; words in (alpha beta)^k survive forever
    with pytest.raises(CapExceeded):
        algebra_from_relations(q, [alg.word([a, a])], degree_cap=10)
    with pytest.raises(CapExceeded):
        quotient_basis(brauer_presentation(q, GData.build(q, 2)), degree_cap=3)


def test_jacobian_quotient_is_infinite_without_completion():
    for name, m in [("monogon", 2), ("torus", 1)]:
        q = catalog.QUIVERS[name]()
        with pytest.raises(CapExceeded):
            quotient_basis(jacobian_presentation(q, GData.build(q, m)), degree_cap=20)
