import pytest

from trikit import catalog
from trikit.errors import LoopAtVertex, NotGInvariant, TwoCycleAtVertex
from trikit.gdata import GData
from trikit.mutation import (
    fz_compare,
    fz_mutation_counts,
    has_two_cycle_through,
    mutate,
    qp_mutation_hypothesis,
    transport,
)
from trikit.quiver import are_isomorphic, enumerate_triangulation_quivers, is_triangulation_quiver


def test_torus_mutation_is_torus():
    res = mutate(catalog.torus(), "1")
    q = res.quiver
    assert are_isomorphic(q, catalog.torus()) is not None
    edges = sorted((q.vertices[q.source[a]], q.vertices[q.target[a]]) for a in range(q.num_arrows))
    assert edges == [("1", "3"), ("1", "3"), ("2", "1"), ("2", "1"), ("3", "2"), ("3", "2")]
    assert [len(c) for c in q.f_cycles] == [3, 3]


def test_provenance_and_removed_arrows():
    q = catalog.torus()
    res = mutate(q, "1")
    assert sorted(q.arrows[a] for a in res.removed) == ["alpha1", "alpha4"]
    kinds = sorted(kind for kind, _ in res.provenance)
    assert kinds == ["new", "new", "reversed", "reversed", "reversed", "reversed"]
    assert {"d12.1", "d21.1"} <= set(res.quiver.arrows)


def test_mutation_is_deterministic():
    a = mutate(catalog.torus(), "2").quiver
    b = mutate(catalog.torus(), "2").quiver
    assert a == b


def test_loop_vertex_refused():
    with pytest.raises(LoopAtVertex):
        mutate(catalog.punctured_monogon(), "1")


def test_double_mutation_on_torus():
    q = catalog.torus()
    twice = mutate(mutate(q, "1").quiver, "1").quiver
    assert are_isomorphic(twice, q) is not None


def test_mutation_preserves_counts_on_enumerated_quivers():
    for n in (1, 2, 3, 4):
        for q in enumerate_triangulation_quivers(n):
            for k in range(q.num_vertices):
                if q.loops_at(k):
                    with pytest.raises(LoopAtVertex):
                        mutate(q, k)
                    continue
                r = mutate(q, k).quiver
                assert (r.num_vertices, r.num_arrows) == (q.num_vertices, q.num_arrows)
                assert is_triangulation_quiver(r)


def test_transport_of_constants_and_values():
    q = catalog.torus()
    assert transport(q, "1", [1] * 6) == (1,) * 6
    assert set(transport(q, "1", [5] * 6)) == {5}


def test_transport_rejects_non_invariant():
    with pytest.raises(NotGInvariant):
        transport(catalog.torus(), "1", [1, 2, 1, 1, 1, 1])


def test_transport_formulas_on_tetrahedron():
    q = catalog.tetrahedron()
    # distinct value per g-cycle so each formula is visible
    values = [10 + q.g_cycle_of[a] for a in range(q.num_arrows)]
    res = mutate(q, q.vertices[0])
    out = transport(q, q.vertices[0], values, res)
    a1, b1, c1, a2, b2, c2 = res.frame
    got = {}
    for i, (kind, old) in enumerate(res.provenance):
        got[(kind, old)] = out[i]
    assert got[("reversed", a1)] == got[("reversed", c1)] == values[b1]
    assert got[("reversed", a2)] == got[("reversed", c2)] == values[b2]
    assert got[("new", "d12")] == values[c1]
    assert got[("new", "d21")] == values[c2]


def test_fz_compare_torus():
    rep = fz_compare(catalog.torus(), "1")
    assert rep.equal


def test_fz_compare_refusals():
    with pytest.raises(TwoCycleAtVertex):
        fz_compare(catalog.sphere(), "1")
    with pytest.raises(LoopAtVertex):
        fz_compare(catalog.triangle(), "1")


def test_fz_counts_markov_like():
    # 0 => 1 => 2 => 0 with double arrows is fixed up to reversal by FZ mutation
    counts = [[0, 2, 0], [0, 0, 2], [2, 0, 0]]
    assert fz_mutation_counts(counts, 0) == [[0, 0, 2], [2, 0, 0], [0, 2, 0]]


def test_cycle_length_condition_matches_two_cycles():
    for n in (1, 2, 3, 4):
        for q in enumerate_triangulation_quivers(n):
            for k in range(q.num_vertices):
                if q.loops_at(k):
                    continue
                assert qp_mutation_hypothesis(q, k) == (not has_two_cycle_through(q, k))


def test_fz_agrees_after_cancelling_two_cycles():
    qs = [q for n in (1, 2, 3, 4) for q in enumerate_triangulation_quivers(n)]
    qs.append(catalog.tetrahedron())
    checked = 0
    for q in qs:
        for k in range(q.num_vertices):
            if q.loops_at(k) or has_two_cycle_through(q, k):
                continue
            assert fz_compare(q, k).reduced_equal
            checked += 1
    assert checked > 0


def test_fz_differs_when_mutation_creates_two_cycles():
    # every composite through vertex 0 cancels, leaving valency-2 punctures
    rep = fz_compare(catalog.tetrahedron(), 0)
    assert not rep.equal
    assert rep.reduced_equal
    assert any(rep.mutated_counts[i][j] and rep.mutated_counts[j][i] for i in range(6) for j in range(i))


def test_transported_data_is_g_invariant_after_mutation():
    q = catalog.tetrahedron()
    d = GData.build(q, [2 + q.g_cycle_of[a] for a in range(q.num_arrows)])
    for k in range(q.num_vertices):
        res = mutate(q, k)
        GData.build(res.quiver, list(transport(q, k, d.m, res)))
