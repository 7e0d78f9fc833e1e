"""Acceptance criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py`` (the lines are repeated in the
terminal summary) or ``python3 tests/test_acceptance.py``.  All comparisons are
exact; each criterion has a wall-clock limit in seconds.
"""

import functools
import random
import time
from fractions import Fraction

import pytest

from trikit import catalog
from trikit.algebra import algebra_from_relations, quotient_basis
from trikit.field import GF, QQ
from trikit.gdata import GData
from trikit.invariants import cartan_matrix, gram_matrix, hh0_rigidity, symmetrizing_form_exists
from trikit.linalg import determinant
from trikit.modules import omega_period
from trikit.mutation import fz_compare, mutate, transport
from trikit.presentations import (
    brauer_dimension_oracle,
    brauer_presentation,
    exceptional_check,
    hyperpotential_check,
    triangulation_presentation,
)
from trikit.quiver import (
    are_isomorphic,
    enumerate_triangulation_quivers,
    from_ribbon_graph,
    random_ribbon_quiver,
    to_ribbon_graph,
)
from trikit.silting import end_algebra, silting_complex
from trikit.surface import flip, flippable_arcs, triangulation_to_quiver

SEED = 20140301
LINES = []


def _emit(number, ok, limit, elapsed, detail):
    status = "PASS" if ok else "FAIL"
    line = f"criterion {number:>2}: {status}  ({elapsed:.2f}s of {limit}s)  {detail}"
    LINES.append(line)
    print(line)


def check(number, limit, body):
    """Run ``body() -> (ok, detail)``, print the line, then assert."""
    start = time.perf_counter()
    ok, detail = body()
    elapsed = time.perf_counter() - start
    within = elapsed < limit
    if not within:
        detail += f"; time limit {limit}s exceeded"
    _emit(number, ok and within, limit, elapsed, detail)
    assert ok, detail
    assert within, detail


def _names(q, cycles):
    return sorted(tuple(q.arrows[a] for a in c) for c in cycles)


def _cycle_type(q):
    return sorted(len(c) for c in q.f_cycles)


# 1. classification


def _criterion_1():
    counts = [len(enumerate_triangulation_quivers(n)) for n in (1, 2, 3)]
    found = [q for n in (1, 2, 3) for q in enumerate_triangulation_quivers(n)]
    transcribed = catalog.classification()
    # each enumerated quiver matches exactly one transcribed quiver, with the same f-cycle shape
    matched = []
    for q in found:
        hits = [p for p in transcribed if are_isomorphic(q, p) is not None]
        matched.append(len(hits) == 1 and _cycle_type(hits[0]) == _cycle_type(q))
    forms = {
        "monogon": [("alpha",), ("beta",)],
        "punctured-monogon": [("alpha", "beta", "gamma"), ("eta",)],
        "triangle": [("alpha1",), ("alpha2",), ("alpha3",), ("beta1", "beta2", "beta3")],
        "sphere": [("alpha1", "alpha2", "alpha3"), ("beta3", "beta2", "beta1")],
        "sphere-path": [("alpha", "beta", "gamma"), ("delta", "xi", "eta")],
        "torus": [("alpha4", "alpha2", "alpha0"), ("alpha5", "alpha3", "alpha1")],
    }

    def same_cycles(name):
        q = catalog.QUIVERS[name]()
        canon = lambda cs: sorted(min(c[i:] + c[:i] for i in range(len(c))) for c in cs)
        return canon(_names(q, q.f_cycles)) == canon(forms[name])

    ok = counts == [1, 1, 4] and all(matched) and all(same_cycles(n) for n in forms)
    return ok, f"counts {counts} (expected [1, 1, 4]); all six matched with their f-cycle forms: {all(matched)}"


def test_criterion_1_classification():
    check(1, 10, _criterion_1)


# 2. duality


def _criterion_2():
    rng = random.Random(SEED)
    quivers = list(catalog.classification())
    while len(quivers) < 26:
        quivers.append(random_ribbon_quiver(rng, rng.randint(1, 6)))
    bad = [i for i, q in enumerate(quivers) if are_isomorphic(from_ribbon_graph(to_ribbon_graph(q)), q) is None]
    return not bad, f"{len(quivers)} quivers (6 classified + 20 random), failures at {bad}"


def test_criterion_2_duality():
    check(2, 5, _criterion_2)


# 3. hyperpotential


def _random_admissible(q, rng, field):
    m = [-(-3 // len(cyc)) + rng.randint(0, 2) for cyc in q.g_cycles]
    c = [rng.choice([1, 2, 3, 4, -1, Fraction(1, 2)]) for _ in q.g_cycles]
    data = GData.per_g_cycle(q, m, c, field)
    assert data.is_admissible(q)
    return data


def _criterion_3():
    rng = random.Random(SEED)
    runs = 0
    bad = []
    for q in catalog.classification():
        for field in (QQ, GF(5)):
            for _ in range(5):
                data = _random_admissible(q, rng, field)
                runs += 1
                if not hyperpotential_check(q, data):
                    bad.append((q.vertices, data.m))
    return not bad, f"{runs} expansions (6 quivers x 5 data x Q, F5) are exactly zero; failures {bad}"


def test_criterion_3_hyperpotential():
    check(3, 30, _criterion_3)


# 4 and 5. dimensions and symmetry


def _tetra_raised():
    q = catalog.tetrahedron()
    return [2 if q.g_cycle_of[a] == 0 else 1 for a in range(q.num_arrows)]


CRITERION_4_CASES = [
    ("monogon m=2", "monogon", 2),
    ("monogon m=3", "monogon", 3),
    ("punctured monogon (4,1)", "punctured-monogon", {"alpha": 4}),
    ("torus m=1", "torus", 1),
    ("tetrahedron, one g-cycle m=2", "tetrahedron", None),
]


@functools.lru_cache(maxsize=None)
def _criterion_4_algebras():
    out = []
    for label, name, m in CRITERION_4_CASES:
        q = catalog.QUIVERS[name]()
        data = GData.build(q, _tetra_raised() if m is None else m)
        assert not exceptional_check(q, data.m).exceptional
        tri = quotient_basis(triangulation_presentation(q, data))
        br = quotient_basis(brauer_presentation(q, data))
        out.append((label, q, data, tri, br))
    return out


def _criterion_4():
    parts, ok = [], True
    for label, q, data, tri, br in _criterion_4_algebras():
        oracle = sum(brauer_dimension_oracle(q, data))
        per_vertex = [sum(r) for r in cartan_matrix(br)] == brauer_dimension_oracle(q, data)
        good = tri.dimension == br.dimension == oracle and per_vertex
        ok &= good
        parts.append(f"{label}: {tri.dimension}/{br.dimension}/{oracle}")
    return ok, "triangulation/Brauer/oracle " + "; ".join(parts)


def test_criterion_4_dimensions():
    check(4, 60, _criterion_4)


def _criterion_5():
    parts, ok = [], True
    for label, q, data, tri, br in _criterion_4_algebras():
        res = symmetrizing_form_exists(tri)
        good = res.symmetric and res.witness is not None
        if good:
            G = gram_matrix(tri, res.witness)
            good = determinant(G, tri.zero, tri.one) != 0 and G == [list(r) for r in zip(*G)]
        C = cartan_matrix(tri)
        good = good and C == [list(r) for r in zip(*C)]
        ok &= good
        parts.append(f"{label}: {'witness' if good else 'NO'}")
    return ok, "nonsingular symmetric Gram witness and symmetric Cartan; " + "; ".join(parts)


def test_criterion_5_symmetry():
    check(5, 60, _criterion_5)


# 6. periods


def _criterion_6():
    parts, ok = [], True
    for name, m in (("monogon", 2), ("torus", 1)):
        q = catalog.QUIVERS[name]()
        A = quotient_basis(triangulation_presentation(q, GData.build(q, m)))
        periods = [omega_period(A, i) for i in range(q.num_vertices)]
        ok &= all(p is not None and 4 % p == 0 for p in periods)
        parts.append(f"{name}: {periods}")
    return ok, "periods of the simples divide 4; " + "; ".join(parts)


def test_criterion_6_periods():
    check(6, 60, _criterion_6)


# 7. exceptional cases


def _multiplicities(q, bound):
    cycles = q.g_cycles
    ranges = [range(-(-3 // len(c)), bound // len(c) + 1) for c in cycles]

    def rec(i, acc):
        if i == len(cycles):
            yield [acc[q.g_cycle_of[a]] for a in range(q.num_arrows)]
            return
        for v in ranges[i]:
            yield from rec(i + 1, acc + [v])

    return rec(0, [])


@functools.lru_cache(maxsize=None)
def _criterion_7_scan():
    quivers = [q for n in (1, 2, 3) for q in enumerate_triangulation_quivers(n)]
    quivers.append(catalog.tetrahedron())
    flagged, disagree, total = [], [], 0
    for q in quivers:
        for m in _multiplicities(q, 12):
            total += 1
            cls = exceptional_check(q, m)
            if cls.exceptional:
                flagged.append((cls.kind, tuple(sorted(set(m)))))
            if not cls.conditions_agree:
                disagree.append((q.num_vertices, tuple(m)))
    return total, flagged, disagree


def _criterion_7_detection_ok(flagged):
    return sorted(flagged) == [("PuncturedMonogon", (1, 3)), ("Tetrahedron", (1,))]


def test_criterion_7_detection():
    total, flagged, _ = _criterion_7_scan()
    assert _criterion_7_detection_ok(flagged), flagged


@pytest.mark.xfail(
    strict=True,
    reason="the reciprocal-sum condition also holds on non-exceptional data; see the decisions ledger",
)
def test_criterion_7_exceptional():
    def body():
        total, flagged, disagree = _criterion_7_scan()
        detect = _criterion_7_detection_ok(flagged)
        ok = detect and not disagree
        detail = (
            f"{total} (quiver, m) cases; flagged {sorted(flagged)} (detection {'ok' if detect else 'WRONG'}); "
            f"conditions disagree on {len(disagree)} cases, e.g. {disagree[:2]}"
        )
        return ok, detail

    check(7, 10, body)


# 8. mutation


def _criterion_8():
    torus = catalog.torus()
    once = mutate(torus, "1").quiver
    twice = mutate(once, "1").quiver
    i = are_isomorphic(once, torus) is not None
    ii = are_isomorphic(twice, torus) is not None
    iii = fz_compare(torus, "1").equal
    iv = []
    for name in ("torus", "sphere"):
        tri = catalog.TRIANGULATIONS[name]()
        q = triangulation_to_quiver(tri)
        arcs = flippable_arcs(tri)
        iv.append(
            bool(arcs)
            and all(
                are_isomorphic(mutate(q, arc).quiver, triangulation_to_quiver(flip(tri, arc))) is not None
                for arc in arcs
            )
        )
    ok = i and ii and iii and all(iv)
    return ok, f"(i) {i} (ii) {ii} (iii) {iii} (iv) torus {iv[0]}, theta sphere {iv[1]}"


def test_criterion_8_mutation():
    check(8, 10, _criterion_8)


# 9. silting


def _criterion_9():
    q = catalog.torus()
    data = GData.build(q)
    A = quotient_basis(triangulation_presentation(q, data))
    res = mutate(q, "1")
    data2 = GData.build(
        res.quiver, list(transport(q, "1", data.m, res)), list(transport(q, "1", data.c, res))
    )
    B = quotient_basis(triangulation_presentation(res.quiver, data2))
    target = sorted(x for row in cartan_matrix(B) for x in row)
    k = q.vertices.index("1")
    reports = {s: end_algebra(A, silting_complex(A, k, s)) for s in "-+"}
    ok = all(r.dimension == B.dimension and r.multiset() == target for r in reports.values())
    return ok, (
        f"dim End(U-) = {reports['-'].dimension}, dim End(U+) = {reports['+'].dimension}, "
        f"dim mutated algebra = {B.dimension}; Cartan multisets equal: "
        f"{all(r.multiset() == target for r in reports.values())}"
    )


def test_criterion_9_silting():
    check(9, 120, _criterion_9)


# 10. rigidity


def _criterion_10():
    algebras = [(label, tri) for label, _, _, tri, _ in _criterion_4_algebras()]
    for name, m in (("sphere", 2), ("triangle", 1), ("torus", 2)):
        q = catalog.QUIVERS[name]()
        algebras.append((f"{name} m={m}", quotient_basis(triangulation_presentation(q, GData.build(q, m)))))
    results = [(label, hh0_rigidity(A)) for label, A in algebras]
    control = hh0_rigidity(algebra_from_relations(catalog.single_vertex(), []))
    ok = all(not r.rigid for _, r in results) and control.rigid
    detail = "; ".join(f"{label}: HH0 {r.hh0_dimension}" for label, r in results)
    return ok, f"all non-rigid ({detail}); semisimple control rigid: {control.rigid}"


def test_criterion_10_rigidity():
    check(10, 10, _criterion_10)


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(
        ((n, f) for n, f in globals().items() if n.startswith("test_criterion_") and n != "test_criterion_7_detection"),
        key=lambda kv: int(kv[0].split("_")[2]),
    ):
        try:
            fn()
        except AssertionError:
            failed += 1
    print(f"\n{len(LINES) - failed} of {len(LINES)} criteria passed")
