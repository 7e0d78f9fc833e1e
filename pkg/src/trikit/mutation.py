"""Mutation of triangulation quivers at loop-free vertices."""

from dataclasses import dataclass
from itertools import permutations

from .errors import LoopAtVertex, NotGInvariant, NotTriangulationQuiver, TwoCycleAtVertex
from .quiver import RibbonQuiver, is_triangulation_quiver


@dataclass(frozen=True)
class MutationResult:
    quiver: RibbonQuiver
    # new arrow index -> ("kept", old) | ("reversed", old) | ("new", "d12" | "d21")
    provenance: tuple
    removed: tuple
    vertex: int
    # the six arrows alpha1, beta1, gamma1, alpha2, beta2, gamma2 of the old quiver
    frame: tuple

    @property
    def arrow_map(self):
        q = self.quiver
        return {q.arrows[i]: p for i, p in enumerate(self.provenance)}


def _vertex_index(q, k):
    """Integers are vertex indices, strings are vertex ids."""
    if isinstance(k, int) and not isinstance(k, bool):
        if not 0 <= k < q.num_vertices:
            raise IndexError(f"vertex index {k} out of range")
        return k
    return q.vertex_index[k]


def mutation_frame(q, k):
    """The six arrows (a1, b1, c1, a2, b2, c2) around the loop-free vertex ``k``."""
    k = _vertex_index(q, k)
    if not is_triangulation_quiver(q):
        raise NotTriangulationQuiver("mutation needs f**3 == id")
    if q.loops_at(k):
        raise LoopAtVertex(f"vertex {q.vertices[k]} has a loop")
    a1 = q.outgoing[k][0]
    a2 = q.bar[a1]
    b1, b2 = q.f[a1], q.f[a2]
    c1, c2 = q.f[b1], q.f[b2]
    frame = (a1, b1, c1, a2, b2, c2)
    assert len(set(frame)) == 6
    return frame


def _fresh(name, taken):
    while name in taken:
        name += "'"
    return name


def mutate(q, k):
    k = _vertex_index(q, k)
    a1, b1, c1, a2, b2, c2 = frame = mutation_frame(q, k)
    names = set(q.arrows)
    kname = q.vertices[k]
    d12 = _fresh(f"d12.{kname}", names)
    d21 = _fresh(f"d21.{kname}", names | {d12})

    reversed_ = {a1, a2, c1, c2}
    ids, src, tgt, prov = [], [], [], []
    new_index = {}
    for a in range(q.num_arrows):
        if a in reversed_:
            ids.append(_fresh(q.arrows[a] + "*", names))
            src.append(q.target[a])
            tgt.append(q.source[a])
            prov.append(("reversed", a))
        elif a == b1:
            ids.append(d12)
            src.append(q.source[c1])
            tgt.append(q.target[a2])
            prov.append(("new", "d12"))
        elif a == b2:
            ids.append(d21)
            src.append(q.source[c2])
            tgt.append(q.target[a1])
            prov.append(("new", "d21"))
        else:
            ids.append(q.arrows[a])
            src.append(q.source[a])
            tgt.append(q.target[a])
            prov.append(("kept", a))
        new_index[prov[-1]] = len(ids) - 1

    A1, A2 = new_index[("reversed", a1)], new_index[("reversed", a2)]
    C1, C2 = new_index[("reversed", c1)], new_index[("reversed", c2)]
    D12, D21 = new_index[("new", "d12")], new_index[("new", "d21")]
    f = [None] * q.num_arrows
    for i, p in enumerate(prov):
        if p[0] == "kept":
            f[i] = new_index[("kept", q.f[p[1]])]
    f[A1], f[C2], f[D21] = C2, D21, A1
    f[A2], f[C1], f[D12] = C1, D12, A2

    from .quiver import validate_ribbon_quiver

    fcycles = []
    seen = set()
    for i in range(len(f)):
        if i in seen:
            continue
        cyc = [i]
        seen.add(i)
        j = f[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = f[j]
        fcycles.append([ids[x] for x in cyc])
    arrows = [(ids[i], q.vertices[src[i]], q.vertices[tgt[i]]) for i in range(len(ids))]
    newq = validate_ribbon_quiver(q.vertices, arrows, fcycles)
    if not is_triangulation_quiver(newq):
        raise NotTriangulationQuiver("mutation produced f'**3 != id")
    return MutationResult(newq, tuple(prov), (b1, b2), k, frame)


def check_g_invariant(q, values, what="function"):
    for a in range(q.num_arrows):
        if values[q.g[a]] != values[a]:
            raise NotGInvariant(
                f"{what} differs on {q.arrows[a]} and g({q.arrows[a]}) = {q.arrows[q.g[a]]}"
            )


def transport(q, k, values, result=None):
    """Carry a g-invariant function (one value per arrow) to the mutated quiver."""
    values = list(values)
    check_g_invariant(q, values)
    if result is None:
        result = mutate(q, k)
    a1, b1, c1, a2, b2, c2 = result.frame
    out = []
    for kind, old in result.provenance:
        if kind == "kept":
            out.append(values[old])
        elif kind == "reversed":
            if old in (a1, c1):
                out.append(values[b1])
            else:
                out.append(values[b2])
        elif old == "d12":
            out.append(values[c1])
        else:
            out.append(values[c2])
    check_g_invariant(result.quiver, out, "transported function")
    return tuple(out)


def has_two_cycle_through(q, k):
    k = _vertex_index(q, k)
    outs = {q.target[a] for a in q.outgoing[k]}
    ins = {q.source[a] for a in q.incoming[k]}
    return bool((outs & ins) - {k}) or bool(q.loops_at(k))


def fz_mutation_counts(counts, k):
    """Fomin-Zelevinsky mutation on an arrow-count matrix.

    Composite arrows ``i -> j`` are added for paths ``i -> k -> j``, arrows at
    ``k`` are reversed, and 2-cycles containing a new arrow are cancelled.
    """
    n = len(counts)
    old = [row[:] for row in counts]
    new = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != k and j != k:
                new[i][j] = old[i][k] * old[k][j]
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == k or j == k:
                out[i][j] = old[j][i]
    for i in range(n):
        for j in range(i + 1, n):
            if k in (i, j):
                continue
            oij, oji, nij, nji = old[i][j], old[j][i], new[i][j], new[j][i]
            c1 = min(nij, oji)
            nij, oji = nij - c1, oji - c1
            c2 = min(nji, oij)
            nji, oij = nji - c2, oij - c2
            c3 = min(nij, nji)
            nij, nji = nij - c3, nji - c3
            out[i][j] = oij + nij
            out[j][i] = oji + nji
        if i != k:
            out[i][i] = old[i][i] + new[i][i]
    return out


def _count_isomorphism(c1, c2):
    n = len(c1)
    if n != len(c2):
        return None
    deg1 = [(sum(c1[i]), sum(r[i] for r in c1), c1[i][i]) for i in range(n)]
    deg2 = [(sum(c2[i]), sum(r[i] for r in c2), c2[i][i]) for i in range(n)]
    if sorted(deg1) != sorted(deg2):
        return None
    for p in permutations(range(n)):
        if any(deg1[i] != deg2[p[i]] for i in range(n)):
            continue
        if all(c1[i][j] == c2[p[i]][p[j]] for i in range(n) for j in range(n)):
            return p
    return None


@dataclass(frozen=True)
class FZReport:
    equal: bool
    fz_counts: tuple
    mutated_counts: tuple
    vertex_permutation: tuple
    # equality once the 2-cycles kept by mutate (valency-2 punctures) are cancelled
    reduced_equal: bool


def cancel_two_cycles(counts):
    out = [row[:] for row in counts]
    n = len(out)
    for i in range(n):
        for j in range(i + 1, n):
            t = min(out[i][j], out[j][i])
            out[i][j] -= t
            out[j][i] -= t
    return out


def fz_compare(q, k):
    k = _vertex_index(q, k)
    if q.loops_at(k):
        raise LoopAtVertex(f"vertex {q.vertices[k]} has a loop")
    if has_two_cycle_through(q, k):
        raise TwoCycleAtVertex(f"the quiver has a 2-cycle through {q.vertices[k]}")
    mutated = mutate(q, k).quiver
    fz = fz_mutation_counts(q.arrow_counts(), k)
    mc = mutated.arrow_counts()
    iso = _count_isomorphism(fz, mc)
    reduced = _count_isomorphism(cancel_two_cycles(fz), cancel_two_cycles(mc))
    return FZReport(
        iso is not None,
        tuple(tuple(r) for r in fz),
        tuple(tuple(r) for r in mc),
        iso,
        reduced is not None,
    )


def qp_mutation_hypothesis(q, k):
    """The cycle-length form of "no 2-cycles through k"."""
    a1, b1, c1, a2, b2, c2 = mutation_frame(q, k)
    return q.n(a1) > 2 and q.n(c1) > 2 and q.n(b1) > 1 and q.n(b2) > 1
