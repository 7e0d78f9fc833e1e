"""Quivers, ribbon quivers, ribbon graphs and the duality between them.

A ribbon quiver is a quiver in which every vertex has exactly two outgoing
and two incoming arrows, together with a permutation ``f`` of the arrows
such that ``f(a)`` starts where ``a`` ends.  The other arrow with the same
source as ``a`` is ``bar(a)``, and ``g(a) = bar(f(a))``.  A triangulation
quiver is a ribbon quiver with ``f**3 == id``.

Identifiers are opaque strings; internally everything is indexed by the
position in the input order, which fixes a total order on vertices and
arrows and makes every output deterministic.
"""

from dataclasses import dataclass
from functools import cached_property

from . import perm
from .errors import (
    CapExceeded,
    DegreeViolation,
    FixedPointInvolution,
    IncompatiblePermutation,
    MalformedPermutation,
)


@dataclass(frozen=True)
class Quiver:
    """A finite quiver ``(Q0, Q1, s, t)``; ``source``/``target`` hold vertex indices."""

    vertices: tuple
    arrows: tuple
    source: tuple
    target: tuple

    @classmethod
    def from_ids(cls, vertices, arrows):
        """``arrows`` is an iterable of ``(arrow_id, source_id, target_id)``."""
        vertices = tuple(str(v) for v in vertices)
        vidx = {v: i for i, v in enumerate(vertices)}
        ids, src, tgt = [], [], []
        for a, s, t in arrows:
            ids.append(str(a))
            src.append(vidx[str(s)])
            tgt.append(vidx[str(t)])
        return cls(vertices, tuple(ids), tuple(src), tuple(tgt))

    @property
    def num_vertices(self):
        return len(self.vertices)

    @property
    def num_arrows(self):
        return len(self.arrows)

    @cached_property
    def arrow_index(self):
        return {a: i for i, a in enumerate(self.arrows)}

    @cached_property
    def vertex_index(self):
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def outgoing(self):
        out = [[] for _ in self.vertices]
        for a, s in enumerate(self.source):
            out[s].append(a)
        return tuple(tuple(x) for x in out)

    @cached_property
    def incoming(self):
        inc = [[] for _ in self.vertices]
        for a, t in enumerate(self.target):
            inc[t].append(a)
        return tuple(tuple(x) for x in inc)

    def is_connected(self):
        if not self.vertices:
            return True
        parent = list(range(self.num_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for s, t in zip(self.source, self.target):
            a, b = find(s), find(t)
            if a != b:
                parent[a] = b
        return len({find(v) for v in range(self.num_vertices)}) == 1

    def arrow_counts(self):
        """Matrix of arrow multiplicities ``counts[i][j] = #{i -> j}``."""
        n = self.num_vertices
        counts = [[0] * n for _ in range(n)]
        for s, t in zip(self.source, self.target):
            counts[s][t] += 1
        return counts


@dataclass(frozen=True)
class RibbonQuiver(Quiver):
    f: tuple = ()

    @cached_property
    def bar(self):
        b = [None] * self.num_arrows
        for out in self.outgoing:
            x, y = out
            b[x], b[y] = y, x
        return tuple(b)

    @cached_property
    def g(self):
        return tuple(self.bar[self.f[a]] for a in range(self.num_arrows))

    @cached_property
    def f_cycles(self):
        return perm.cycles(self.f)

    @cached_property
    def g_cycles(self):
        return perm.cycles(self.g)

    @cached_property
    def g_cycle_of(self):
        """Index into ``g_cycles`` for each arrow."""
        where = [0] * self.num_arrows
        for i, cyc in enumerate(self.g_cycles):
            for a in cyc:
                where[a] = i
        return tuple(where)

    def n(self, a):
        return len(self.g_cycles[self.g_cycle_of[a]])

    def is_triangulation_quiver(self):
        return is_triangulation_quiver(self)

    def loops_at(self, v):
        return [a for a in self.outgoing[v] if self.target[a] == v]

    def arrow(self, name):
        return self.arrow_index[name]

    def vertex(self, name):
        return self.vertex_index[name]

    def format_cycle(self, cyc):
        return "(" + " ".join(self.arrows[a] for a in cyc) + ")"

    def relabeled(self, vertex_names=None, arrow_names=None):
        return RibbonQuiver(
            tuple(vertex_names or self.vertices),
            tuple(arrow_names or self.arrows),
            self.source,
            self.target,
            self.f,
        )


@dataclass(frozen=True)
class CycleData:
    f_cycles: tuple
    g_cycles: tuple
    n: tuple


@dataclass(frozen=True)
class RibbonGraph:
    """Half edges with a fixed-point-free involution ``iota`` and a permutation ``sigma``.

    ``sigma`` gives the (counterclockwise) cyclic order of half edges at each node.
    """

    half_edges: tuple
    iota: tuple
    sigma: tuple

    def __post_init__(self):
        n = len(self.half_edges)
        if len(self.iota) != n or len(self.sigma) != n:
            raise MalformedPermutation("iota and sigma must be defined on every half edge")
        if not perm.is_permutation(self.iota) or not perm.is_permutation(self.sigma):
            raise MalformedPermutation("iota and sigma must be permutations")
        for h in range(n):
            if self.iota[self.iota[h]] != h:
                raise MalformedPermutation("iota is not an involution")
            if self.iota[h] == h:
                raise FixedPointInvolution(f"iota fixes half edge {self.half_edges[h]}")

    @property
    def edges(self):
        return [c for c in perm.cycles(self.iota)]

    @property
    def nodes(self):
        return perm.cycles(self.sigma)

    def valencies(self):
        return [len(c) for c in self.nodes]


def validate_ribbon_quiver(vertices, arrows, fcycles):
    """Validate raw ribbon quiver data and return a :class:`RibbonQuiver`.

    ``arrows`` is a list of ``(id, source, target)`` and ``fcycles`` the cycles
    of ``f`` (fixed points as singletons) covering every arrow exactly once.
    """
    vertices = [str(v) for v in vertices]
    if len(set(vertices)) != len(vertices):
        raise DegreeViolation("duplicate vertex ids")
    vset = set(vertices)
    arrow_ids = [str(a[0]) for a in arrows]
    if len(set(arrow_ids)) != len(arrow_ids):
        raise MalformedPermutation("duplicate arrow ids")
    for a, s, t in arrows:
        for v in (s, t):
            if str(v) not in vset:
                raise DegreeViolation(f"arrow {a} uses unknown vertex {v}")
    quiver = Quiver.from_ids(vertices, arrows)
    for v in range(quiver.num_vertices):
        nout, nin = len(quiver.outgoing[v]), len(quiver.incoming[v])
        if nout != 2 or nin != 2:
            raise DegreeViolation(
                f"vertex {quiver.vertices[v]} has {nout} outgoing and {nin} incoming arrows"
            )

    aidx = quiver.arrow_index
    f = [None] * quiver.num_arrows
    for cyc in fcycles:
        cyc = [str(x) for x in cyc]
        if not cyc:
            raise MalformedPermutation("empty f-cycle")
        for x in cyc:
            if x not in aidx:
                raise MalformedPermutation(f"f-cycle mentions unknown arrow {x}")
        for x, y in zip(cyc, cyc[1:] + cyc[:1]):
            if f[aidx[x]] is not None:
                raise MalformedPermutation(f"arrow {x} appears twice in the f-cycles")
            f[aidx[x]] = aidx[y]
    missing = [quiver.arrows[a] for a in range(quiver.num_arrows) if f[a] is None]
    if missing:
        raise MalformedPermutation("f is not defined on " + ", ".join(missing))
    for a in range(quiver.num_arrows):
        if quiver.source[f[a]] != quiver.target[a]:
            raise IncompatiblePermutation(
                f"f({quiver.arrows[a]}) = {quiver.arrows[f[a]]} does not start at the target "
                f"of {quiver.arrows[a]}"
            )
    return RibbonQuiver(quiver.vertices, quiver.arrows, quiver.source, quiver.target, tuple(f))


def ribbon_quiver(vertices, arrows, fcycles):
    return validate_ribbon_quiver(vertices, arrows, fcycles)


def is_triangulation_quiver(q):
    return perm.power(q.f, 3) == tuple(range(q.num_arrows))


def cycle_data(q):
    return CycleData(
        f_cycles=tuple(q.f_cycles),
        g_cycles=tuple(q.g_cycles),
        n=tuple(q.n(a) for a in range(q.num_arrows)),
    )


def to_ribbon_graph(q):
    return RibbonGraph(q.arrows, q.bar, q.g)


def from_ribbon_graph(graph):
    """Ribbon quiver with vertices = iota-orbits, ``t = s . sigma`` and ``f = iota . sigma``."""
    edges = perm.cycles(graph.iota)
    s = [None] * len(graph.half_edges)
    names = []
    for i, e in enumerate(edges):
        names.append("+".join(graph.half_edges[h] for h in e))
        for h in e:
            s[h] = i
    t = tuple(s[graph.sigma[h]] for h in range(len(s)))
    f = tuple(graph.iota[graph.sigma[h]] for h in range(len(s)))
    return RibbonQuiver(tuple(names), tuple(graph.half_edges), tuple(s), t, f)


@dataclass(frozen=True)
class Isomorphism:
    vertex_map: dict
    arrow_map: dict


def are_isomorphic(q1, q2):
    """Least isomorphism of ribbon quivers preserving ``s``, ``t`` and ``f``, or ``None``.

    A ribbon quiver is determined by ``(f, bar)`` on its arrows (sources are the
    ``bar``-orbits), so isomorphisms are exactly the arrow bijections commuting
    with both.
    """
    if q1.num_vertices != q2.num_vertices or q1.num_arrows != q2.num_arrows:
        return None
    phi = perm.conjugating_map([q1.f, q1.bar], [q2.f, q2.bar])
    if phi is None:
        return None
    vmap = {}
    for a in range(q1.num_arrows):
        vmap[q1.vertices[q1.source[a]]] = q2.vertices[q2.source[phi[a]]]
    amap = {q1.arrows[a]: q2.arrows[phi[a]] for a in range(q1.num_arrows)}
    return Isomorphism(vmap, amap)


def ribbon_graphs_isomorphic(g1, g2):
    if len(g1.half_edges) != len(g2.half_edges):
        return None
    phi = perm.conjugating_map([g1.sigma, g1.iota], [g2.sigma, g2.iota])
    if phi is None:
        return None
    return {g1.half_edges[h]: g2.half_edges[phi[h]] for h in range(len(phi))}


def canonical_form(q):
    """Relabeling-invariant code ``(f, bar)`` of a connected ribbon quiver."""
    return perm.canonical_code([q.f, q.bar])


def _quiver_from_code(code):
    f, bar = code
    n = len(f)
    vert = [None] * n
    count = 0
    for a in range(n):
        if vert[a] is None:
            vert[a] = vert[bar[a]] = count
            count += 1
    source = tuple(vert)
    target = tuple(vert[f[a]] for a in range(n))
    return RibbonQuiver(
        tuple(str(i + 1) for i in range(count)),
        tuple(f"a{a}" for a in range(n)),
        source,
        target,
        tuple(f),
    )


def _order3_permutations(n):
    """All permutations of ``range(n)`` whose cube is the identity."""
    out = []

    def rec(p, free):
        if not free:
            out.append(tuple(p))
            return
        x = free[0]
        rest = free[1:]
        p[x] = x
        rec(p, rest)
        for i, y in enumerate(rest):
            for j, z in enumerate(rest):
                if j == i:
                    continue
                p[x], p[y], p[z] = y, z, x
                rec(p, [w for w in rest if w not in (y, z)])
        p[x] = None

    # each 3-cycle (x y z) with x least is produced once for each ordering of (y, z),
    # which are the two distinct cycles on that set
    rec([None] * n, list(range(n)))
    return out


DEFAULT_ENUMERATION_CAP = 4


def enumerate_triangulation_quivers(n, cap=DEFAULT_ENUMERATION_CAP):
    """All connected triangulation quivers with ``n`` vertices, up to isomorphism.

    Arrows are fixed as ``0..2n-1`` with ``bar = (0 1)(2 3)...``; every ``f``
    with ``f**3 == id`` gives a triangulation quiver (targets are forced by
    ``t = s . f``), and every triangulation quiver arises this way.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > cap:
        raise CapExceeded(f"enumeration of {n} vertices exceeds the cap {cap}")
    m = 2 * n
    bar = tuple(a ^ 1 for a in range(m))
    codes = set()
    for f in _order3_permutations(m):
        if len(perm.orbits(m, [f, bar])) != 1:
            continue
        codes.add(perm.canonical_code([f, bar]))
    return [_quiver_from_code(c) for c in sorted(codes)]


def random_ribbon_quiver(rng, num_vertices, triangulation=False):
    """Random ribbon quiver on ``num_vertices`` vertices (not necessarily connected)."""
    m = 2 * num_vertices
    if triangulation:
        f = list(range(m))
        pts = list(range(m))
        rng.shuffle(pts)
        while len(pts) >= 3 and rng.random() < 0.8:
            x, y, z = pts.pop(), pts.pop(), pts.pop()
            f[x], f[y], f[z] = y, z, x
    else:
        f = list(range(m))
        rng.shuffle(f)
    bar = tuple(a ^ 1 for a in range(m))
    return _quiver_from_code((tuple(f), bar))


__all__ = [
    "Quiver",
    "RibbonQuiver",
    "RibbonGraph",
    "CycleData",
    "Isomorphism",
    "validate_ribbon_quiver",
    "ribbon_quiver",
    "is_triangulation_quiver",
    "cycle_data",
    "to_ribbon_graph",
    "from_ribbon_graph",
    "are_isomorphic",
    "ribbon_graphs_isomorphic",
    "canonical_form",
    "enumerate_triangulation_quivers",
    "random_ribbon_quiver",
]

