"""Finite-dimensional right modules over a ``QuotientAlgebra``.

A module is a representation: a vector space ``M_v`` per vertex and, per
arrow ``a``, a ``dim M_s(a) x dim M_t(a)`` matrix acting on row vectors, so
that a path ``a1 a2 ... ak`` acts by the product of its matrices in order.
"""

from .errors import ZeroModule
from .linalg import Subspace, left_nullspace, rank, rref


class Representation:
    def __init__(self, algebra, dims, mats):
        self.algebra = algebra
        self.dims = tuple(dims)
        self.mats = tuple(mats)

    @property
    def quiver(self):
        return self.algebra.quiver

    @property
    def dimension(self):
        return sum(self.dims)

    @property
    def dimension_vector(self):
        return self.dims

    def act(self, vec, arrow):
        m = self.mats[arrow]
        cols = self.dims[self.quiver.target[arrow]]
        out = [self.algebra.zero] * cols
        for x, row in zip(vec, m):
            if x != 0:
                out = [o + x * r for o, r in zip(out, row)]
        return out

    def act_path(self, vec, path):
        for a in path[1:]:
            vec = self.act(vec, a)
        return vec

    def evaluate(self, element):
        """Matrix of a uniform path-algebra element (rows indexed by the source space)."""
        terms = element.terms if hasattr(element, "terms") else element
        if not terms:
            return []
        some = next(iter(terms))
        s, t = some[0], self.algebra.paths.target(some)
        zero = self.algebra.zero
        out = [[zero] * self.dims[t] for _ in range(self.dims[s])]
        for p, c in terms.items():
            for i in range(self.dims[s]):
                unit = [zero] * self.dims[s]
                unit[i] = self.algebra.one
                img = self.act_path(unit, p)
                out[i] = [o + c * x for o, x in zip(out[i], img)]
        return out

    def satisfies_relations(self):
        for r in self.algebra.presentation.relations:
            m = self.evaluate(r)
            if any(x != 0 for row in m for x in row):
                return False
        return True

    def radical_rank(self, v):
        rows = [row for a in self.quiver.incoming[v] for row in self.mats[a]]
        return rank(rows, self.dims[v]) if rows else 0

    def top_dimension_vector(self):
        return tuple(self.dims[v] - self.radical_rank(v) for v in range(len(self.dims)))

    def __repr__(self):
        return f"Representation(dims={self.dims})"


def simple(A, i):
    q = A.quiver
    dims = [int(v == i) for v in range(q.num_vertices)]
    mats = [[[A.zero] * dims[q.target[a]] for _ in range(dims[q.source[a]])] for a in range(q.num_arrows)]
    return Representation(A, dims, mats)


def _arrow_element(A, a):
    q = A.quiver
    return A.normal_form({(q.source[a], a): A.one})


def projective_data(A, tops):
    """Basis of ``(+)_k P_{tops[k]}`` per vertex as ``(k, basis index)`` pairs, plus arrow matrices."""
    q = A.quiver
    blocks = [[] for _ in range(q.num_vertices)]
    for k, i in enumerate(tops):
        for w in range(q.num_vertices):
            blocks[w].extend((k, x) for x in A.paths_between(i, w))
    pos = [{b: n for n, b in enumerate(blocks[w])} for w in range(q.num_vertices)]
    mats = []
    for a in range(q.num_arrows):
        s, t = q.source[a], q.target[a]
        ae = _arrow_element(A, a)
        m = []
        for k, x in blocks[s]:
            row = [A.zero] * len(blocks[t])
            for y, c in A.mul({x: A.one}, ae).items():
                row[pos[t][(k, y)]] = c
            m.append(row)
        mats.append(m)
    return blocks, mats


def projective(A, i):
    """``P_i = e_i A``, with basis the normal paths starting at ``i``."""
    blocks, mats = projective_data(A, [i])
    return Representation(A, [len(b) for b in blocks], mats)


def top_generators(M):
    """Per vertex, vectors whose images span ``top(M)`` at that vertex."""
    q = M.quiver
    gens = []
    for v in range(q.num_vertices):
        d = M.dims[v]
        rows = [row for a in q.incoming[v] for row in M.mats[a]]
        red, piv = rref(rows, d) if rows else ([], [])
        pivset = set(piv)
        unit = []
        for j in range(d):
            if j not in pivset:
                u = [M.algebra.zero] * d
                u[j] = M.algebra.one
                unit.append(u)
        gens.append(unit)
    return gens


class Cover:
    """Minimal projective cover ``(+)_k P_{tops[k]} -> M`` and its kernel."""

    def __init__(self, M):
        A = M.algebra
        q = M.quiver
        gens = top_generators(M)
        self.tops = [v for v in range(q.num_vertices) for _ in gens[v]]
        flat = [g for v in range(q.num_vertices) for g in gens[v]]
        self.blocks, self.mats = projective_data(A, self.tops)
        self.cover = Representation(A, [len(b) for b in self.blocks], self.mats)
        self.maps = []
        for w in range(q.num_vertices):
            rows = [M.act_path(flat[k], A.basis[x]) for k, x in self.blocks[w]]
            image = rank(rows, M.dims[w]) if rows else 0
            if image != M.dims[w]:
                raise AssertionError("projective cover is not surjective")
            self.maps.append(rows)
        self.module = M

    def kernel(self):
        A = self.module.algebra
        q = self.module.quiver
        bases = [
            left_nullspace(self.maps[w], self.module.dims[w], A.zero, A.one) if self.maps[w] else []
            for w in range(q.num_vertices)
        ]
        spaces = [Subspace(b, len(self.blocks[w]), A.zero, A.one) for w, b in enumerate(bases)]
        mats = []
        for a in range(q.num_arrows):
            s, t = q.source[a], q.target[a]
            mats.append([spaces[t].coordinates(self.cover.act(x, a)) for x in bases[s]])
        K = Representation(A, [len(b) for b in bases], mats)
        if K.dimension != self.cover.dimension - self.module.dimension:
            raise AssertionError("rank-nullity violated in syzygy")
        return K


def syzygy(A, M):
    """Kernel of the minimal projective cover of ``M``."""
    if M.dimension == 0:
        raise ZeroModule("syzygy of the zero module")
    return Cover(M).kernel()


def omega_period(A, i, max_steps=8):
    """Least ``k <= max_steps`` with ``Omega^k(S_i)`` of dimension vector ``e_i``, else None."""
    M = simple(A, i)
    unit = M.dims
    for k in range(1, max_steps + 1):
        try:
            M = syzygy(A, M)
        except ZeroModule:
            return None
        if M.dims == unit:
            return k
    return None


def omega_dimensions(A, i, steps):
    """Dimension vectors of ``Omega^k(S_i)`` for ``k = 1..steps`` (stops at zero)."""
    M = simple(A, i)
    out = []
    for _ in range(steps):
        try:
            M = syzygy(A, M)
        except ZeroModule:
            break
        out.append(M.dims)
    return out
