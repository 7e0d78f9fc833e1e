"""Two-term complexes of projectives and their homotopy endomorphism algebras.

A map ``P_i -> P_j`` between indecomposable projectives ``P_i = e_i A`` is
left multiplication by an element of ``e_j A e_i``; composing ``first`` then
``second`` multiplies the elements as ``second * first``.  Maps between
direct sums are matrices of such elements.
"""

from dataclasses import dataclass, field

from .errors import NoComplement
from .linalg import Echelon

SIGNS = {"-": "-", "minus": "-", "+": "+", "plus": "+"}


@dataclass
class TwoTermComplex:
    """``low -> high`` with ``low`` in degree -1 and ``high`` in degree 0.

    ``low``/``high`` list the vertex of each indecomposable projective term;
    ``diff[(t, s)]`` is the sparse entry from ``low[s]`` to ``high[t]``.
    ``summands`` records the indecomposable summands as pairs of index lists
    into ``low`` and ``high``.
    """

    algebra: object
    low: tuple
    high: tuple
    diff: dict
    summands: list = field(default_factory=list)
    labels: list = field(default_factory=list)

    def __post_init__(self):
        A = self.algebra
        for (t, s), entry in self.diff.items():
            for x in entry:
                if A.source(x) != self.high[t] or A.target(x) != self.low[s]:
                    raise ValueError("differential entry is not a map between the recorded projectives")
        if not self.summands:
            self.summands = [(list(range(len(self.low))), list(range(len(self.high))))]
            self.labels = ["C"]

    def multiplicities(self):
        n = self.algebra.quiver.num_vertices
        lo = [0] * n
        hi = [0] * n
        for v in self.low:
            lo[v] += 1
        for v in self.high:
            hi[v] += 1
        return tuple(lo), tuple(hi)

    def summand(self, i):
        ls, hs = self.summands[i]
        lpos = {s: n for n, s in enumerate(ls)}
        hpos = {t: n for n, t in enumerate(hs)}
        diff = {
            (hpos[t], lpos[s]): e for (t, s), e in self.diff.items() if t in hpos and s in lpos
        }
        low = tuple(self.low[s] for s in ls)
        high = tuple(self.high[t] for t in hs)
        return TwoTermComplex(self.algebra, low, high, diff, [(list(range(len(low))), list(range(len(high))))], [self.labels[i]])

    def describe(self, fmt_vertex):
        parts = []
        for i, (ls, hs) in enumerate(self.summands):
            lo = " + ".join(f"P{fmt_vertex(self.low[s])}" for s in ls) or "0"
            hi = " + ".join(f"P{fmt_vertex(self.high[t])}" for t in hs) or "0"
            parts.append(f"({lo} -> {hi})")
        return " + ".join(parts)


def regular_complex(A):
    """``0 -> A`` with one summand per indecomposable projective."""
    n = A.quiver.num_vertices
    return TwoTermComplex(
        A, (), tuple(range(n)), {}, [([], [v]) for v in range(n)], [f"P{v}" for v in A.quiver.vertices]
    )


def _radical(A, indices):
    return [x for x in indices if len(A.basis[x]) > 1]


def _complement(A, candidates, spanning):
    span = Echelon()
    for v in spanning:
        span.add(v)
    return [x for x in candidates if span.add({x: A.one})]


def left_approximation(A, k):
    """Components ``x in e_j A e_k`` of a minimal left add(Q)-approximation of ``P_k``."""
    others = [j for j in range(A.quiver.num_vertices) if j != k]
    comps = []
    for j in others:
        factored = [
            A.mul({y: A.one}, {z: A.one})
            for l in others
            for y in _radical(A, A.paths_between(j, l))
            for z in A.paths_between(l, k)
        ]
        comps += [(j, x) for x in _complement(A, A.paths_between(j, k), factored)]
    return comps


def right_approximation(A, k):
    """Components ``x in e_k A e_j`` of a minimal right add(Q)-approximation of ``P_k``."""
    others = [j for j in range(A.quiver.num_vertices) if j != k]
    comps = []
    for j in others:
        factored = [
            A.mul({z: A.one}, {y: A.one})
            for l in others
            for z in A.paths_between(k, l)
            for y in _radical(A, A.paths_between(l, j))
        ]
        comps += [(j, x) for x in _complement(A, A.paths_between(k, j), factored)]
    return comps


def silting_complex(A, k, sign):
    """``U^-_P = (P -> Q') + Q`` or ``U^+_P = (Q'' -> P) + Q`` for ``P = P_k``."""
    n = A.quiver.num_vertices
    if n < 2:
        raise NoComplement("a one-vertex algebra has no complement Q")
    sign = SIGNS[sign]
    name = A.quiver.vertices
    labels = [f"U{name[k]}"] + [f"P{name[j]}" for j in range(n) if j != k]
    others = [j for j in range(n) if j != k]
    if sign == "-":
        comps = left_approximation(A, k)
        high = tuple(j for j, _ in comps) + tuple(others)
        diff = {(t, 0): {x: A.one} for t, (_, x) in enumerate(comps)}
        summands = [([0], list(range(len(comps))))]
        summands += [([], [len(comps) + i]) for i in range(len(others))]
        return TwoTermComplex(A, (k,), high, diff, summands, labels)
    comps = right_approximation(A, k)
    low = tuple(j for j, _ in comps) + tuple(others)
    diff = {(0, s): {x: A.one} for s, (_, x) in enumerate(comps)}
    summands = [(list(range(len(comps))), [0])]
    summands += [([len(comps) + i], []) for i in range(len(others))]
    return TwoTermComplex(A, low, (k,), diff, summands, labels)


class _Keys:
    def __init__(self):
        self.ids = {}

    def __call__(self, key):
        return self.ids.setdefault(key, len(self.ids))

    def vector(self, prefix, elem):
        return {self((prefix, i)): c for i, c in elem.items()}


def hom_dimension(A, X, Y):
    """``dim Hom_K(X, Y)``: chain maps modulo null-homotopic ones."""
    variables = []
    for u, yv in enumerate(Y.low):
        for s, xv in enumerate(X.low):
            variables += [("L", u, s, x) for x in A.paths_between(yv, xv)]
    for t, yv in enumerate(Y.high):
        for v, xv in enumerate(X.high):
            variables += [("H", t, v, x) for x in A.paths_between(yv, xv)]

    eq_keys = _Keys()
    eqs = Echelon()
    for kind, i, j, x in variables:
        vec = {}
        if kind == "L":
            for (t, u), e in Y.diff.items():
                if u == i:
                    for key, c in eq_keys.vector((t, j), A.mul(e, {x: A.one})).items():
                        vec[key] = vec.get(key, 0) + c
        else:
            for (v, s), e in X.diff.items():
                if v == j:
                    for key, c in eq_keys.vector((i, s), A.mul({x: A.one}, e)).items():
                        vec[key] = vec.get(key, 0) - c
        eqs.add(vec)
    chain = len(variables) - eqs.rank

    var_keys = _Keys()
    null = Echelon()
    for u, yv in enumerate(Y.low):
        for v, xv in enumerate(X.high):
            for x in A.paths_between(yv, xv):
                vec = {}
                for (w, s), e in X.diff.items():
                    if w == v:
                        vec.update(var_keys.vector(("L", u, s), A.mul({x: A.one}, e)))
                for (t, w), e in Y.diff.items():
                    if w == u:
                        vec.update(var_keys.vector(("H", t, v), A.mul(e, {x: A.one})))
                null.add(vec)
    return chain - null.rank


@dataclass
class EndReport:
    dimension: int
    matrix: list  # matrix[i][j] = dim Hom_K(T_j, T_i)
    labels: list

    def multiset(self):
        return sorted(x for row in self.matrix for x in row)


def end_algebra(A, C):
    parts = [C.summand(i) for i in range(len(C.summands))]
    matrix = [[hom_dimension(A, tj, ti) for tj in parts] for ti in parts]
    return EndReport(sum(map(sum, matrix)), matrix, list(C.labels))
