"""Ideal triangulations of marked surfaces, their quivers, (T3) and flips.

Triangulations are purely combinatorial: a list of triangles, each a
clockwise triple of edge labels (a repeated label marks a self-folded
triangle), plus the set of boundary segments.
"""

from collections import Counter
from dataclasses import dataclass

from .errors import InvalidIncidence, NotClosed, UnflippableArc
from .quiver import validate_ribbon_quiver


@dataclass(frozen=True)
class Triangulation:
    edges: tuple
    triangles: tuple
    boundary: frozenset = frozenset()

    @classmethod
    def build(cls, triangles, boundary=(), edges=None):
        triangles = tuple(tuple(str(x) for x in t) for t in triangles)
        boundary = frozenset(str(b) for b in boundary)
        if edges is None:
            seen = []
            for t in triangles:
                for x in t:
                    if x not in seen:
                        seen.append(x)
            for b in sorted(boundary):
                if b not in seen:
                    seen.append(b)
            edges = seen
        tri = cls(tuple(str(e) for e in edges), triangles, boundary)
        tri.validate()
        return tri

    def validate(self):
        for t in self.triangles:
            if len(t) != 3:
                raise InvalidIncidence(f"triangle {t} does not have three sides")
        uses = Counter(x for t in self.triangles for x in t)
        for b in self.boundary:
            uses[b] += 1
        known = set(self.edges)
        for x in uses:
            if x not in known:
                raise InvalidIncidence(f"edge {x} is not declared")
        for e in self.edges:
            if uses[e] != 2:
                raise InvalidIncidence(f"edge {e} is used {uses[e]} times, expected 2")
        return self

    @property
    def arcs(self):
        return [e for e in self.edges if e not in self.boundary]


def triangulation_to_quiver(tri):
    """Triangulation quiver: one f-3-cycle per triangle, one f-fixed loop per boundary segment."""
    tri.validate()
    arrows = []
    fcycles = []
    for i, (v1, v2, v3) in enumerate(tri.triangles):
        names = [f"t{i}.{j}" for j in (1, 2, 3)]
        arrows += [(names[0], v1, v2), (names[1], v2, v3), (names[2], v3, v1)]
        fcycles.append(names)
    for b in tri.edges:
        if b in tri.boundary:
            arrows.append((f"b.{b}", b, b))
            fcycles.append([f"b.{b}"])
    return validate_ribbon_quiver(tri.edges, arrows, fcycles)


@dataclass(frozen=True)
class T3Report:
    valencies: tuple
    flag: bool


def t3_check(tri):
    """Valency of every puncture (g-cycle); ``flag`` is true iff all are at least 3."""
    if tri.boundary:
        raise NotClosed("(T3) is defined for closed surfaces only")
    q = triangulation_to_quiver(tri)
    vals = tuple(len(c) for c in q.g_cycles)
    return T3Report(vals, all(v >= 3 for v in vals))


def _rotate_to_end(t, e):
    i = t.index(e)
    return t[i + 1:] + t[:i + 1]


def flip(tri, arc):
    """Flip ``arc`` inside the quadrilateral formed by its two triangles.

    ``(a, b, e)`` and ``(c, d, e)`` become ``(a, e, d)`` and ``(c, e, b)``;
    the new diagonal keeps the label ``e``.
    """
    arc = str(arc)
    if arc not in tri.edges:
        raise UnflippableArc(f"{arc} is not an edge")
    if arc in tri.boundary:
        raise UnflippableArc(f"{arc} is a boundary segment")
    holders = [i for i, t in enumerate(tri.triangles) if arc in t]
    if len(holders) != 2:
        raise UnflippableArc(f"both sides of {arc} lie in the same triangle")
    for i in holders:
        if len(set(tri.triangles[i])) < 3:
            raise UnflippableArc(f"{arc} borders a self-folded triangle")
    i, j = holders
    a, b, _ = _rotate_to_end(tri.triangles[i], arc)
    c, d, _ = _rotate_to_end(tri.triangles[j], arc)
    triangles = list(tri.triangles)
    triangles[i] = (a, arc, d)
    triangles[j] = (c, arc, b)
    return Triangulation.build(triangles, tri.boundary, tri.edges)


def flippable_arcs(tri):
    out = []
    for e in tri.arcs:
        try:
            flip(tri, e)
        except UnflippableArc:
            continue
        out.append(e)
    return out
