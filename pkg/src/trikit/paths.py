"""Path algebra ``KQ`` with exact coefficients.

A path is a tuple ``(source_vertex, a1, a2, ...)`` of indices; ``(v,)`` is
the trivial path at ``v``.  Composition is left to right: in ``a*b`` the
arrow ``b`` follows ``a``.  Paths are ordered by length, then
lexicographically by arrow index (the input order of the arrows).
"""

from .field import QQ


def path_key(p):
    return (len(p) - 1, p[1:], p[0])


class PathAlgebra:
    def __init__(self, quiver, field=QQ):
        self.quiver = quiver
        self.field = field

    def __eq__(self, other):
        return (
            isinstance(other, PathAlgebra)
            and self.quiver == other.quiver
            and self.field == other.field
        )

    def __hash__(self):
        return hash((self.quiver, self.field))

    # paths
    def trivial(self, v):
        return (v,)

    def arrow(self, a):
        return (self.quiver.source[a], a)

    def path(self, arrows):
        arrows = tuple(arrows)
        if not arrows:
            raise ValueError("use trivial() for paths of length zero")
        q = self.quiver
        for x, y in zip(arrows, arrows[1:]):
            if q.target[x] != q.source[y]:
                raise ValueError("arrows are not composable")
        return (q.source[arrows[0]],) + arrows

    def target(self, p):
        return self.quiver.target[p[-1]] if len(p) > 1 else p[0]

    def source(self, p):
        return p[0]

    def concat(self, p, q):
        """Concatenation ``p*q`` or ``None`` when ``p`` does not end where ``q`` starts."""
        if self.target(p) != q[0]:
            return None
        return p + q[1:]

    def format_path(self, p):
        if len(p) == 1:
            return f"e_{self.quiver.vertices[p[0]]}"
        return "*".join(self.quiver.arrows[a] for a in p[1:])

    # elements
    def element(self, terms=None):
        return AlgElement(self, terms or {})

    def zero(self):
        return AlgElement(self, {})

    def from_path(self, p, coef=None):
        return AlgElement(self, {p: self.field.one if coef is None else self.field(coef)})

    def e(self, v):
        return self.from_path((v,))

    def a(self, arrow):
        return self.from_path(self.arrow(arrow))

    def word(self, arrows, coef=None):
        arrows = tuple(arrows)
        if not arrows:
            raise ValueError("empty word")
        return self.from_path(self.path(arrows), coef)


class AlgElement:
    """Finite linear combination of paths."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = {p: c for p, c in terms.items() if c != 0}

    def _check(self, other):
        if not isinstance(other, AlgElement) or other.algebra != self.algebra:
            raise TypeError("elements of different path algebras")

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        for p, c in other.terms.items():
            t[p] = t.get(p, 0) + c
        return AlgElement(self.algebra, t)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return AlgElement(self.algebra, {p: -c for p, c in self.terms.items()})

    def scale(self, s):
        return AlgElement(self.algebra, {p: c * s for p, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, AlgElement):
            return self.scale(other)
        self._check(other)
        alg = self.algebra
        t = {}
        for p, c in self.terms.items():
            for q, d in other.terms.items():
                r = alg.concat(p, q)
                if r is not None:
                    t[r] = t.get(r, 0) + c * d
        return AlgElement(alg, t)

    def __rmul__(self, s):
        return self.scale(s)

    def __pow__(self, k):
        if k < 1:
            raise ValueError("use e(v) for the zeroth power of a cycle")
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, AlgElement):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def support(self):
        return sorted(self.terms, key=path_key)

    def leading(self):
        return max(self.terms, key=path_key)

    def monic(self):
        if not self.terms:
            return self
        return self.scale(1 / self.terms[self.leading()])

    def is_uniform(self):
        alg = self.algebra
        ends = {(p[0], alg.target(p)) for p in self.terms}
        return len(ends) <= 1

    def degree(self):
        return max(len(p) - 1 for p in self.terms)

    def min_degree(self):
        return min(len(p) - 1 for p in self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        alg = self.algebra
        fmt = alg.field.format
        parts = []
        for p in sorted(self.terms, key=path_key, reverse=True):
            c = self.terms[p]
            s = fmt(c)
            neg = s.startswith("-")
            if neg:
                s = s[1:]
            body = alg.format_path(p) if s == "1" else f"{s} {alg.format_path(p)}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    __repr__ = __str__
