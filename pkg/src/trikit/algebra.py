"""Finite-dimensional quotients ``KQ/I`` with a monomial basis."""

from functools import cached_property

from .groebner import GroebnerBasis
from .paths import AlgElement, PathAlgebra, path_key


class QuotientAlgebra:
    """``KQ/I`` with basis the normal paths of a complete Groebner basis of ``I``.

    Elements are handled as sparse coordinate dicts ``{basis index: coefficient}``.
    """

    def __init__(self, presentation, gb, top_degree):
        self.presentation = presentation
        self.quiver = presentation.quiver
        self.field = presentation.field
        self.paths = PathAlgebra(self.quiver, self.field)
        self._gb = gb
        self.groebner_basis = tuple(gb.elements())
        self.top_degree = top_degree
        self.basis = tuple(gb.normal_paths())
        self.index = {p: i for i, p in enumerate(self.basis)}
        self._products = {}

    @property
    def dimension(self):
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    @property
    def zero(self):
        return self.field.zero

    @property
    def one(self):
        return self.field.one

    def source(self, i):
        return self.basis[i][0]

    def target(self, i):
        return self.paths.target(self.basis[i])

    def idempotent(self, v):
        return self.index[(v,)]

    @cached_property
    def idempotents(self):
        return tuple(self.index[(v,)] for v in range(self.quiver.num_vertices))

    @cached_property
    def _between(self):
        table = {}
        for i, p in enumerate(self.basis):
            table.setdefault((p[0], self.paths.target(p)), []).append(i)
        return table

    def paths_between(self, i, j):
        """Basis indices of ``e_i A e_j`` (paths from ``i`` to ``j``)."""
        return tuple(self._between.get((i, j), ()))

    def normal_form(self, x):
        """Coordinates of a path-algebra element (or a ``{path: coef}`` dict)."""
        terms = x.terms if isinstance(x, AlgElement) else x
        red = self._gb.reduce(terms)
        return {self.index[p]: c for p, c in red.items() if c != 0}

    def reduces_to_zero(self, x):
        return not self.normal_form(x)

    def product(self, i, j):
        key = (i, j)
        hit = self._products.get(key)
        if hit is None:
            p = self.paths.concat(self.basis[i], self.basis[j])
            hit = {} if p is None else self.normal_form({p: self.one})
            self._products[key] = hit
        return hit

    def mul(self, x, y):
        out = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.product(i, j).items():
                    out[k] = out.get(k, 0) + a * b * c
        return {k: v for k, v in out.items() if v != 0}

    def add(self, x, y, scale=1):
        out = dict(x)
        for k, v in y.items():
            out[k] = out.get(k, 0) + scale * v
        return {k: v for k, v in out.items() if v != 0}

    def dense(self, x):
        v = [self.zero] * self.dimension
        for k, c in x.items():
            v[k] = c
        return v

    def element(self, x):
        return AlgElement(self.paths, {self.basis[k]: c for k, c in x.items()})

    def format_basis_element(self, i):
        return self.paths.format_path(self.basis[i])

    @cached_property
    def loewy_length(self):
        """Least ``N`` with every path of length ``N`` zero in the quotient."""
        n = 0
        while any(not self.reduces_to_zero({p: self.one}) for p in paths_of_length(self.quiver, n)):
            n += 1
        return n

    def assert_subword_closed(self):
        normal = set(self.basis)
        for p in self.basis:
            arrows = p[1:]
            for i in range(len(arrows)):
                for j in range(i + 1, len(arrows) + 1):
                    sub = arrows[i:j]
                    src = self.quiver.source[sub[0]]
                    if (src,) + sub not in normal:
                        raise AssertionError(f"normal set not subword closed at {p}")
        return True


def quotient_basis(presentation, degree_cap=None):
    gb = GroebnerBasis(presentation.algebra, presentation.relations, degree_cap)
    top = gb.complete()
    alg = QuotientAlgebra(presentation, gb, top)
    alg.assert_subword_closed()
    return alg


def paths_of_length(quiver, length):
    layer = [(v,) for v in range(quiver.num_vertices)]
    for _ in range(length):
        nxt = []
        for p in layer:
            t = quiver.target[p[-1]] if len(p) > 1 else p[0]
            nxt.extend(p + (a,) for a in quiver.outgoing[t])
        layer = nxt
    return layer


def truncate(presentation, length):
    """Add every path of ``length`` as a relation: ``KQ / (I + J^length)``.

    If ``J^L`` lies in the closure of ``I`` in the completed path algebra, the
    completed quotient has the same dimension as this one for every ``length >= L``.
    """
    from .presentations import Presentation

    alg = presentation.algebra
    extra = [alg.from_path(p) for p in paths_of_length(presentation.quiver, length)]
    return Presentation(
        presentation.quiver,
        tuple(presentation.relations) + tuple(extra),
        presentation.kind + "-truncated",
        presentation.field,
    )


def algebra_from_relations(quiver, relations, field=None, kind="relations", degree_cap=None):
    """Quotient of ``KQ`` by explicit relations (used for control inputs)."""
    from .field import QQ
    from .presentations import Presentation

    field = field or QQ
    return quotient_basis(Presentation(quiver, tuple(relations), kind, field), degree_cap)


__all__ = ["QuotientAlgebra", "quotient_basis", "algebra_from_relations", "truncate", "path_key"]
