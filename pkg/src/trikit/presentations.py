"""Brauer graph algebras, triangulation algebras, potentials and hyperpotentials."""

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    CharacteristicDividesMultiplicity,
    ExceptionalScalarViolation,
    FCycleShape,
    NotAdmissible,
    NotTriangulationQuiver,
)
from .gdata import GData
from .paths import PathAlgebra, path_key
from .quiver import are_isomorphic, is_triangulation_quiver


@dataclass(frozen=True)
class Presentation:
    """Quiver with relations ``KQ / <relations>``."""

    quiver: object
    relations: tuple
    kind: str
    field: object

    @property
    def algebra(self):
        return self.relations[0].algebra if self.relations else PathAlgebra(self.quiver, self.field)

    def describe(self):
        return [str(r) for r in self.relations]


def omega(q, a, alg=None):
    """Full g-cycle path ``a * g(a) * ... * g^(n-1)(a)``."""
    alg = alg or PathAlgebra(q)
    word = [a]
    while len(word) < q.n(a):
        word.append(q.g[word[-1]])
    return alg.word(word)


def omega_prime(q, a, alg=None):
    """``omega(a)`` without its last arrow; the trivial path at ``s(a)`` when ``n_a == 1``."""
    alg = alg or PathAlgebra(q)
    word = [a]
    while len(word) < q.n(a) - 1:
        word.append(q.g[word[-1]])
    if q.n(a) == 1:
        return alg.e(q.source[a])
    return alg.word(word)


def _cycle_power(q, a, k, alg):
    """``omega(a)**k``, with ``k == 0`` giving the trivial path at ``s(a)``."""
    if k == 0:
        return alg.e(q.source[a])
    return omega(q, a, alg) ** k


def _commutativity_tail(q, data, a, alg):
    """``c_a * omega(a)**(m_a - 1) * omega_prime(a)``."""
    return (_cycle_power(q, a, data.m[a] - 1, alg) * omega_prime(q, a, alg)).scale(data.c[a])


def _dedupe(relations):
    out, seen = [], set()
    for r in relations:
        if r.is_zero():
            continue
        r = r.monic()
        key = frozenset(r.terms.items())
        if key not in seen:
            seen.add(key)
            out.append(r)
    return tuple(out)


def brauer_presentation(q, data):
    data.check(q)
    alg = PathAlgebra(q, data.field)
    rels = []
    for a in range(q.num_arrows):
        rels.append(alg.word([a, q.f[a]]))
    for a in range(q.num_arrows):
        b = q.bar[a]
        rels.append(
            _cycle_power(q, a, data.m[a], alg).scale(data.c[a])
            - _cycle_power(q, b, data.m[b], alg).scale(data.c[b])
        )
    return Presentation(q, _dedupe(rels), "brauer", data.field)


def commutativity_relation(q, data, a, alg=None):
    """``bar(a) * f(bar(a)) - c_a * omega(a)**(m_a - 1) * omega_prime(a)``."""
    alg = alg or PathAlgebra(q, data.field)
    b = q.bar[a]
    return alg.word([b, q.f[b]]) - _commutativity_tail(q, data, a, alg)


def zero_relation(q, a, alg):
    """``a * f(a) * g(f(a))``."""
    b = q.f[a]
    return alg.word([a, b, q.g[b]])


@dataclass(frozen=True)
class ExceptionalClass:
    kind: str  # "NonExceptional" | "PuncturedMonogon" | "Tetrahedron"
    all_three: bool
    reciprocal: bool

    @property
    def exceptional(self):
        return self.kind != "NonExceptional"

    @property
    def conditions_agree(self):
        return self.all_three == self.reciprocal


def _reciprocal_condition(q, m):
    def inv(a):
        return Fraction(1, m[a] * q.n(a))

    for a in range(q.num_arrows):
        b = q.f[a]
        c = q.f[b]
        if inv(a) + inv(b) + inv(c) == 1:
            return True
    return False


def exceptional_check(q, m):
    """Classify ``(q, m)`` as one of the two exceptional shapes or as non-exceptional."""
    from . import catalog

    if isinstance(m, GData):
        m = m.m
    m = tuple(m)
    if not is_triangulation_quiver(q) or not q.is_connected():
        raise NotTriangulationQuiver("exceptional_check needs a connected triangulation quiver")
    if any(m[a] * q.n(a) < 3 for a in range(q.num_arrows)):
        raise NotAdmissible("some m_a * n_a < 3")
    all_three = all(m[a] * q.n(a) == 3 for a in range(q.num_arrows))
    # reported, not trusted: it also holds on some non-exceptional data
    recip = _reciprocal_condition(q, m)
    kind = "NonExceptional"
    if all_three:
        if are_isomorphic(q, catalog.punctured_monogon()) is not None:
            kind = "PuncturedMonogon"
        elif are_isomorphic(q, catalog.tetrahedron()) is not None:
            kind = "Tetrahedron"
        else:
            raise AssertionError("m*n == 3 everywhere on an unexpected quiver")
    return ExceptionalClass(kind, all_three, recip)


def exceptional_scalars_ok(q, data, kind):
    one = data.field.one
    if kind == "PuncturedMonogon":
        prod = one
        for a in range(q.num_arrows):
            prod = prod * data.c[a]
        return prod != one
    if kind == "Tetrahedron":
        for a in range(q.num_arrows):
            b = q.bar[a]
            if data.c[a] * data.c[b] * data.c[q.f[a]] * data.c[q.f[b]] != one:
                return True
        return False
    return True


def triangulation_presentation(q, data, zero_relations="all"):
    """Triangulation algebra as a quiver with relations.

    ``zero_relations`` is ``"all"`` or ``"one"`` (a single cubic zero relation,
    which suffices together with the commutativity relations).
    """
    data.check(q)
    if not is_triangulation_quiver(q):
        raise NotTriangulationQuiver("f**3 != id")
    if not data.is_admissible(q):
        bad = [q.arrows[a] for a in range(q.num_arrows) if data.mn(q, a) < 3]
        raise NotAdmissible("m_a * n_a < 3 for " + ", ".join(bad))
    cls = exceptional_check(q, data.m)
    alg = PathAlgebra(q, data.field)
    comm = [commutativity_relation(q, data, a, alg) for a in range(q.num_arrows)]
    if cls.exceptional:
        if not exceptional_scalars_ok(q, data, cls.kind):
            raise ExceptionalScalarViolation(
                f"{cls.kind} shape with scalars violating the finiteness condition"
            )
        return Presentation(q, _dedupe(comm), "triangulation-exceptional", data.field)
    zeros = [zero_relation(q, a, alg) for a in range(q.num_arrows)]
    if zero_relations == "one":
        zeros = zeros[:1]
    return Presentation(q, _dedupe(zeros + comm), "triangulation", data.field)


# potentials


def canonical_rotation(cycle):
    return min(cycle[i:] + cycle[:i] for i in range(len(cycle)))


@dataclass(frozen=True)
class Potential:
    quiver: object
    field: object
    # canonical arrow tuple -> coefficient
    terms: tuple

    @classmethod
    def from_dict(cls, q, field, terms):
        acc = {}
        for cyc, coef in terms:
            key = canonical_rotation(tuple(cyc))
            acc[key] = acc.get(key, 0) + coef
        items = tuple(sorted(((k, v) for k, v in acc.items() if v != 0), key=lambda kv: (len(kv[0]), kv[0])))
        return cls(q, field, items)

    def __str__(self):
        alg = PathAlgebra(self.quiver, self.field)
        el = alg.zero()
        for cyc, coef in self.terms:
            el = el + alg.word(cyc, coef)
        return str(el)


def _check_char(q, data):
    p = data.field.characteristic
    if p:
        bad = sorted({data.m[a] for a in range(q.num_arrows) if data.m[a] % p == 0})
        if bad:
            raise CharacteristicDividesMultiplicity(
                f"characteristic {p} divides the multiplicities {bad}"
            )


def potential(q, data):
    """Cubic terms over f-cycles minus ``c/m * omega**m`` over g-cycles."""
    data.check(q)
    _check_char(q, data)
    field = data.field
    terms = []
    for cyc in q.f_cycles:
        a = cyc[0]
        terms.append(((a, q.f[a], q.f[q.f[a]]), field.one))
    for cyc in q.g_cycles:
        b = cyc[0]
        word = tuple(cyc) * data.m[b]
        terms.append((word, -(data.c[b] / field(data.m[b]))))
    return Potential.from_dict(q, field, terms)


def cyclic_derivative(w, a):
    if isinstance(a, str):
        a = w.quiver.arrow_index[a]
    alg = PathAlgebra(w.quiver, w.field)
    out = alg.zero()
    for cyc, coef in w.terms:
        for i, x in enumerate(cyc):
            if x != a:
                continue
            rest = cyc[i + 1:] + cyc[:i]
            if rest:
                out = out + alg.word(rest, coef)
            else:
                out = out + alg.e(w.quiver.source[a]).scale(coef)
    return out


def rho(q, data, a, alg=None):
    """``f(a) f^2(a) - c_a * omega(g a)**(m_a - 1) * omega_prime(g a)``."""
    alg = alg or PathAlgebra(q, data.field)
    b = q.f[a]
    ga = q.g[a]
    return alg.word([b, q.f[b]]) - (
        _cycle_power(q, ga, data.m[a] - 1, alg) * omega_prime(q, ga, alg)
    ).scale(data.c[a])


def hyperpotential_sum(q, data):
    data.check(q)
    alg = PathAlgebra(q, data.field)
    total = alg.zero()
    for a in range(q.num_arrows):
        r = rho(q, data, a, alg)
        x = alg.a(a)
        total = total + x * r - r * x
    return total


def hyperpotential_check(q, data):
    if not is_triangulation_quiver(q):
        raise NotTriangulationQuiver("f**3 != id")
    return hyperpotential_sum(q, data).is_zero()


def jacobian_presentation(q, data):
    """Cyclic derivatives of the potential, as relations in the uncompleted path algebra.

    The cubic zero relations only follow in the completion, so this quotient is
    usually larger than the triangulation algebra (often infinite-dimensional).
    """
    w = potential(q, data)
    rels = [cyclic_derivative(w, a) for a in range(q.num_arrows)]
    return Presentation(q, _dedupe(rels), "jacobian", data.field)


def jacobian_matches_triangulation(q, data):
    """Whether every cyclic derivative of the potential equals the matching commutativity relation."""
    _check_char(q, data)
    for cyc in q.f_cycles:
        if len(cyc) != 3:
            raise FCycleShape(f"f-cycle {q.format_cycle(cyc)} does not have three distinct arrows")
    w = potential(q, data)
    alg = PathAlgebra(q, data.field)
    return all(cyclic_derivative(w, a) == rho(q, data, a, alg) for a in range(q.num_arrows))


def brauer_dimension_oracle(q, data):
    """Per-vertex ``m_a n_a + m_bar(a) n_bar(a)`` (dimension of each indecomposable projective)."""
    dims = []
    for v in range(q.num_vertices):
        a, b = q.outgoing[v]
        dims.append(data.mn(q, a) + data.mn(q, b))
    return dims


__all__ = [
    "Presentation",
    "omega",
    "omega_prime",
    "brauer_presentation",
    "triangulation_presentation",
    "commutativity_relation",
    "exceptional_check",
    "ExceptionalClass",
    "potential",
    "Potential",
    "cyclic_derivative",
    "rho",
    "hyperpotential_sum",
    "hyperpotential_check",
    "jacobian_presentation",
    "jacobian_matches_triangulation",
    "brauer_dimension_oracle",
    "path_key",
]
