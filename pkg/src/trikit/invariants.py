"""Numerical invariants of a finite-dimensional quotient algebra."""

import random
from dataclasses import dataclass
from itertools import product as cartesian

from .linalg import Echelon, determinant, nullspace

SEARCH_SEED = 20140301
RANDOM_POINTS = 12
GRID_LIMIT = 4096


def cartan_matrix(A):
    """``C[i][j] = dim e_i A e_j`` (number of basis paths from ``i`` to ``j``)."""
    n = A.quiver.num_vertices
    return [[len(A.paths_between(i, j)) for j in range(n)] for i in range(n)]


def cartan_det(A):
    from fractions import Fraction

    c = cartan_matrix(A)
    d = determinant([[Fraction(x) for x in row] for row in c], Fraction(0), Fraction(1))
    return int(d)


def commutator_span(A):
    """Echelon basis of the span of ``x_i x_j - x_j x_i`` over basis pairs."""
    span = Echelon()
    for i in range(A.dimension):
        for j in range(i + 1, A.dimension):
            c = A.add(A.product(i, j), A.product(j, i), scale=-1)
            if c:
                span.add(c)
    return span


def trace_functionals(A, span=None):
    """Basis of the functionals vanishing on all commutators, as coefficient vectors."""
    span = span or commutator_span(A)
    rows = []
    for r in span.rows.values():
        row = [A.zero] * A.dimension
        for k, c in r.items():
            row[k] = c
        rows.append(row)
    return nullspace(rows, A.dimension, A.zero, A.one)


@dataclass
class SymmetryResult:
    symmetric: bool
    witness: tuple | None  # functional values on the basis
    certified: bool  # False only for a negative answer from a non-exhaustive search
    functionals: int  # dimension of the space searched

    def __bool__(self):
        return self.symmetric


def gram_matrix(A, functional):
    return [
        [sum((functional[k] * c for k, c in A.product(i, j).items()), A.zero) for j in range(A.dimension)]
        for i in range(A.dimension)
    ]


def _combine(A, basis, coeffs):
    out = [A.zero] * A.dimension
    for t, vec in zip(coeffs, basis):
        if t:
            out = [x + t * y for x, y in zip(out, vec)]
    return out


def symmetrizing_form_exists(A):
    """Search for a commutator-killing functional with nonsingular Gram matrix.

    The Gram determinant is a polynomial of degree at most ``dim A`` in the
    coordinates of the functional.  Candidates are unit vectors, the all-ones
    vector, then seeded random integer points; when the grid
    ``{0..dim A}^k`` is small it is scanned exhaustively, which certifies a
    negative answer.
    """
    field = A.field
    basis = trace_functionals(A)
    k = len(basis)
    if k == 0 or A.dimension == 0:
        return SymmetryResult(False, None, True, k)

    def try_point(coeffs):
        lam = _combine(A, basis, [field(c) for c in coeffs])
        if determinant(gram_matrix(A, lam), A.zero, A.one) != 0:
            return tuple(lam)
        return None

    candidates = [tuple(int(i == s) for i in range(k)) for s in range(k)]
    candidates.append((1,) * k)
    rng = random.Random(SEARCH_SEED)
    bound = max(2 * A.dimension, 10)
    candidates += [tuple(rng.randint(-bound, bound) for _ in range(k)) for _ in range(RANDOM_POINTS)]
    for coeffs in candidates:
        w = try_point(coeffs)
        if w is not None:
            return SymmetryResult(True, w, True, k)
    if (A.dimension + 1) ** k <= GRID_LIMIT:
        for coeffs in cartesian(range(A.dimension + 1), repeat=k):
            w = try_point(coeffs)
            if w is not None:
                return SymmetryResult(True, w, True, k)
        return SymmetryResult(False, None, True, k)
    return SymmetryResult(False, None, False, k)


@dataclass
class RigidityResult:
    hh0_dimension: int
    rigid: bool


def hh0_rigidity(A):
    span = commutator_span(A)
    dim = A.dimension - span.rank
    rigid = False
    if dim == A.quiver.num_vertices:
        for e in A.idempotents:
            if not span.add({e: A.one}):
                break
        else:
            rigid = True
    return RigidityResult(dim, rigid)
