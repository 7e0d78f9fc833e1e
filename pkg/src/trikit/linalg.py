"""Exact dense linear algebra over a field.

Matrices are lists of rows; entries are field elements (``Fraction`` or
``ModP``).  Vectors are rows.  Nothing here rounds.
"""


def _is_zero(x):
    return x == 0


def rref(rows, ncols=None):
    """Reduced row echelon form.

    Returns ``(reduced_rows, pivots)`` where ``reduced_rows`` holds only the
    nonzero rows and ``pivots[r]`` is the pivot column of row ``r``.
    """
    m = [list(r) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if not _is_zero(m[i][col]):
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][col]
        row = [x * inv for x in m[r]]
        m[r] = row
        for i in range(len(m)):
            if i != r and not _is_zero(m[i][col]):
                factor = m[i][col]
                other = m[i]
                m[i] = [a - factor * b for a, b in zip(other, row)]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, ncols=None):
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols, zero, one):
    """Basis of ``{x : M x = 0}`` for the matrix with the given rows."""
    red, pivots = rref(rows, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [zero] * ncols
        v[free] = one
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][free]
        basis.append(v)
    return basis


def left_nullspace(rows, ncols, zero, one):
    """Basis of ``{y : y M = 0}``."""
    return nullspace(transpose(rows, ncols), len(rows), zero, one)


def transpose(rows, ncols=None):
    if not rows:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*rows)]


def determinant(rows, zero, one):
    n = len(rows)
    m = [list(r) for r in rows]
    det = one
    for col in range(n):
        piv = None
        for i in range(col, n):
            if not _is_zero(m[i][col]):
                piv = i
                break
        if piv is None:
            return zero
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        pv = m[col][col]
        det = det * pv
        inv = 1 / pv
        for i in range(col + 1, n):
            if not _is_zero(m[i][col]):
                factor = m[i][col] * inv
                m[i] = [a - factor * b for a, b in zip(m[i], m[col])]
    return det


class Subspace:
    """Row space with coordinate lookup.

    ``coordinates(v)`` expresses ``v`` in terms of the *given* spanning rows,
    which must be linearly independent.
    """

    def __init__(self, basis, dim, zero, one):
        self.basis = [list(b) for b in basis]
        self.dim = dim
        self.zero = zero
        self.one = one
        # augment with identity to track combinations
        k = len(self.basis)
        aug = [b + [one if i == j else zero for j in range(k)] for i, b in enumerate(self.basis)]
        red, piv = rref(aug, dim)
        if len(piv) != k:
            raise ValueError("spanning rows are not independent")
        self._red = red
        self._piv = piv

    def coordinates(self, v):
        v = list(v)
        coords = [self.zero] * len(self.basis)
        for r, pc in enumerate(self._piv):
            a = v[pc]
            if _is_zero(a):
                continue
            row = self._red[r]
            for j in range(self.dim):
                v[j] = v[j] - a * row[j]
            for j in range(len(self.basis)):
                coords[j] = coords[j] + a * row[self.dim + j]
        if any(not _is_zero(x) for x in v):
            raise ValueError("vector is not in the subspace")
        return coords

    def contains(self, v):
        try:
            self.coordinates(v)
        except ValueError:
            return False
        return True


class Echelon:
    """Incrementally built span of sparse vectors (``{index: coefficient}``)."""

    def __init__(self):
        self.rows = {}  # pivot -> row normalised so row[pivot] == 1

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, v):
        v = {k: c for k, c in v.items() if c != 0}
        while v:
            hits = [k for k in v if k in self.rows]
            if not hits:
                break
            for k in hits:
                c = v.get(k, 0)
                if c == 0:
                    continue
                for j, d in self.rows[k].items():
                    x = v.get(j, 0) - c * d
                    if x == 0:
                        v.pop(j, None)
                    else:
                        v[j] = x
        return v

    def add(self, v):
        """Add ``v``; returns whether it was independent of the current span."""
        r = self.reduce(v)
        if not r:
            return False
        p = min(r)
        inv = 1 / r[p]
        r = {k: c * inv for k, c in r.items()}
        # keep pivots of existing rows cleared
        for q, row in self.rows.items():
            c = row.get(p, 0)
            if c != 0:
                for j, d in r.items():
                    x = row.get(j, 0) - c * d
                    if x == 0:
                        row.pop(j, None)
                    else:
                        row[j] = x
        self.rows[p] = r
        return True

    def contains(self, v):
        return not self.reduce(v)
