"""Two-sided Groebner bases in path algebras and finite-dimensional quotients.

The monomial order is length first, then lexicographic in arrow index.
Overlaps are processed in order of their length.  Once every path of some
length ``d`` is divisible by a leading path, the set of normal paths is
finite, every new basis element has a normal leading path, and the
remaining (finitely many) overlaps are drained; the result is a complete
Groebner basis, so the normal paths form a basis of the quotient.
"""

import heapq
import os
from itertools import count

from .errors import CapExceeded
from .paths import AlgElement, path_key

DEFAULT_DEGREE_CAP = 64
# work budgets; exceeding either is reported as CapExceeded
MAX_ELEMENTS = 4000
MAX_NORMAL_PATHS = 50000


def default_degree_cap():
    env = os.environ.get("TRIKIT_DEGREE_CAP")
    return int(env) if env else DEFAULT_DEGREE_CAP


class GroebnerBasis:
    def __init__(self, algebra, relations, degree_cap=None):
        self.alg = algebra
        self.quiver = algebra.quiver
        self.cap = default_degree_cap() if degree_cap is None else degree_cap
        self.elems = {}  # id -> (lm, terms)
        self.by_lm = {}  # lm arrows -> id
        self.maxlen = 0
        self._ids = count()
        self._tick = count()
        self.pairs = []
        for r in sorted(relations, key=lambda r: path_key(r.leading()) if r else ()):
            self._insert(self.reduce(r.terms))

    # reduction
    def find_divisor(self, arrows):
        n = len(arrows)
        for i in range(n):
            for j in range(i + 1, min(n, i + self.maxlen) + 1):
                gid = self.by_lm.get(arrows[i:j])
                if gid is not None:
                    return gid, i, j
        return None

    def reduce(self, terms):
        terms = dict(terms)
        out = {}
        while terms:
            p = max(terms, key=path_key)
            c = terms.pop(p)
            if c == 0:
                continue
            arrows = p[1:]
            hit = self.find_divisor(arrows) if arrows else None
            if hit is None:
                out[p] = c
                continue
            gid, i, j = hit
            lm, g = self.elems[gid]
            u, w = arrows[:i], arrows[j:]
            for q, d in g.items():
                if q == lm:
                    continue
                r = (p[0],) + u + q[1:] + w
                terms[r] = terms.get(r, 0) - c * d
        return out

    # basis maintenance
    def _insert(self, terms):
        if not terms:
            return
        lm = max(terms, key=path_key)
        if len(lm) == 1:
            raise ValueError("a relation has a trivial leading path; relations must lie in the arrow ideal")
        inv = 1 / terms[lm]
        terms = {p: c * inv for p, c in terms.items()}
        key = lm[1:]
        # drop elements whose leading path contains the new one
        displaced = []
        for gid, (glm, g) in list(self.elems.items()):
            ga = glm[1:]
            if _contains(ga, key):
                del self.elems[gid]
                del self.by_lm[ga]
                displaced.append(g)
        gid = next(self._ids)
        self.elems[gid] = (lm, terms)
        self.by_lm[key] = gid
        self.maxlen = max(len(k) for k in self.by_lm)
        for other in list(self.elems):
            self._add_pairs(gid, other)
            if other != gid:
                self._add_pairs(other, gid)
        for g in displaced:
            self._insert(self.reduce(g))

    def _add_pairs(self, ia, ib):
        a = self.elems[ia][0][1:]
        b = self.elems[ib][0][1:]
        for k in range(1, min(len(a), len(b))):
            if a[-k:] == b[:k]:
                deg = len(a) + len(b) - k
                heapq.heappush(self.pairs, (deg, next(self._tick), ia, ib, k))

    def _spoly(self, ia, ib, k):
        lma, ga = self.elems[ia]
        lmb, gb = self.elems[ib]
        a = lma[1:]
        w = lmb[1:][k:]
        u = a[:-k]
        out = {}
        for q, c in ga.items():
            r = q + w
            out[r] = out.get(r, 0) + c
        for q, c in gb.items():
            r = (lma[0],) + u + q[1:]
            out[r] = out.get(r, 0) - c
        return out

    def _extend(self, r):
        arrows = r[1:]
        return not any(
            arrows[-L:] in self.by_lm for L in range(1, min(len(arrows), self.maxlen) + 1)
        )

    def _layers(self, limit):
        q = self.quiver
        layer = [(v,) for v in range(q.num_vertices)]
        total = len(layer)
        yield layer
        d = 0
        while layer and d < limit:
            nxt = []
            for p in layer:
                t = q.target[p[-1]] if len(p) > 1 else p[0]
                for a in q.outgoing[t]:
                    r = p + (a,)
                    if self._extend(r):
                        nxt.append(r)
            layer = nxt
            total += len(layer)
            if total > MAX_NORMAL_PATHS:
                raise CapExceeded(f"more than {MAX_NORMAL_PATHS} normal paths")
            d += 1
            yield layer

    def normal_counts(self, limit):
        """Number of normal paths of each length ``0..limit`` (stops at the first empty length)."""
        return [len(layer) for layer in self._layers(limit)]

    def first_empty_degree(self, limit):
        counts = self.normal_counts(limit)
        if counts[-1] == 0:
            return len(counts) - 1
        return None

    def complete(self):
        finite = False
        checked = -1
        while self.pairs:
            deg, _, ia, ib, k = heapq.heappop(self.pairs)
            if ia not in self.elems or ib not in self.elems:
                continue
            if not finite and deg > checked:
                checked = deg
                finite = self.first_empty_degree(self.cap) is not None
                if not finite and deg > 2 * self.cap:
                    raise CapExceeded(
                        f"no normal-path-free degree found up to the cap {self.cap}"
                    )
            s = self.reduce(self._spoly(ia, ib, k))
            if s:
                self._insert(s)
                if len(self.elems) > MAX_ELEMENTS:
                    raise CapExceeded(f"Groebner basis grew past {MAX_ELEMENTS} elements")
        d = self.first_empty_degree(self.cap)
        if d is None:
            raise CapExceeded(f"normal paths exist in degree {self.cap}; cap {self.cap} exceeded")
        return d

    def elements(self):
        out = []
        for gid in sorted(self.elems, key=lambda i: path_key(self.elems[i][0])):
            out.append(AlgElement(self.alg, self.elems[gid][1]))
        return out

    def normal_paths(self):
        out = [p for layer in self._layers(self.cap) for p in layer]
        return sorted(out, key=path_key)


def _contains(word, sub):
    n, m = len(word), len(sub)
    return any(word[i:i + m] == sub for i in range(n - m + 1))
