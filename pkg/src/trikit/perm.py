"""Permutations on ``range(n)`` stored as tuples."""


def is_permutation(p):
    return sorted(p) == list(range(len(p)))


def compose(p, q):
    """``(p . q)(x) = p(q(x))``."""
    return tuple(p[q[x]] for x in range(len(q)))


def inverse(p):
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def power(p, k):
    out = tuple(range(len(p)))
    for _ in range(k):
        out = compose(p, out)
    return out


def cycles(p):
    """Cycles of ``p``, each starting at its least element, sorted by that element."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        x = p[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = p[x]
        out.append(tuple(cyc))
    return out


def orbits(n, generators):
    """Orbits of the group generated by ``generators`` (union-find)."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in generators:
        for x in range(n):
            a, b = find(x), find(g[x])
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups = {}
    for x in range(n):
        groups.setdefault(find(x), []).append(x)
    return sorted(groups.values())


def conjugating_map(perms1, perms2):
    """Least bijection ``phi`` with ``phi . p1 = p2 . phi`` for each pair.

    ``phi`` is returned as a tuple (``phi[x]`` is the image of ``x``) and is
    lexicographically least among all solutions, or ``None`` if there is none.
    Inverses are propagated too, so each orbit of the generated group is fixed
    by the image of its least point.
    """
    n = len(perms1[0])
    if any(len(p) != n for p in perms1 + perms2):
        return None
    if len(perms1) != len(perms2):
        return None
    gens1 = [(p, inverse(p)) for p in perms1]
    gens2 = [(p, inverse(p)) for p in perms2]
    comps = orbits(n, perms1)

    def extend(phi, used, start, target):
        trial = dict(phi)
        tused = set(used)
        if target in tused:
            return None
        trial[start] = target
        tused.add(target)
        stack = [start]
        while stack:
            x = stack.pop()
            y = trial[x]
            for (p1, q1), (p2, q2) in zip(gens1, gens2):
                for a, b in ((p1[x], p2[y]), (q1[x], q2[y])):
                    if a in trial:
                        if trial[a] != b:
                            return None
                    else:
                        if b in tused:
                            return None
                        trial[a] = b
                        tused.add(b)
                        stack.append(a)
        return trial, tused

    def search(ci, phi, used):
        if ci == len(comps):
            return phi
        start = comps[ci][0]
        for target in range(n):
            if target in used:
                continue
            res = extend(phi, used, start, target)
            if res is None:
                continue
            found = search(ci + 1, *res)
            if found is not None:
                return found
        return None

    result = search(0, {}, set())
    if result is None:
        return None
    return tuple(result[x] for x in range(n))


def canonical_code(perms):
    """Relabeling-invariant code of a tuple of permutations with transitive action.

    Two transitive tuples get equal codes iff they are simultaneously conjugate.
    """
    n = len(perms[0])
    best = None
    for start in range(n):
        label = {start: 0}
        order = [start]
        i = 0
        while i < len(order):
            x = order[i]
            for p in perms:
                y = p[x]
                if y not in label:
                    label[y] = len(order)
                    order.append(y)
            i += 1
        if len(order) != n:
            raise ValueError("canonical_code needs a transitive action")
        code = tuple(tuple(label[p[x]] for x in order) for p in perms)
        if best is None or code < best:
            best = code
    return best
