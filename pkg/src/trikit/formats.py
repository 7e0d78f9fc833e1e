"""Line-oriented text formats for quivers, ribbon graphs and triangulations.

Every format: one record per line, whitespace-separated tokens, ``#`` starts a
comment.  Syntax problems raise :class:`ParseError` with a 1-based line and
column; semantic problems raise the domain error of the constructor.

Quiver::

    vertex <id>
    arrow <id> <src> <dst>
    fcycle <arrow> ...        # one line per cycle of f, fixed points as singletons
    m <arrow> <posint>        # optional, spread along the g-cycle of the arrow
    c <arrow> <scalar>        # optional, e.g. 2, -1/3
    field Q | field F <p>     # optional, default Q

Ribbon graph::

    half <id>
    iota <id> <id>
    sigmacycle <id> ...

Triangulation::

    edge <label>
    triangle <l1> <l2> <l3>   # clockwise
    boundary <label>
"""

from dataclasses import dataclass

from .errors import ParseError
from .field import QQ, field_from_spec
from .gdata import GData
from .quiver import RibbonGraph, validate_ribbon_quiver
from .surface import Triangulation


def _records(text):
    """Yield ``(line_no, [(token, column), ...])`` for non-empty lines."""
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = []
        col = 0
        for part in line.split():
            col = line.index(part, col)
            tokens.append((part, col + 1))
            col += len(part)
        if tokens:
            yield no, tokens


def _arity(no, tokens, exact=None, minimum=None):
    n = len(tokens) - 1
    kw, col = tokens[0]
    if exact is not None and n != exact:
        raise ParseError(f"'{kw}' takes {exact} argument(s), got {n}", no, col)
    if minimum is not None and n < minimum:
        raise ParseError(f"'{kw}' takes at least {minimum} argument(s), got {n}", no, col)


@dataclass
class QuiverFile:
    quiver: object
    m: dict
    c: dict
    field: object
    field_declared: bool

    @property
    def has_data(self):
        return bool(self.m or self.c)

    def gdata(self, check=True):
        return GData.build(self.quiver, self.m or None, self.c or None, self.field, check=check)


def parse_quiver(text):
    vertices, arrows, fcycles = [], [], []
    m, c = {}, {}
    raw_c = []
    field = QQ
    declared = False
    seen_v, seen_a = {}, {}
    for no, tokens in _records(text):
        kw, col = tokens[0]
        args = [t for t, _ in tokens[1:]]
        if kw == "vertex":
            _arity(no, tokens, exact=1)
            if args[0] in seen_v:
                raise ParseError(f"vertex {args[0]} declared twice", no, tokens[1][1])
            seen_v[args[0]] = no
            vertices.append(args[0])
        elif kw == "arrow":
            _arity(no, tokens, exact=3)
            if args[0] in seen_a:
                raise ParseError(f"arrow {args[0]} declared twice", no, tokens[1][1])
            for (tok, tcol) in tokens[2:]:
                if tok not in seen_v:
                    raise ParseError(f"unknown vertex {tok}", no, tcol)
            seen_a[args[0]] = no
            arrows.append(tuple(args))
        elif kw == "fcycle":
            _arity(no, tokens, minimum=1)
            for tok, tcol in tokens[1:]:
                if tok not in seen_a:
                    raise ParseError(f"unknown arrow {tok}", no, tcol)
            fcycles.append(args)
        elif kw == "m":
            _arity(no, tokens, exact=2)
            if args[0] not in seen_a:
                raise ParseError(f"unknown arrow {args[0]}", no, tokens[1][1])
            try:
                value = int(args[1])
            except ValueError:
                raise ParseError(f"multiplicity {args[1]} is not an integer", no, tokens[2][1]) from None
            if value < 1:
                raise ParseError(f"multiplicity {value} is not positive", no, tokens[2][1])
            m[args[0]] = value
        elif kw == "c":
            _arity(no, tokens, exact=2)
            if args[0] not in seen_a:
                raise ParseError(f"unknown arrow {args[0]}", no, tokens[1][1])
            raw_c.append((args[0], args[1], no, tokens[2][1]))
        elif kw == "field":
            _arity(no, tokens, minimum=1)
            try:
                field = field_from_spec(args)
            except (ValueError, TypeError) as exc:
                raise ParseError(f"bad field: {exc}", no, tokens[1][1]) from None
            declared = True
        else:
            raise ParseError(f"unknown keyword '{kw}'", no, col)
    for arrow, tok, no, col in raw_c:
        try:
            value = field(tok)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad scalar {tok}: {exc}", no, col) from None
        if value == 0:
            raise ParseError(f"scalar for {arrow} must be nonzero", no, col)
        c[arrow] = value
    q = validate_ribbon_quiver(vertices, arrows, fcycles)
    return QuiverFile(q, m, c, field, declared)


def write_quiver(q, data=None, header=()):
    """Quiver file text; ``data`` (a GData) adds one ``m``/``c`` line per g-cycle."""
    lines = [f"# {h}" for h in header]
    lines += [f"vertex {v}" for v in q.vertices]
    lines += [
        f"arrow {q.arrows[a]} {q.vertices[q.source[a]]} {q.vertices[q.target[a]]}"
        for a in range(q.num_arrows)
    ]
    lines += ["fcycle " + " ".join(q.arrows[a] for a in cyc) for cyc in q.f_cycles]
    if data is not None:
        if data.field != QQ:
            lines.append(f"field F {data.field.characteristic}")
        for cyc in q.g_cycles:
            lines.append(f"m {q.arrows[cyc[0]]} {data.m[cyc[0]]}")
        for cyc in q.g_cycles:
            lines.append(f"c {q.arrows[cyc[0]]} {data.field.format(data.c[cyc[0]])}")
    return "\n".join(lines) + "\n"


def parse_ribbon_graph(text):
    halves, pairs, cycles = [], [], []
    seen = {}
    for no, tokens in _records(text):
        kw, col = tokens[0]
        if kw == "half":
            _arity(no, tokens, exact=1)
            h = tokens[1][0]
            if h in seen:
                raise ParseError(f"half edge {h} declared twice", no, tokens[1][1])
            seen[h] = len(halves)
            halves.append(h)
        elif kw in ("iota", "sigmacycle"):
            if kw == "iota":
                _arity(no, tokens, exact=2)
            else:
                _arity(no, tokens, minimum=1)
            for tok, tcol in tokens[1:]:
                if tok not in seen:
                    raise ParseError(f"unknown half edge {tok}", no, tcol)
            ids = [seen[t] for t, _ in tokens[1:]]
            (pairs if kw == "iota" else cycles).append((ids, no, col))
        else:
            raise ParseError(f"unknown keyword '{kw}'", no, col)
    n = len(halves)
    iota = [None] * n
    for (x, y), no, col in pairs:
        for a, b in ((x, y), (y, x)):
            if iota[a] is not None and iota[a] != b:
                raise ParseError(f"half edge {halves[a]} paired twice", no, col)
            iota[a] = b
    sigma = [None] * n
    for ids, no, col in cycles:
        for a, b in zip(ids, ids[1:] + ids[:1]):
            if sigma[a] is not None:
                raise ParseError(f"half edge {halves[a]} in two sigma cycles", no, col)
            sigma[a] = b
    for name, p in (("iota", iota), ("sigma", sigma)):
        for h in range(n):
            if p[h] is None:
                raise ParseError(f"{name} undefined on half edge {halves[h]}", None, None)
    return RibbonGraph(tuple(halves), tuple(iota), tuple(sigma))


def write_ribbon_graph(rg, header=()):
    from . import perm

    lines = [f"# {h}" for h in header]
    lines += [f"half {h}" for h in rg.half_edges]
    lines += [
        f"iota {rg.half_edges[a]} {rg.half_edges[b]}" for a, b in perm.cycles(rg.iota)
    ]
    lines += [
        "sigmacycle " + " ".join(rg.half_edges[h] for h in cyc) for cyc in perm.cycles(rg.sigma)
    ]
    return "\n".join(lines) + "\n"


def parse_triangulation(text):
    edges, triangles, boundary = [], [], []
    declared = set()
    uses = []
    for no, tokens in _records(text):
        kw, col = tokens[0]
        if kw == "edge":
            _arity(no, tokens, exact=1)
            if tokens[1][0] in declared:
                raise ParseError(f"edge {tokens[1][0]} declared twice", no, tokens[1][1])
            declared.add(tokens[1][0])
            edges.append(tokens[1][0])
        elif kw == "triangle":
            _arity(no, tokens, exact=3)
            triangles.append(tuple(t for t, _ in tokens[1:]))
            uses += [(t, no, c) for t, c in tokens[1:]]
        elif kw == "boundary":
            _arity(no, tokens, exact=1)
            boundary.append(tokens[1][0])
            uses.append((tokens[1][0], no, tokens[1][1]))
        else:
            raise ParseError(f"unknown keyword '{kw}'", no, col)
    for tok, no, col in uses:
        if tok not in declared:
            raise ParseError(f"undeclared edge {tok}", no, col)
    return Triangulation.build(triangles, boundary, edges)


def write_triangulation(tri, header=()):
    lines = [f"# {h}" for h in header]
    lines += [f"edge {e}" for e in tri.edges]
    lines += ["triangle " + " ".join(t) for t in tri.triangles]
    lines += [f"boundary {b}" for b in tri.edges if b in tri.boundary]
    return "\n".join(lines) + "\n"
