"""``trikit`` command-line front end.

Reports are ``key: value`` lines.  Commands that print a quiver, ribbon graph
or triangulation print it in the input format, with the report keys as
``# key: value`` comment lines so the output can be read back directly.

Exit status: 0 on success, 1 on a domain error, 2 on a usage or parse error.
"""

import argparse
import hashlib
import sys

from . import __version__
from .errors import ParseError, TrikitError, UsageError


class Report:
    def __init__(self, argv, data=None):
        self.lines = [("command", " ".join(["trikit"] + list(argv)))]
        if data is not None:
            self.lines.append(("input_sha256", hashlib.sha256(data).hexdigest()))

    def add(self, key, value):
        self.lines.append((key, _fmt(value)))

    def text(self, comment=False):
        prefix = "# " if comment else ""
        return "".join(f"{prefix}{k}: {v}\n" for k, v in self.lines)

    def header(self):
        return [f"{k}: {v}" for k, v in self.lines]


def _fmt(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    if isinstance(value, (list, tuple)):
        return " ".join(_fmt(v) for v in value)
    return str(value)


def _matrix(report, key, rows):
    for i, row in enumerate(rows):
        report.add(f"{key}[{i}]", " ".join(str(x) for x in row))


def _read(path):
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_quiver(args):
    from .formats import parse_quiver

    raw = _read(args.file)
    return raw, parse_quiver(raw.decode("utf-8"))


def _vertex(q, token):
    if token in q.vertex_index:
        return q.vertex_index[token]
    raise UsageError(f"unknown vertex {token}")


def _cycles(q, cycles):
    return " ".join(q.format_cycle(c) for c in cycles)


def _algebra(qf, kind):
    from .algebra import quotient_basis
    from .presentations import brauer_presentation, triangulation_presentation

    data = qf.gdata()
    if kind == "brauer":
        pres = brauer_presentation(qf.quiver, data)
    else:
        pres = triangulation_presentation(qf.quiver, data)
    return data, pres, quotient_basis(pres)


# commands


def cmd_validate(args, argv):
    from .quiver import is_triangulation_quiver

    raw, qf = _load_quiver(args)
    q = qf.quiver
    r = Report(argv, raw)
    r.add("valid", True)
    r.add("vertices", q.num_vertices)
    r.add("arrows", q.num_arrows)
    r.add("connected", q.is_connected())
    r.add("triangulation_quiver", is_triangulation_quiver(q))
    r.add("f_cycles", _cycles(q, q.f_cycles))
    r.add("g_cycles", _cycles(q, q.g_cycles))
    r.add("n", " ".join(f"{q.arrows[a]}={q.n(a)}" for a in range(q.num_arrows)))
    if qf.has_data:
        data = qf.gdata()
        r.add("m", " ".join(f"{q.arrows[a]}={data.m[a]}" for a in range(q.num_arrows)))
        r.add("admissible", data.is_admissible(q))
    return r.text()


def cmd_dual(args, argv):
    from .formats import parse_ribbon_graph, write_quiver, write_ribbon_graph
    from .quiver import from_ribbon_graph, to_ribbon_graph

    raw = _read(args.file)
    r = Report(argv, raw)
    if args.source == "ribbon":
        rg = parse_ribbon_graph(raw.decode("utf-8"))
        q = from_ribbon_graph(rg)
        r.add("nodes", len(rg.nodes))
        r.add("edges", len(rg.edges))
        return write_quiver(q, header=r.header())
    from .formats import parse_quiver

    q = parse_quiver(raw.decode("utf-8")).quiver
    rg = to_ribbon_graph(q)
    r.add("nodes", len(rg.nodes))
    r.add("valencies", rg.valencies())
    return write_ribbon_graph(rg, header=r.header())


def cmd_surface_to_quiver(args, argv):
    from .formats import parse_triangulation, write_quiver
    from .surface import triangulation_to_quiver

    raw = _read(args.file)
    tri = parse_triangulation(raw.decode("utf-8"))
    q = triangulation_to_quiver(tri)
    r = Report(argv, raw)
    r.add("triangles", len(tri.triangles))
    r.add("boundary_segments", len(tri.boundary))
    return write_quiver(q, header=r.header())


def cmd_flip(args, argv):
    from .formats import parse_triangulation, write_triangulation
    from .surface import flip

    raw = _read(args.file)
    tri = parse_triangulation(raw.decode("utf-8"))
    out = flip(tri, args.arc)
    r = Report(argv, raw)
    r.add("flipped_arc", args.arc)
    return write_triangulation(out, header=r.header())


def cmd_t3(args, argv):
    from .formats import parse_triangulation
    from .surface import t3_check

    raw = _read(args.file)
    rep = t3_check(parse_triangulation(raw.decode("utf-8")))
    r = Report(argv, raw)
    r.add("valencies", rep.valencies)
    r.add("t3", rep.flag)
    return r.text()


def cmd_mutate(args, argv):
    from .formats import write_quiver
    from .gdata import GData
    from .mutation import mutate, transport

    raw, qf = _load_quiver(args)
    q = qf.quiver
    k = _vertex(q, args.vertex)
    res = mutate(q, k)
    r = Report(argv, raw)
    r.add("vertex", q.vertices[k])
    r.add("removed", [q.arrows[a] for a in res.removed])
    data = None
    if args.with_data:
        old = qf.gdata()
        data = GData.build(
            res.quiver,
            list(transport(q, k, old.m, res)),
            list(transport(q, k, old.c, res)),
            old.field,
        )
    return write_quiver(res.quiver, data, header=r.header())


def cmd_fz_compare(args, argv):
    from .mutation import fz_compare, qp_mutation_hypothesis

    raw, qf = _load_quiver(args)
    q = qf.quiver
    k = _vertex(q, args.vertex)
    rep = fz_compare(q, k)
    r = Report(argv, raw)
    r.add("vertex", q.vertices[k])
    r.add("equal", rep.equal)
    r.add("equal_after_cancelling_2_cycles", rep.reduced_equal)
    r.add("cycle_length_condition", qp_mutation_hypothesis(q, k))
    _matrix(r, "fz_counts", rep.fz_counts)
    _matrix(r, "mutated_counts", rep.mutated_counts)
    if rep.vertex_permutation is not None:
        r.add("vertex_permutation", list(rep.vertex_permutation))
    return r.text()


def cmd_enumerate(args, argv):
    from .quiver import enumerate_triangulation_quivers

    qs = enumerate_triangulation_quivers(args.vertices, cap=args.cap)
    r = Report(argv)
    r.add("vertices", args.vertices)
    r.add("count", len(qs))
    for i, q in enumerate(qs, start=1):
        r.add(f"quiver[{i}].f_cycles", _cycles(q, q.f_cycles))
        r.add(f"quiver[{i}].g_cycles", _cycles(q, q.g_cycles))
        r.add(
            f"quiver[{i}].arrows",
            " ".join(
                f"{q.arrows[a]}:{q.vertices[q.source[a]]}->{q.vertices[q.target[a]]}"
                for a in range(q.num_arrows)
            ),
        )
    return r.text()


def cmd_algebra(args, argv):
    from .invariants import cartan_det, cartan_matrix, hh0_rigidity, symmetrizing_form_exists
    from .presentations import (
        exceptional_check,
        hyperpotential_check,
        jacobian_matches_triangulation,
    )

    raw, qf = _load_quiver(args)
    q = qf.quiver
    r = Report(argv, raw)
    checks = args.check or []
    # checks that do not need the quotient
    pre = {"admissible", "exceptional", "hyperpotential", "jacobian"}
    if checks and all(c in pre for c in checks):
        A = None
        data = qf.gdata()
    else:
        data, pres, A = _algebra(qf, args.kind)
        r.add("kind", pres.kind)
        r.add("field", data.field.name)
        r.add("relations", len(pres.relations))
        r.add("dimension", A.dimension)
        r.add("top_degree", A.top_degree - 1)
    if args.basis and A is not None:
        for v in range(q.num_vertices):
            r.add(f"basis[{q.vertices[v]}]", ", ".join(A.format_basis_element(i) for i in range(A.dimension) if A.source(i) == v))
    if args.cartan and A is not None:
        _matrix(r, "cartan", cartan_matrix(A))
        r.add("cartan_det", cartan_det(A))
    for check in checks:
        if check == "admissible":
            r.add("admissible", data.is_admissible(q))
        elif check == "exceptional":
            cls = exceptional_check(q, data.m)
            r.add("exceptional", cls.kind)
            r.add("all_mn_three", cls.all_three)
            r.add("reciprocal_sum", cls.reciprocal)
        elif check == "hyperpotential":
            r.add("hyperpotential", hyperpotential_check(q, data))
        elif check == "jacobian":
            r.add("jacobian", jacobian_matches_triangulation(q, data))
        elif check == "symmetric":
            res = symmetrizing_form_exists(A)
            r.add("symmetric", res.symmetric)
            r.add("symmetric_certified", res.certified)
            if res.witness is not None:
                r.add("witness", [data.field.format(x) for x in res.witness])
        elif check == "rigidity":
            res = hh0_rigidity(A)
            r.add("hh0_dimension", res.hh0_dimension)
            r.add("rigid", res.rigid)
    return r.text()


def cmd_omega(args, argv):
    from .modules import omega_dimensions, omega_period

    raw, qf = _load_quiver(args)
    q = qf.quiver
    _, pres, A = _algebra(qf, args.kind)
    r = Report(argv, raw)
    r.add("kind", pres.kind)
    r.add("dimension", A.dimension)
    for v in range(q.num_vertices):
        period = omega_period(A, v, args.max)
        r.add(f"period[{q.vertices[v]}]", period)
        dims = omega_dimensions(A, v, period or args.max)
        r.add(f"omega_dims[{q.vertices[v]}]", [",".join(map(str, d)) for d in dims])
    return r.text()


def cmd_silt(args, argv):
    from .algebra import quotient_basis
    from .gdata import GData
    from .invariants import cartan_matrix
    from .mutation import has_two_cycle_through, mutate, transport
    from .presentations import triangulation_presentation
    from .silting import end_algebra, silting_complex

    raw, qf = _load_quiver(args)
    q = qf.quiver
    k = _vertex(q, args.vertex)
    data, pres, A = _algebra(qf, args.kind)
    C = silting_complex(A, k, args.sign)
    end = end_algebra(A, C)
    r = Report(argv, raw)
    r.add("kind", pres.kind)
    r.add("dimension", A.dimension)
    r.add("complex", C.describe(lambda v: q.vertices[v]))
    r.add("summands", end.labels)
    r.add("end_dimension", end.dimension)
    _matrix(r, "end_hom", end.matrix)
    if args.kind == "triangulation" and not q.loops_at(k) and not has_two_cycle_through(q, k):
        res = mutate(q, k)
        d2 = GData.build(
            res.quiver, list(transport(q, k, data.m, res)), list(transport(q, k, data.c, res)), data.field
        )
        if d2.is_admissible(res.quiver):
            B = quotient_basis(triangulation_presentation(res.quiver, d2))
            cb = sorted(x for row in cartan_matrix(B) for x in row)
            r.add("mutated_dimension", B.dimension)
            r.add("cartan_multiset_match", cb == end.multiset())
        else:
            r.add("mutated_dimension", "not admissible")
    return r.text()


def cmd_potential(args, argv):
    from .presentations import cyclic_derivative, potential

    raw, qf = _load_quiver(args)
    q = qf.quiver
    w = potential(q, qf.gdata())
    r = Report(argv, raw)
    r.add("potential", str(w))
    for a in range(q.num_arrows):
        r.add(f"d[{q.arrows[a]}]", str(cyclic_derivative(w, a)))
    return r.text()


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="trikit", description="Triangulation quivers and their algebras.")
    p.add_argument("--version", action="version", version=f"trikit {__version__}")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    s = sub.add_parser("validate", help="check a quiver file")
    s.add_argument("file")
    s.set_defaults(run=cmd_validate)

    s = sub.add_parser("dual", help="ribbon quiver <-> ribbon graph")
    s.add_argument("file")
    s.add_argument("--from", dest="source", choices=["quiver", "ribbon"], default="quiver")
    s.set_defaults(run=cmd_dual)

    s = sub.add_parser("surface-to-quiver", help="quiver of a triangulation")
    s.add_argument("file")
    s.set_defaults(run=cmd_surface_to_quiver)

    s = sub.add_parser("flip", help="flip an arc of a triangulation")
    s.add_argument("file")
    s.add_argument("--arc", required=True)
    s.set_defaults(run=cmd_flip)

    s = sub.add_parser("t3", help="puncture valencies of a closed triangulation")
    s.add_argument("file")
    s.set_defaults(run=cmd_t3)

    s = sub.add_parser("mutate", help="mutate a triangulation quiver at a vertex")
    s.add_argument("file")
    s.add_argument("--vertex", required=True)
    s.add_argument("--with-data", action="store_true", help="transport m and c")
    s.set_defaults(run=cmd_mutate)

    s = sub.add_parser("fz-compare", help="compare with Fomin-Zelevinsky mutation")
    s.add_argument("file")
    s.add_argument("--vertex", required=True)
    s.set_defaults(run=cmd_fz_compare)

    s = sub.add_parser("enumerate", help="list triangulation quivers with n vertices")
    s.add_argument("--vertices", type=int, required=True)
    s.add_argument("--cap", type=int, default=4, help="largest n accepted")
    s.set_defaults(run=cmd_enumerate)

    s = sub.add_parser("algebra", help="quotient basis, Cartan matrix and checks")
    s.add_argument("file")
    s.add_argument("--kind", choices=["brauer", "triangulation"], default="triangulation")
    s.add_argument("--basis", action="store_true")
    s.add_argument("--cartan", action="store_true")
    s.add_argument(
        "--check",
        action="append",
        choices=["symmetric", "hyperpotential", "rigidity", "exceptional", "admissible", "jacobian"],
    )
    s.set_defaults(run=cmd_algebra)

    s = sub.add_parser("omega", help="Omega-periods of the simple modules")
    s.add_argument("file")
    s.add_argument("--kind", choices=["brauer", "triangulation"], default="triangulation")
    s.add_argument("--max", type=int, default=8)
    s.set_defaults(run=cmd_omega)

    s = sub.add_parser("silt", help="two-term silting complex and its endomorphisms")
    s.add_argument("file")
    s.add_argument("--vertex", required=True)
    s.add_argument("--sign", choices=["minus", "plus"], required=True)
    s.add_argument("--kind", choices=["brauer", "triangulation"], default="triangulation")
    s.set_defaults(run=cmd_silt)

    s = sub.add_parser("potential", help="potential and its cyclic derivatives")
    s.add_argument("file")
    s.set_defaults(run=cmd_potential)
    return p


def main(argv=None, stdout=None, stderr=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        out = args.run(args, argv)
    except (UsageError, ParseError) as exc:
        stderr.write(f"error: {exc.name}: {exc}\n")
        return 2
    except TrikitError as exc:
        stderr.write(f"error: {exc.name}: {exc}\n")
        return 1
    stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
