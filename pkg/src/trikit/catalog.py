"""Bundled quivers, triangulations and control inputs.

The six quivers with at most three vertices are transcribed arrow by arrow
from the standard classification table, with the same arrow names.
"""

from functools import lru_cache

from .quiver import Quiver, validate_ribbon_quiver
from .surface import Triangulation, triangulation_to_quiver


@lru_cache(maxsize=None)
def monogon():
    return validate_ribbon_quiver(
        ["1"], [("alpha", "1", "1"), ("beta", "1", "1")], [["alpha"], ["beta"]]
    )


@lru_cache(maxsize=None)
def punctured_monogon():
    return validate_ribbon_quiver(
        ["1", "2"],
        [("alpha", "1", "1"), ("beta", "1", "2"), ("gamma", "2", "1"), ("eta", "2", "2")],
        [["alpha", "beta", "gamma"], ["eta"]],
    )


@lru_cache(maxsize=None)
def triangle():
    return validate_ribbon_quiver(
        ["1", "2", "3"],
        [
            ("alpha1", "1", "1"),
            ("alpha2", "2", "2"),
            ("alpha3", "3", "3"),
            ("beta1", "1", "2"),
            ("beta2", "2", "3"),
            ("beta3", "3", "1"),
        ],
        [["alpha1"], ["alpha2"], ["alpha3"], ["beta1", "beta2", "beta3"]],
    )


@lru_cache(maxsize=None)
def sphere():
    """Sphere with three punctures, triangulated by two triangles."""
    return validate_ribbon_quiver(
        ["1", "2", "3"],
        [
            ("alpha1", "1", "2"),
            ("alpha2", "2", "3"),
            ("alpha3", "3", "1"),
            ("beta1", "1", "3"),
            ("beta2", "2", "1"),
            ("beta3", "3", "2"),
        ],
        [["alpha1", "alpha2", "alpha3"], ["beta3", "beta2", "beta1"]],
    )


@lru_cache(maxsize=None)
def sphere_path():
    """Sphere with three punctures, the triangulation with two self-folded triangles."""
    return validate_ribbon_quiver(
        ["1", "2", "3"],
        [
            ("alpha", "1", "1"),
            ("beta", "1", "2"),
            ("gamma", "2", "1"),
            ("delta", "2", "3"),
            ("xi", "3", "3"),
            ("eta", "3", "2"),
        ],
        [["alpha", "beta", "gamma"], ["delta", "xi", "eta"]],
    )


@lru_cache(maxsize=None)
def torus():
    return validate_ribbon_quiver(
        ["1", "2", "3"],
        [
            ("alpha0", "1", "2"),
            ("alpha1", "2", "3"),
            ("alpha2", "3", "1"),
            ("alpha3", "1", "2"),
            ("alpha4", "2", "3"),
            ("alpha5", "3", "1"),
        ],
        [["alpha4", "alpha2", "alpha0"], ["alpha5", "alpha3", "alpha1"]],
    )


def classification():
    """The six triangulation quivers with at most three vertices."""
    return [monogon(), punctured_monogon(), triangle(), sphere(), sphere_path(), torus()]


# triangulations


def torus_triangulation():
    return Triangulation.build([("1", "2", "3"), ("1", "2", "3")])


def sphere_triangulation():
    return Triangulation.build([("1", "2", "3"), ("1", "3", "2")])


def triangle_triangulation():
    return Triangulation.build([("1", "2", "3")], boundary=("1", "2", "3"))


def tetrahedron_triangulation():
    """Sphere with four punctures P1..P4; edges are named by their endpoints."""
    return Triangulation.build(
        [
            ("12", "23", "13"),
            ("14", "24", "12"),
            ("13", "34", "14"),
            ("24", "34", "23"),
        ]
    )


@lru_cache(maxsize=None)
def tetrahedron():
    return triangulation_to_quiver(tetrahedron_triangulation())


# controls that are not ribbon quivers


def single_vertex():
    """One vertex, no arrows: the semisimple algebra K."""
    return Quiver(("1",), (), (), ())


def a2():
    """The quiver 1 -> 2."""
    return Quiver(("1", "2"), ("a",), (0,), (1,))


QUIVERS = {
    "monogon": monogon,
    "punctured-monogon": punctured_monogon,
    "triangle": triangle,
    "sphere": sphere,
    "sphere-path": sphere_path,
    "torus": torus,
    "tetrahedron": tetrahedron,
}

TRIANGULATIONS = {
    "torus": torus_triangulation,
    "sphere": sphere_triangulation,
    "triangle": triangle_triangulation,
    "tetrahedron": tetrahedron_triangulation,
}
