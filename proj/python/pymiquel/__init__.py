"""Miquel points, Miquel triangles and special triangle centers."""

from ._core import (
    GeometryError,
    SceneError,
    Triangle,
    catalog,
    center,
    chain,
    classify,
    family_member,
    inverse_in_circumcircle,
    isogonal_conjugate,
    miquel_point,
    parse_scene,
    pedal,
    render_figure,
    roles,
    run_command,
    suites,
    verify,
)

__all__ = [
    "GeometryError",
    "SceneError",
    "Triangle",
    "catalog",
    "center",
    "chain",
    "classify",
    "family_member",
    "inverse_in_circumcircle",
    "isogonal_conjugate",
    "miquel_point",
    "parse_scene",
    "pedal",
    "render_figure",
    "roles",
    "run_command",
    "suites",
    "verify",
]
