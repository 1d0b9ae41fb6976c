"""Exact minimum multicut / multi-cluster cut solver for embedded planar graphs."""

from ._core import (  # noqa: F401
    PlanarCutError,
    generate,
    graph_stats,
    oracle,
    render_svg,
    solve,
    verify,
)

__all__ = [
    "PlanarCutError",
    "generate",
    "graph_stats",
    "oracle",
    "render_svg",
    "solve",
    "verify",
]
