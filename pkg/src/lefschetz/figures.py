"""Triangular-lattice drawings of multiplication regions.

Degree-s standard monomials appear as downward triangles and degree
(s+1) ones as upward triangles; a monomial x^i y^j z^k sits in row k at
horizontal position j.  Two triangles share an edge exactly when the
corresponding monomials differ by one variable, so a perfect matching of
the region graph paints a lozenge tiling.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import Polygon

_H = 3 ** 0.5 / 2

# one fill color per multiplication variable x, y, z
_LOZENGE_COLORS = ("#e4572e", "#4c9f70", "#4f86c6")


def _up_vertices(k: int, j: int):
    x = j + k / 2
    return [(x, k * _H), (x + 1, k * _H), (x + 0.5, (k + 1) * _H)]


def _down_vertices(k: int, j: int):
    x = j + k / 2
    return [(x + 1, k * _H), (x + 0.5, (k + 1) * _H), (x + 1.5, (k + 1) * _H)]


def _cell(monomial):
    # row from the z exponent, offset from the y exponent
    return monomial.exponents[2], monomial.exponents[1]


def render_region(graph, path: str, matching=None, title: str | None = None) -> str:
    """Draw the region; overlay a lozenge per matched pair when given.

    `matching` is a list of (down_index, up_index, variable_index)
    triples as produced by find_matching.  Output format follows the
    file extension, defaulting to SVG.  Returns the path written.
    """
    if any(len(m.exponents) != 3 for m in graph.down_nodes + graph.up_nodes):
        raise ValueError("region drawings need exactly three variables")
    target = path if "." in path.rsplit("/", 1)[-1] else path + ".svg"

    fig, ax = plt.subplots(figsize=(6, 6))
    for m in graph.down_nodes:
        k, j = _cell(m)
        ax.add_patch(Polygon(_down_vertices(k, j), closed=True,
                             facecolor="#f2f2f2", edgecolor="#555555",
                             linewidth=0.8))
    for m in graph.up_nodes:
        k, j = _cell(m)
        ax.add_patch(Polygon(_up_vertices(k, j), closed=True,
                             facecolor="#ffffff", edgecolor="#555555",
                             linewidth=0.8))
    if matching:
        for down_i, up_i, var in matching:
            k, j = _cell(graph.down_nodes[down_i])
            quad = set(map(tuple, _down_vertices(k, j)))
            k, j = _cell(graph.up_nodes[up_i])
            quad |= set(map(tuple, _up_vertices(k, j)))
            pts = sorted(quad)
            if len(pts) != 4:
                raise ValueError("matched triangles do not share an edge")
            cx = sum(p[0] for p in pts) / 4
            cy = sum(p[1] for p in pts) / 4
            from math import atan2
            pts.sort(key=lambda p: atan2(p[1] - cy, p[0] - cx))
            ax.add_patch(Polygon(pts, closed=True,
                                 facecolor=_LOZENGE_COLORS[var % 3],
                                 edgecolor="#222222", linewidth=1.2,
                                 alpha=0.85))
    ax.autoscale_view()
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title)
    fig.savefig(target, bbox_inches="tight")
    plt.close(fig)
    return target
