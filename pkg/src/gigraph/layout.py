"""Planar coordinates: concentric-circle drawings, the exact unit-distance
embedding of GI(7;1,2,3), edge-length statistics, and SVG emission."""

from __future__ import annotations

from dataclasses import dataclass
from math import cos, hypot, pi, sin

from .errors import RadiiCountMismatch
from .graphs import SPOKE, GIGraph, GISpec

# the one known connected 3-layer unit-distance GI-graph beyond GI(n;k,k,k)
UNIT_DISTANCE_SPEC = GISpec(7, (1, 2, 3))

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd",
           "#ff7f0e", "#8c564b", "#e377c2", "#17becf")


@dataclass(frozen=True)
class Layout:
    coords: tuple[tuple[float, float], ...]
    radii: tuple[float, ...]
    angular_offsets: tuple[float, ...]


def _place(spec: GISpec, radii, offsets) -> Layout:
    coords = []
    for s in range(spec.t):
        for v in range(spec.n):
            theta = 2 * pi * v / spec.n + offsets[s]
            coords.append((radii[s] * cos(theta), radii[s] * sin(theta)))
    return Layout(tuple(coords), tuple(radii), tuple(offsets))


def concentric_layout(spec: GISpec, radii=None) -> Layout:
    """Layer s on a circle, vertex (s, v) at angle 2*pi*v/n.

    Default radii are equally spaced with layer 0 outermost at radius 1.
    """
    t = spec.t
    if radii is None:
        radii = tuple((t - s) / t for s in range(t))
    else:
        radii = tuple(float(r) for r in radii)
        if len(radii) != t:
            raise RadiiCountMismatch(len(radii), t)
    return _place(spec, radii, (0.0,) * t)


def unit_distance_layout_713() -> Layout:
    """Every edge of GI(7;1,2,3) at Euclidean length exactly 1.

    Layer s sits on radius 1/(2 sin((s+1) pi/7)), which makes each layer
    chord a unit by the chord identity, and the two smaller circles are
    turned by +-pi/3, which makes all 21 spokes units as well.
    """
    radii = tuple(1 / (2 * sin((s + 1) * pi / 7)) for s in range(3))
    return _place(UNIT_DISTANCE_SPEC, radii, (0.0, pi / 3, -pi / 3))


@dataclass(frozen=True)
class EdgeLengthStats:
    minimum: float
    maximum: float
    mean: float
    max_abs_dev_from_unit: float


def edge_length_stats(graph: GIGraph, layout: Layout) -> EdgeLengthStats:
    if len(layout.coords) != graph.num_vertices:
        raise RadiiCountMismatch(len(layout.coords), graph.num_vertices)
    lengths = []
    for e in graph.edges:
        (x1, y1), (x2, y2) = layout.coords[e.u], layout.coords[e.v]
        lengths.append(hypot(x2 - x1, y2 - y1))
    return EdgeLengthStats(
        minimum=min(lengths),
        maximum=max(lengths),
        mean=sum(lengths) / len(lengths),
        max_abs_dev_from_unit=max(abs(l - 1.0) for l in lengths),
    )


def svg(graph: GIGraph, layout: Layout, node_radius: float | None = None) -> str:
    """Deterministic SVG: one stroke class for spokes, one per layer.

    Identical inputs produce byte-identical output.
    """
    if len(layout.coords) != graph.num_vertices:
        raise RadiiCountMismatch(len(layout.coords), graph.num_vertices)
    xs = [c[0] for c in layout.coords]
    ys = [-c[1] for c in layout.coords]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    margin = 0.05 * span
    vb = (min(xs) - margin, min(ys) - margin,
          max(xs) - min(xs) + 2 * margin, max(ys) - min(ys) + 2 * margin)
    r = node_radius if node_radius is not None else span / 60
    width = span / 250
    f = lambda x: f"{x:.6f}"
    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{f(vb[0])} {f(vb[1])} {f(vb[2])} {f(vb[3])}">',
        f'  <g fill="none" stroke-width="{f(width)}">',
    ]
    for e in graph.edges:
        color = "#555555" if e.kind == SPOKE else PALETTE[e.layer % len(PALETTE)]
        cls = "spoke" if e.kind == SPOKE else f"layer-{e.layer}"
        lines.append(
            f'    <line class="{cls}" stroke="{color}" '
            f'x1="{f(xs[e.u])}" y1="{f(ys[e.u])}" '
            f'x2="{f(xs[e.v])}" y2="{f(ys[e.v])}"/>')
    lines.append("  </g>")
    lines.append('  <g fill="#111111">')
    for i in range(graph.num_vertices):
        lines.append(f'    <circle cx="{f(xs[i])}" cy="{f(ys[i])}" r="{f(r)}"/>')
    lines.append("  </g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
