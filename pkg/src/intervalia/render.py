"""Deterministic SVG drawings of representations, Hasse diagrams and PP graphs.

Coordinates are computed with exact rationals and floored to integers, so
the same input always gives byte-identical output.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .errors import UnsupportedTarget
from .intervals import distinct_lengths
from .order import bits, pp_graph

TARGETS = ("representation", "hasse", "ppgraph")
LONG, SHORT, PLAIN = "red", "green", "black"


@dataclass(frozen=True)
class RenderSpec:
    target: str = "representation"
    width: int = 640
    height: int = 0  # 0: derived from the content
    ell0: Fraction = None

    def __post_init__(self):
        if self.target not in TARGETS:
            raise UnsupportedTarget(f"unknown render target {self.target!r}", target=self.target)
        if self.width <= 0 or self.height < 0:
            raise ValueError("dimensions must be positive")


def _svg(width, height, body):
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}">')
    return "\n".join([head, f'<rect width="{width}" height="{height}" fill="white"/>']
                     + body + ["</svg>", ""])


def _scale(lo, hi, a, b):
    """Map the rational range [lo, hi] onto integer pixels [a, b]."""
    span = hi - lo or Fraction(1)

    def to_px(v):
        return a + floor((Fraction(v) - lo) * (b - a) / span)

    return to_px


def interval_colors(family):
    """Long intervals red, short green when exactly two lengths occur, else black."""
    lengths = distinct_lengths(family)
    if len(lengths) != 2:
        return [PLAIN] * len(family)
    return [LONG if family.length(i) == lengths[1] else SHORT for i in range(len(family))]


def render_representation(family, spec=RenderSpec(), labels=None, colors=None):
    n = len(family)
    track, margin = 24, 40
    height = spec.height or margin * 2 + track * max(n, 1)
    points = sorted({v for iv in family for v in iv})
    lo, hi = (points[0], points[-1]) if points else (Fraction(0), Fraction(1))
    px = _scale(lo, hi, margin, spec.width - margin)
    colors = colors or interval_colors(family)
    body = []
    for i, v in enumerate(points):
        x = px(v)
        body.append(f'<line id="grid{i}" class="grid" x1="{x}" y1="{margin // 2}" x2="{x}" '
                    f'y2="{height - margin // 2}" stroke="#ccc" stroke-width="1"/>')
    if spec.ell0 is not None:
        x = px(spec.ell0)
        body.append(f'<line id="ell0" class="ell0" x1="{x}" y1="{margin // 2}" x2="{x}" '
                    f'y2="{height - margin // 2}" stroke="black" stroke-dasharray="2,3"/>')
    for i, (l, r) in enumerate(family):
        y = margin + track * i + track // 2
        x1, x2 = px(l), px(r)
        if x2 == x1:
            x2 += 2
        label = labels[i] if labels else str(i + 1)
        body.append(f'<line id="iv{i + 1}" class="interval" x1="{x1}" y1="{y}" x2="{x2}" '
                    f'y2="{y}" stroke="{colors[i]}" stroke-width="4"/>')
        body.append(f'<text x="{x1 - 6}" y="{y + 4}" font-size="11" '
                    f'text-anchor="end">{label}</text>')
    return _svg(spec.width, height, body)


def _levels(order):
    level = [0] * order.n
    for y in order.linear_extension():
        level[y] = max((level[x] + 1 for x in bits(order.down[y])), default=0)
    return level


def _node(i, x, y, label):
    return (f'<circle id="v{i + 1}" class="node" cx="{x}" cy="{y}" r="10" fill="white" '
            f'stroke="black"/>\n<text x="{x}" y="{y + 4}" font-size="11" '
            f'text-anchor="middle">{label}</text>')


def render_hasse(order, spec=RenderSpec(target="hasse")):
    level = _levels(order)
    rows = {}
    for x in range(order.n):
        rows.setdefault(level[x], []).append(x)
    step, margin = 60, 30
    height = spec.height or margin * 2 + step * max(len(rows) - 1, 0)
    pos = {}
    for lv, members in rows.items():
        for j, x in enumerate(members):
            pos[x] = (spec.width * (2 * j + 1) // (2 * len(members)), height - margin - step * lv)
    body = []
    for x, y in order.covers():
        (x1, y1), (x2, y2) = pos[x], pos[y]
        body.append(f'<line id="e{x + 1}-{y + 1}" class="cover" x1="{x1}" y1="{y1}" '
                    f'x2="{x2}" y2="{y2}" stroke="black"/>')
    body.extend(_node(x, *pos[x], order.label(x)) for x in range(order.n))
    return _svg(spec.width, height, body)


def render_ppgraph(order, spec=RenderSpec(target="ppgraph")):
    graph = pp_graph(order)
    margin = 30
    height = spec.height or 120
    pos = {x: (margin + (spec.width - 2 * margin) * x // max(order.n - 1, 1), height // 2)
           for x in range(order.n)}
    body = ['<defs><marker id="head" markerWidth="8" markerHeight="8" refX="8" refY="4" '
            'orient="auto"><path d="M0,0 L8,4 L0,8 z"/></marker></defs>']
    for pith, peel in sorted(graph.arcs):
        (x1, _), (x2, _) = pos[pith], pos[peel]
        bend = height // 2 - 20 - abs(x2 - x1) // 8
        body.append(f'<path id="a{pith + 1}-{peel + 1}" class="arc" d="M{x1},{height // 2 - 10} '
                    f'Q{(x1 + x2) // 2},{bend} {x2},{height // 2 - 10}" fill="none" '
                    f'stroke="black" marker-end="url(#head)"/>')
    body.extend(_node(x, *pos[x], order.label(x)) for x in range(order.n))
    return _svg(spec.width, height, body)


def render(obj, spec):
    if spec.target == "representation":
        return render_representation(obj, spec)
    if spec.target == "hasse":
        return render_hasse(obj, spec)
    return render_ppgraph(obj, spec)
