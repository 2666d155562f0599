"""Deterministic SVG pictures of rank-2 coroot lattices and b-regions.

The drawing shows the coroot lattice near the region, every affine
hyperplane (alcove wall) crossing the view, the region boundary, and each
lattice point of the region labeled with its total size.  Output is a pure
function of the input (fixed float formatting), so files are reproducible
byte for byte.
"""

from __future__ import annotations

import math

from . import affine, sommers
from .rootsys import RootSystemData


def _embedding_basis(rs: RootSystemData):
    """Orthonormal-frame images of the simple coroots, from the Gram matrix."""
    g = rs.gram_coroot
    g11 = float(g[0][0])
    g12 = float(g[0][1])
    g22 = float(g[1][1])
    v1 = (math.sqrt(g11), 0.0)
    v2 = (g12 / math.sqrt(g11), math.sqrt(g22 - g12 * g12 / g11))
    return v1, v2


def _fmt(x: float) -> str:
    return f"{x:.4f}"


class _Svg:
    def __init__(self):
        self.lines: list[str] = []

    def add(self, tag: str, **attrs):
        parts = "".join(f' {k.replace("_", "-")}="{v}"' for k, v in attrs.items())
        self.lines.append(f"<{tag}{parts}/>")

    def text(self, x, y, content, size):
        self.lines.append(
            f'<text x="{_fmt(x)}" y="{_fmt(y)}" font-size="{_fmt(size)}" '
            f'font-family="monospace" text-anchor="middle">{content}</text>'
        )


def region_svg(rs: RootSystemData, b: int, scale: float = 60.0) -> str:
    """SVG of the b-region of a rank-2 system."""
    if rs.rank != 2:
        raise ValueError(f"drawing requires rank 2, got {rs.cartan_type}")
    v1, v2 = _embedding_basis(rs)

    def plane(k) -> tuple[float, float]:
        x = float(k[0]) * v1[0] + float(k[1]) * v2[0]
        y = float(k[0]) * v1[1] + float(k[1]) * v2[1]
        return x, y

    verts = [plane(v) for v in sommers.region_vertices(rs, b)]
    margin = 1.2
    xs = [p[0] for p in verts]
    ys = [p[1] for p in verts]
    x_lo, x_hi = min(xs) - margin, max(xs) + margin
    y_lo, y_hi = min(ys) - margin, max(ys) + margin

    def to_screen(p):
        return (scale * (p[0] - x_lo), scale * (y_hi - p[1]))

    svg = _Svg()
    width = scale * (x_hi - x_lo)
    height = scale * (y_hi - y_lo)

    # affine hyperplanes <x, alpha> = k crossing the view
    corners = [(x_lo, y_lo), (x_lo, y_hi), (x_hi, y_lo), (x_hi, y_hi)]
    inv = _plane_inverse(v1, v2)
    for root in rs.positive_roots:
        vals = []
        for cx, cy in corners:
            ka, kb = _apply_inverse(inv, cx, cy)
            vals.append(ka * root.pair_vec[0] + kb * root.pair_vec[1])
        k_min = math.floor(min(vals))
        k_max = math.ceil(max(vals))
        for k in range(k_min, k_max + 1):
            seg = _clip_line(root.pair_vec, k, inv, (x_lo, y_lo, x_hi, y_hi))
            if seg:
                (ax, ay), (bx, by) = (to_screen(seg[0]), to_screen(seg[1]))
                svg.add("line", x1=_fmt(ax), y1=_fmt(ay), x2=_fmt(bx), y2=_fmt(by),
                        stroke="#bbbbbb", stroke_width=_fmt(scale * 0.012))

    # the region boundary
    pts = " ".join(f"{_fmt(to_screen(p)[0])},{_fmt(to_screen(p)[1])}" for p in verts)
    svg.lines.append(f'<polygon points="{pts}" fill="none" stroke="#202020" '
                     f'stroke-width="{_fmt(scale * 0.035)}"/>')

    # lattice points: all coroot points in view, region points marked and labeled
    core = sommers.enumerate_cores(rs, b)
    core_set = set(core.points)
    k_lo0 = math.floor(min(_apply_inverse(inv, cx, cy)[0] for cx, cy in corners)) - 1
    k_hi0 = math.ceil(max(_apply_inverse(inv, cx, cy)[0] for cx, cy in corners)) + 1
    k_lo1 = math.floor(min(_apply_inverse(inv, cx, cy)[1] for cx, cy in corners)) - 1
    k_hi1 = math.ceil(max(_apply_inverse(inv, cx, cy)[1] for cx, cy in corners)) + 1
    for ka in range(k_lo0, k_hi0 + 1):
        for kb in range(k_lo1, k_hi1 + 1):
            px, py = plane((ka, kb))
            if not (x_lo <= px <= x_hi and y_lo <= py <= y_hi):
                continue
            sx, sy = to_screen((px, py))
            if (ka, kb) in core_set:
                svg.add("circle", cx=_fmt(sx), cy=_fmt(sy), r=_fmt(scale * 0.09),
                        fill="#c03020")
                size = affine.size_lattice_total(rs, (ka, kb))
                svg.text(sx, sy - scale * 0.14, str(size), scale * 0.2)
            else:
                svg.add("circle", cx=_fmt(sx), cy=_fmt(sy), r=_fmt(scale * 0.05),
                        fill="#404040")

    body = "\n".join(svg.lines)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">\n'
        f"{body}\n</svg>\n"
    )


def _plane_inverse(v1, v2):
    det = v1[0] * v2[1] - v2[0] * v1[1]
    return (v2[1] / det, -v2[0] / det, -v1[1] / det, v1[0] / det)


def _apply_inverse(inv, x, y):
    a, b, c, d = inv
    return (a * x + b * y, c * x + d * y)


def _clip_line(pair_vec, k, inv, box):
    """Clip the line {<x, alpha> = k} to the view box; returns a segment or None.

    The pairing at plane point (x, y) is linear: p(x, y) = u*x + v*y.
    """
    a, b, c, d = inv
    u = pair_vec[0] * a + pair_vec[1] * c
    v = pair_vec[0] * b + pair_vec[1] * d
    x_lo, y_lo, x_hi, y_hi = box
    pts = []
    eps = 1e-9
    if abs(v) > eps:
        for x in (x_lo, x_hi):
            y = (k - u * x) / v
            if y_lo - eps <= y <= y_hi + eps:
                pts.append((x, y))
    if abs(u) > eps:
        for y in (y_lo, y_hi):
            x = (k - v * y) / u
            if x_lo - eps <= x <= x_hi + eps:
                pts.append((x, y))
    uniq = []
    for p in pts:
        if all(abs(p[0] - q[0]) + abs(p[1] - q[1]) > 1e-6 for q in uniq):
            uniq.append(p)
    if len(uniq) < 2:
        return None
    return uniq[0], uniq[1]
