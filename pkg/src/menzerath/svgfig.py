"""Deterministic standalone SVG figures.

Three panel kinds echo the usual presentation of joint-distribution
models: a heatmap of the joint table (optionally with sampled pairs
scattered on top), the Menzerath curve with model overlays, and a
classical-models comparison with an RSS legend.  The composite layout
stacks all three into a fixed 960x720 viewBox.

Rendering is pure string assembly: identical inputs give byte-identical
output, element order is fixed, and no external resource is referenced.
"""

import enum
from dataclasses import dataclass
from xml.sax.saxutils import escape

import numpy as np

from .table import Domain, JointFrequencyTable, MalCurve, empirical_mal_curve

__all__ = ["Layout", "PanelModel", "render_svg"]


class Layout(enum.Enum):
    JOINT_PANEL = "joint"
    CURVE_PANEL = "mal"
    COMPARISON_PANEL = "compare"
    COMPOSITE = "composite"


@dataclass(frozen=True)
class PanelModel:
    """A named model curve, with its RSS when known."""

    name: str
    curve: MalCurve
    rss: float | None = None


_CLASSICAL = ("hyperbolic", "altmann", "altmann-direct")
_COLORS = {
    "empirical": "#1a1a1a",
    "hyperbolic": "#1b9e77",
    "altmann": "#d95f02",
    "altmann-direct": "#7570b3",
    "gaussian": "#e7298a",
    "lognormal": "#66a61e",
    "copula": "#e6ab02",
    "copula-boundaries": "#a6761d",
}
_MARGIN = 46


def _f(v: float) -> str:
    # Fixed two-decimal coordinates keep files compact and deterministic.
    return f"{v:.2f}"


def _scale(lo: float, hi: float, a: float, b: float):
    span = hi - lo if hi > lo else 1.0
    return lambda v: a + (v - lo) * (b - a) / span


def _axis_frame(out, x0, y0, w, h, xlab, ylab):
    out.append(
        f'<rect x="{_f(x0)}" y="{_f(y0)}" width="{_f(w)}" height="{_f(h)}" '
        'fill="none" stroke="#888888" stroke-width="1"/>'
    )
    out.append(
        f'<text x="{_f(x0 + w / 2)}" y="{_f(y0 + h + 30)}" font-size="12" '
        f'text-anchor="middle" fill="#333333">{escape(xlab)}</text>'
    )
    out.append(
        f'<text x="{_f(x0 - 32)}" y="{_f(y0 + h / 2)}" font-size="12" '
        f'text-anchor="middle" fill="#333333" '
        f'transform="rotate(-90 {_f(x0 - 32)} {_f(y0 + h / 2)})">{escape(ylab)}</text>'
    )


def _tick_labels(out, x0, y0, w, h, lo_x, hi_x, lo_y, hi_y):
    out.append(
        f'<text x="{_f(x0)}" y="{_f(y0 + h + 14)}" font-size="10" '
        f'text-anchor="middle" fill="#555555">{_f(lo_x)}</text>'
    )
    out.append(
        f'<text x="{_f(x0 + w)}" y="{_f(y0 + h + 14)}" font-size="10" '
        f'text-anchor="middle" fill="#555555">{_f(hi_x)}</text>'
    )
    out.append(
        f'<text x="{_f(x0 - 6)}" y="{_f(y0 + h)}" font-size="10" '
        f'text-anchor="end" fill="#555555">{_f(lo_y)}</text>'
    )
    out.append(
        f'<text x="{_f(x0 - 6)}" y="{_f(y0 + 10)}" font-size="10" '
        f'text-anchor="end" fill="#555555">{_f(hi_y)}</text>'
    )


def _joint_panel(table, samples, ox, oy, width, height):
    out = [f'<g id="joint" transform="translate({_f(ox)} {_f(oy)})">']
    x0, y0 = _MARGIN + 8, 18
    w, h = width - x0 - 16, height - y0 - 46
    xs, zs, ns = table.arrays()
    lo_x, hi_x = int(xs.min()), int(xs.max())
    lo_z, hi_z = int(zs.min()), int(zs.max())
    if samples is not None and len(samples):
        samples = np.asarray(samples)
        lo_x = min(lo_x, int(samples[:, 0].min()))
        hi_x = max(hi_x, int(samples[:, 0].max()))
        lo_z = min(lo_z, int(samples[:, 1].min()))
        hi_z = max(hi_z, int(samples[:, 1].max()))
    sx = _scale(lo_x - 0.5, hi_x + 0.5, x0, x0 + w)
    sz = _scale(lo_z - 0.5, hi_z + 0.5, y0 + h, y0)
    cell_w = w / (hi_x - lo_x + 1)
    cell_h = h / (hi_z - lo_z + 1)
    side = min(cell_w, cell_h)
    # Definitionally impossible region (z < x) in the segment domain.
    if table.domain is Domain.SEGMENTS:
        for x in range(max(lo_x, lo_z + 1), hi_x + 1):
            top = min(x - 1, hi_z)
            if top < lo_z:
                continue
            out.append(
                f'<rect x="{_f(sx(x - 0.5))}" y="{_f(sz(top + 0.5))}" '
                f'width="{_f(cell_w)}" '
                f'height="{_f(sz(lo_z - 0.5) - sz(top + 0.5))}" '
                'fill="#dddddd"/>'
            )
    n_max = int(ns.max())
    for x, z, n in table.sorted_cells():
        r = side * 0.92 * (n / n_max) ** 0.5 / 2
        out.append(
            f'<rect x="{_f(sx(x) - r)}" y="{_f(sz(z) - r)}" '
            f'width="{_f(2 * r)}" height="{_f(2 * r)}" fill="#2166ac"/>'
        )
    if samples is not None and len(samples):
        pts = []
        for x, z in np.asarray(samples):
            pts.append(
                f'<circle cx="{_f(sx(float(x)))}" cy="{_f(sz(float(z)))}" '
                'r="2.5" fill="#d6604d" fill-opacity="0.35"/>'
            )
        out.append(f'<g id="samples">{"".join(pts)}</g>')
    _axis_frame(out, x0, y0, w, h, "x (constituents)", "z (subconstituents)")
    _tick_labels(out, x0, y0, w, h, lo_x, hi_x, lo_z, hi_z)
    out.append("</g>")
    return out


def _curve_paths(models, empirical, scale_x, scale_y):
    paths = []
    for pm in models:
        pts = " ".join(
            f"{_f(scale_x(float(x)))},{_f(scale_y(float(y)))}"
            for x, y in zip(pm.curve.xs, pm.curve.ys)
        )
        color = _COLORS.get(pm.name, "#444444")
        paths.append(
            f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.5"/>'
        )
    pts = " ".join(
        f"{_f(scale_x(float(x)))},{_f(scale_y(float(y)))}"
        for x, y in zip(empirical.xs, empirical.ys)
    )
    paths.append(
        f'<polyline points="{pts}" fill="none" stroke="{_COLORS["empirical"]}" '
        'stroke-width="1.2" stroke-dasharray="4 2"/>'
    )
    for x, y in zip(empirical.xs, empirical.ys):
        paths.append(
            f'<circle cx="{_f(scale_x(float(x)))}" cy="{_f(scale_y(float(y)))}" '
            f'r="3" fill="{_COLORS["empirical"]}"/>'
        )
    return paths


def _curve_panel(panel_id, title, empirical, models, legend, ox, oy, width, height):
    out = [f'<g id="{panel_id}" transform="translate({_f(ox)} {_f(oy)})">']
    x0, y0 = _MARGIN + 8, 22
    w, h = width - x0 - 14, height - y0 - 46
    all_ys = list(empirical.ys) + [y for pm in models for y in pm.curve.ys]
    lo_y, hi_y = min(all_ys), max(all_ys)
    pad = 0.05 * (hi_y - lo_y if hi_y > lo_y else 1.0)
    lo_y, hi_y = lo_y - pad, hi_y + pad
    lo_x, hi_x = float(empirical.xs.min()), float(empirical.xs.max())
    sx = _scale(lo_x, hi_x, x0, x0 + w)
    sy = _scale(lo_y, hi_y, y0 + h, y0)
    out.append(
        f'<text x="{_f(x0)}" y="{_f(y0 - 8)}" font-size="12" '
        f'fill="#333333">{escape(title)}</text>'
    )
    out.extend(_curve_paths(models, empirical, sx, sy))
    if legend and models:
        items = []
        for i, pm in enumerate(models):
            label = pm.name if pm.rss is None else f"{pm.name} RSS={pm.rss:.4g}"
            color = _COLORS.get(pm.name, "#444444")
            ly = y0 + 14 + 14 * i
            items.append(
                f'<rect x="{_f(x0 + w - 150)}" y="{_f(ly - 8)}" width="10" '
                f'height="10" fill="{color}"/>'
                f'<text x="{_f(x0 + w - 136)}" y="{_f(ly + 1)}" font-size="10" '
                f'fill="#333333">{escape(label)}</text>'
            )
        out.append(f'<g id="{panel_id}-legend">{"".join(items)}</g>')
    _axis_frame(out, x0, y0, w, h, "x (constituents)", "y (mean length)")
    _tick_labels(out, x0, y0, w, h, lo_x, hi_x, lo_y, hi_y)
    out.append("</g>")
    return out


def render_svg(
    table: JointFrequencyTable,
    models=(),
    samples=None,
    layout: Layout = Layout.COMPOSITE,
) -> str:
    """Render the requested panel(s) as standalone SVG text.

    ``models`` is a sequence of :class:`PanelModel`; the comparison
    panel shows only the classical subset (with RSS legend), the curve
    panel shows every model over the empirical curve.  ``samples`` is
    an optional (n, 2) array scattered over the joint heatmap.
    """
    models = list(models)
    if layout is Layout.JOINT_PANEL:
        width, height = 960, 400
        body = _joint_panel(table, samples, 0, 0, width, height)
    else:
        empirical = empirical_mal_curve(table)
        classical = [pm for pm in models if pm.name in _CLASSICAL]
        if layout is Layout.CURVE_PANEL:
            width, height = 480, 360
            body = _curve_panel(
                "mal", "Menzerath curve", empirical, models, False, 0, 0, width, height
            )
        elif layout is Layout.COMPARISON_PANEL:
            width, height = 480, 360
            body = _curve_panel(
                "compare", "classical models", empirical, classical, True,
                0, 0, width, height,
            )
        else:
            width, height = 960, 720
            body = _joint_panel(table, samples, 0, 0, 960, 400)
            body += _curve_panel(
                "mal", "Menzerath curve", empirical, models, False, 0, 400, 480, 320
            )
            body += _curve_panel(
                "compare", "classical models", empirical, classical, True,
                480, 400, 480, 320,
            )
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}" '
        f'width="{width}" height="{height}" font-family="sans-serif">\n'
    )
    return head + "\n".join(body) + "\n</svg>\n"
