"""Plain-text output: the CSV table emitter and a small dependency-free
SVG scatter plot."""
from __future__ import annotations

import csv
import io

CSV_COLUMNS = ("name", "n", "m", "mu", "tau", "degrees", "J", "EE", "RVa", "RVb")

SVG_WIDTH = 640
SVG_HEIGHT = 480


def emit_csv(reports, digits=5):
    """Render IndexReport rows as CSV text with the fixed column set.

    Index values are printed with a fixed number of decimals so the same
    input always produces byte-identical output. Names containing commas
    (most substituted alkanes) come out quoted.
    """
    if digits < 0:
        raise ValueError("digits must be non-negative")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in reports:
        writer.writerow(
            [
                r.name,
                r.n,
                r.m,
                r.mu,
                r.tau,
                r.degrees,
                f"{r.J:.{digits}f}",
                f"{r.EE:.{digits}f}",
                f"{r.RVa:.{digits}f}",
                f"{r.RVb:.{digits}f}",
            ]
        )
    return buf.getvalue()


def _esc(text):
    return (
        str(text)
        .replace("&", "&amp;")
        .replace("<", "&lt;")
        .replace(">", "&gt;")
        .replace('"', "&quot;")
    )


def _axis_range(values):
    lo = min(values)
    hi = max(values)
    if lo == hi:
        lo -= 0.5
        hi += 0.5
    pad = 0.05 * (hi - lo)
    return lo - pad, hi + pad


def _ticks(lo, hi, count=5):
    step = (hi - lo) / (count - 1)
    return [lo + i * step for i in range(count)]


def emit_svg_scatter(xs, ys, xlabel="", ylabel="", names=None, title=""):
    """A 640x480 standalone SVG scatter plot as a string.

    Hand-rolled on purpose: the output is deterministic (fixed decimal
    places everywhere), has no script or external references, and stays
    small enough to diff. Each point may carry a hover tooltip via
    names.
    """
    xs = [float(v) for v in xs]
    ys = [float(v) for v in ys]
    if len(xs) != len(ys):
        raise ValueError("x and y must have the same length")
    if not xs:
        raise ValueError("nothing to plot")
    if names is not None and len(names) != len(xs):
        raise ValueError("names must pair up with the points")

    left, right, top, bottom = 60.0, 20.0, 40.0 if title else 20.0, 50.0
    plot_w = SVG_WIDTH - left - right
    plot_h = SVG_HEIGHT - top - bottom
    x_lo, x_hi = _axis_range(xs)
    y_lo, y_hi = _axis_range(ys)

    def px(v):
        return left + (v - x_lo) / (x_hi - x_lo) * plot_w

    def py(v):
        return top + plot_h - (v - y_lo) / (y_hi - y_lo) * plot_h

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_WIDTH}" '
        f'height="{SVG_HEIGHT}" viewBox="0 0 {SVG_WIDTH} {SVG_HEIGHT}">',
        f'<rect width="{SVG_WIDTH}" height="{SVG_HEIGHT}" fill="white"/>',
        f'<rect x="{left:.1f}" y="{top:.1f}" width="{plot_w:.1f}" '
        f'height="{plot_h:.1f}" fill="none" stroke="black" stroke-width="1"/>',
    ]
    if title:
        out.append(
            f'<text x="{SVG_WIDTH / 2:.1f}" y="24" text-anchor="middle" '
            f'font-family="sans-serif" font-size="15">{_esc(title)}</text>'
        )
    for tick in _ticks(x_lo, x_hi):
        x = px(tick)
        out.append(
            f'<line x1="{x:.2f}" y1="{top + plot_h:.1f}" x2="{x:.2f}" '
            f'y2="{top + plot_h + 5:.1f}" stroke="black"/>'
        )
        out.append(
            f'<text x="{x:.2f}" y="{top + plot_h + 18:.1f}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="11">{tick:.4g}</text>'
        )
    for tick in _ticks(y_lo, y_hi):
        y = py(tick)
        out.append(
            f'<line x1="{left - 5:.1f}" y1="{y:.2f}" x2="{left:.1f}" '
            f'y2="{y:.2f}" stroke="black"/>'
        )
        out.append(
            f'<text x="{left - 8:.1f}" y="{y + 4:.2f}" text-anchor="end" '
            f'font-family="sans-serif" font-size="11">{tick:.4g}</text>'
        )
    if xlabel:
        out.append(
            f'<text x="{left + plot_w / 2:.1f}" y="{SVG_HEIGHT - 10}" '
            f'text-anchor="middle" font-family="sans-serif" font-size="13">'
            f"{_esc(xlabel)}</text>"
        )
    if ylabel:
        out.append(
            f'<text x="16" y="{top + plot_h / 2:.1f}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="13" '
            f'transform="rotate(-90 16 {top + plot_h / 2:.1f})">'
            f"{_esc(ylabel)}</text>"
        )
    for i, (x, y) in enumerate(zip(xs, ys)):
        circle = (
            f'<circle cx="{px(x):.2f}" cy="{py(y):.2f}" r="3.5" '
            f'fill="#3465a4" fill-opacity="0.75" stroke="none"'
        )
        if names is not None:
            out.append(circle + f"><title>{_esc(names[i])}</title></circle>")
        else:
            out.append(circle + "/>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
