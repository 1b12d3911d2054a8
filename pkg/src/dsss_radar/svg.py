"""Minimal deterministic SVG line plots."""

from __future__ import annotations

WIDTH, HEIGHT, MARGIN = 640, 400, 50


def _scale(values, lo_px, hi_px):
    lo, hi = min(values), max(values)
    span = (hi - lo) or 1.0
    return [lo_px + (v - lo) / span * (hi_px - lo_px) for v in values], lo, hi


def line_plot(x, y, xlabel: str, ylabel: str, hline: float | None = None) -> str:
    """Render ``y`` against ``x`` as an SVG string; ``hline`` draws a dashed reference."""
    ys = list(y) + ([hline] if hline is not None else [])
    px, x0, x1 = _scale(list(x), MARGIN, WIDTH - MARGIN)
    py_all, y0, y1 = _scale(ys, HEIGHT - MARGIN, MARGIN)
    py = py_all[: len(px)]
    points = " ".join(f"{a:.2f},{b:.2f}" for a, b in zip(px, py))
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}">',
        f'<rect x="{MARGIN}" y="{MARGIN}" width="{WIDTH - 2 * MARGIN}" '
        f'height="{HEIGHT - 2 * MARGIN}" fill="none" stroke="black"/>',
        f'<polyline points="{points}" fill="none" stroke="blue"/>',
    ]
    if hline is not None:
        yh = py_all[-1]
        parts.append(
            f'<line x1="{MARGIN}" y1="{yh:.2f}" x2="{WIDTH - MARGIN}" y2="{yh:.2f}" '
            'stroke="red" stroke-dasharray="4"/>'
        )
    parts += [
        f'<text x="{WIDTH / 2}" y="{HEIGHT - 10}" text-anchor="middle">{xlabel}</text>',
        f'<text x="15" y="{HEIGHT / 2}" transform="rotate(-90 15 {HEIGHT / 2})" '
        f'text-anchor="middle">{ylabel}</text>',
        f'<text x="{MARGIN}" y="{HEIGHT - MARGIN + 15}">{x0:.6g}</text>',
        f'<text x="{WIDTH - MARGIN}" y="{HEIGHT - MARGIN + 15}" text-anchor="end">{x1:.6g}</text>',
        f'<text x="{MARGIN - 5}" y="{HEIGHT - MARGIN}" text-anchor="end">{y0:.6g}</text>',
        f'<text x="{MARGIN - 5}" y="{MARGIN + 5}" text-anchor="end">{y1:.6g}</text>',
        "</svg>",
    ]
    return "\n".join(parts) + "\n"
