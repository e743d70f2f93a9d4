"""A small SVG gallery: one panel per trial, bodies and their sum outlined."""
from __future__ import annotations

from ..convex_core import kernels

PANEL = 160
PAD = 10
COLS = 5
MAX_PANELS = 50
COLORS = ("#1f77b4", "#d62728", "#555555")


def _outline(P):
    """Planar outline (3D bodies are shown by their shadow on the xy-plane)."""
    if P.dim == 2:
        return [(float(v[0]), float(v[1])) for v in P.vertices]
    arr = P.array()
    hx, hy = kernels.hull2([float(x) for x in arr[:, 0]], [float(y) for y in arr[:, 1]])
    return list(zip(hx, hy))


def render_gallery(panels, title="gallery"):
    """``panels`` is a list of (label, [bodies]); at most 50 are drawn."""
    panels = list(panels)[:MAX_PANELS]
    rows = max(1, (len(panels) + COLS - 1) // COLS)
    width, height = COLS * PANEL, rows * PANEL
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<title>{title}</title>",
    ]
    for idx, (label, bodies) in enumerate(panels):
        ox, oy = (idx % COLS) * PANEL, (idx // COLS) * PANEL
        outlines = [_outline(B) for B in bodies]
        pts = [p for o in outlines for p in o]
        xmin, xmax = min(p[0] for p in pts), max(p[0] for p in pts)
        ymin, ymax = min(p[1] for p in pts), max(p[1] for p in pts)
        span = max(xmax - xmin, ymax - ymin, 1e-12)
        s = (PANEL - 2 * PAD - 12) / span

        def tx(p):
            return ox + PAD + (p[0] - xmin) * s, oy + PANEL - PAD - (p[1] - ymin) * s

        out.append(f'<rect x="{ox}" y="{oy}" width="{PANEL}" height="{PANEL}" '
                   'fill="none" stroke="#dddddd"/>')
        out.append(f'<text x="{ox + 4}" y="{oy + 12}" font-size="10">{label}</text>')
        for o, color in zip(outlines, COLORS):
            path = " ".join("%.4f,%.4f" % tx(p) for p in o)
            out.append(f'<polygon points="{path}" fill="none" stroke="{color}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
