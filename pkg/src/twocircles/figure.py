"""Standalone SVG drawing of a scene."""

from __future__ import annotations

from xml.sax.saxutils import escape

from .oracle import Scene

WIDTH, HEIGHT, MARGIN = 1000, 600, 40

# segments drawn thin, then the tangent and centre line drawn heavier
_CONSTRUCTION = (
    ("C1", "T1"), ("C2", "T2"), ("C1", "M"), ("C2", "M"), ("T1", "I"),
    ("I", "T2"), ("I", "M"), ("C1", "M1"), ("C2", "M2"), ("C2", "F"),
)
_MAIN = (("T1", "T2"), ("T2", "K"), ("C1", "K"))
_LABELLED = ("I", "C1", "C2", "T1", "T2", "M", "M1", "M2", "F", "K")
# length annotation -> segment it is written next to
_ANNOTATE = {
    "T1T2": ("T1", "T2"),
    "x1": ("C1", "M"),
    "x2": ("C2", "M"),
    "a1": ("T1", "I"),
    "a2": ("I", "T2"),
    "T2K": ("T2", "K"),
    "C2K": ("C2", "K"),
}


def render_svg(scene: Scene, lengths: dict[str, int] | None = None, title: str = "") -> str:
    """SVG text for ``scene``; ``lengths`` (integer values keyed like
    ``T1T2``) are written along their segments when given."""
    R1, R2 = scene.R1, scene.R2
    kx = scene.points["K"][0]
    xmin, xmax = -2 * R1, max(kx, 2 * R2)
    ymin, ymax = -R1, R1
    scale = min((WIDTH - 2 * MARGIN) / (xmax - xmin), (HEIGHT - 2 * MARGIN) / (ymax - ymin))
    ox = MARGIN + ((WIDTH - 2 * MARGIN) - scale * (xmax - xmin)) / 2
    oy = MARGIN + ((HEIGHT - 2 * MARGIN) - scale * (ymax - ymin)) / 2

    def tx(p):
        return ox + (p[0] - xmin) * scale, oy + (ymax - p[1]) * scale

    pts = {k: tx(v) for k, v in scene.points.items()}
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}" '
        f'width="{WIDTH}" height="{HEIGHT}" font-family="sans-serif">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    if title:
        out.append(f"<title>{escape(title)}</title>")
    for name, r in (("C1", R1), ("C2", R2)):
        cx, cy = pts[name]
        out.append(
            f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="{r * scale:.3f}" '
            'fill="none" stroke="#1f4e9c" stroke-width="1.5"/>'
        )
    for segs, style in ((_CONSTRUCTION, 'stroke="#888" stroke-width="0.8"'),
                        (_MAIN, 'stroke="black" stroke-width="1.4"')):
        for a, b in segs:
            (x1, y1), (x2, y2) = pts[a], pts[b]
            out.append(f'<line x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" y2="{y2:.3f}" {style}/>')
    for name in _LABELLED:
        x, y = pts[name]
        out.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="2.5" fill="black"/>')
        out.append(f'<text x="{x + 4:.3f}" y="{y - 5:.3f}" font-size="13">{name}</text>')
    if lengths:
        for key, (a, b) in _ANNOTATE.items():
            if key not in lengths:
                continue
            (x1, y1), (x2, y2) = pts[a], pts[b]
            out.append(
                f'<text x="{(x1 + x2) / 2:.3f}" y="{(y1 + y2) / 2 + 14:.3f}" '
                f'font-size="11" fill="#a33">{key}={lengths[key]}</text>'
            )
        R_text = f"R1={lengths.get('R1', '')} R2={lengths.get('R2', '')}"
        out.append(f'<text x="{MARGIN}" y="{HEIGHT - 12}" font-size="12">{escape(R_text)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
