"""Static SVG figures of planar fans.

Floats appear only here, as drawing coordinates.  Output is byte-stable
for a given fan and annotation set.
"""

import math
from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple

from .fan import Fan, is_regular

SIZE = 400
RADIUS = 150.0
_CENTER = SIZE / 2


@dataclass(frozen=True)
class Annotations:
    contracted: FrozenSet[int] = frozenset()      # ray indices drawn red
    indeterminate: FrozenSet[int] = frozenset()   # cone indices, red hatching
    singular: FrozenSet[int] = frozenset()        # cone indices, grey hatching
    eigen_directions: Tuple[Tuple[float, float], ...] = ()
    title: Optional[str] = None


def annotations_for(A, fan: Fan, title=None) -> Annotations:
    """Contracted rays, indeterminate and singular cones, and real
    eigenlines of ``A`` on ``fan``."""
    from .dynamics import contracted_rays, indeterminacy_points
    from .exact import EigenKind, eigen_decompose

    contracted = frozenset(fan.ray_index(r) for r, _ in contracted_rays(A, fan))
    sd = eigen_decompose(A)
    eig = ()
    if sd.eigen_kind is not EigenKind.Complex and sd.w1 is not None:
        eig = tuple((float(w[0]), float(w[1])) for w in (sd.w1, sd.w2)
                    if w is not None)
        eig = tuple(dict.fromkeys(eig))
    return Annotations(
        contracted=contracted,
        indeterminate=frozenset(indeterminacy_points(A, fan)),
        singular=frozenset(i for i, d in is_regular(fan) if d != 1),
        eigen_directions=eig,
        title=title,
    )


def _pt(x, y, scale=RADIUS):
    n = math.hypot(x, y)
    return _CENTER + scale * x / n, _CENTER - scale * y / n


def _f(v):
    return f"{v:.3f}"


def _wedge(fan, i, fill):
    c = fan.cone(i)
    x0, y0 = _pt(*c.lo)
    x1, y1 = _pt(*c.hi)
    # counterclockwise in the plane is clockwise on screen: sweep flag 0
    return (f'<path d="M {_f(_CENTER)} {_f(_CENTER)} L {_f(x0)} {_f(y0)} '
            f'A {_f(RADIUS)} {_f(RADIUS)} 0 0 0 {_f(x1)} {_f(y1)} Z" fill="{fill}" '
            f'stroke="none"/>')


def render_svg(fan: Fan, annotations: Optional[Annotations] = None) -> str:
    ann = annotations or Annotations()
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" '
        f'height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">',
        "<defs>",
        '<pattern id="hatch-indet" width="6" height="6" patternUnits="userSpaceOnUse" '
        'patternTransform="rotate(45)"><line x1="0" y1="0" x2="0" y2="6" '
        'stroke="#c0392b" stroke-width="2"/></pattern>',
        '<pattern id="hatch-sing" width="6" height="6" patternUnits="userSpaceOnUse" '
        'patternTransform="rotate(-45)"><line x1="0" y1="0" x2="0" y2="6" '
        'stroke="#7f8c8d" stroke-width="1"/></pattern>',
        "</defs>",
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    if ann.title:
        out.append(f'<text x="{_f(_CENTER)}" y="18" text-anchor="middle" '
                   f'font-family="sans-serif" font-size="13">{_escape(ann.title)}</text>')
    shades = ("#eaf2fb", "#d6e6f5")
    for i in range(fan.n_cones):
        out.append(_wedge(fan, i, shades[i % 2]))
    for i in sorted(ann.singular):
        out.append(_wedge(fan, i, "url(#hatch-sing)"))
    for i in sorted(ann.indeterminate):
        out.append(_wedge(fan, i, "url(#hatch-indet)"))
    for x, y in ann.eigen_directions:
        xa, ya = _pt(x, y, RADIUS * 1.05)
        xb, yb = _pt(-x, -y, RADIUS * 1.05)
        out.append(f'<line x1="{_f(xa)}" y1="{_f(ya)}" x2="{_f(xb)}" y2="{_f(yb)}" '
                   f'stroke="#2c6fbb" stroke-width="1.2" stroke-dasharray="6 4"/>')
    for i, r in enumerate(fan.rays):
        color = "#c0392b" if i in ann.contracted else "#222222"
        x, y = _pt(*r)
        lx, ly = _pt(r.x, r.y, RADIUS * 1.16)
        out.append(f'<line x1="{_f(_CENTER)}" y1="{_f(_CENTER)}" x2="{_f(x)}" '
                   f'y2="{_f(y)}" stroke="{color}" stroke-width="1.6"/>')
        out.append(f'<text x="{_f(lx)}" y="{_f(ly)}" text-anchor="middle" '
                   f'dominant-baseline="middle" font-family="monospace" font-size="10" '
                   f'fill="{color}">({r.x},{r.y})</text>')
    out.append(f'<circle cx="{_f(_CENTER)}" cy="{_f(_CENTER)}" r="2" fill="#222222"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
