"""Deterministic SVG drawings of two-Bloch-sphere pictures.

Coordinates are projected with a fixed view (polar 70°, azimuth 20°) and
printed with four decimals, so identical frames always give identical bytes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .frames import EntangledFrame, FrameRep, SeparableFrame, SignedAxis

POLAR_DEG = 70.0
AZIMUTH_DEG = 20.0

_T = math.radians(POLAR_DEG)
_P = math.radians(AZIMUTH_DEG)
# rows: screen x, screen y (up); same convention as tikz-3dplot main coords
PROJECTION = np.array(
    [
        [math.cos(_P), math.sin(_P), 0.0],
        [-math.cos(_T) * math.sin(_P), math.cos(_T) * math.cos(_P), math.sin(_T)],
    ]
)

COMPLETION_NOTE = (
    "Separable state: only the axis along each statevector arrow is physical. "
    "Transverse axes are drawn by the smallest right-handed rotation taking that "
    "axis onto the arrow (a half turn about x when it points straight away)."
)


@dataclass(frozen=True)
class Style:
    width: int = 440
    height: int = 220
    radius: float = 70.0
    axis_length: float = 1.2
    label_offset: float = 1.38
    axis_stroke: float = 1.5
    arrow_stroke: float = 5.0
    dot_radius: float = 6.0
    equator_segments: int = 72
    arrow_color: str = "#ff8c00"
    axis_color: str = "#000000"
    sphere_fill: str = "#f2f2f2"


@dataclass(frozen=True)
class SceneSpec:
    frame: FrameRep
    labels: tuple[int, int] = (1, 2)
    style: Style = field(default_factory=Style)


def _fmt(v: float) -> str:
    v = round(float(v), 4)
    if v == 0:
        v = 0.0
    return f"{v:.4f}"


def _rotation_to_up(u: np.ndarray) -> np.ndarray:
    """Integer rotation matrix taking the unit axis vector ``u`` to +z."""
    up = np.array([0, 0, 1])
    if np.array_equal(u, up):
        return np.eye(3, dtype=int)
    if np.array_equal(u, -up):
        return np.diag([1, -1, -1])
    w = np.cross(u, up)
    k = np.array([[0, -w[2], w[1]], [w[2], 0, -w[0]], [-w[1], w[0], 0]])
    return np.eye(3, dtype=int) + k + k @ k


def completed_axes(arrow: SignedAxis) -> np.ndarray:
    """World direction of each sphere axis (columns x, y, z) for a separable sphere."""
    return _rotation_to_up(arrow.vector())


def sphere_axes(frame: FrameRep) -> tuple[np.ndarray, np.ndarray]:
    if isinstance(frame, SeparableFrame):
        return completed_axes(frame.arrow1), completed_axes(frame.arrow2)
    # column q of the sphere-2 axis matrix = row q of the alignment
    return np.eye(3, dtype=int), frame.matrix.T.copy()


def _project(center: tuple[float, float], radius: float, v) -> tuple[float, float]:
    sx, sy = PROJECTION @ np.asarray(v, dtype=float)
    return center[0] + radius * sx, center[1] - radius * sy


def _sphere(lines: list[str], idx: int, label: int, axes: np.ndarray, frame: FrameRep, st: Style) -> None:
    cx = st.width * (0.25 if idx == 0 else 0.75)
    center = (cx, st.height / 2)
    r = st.radius
    lines.append(f'<g id="sphere{label}">')
    lines.append(
        f'<circle class="sphere" cx="{_fmt(center[0])}" cy="{_fmt(center[1])}" r="{_fmt(r)}" '
        f'fill="{st.sphere_fill}" stroke="#808080" stroke-width="1"/>'
    )
    pts = []
    for k in range(st.equator_segments):
        ang = 2 * math.pi * k / st.equator_segments
        pts.append(_project(center, r, (math.cos(ang), math.sin(ang), 0.0)))
    pts_text = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)
    lines.append(
        f'<polygon class="equator" points="{pts_text}" fill="none" stroke="#808080" '
        f'stroke-width="0.75" stroke-dasharray="3,3"/>'
    )
    for col, name in enumerate("xyz"):
        d = axes[:, col]
        x2, y2 = _project(center, r, st.axis_length * d)
        lx, ly = _project(center, r, st.label_offset * d)
        lines.append(
            f'<line class="axis" x1="{_fmt(center[0])}" y1="{_fmt(center[1])}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="{st.axis_color}" stroke-width="{_fmt(st.axis_stroke)}" marker-end="url(#axis-head)"/>'
        )
        lines.append(
            f'<text class="axis-label" x="{_fmt(lx)}" y="{_fmt(ly)}" text-anchor="middle" '
            f'dominant-baseline="middle" font-family="serif" font-style="italic" font-size="13">'
            f"{name}<tspan dy=\"4\" font-size=\"9\">{label}</tspan></text>"
        )
    if isinstance(frame, SeparableFrame):
        x2, y2 = _project(center, r, (0, 0, 1))
        lines.append(
            f'<line class="statevector" x1="{_fmt(center[0])}" y1="{_fmt(center[1])}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="{st.arrow_color}" stroke-width="{_fmt(st.arrow_stroke)}" marker-end="url(#state-head)"/>'
        )
    else:
        lines.append(
            f'<circle class="center-dot" cx="{_fmt(center[0])}" cy="{_fmt(center[1])}" '
            f'r="{_fmt(st.dot_radius)}" fill="{st.arrow_color}"/>'
        )
    lines.append("</g>")


def render_svg(scene: SceneSpec) -> str:
    """SVG 1.1 document for ``scene``; a pure function of its input."""
    st = scene.style
    frame = scene.frame
    if not isinstance(frame, (SeparableFrame, EntangledFrame)):
        raise TypeError(f"not a frame: {frame!r}")
    axes1, axes2 = sphere_axes(frame)
    lines = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{st.width}" height="{st.height}" '
        f'viewBox="0 0 {st.width} {st.height}">',
    ]
    if isinstance(frame, SeparableFrame):
        lines.append(f"<!-- {COMPLETION_NOTE} -->")
        lines.append(f"<desc>arrow1={frame.arrow1} arrow2={frame.arrow2}</desc>")
    else:
        pairs = ", ".join(f"{k}~{v}" for k, v in frame.to_json()["alignment"].items())
        lines.append(f"<desc>alignment {pairs}</desc>")
    lines += [
        "<defs>",
        '<marker id="axis-head" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" markerHeight="6" '
        'orient="auto"><path d="M 0 0 L 10 5 L 0 10 z" fill="#000000"/></marker>',
        '<marker id="state-head" viewBox="0 0 10 10" refX="6" refY="5" markerWidth="3" markerHeight="3" '
        f'orient="auto"><path d="M 0 0 L 10 5 L 0 10 z" fill="{st.arrow_color}"/></marker>',
        "</defs>",
    ]
    _sphere(lines, 0, scene.labels[0], axes1, frame, st)
    _sphere(lines, 1, scene.labels[1], axes2, frame, st)
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def write_svg(frame: FrameRep, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(render_svg(SceneSpec(frame)))
