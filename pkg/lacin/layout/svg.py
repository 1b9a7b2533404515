"""Deterministic SVG drawing of a pairing matrix on a linear layout.

Switches are rows in slot order, ports are columns. Isoport wires run as
brackets inside their column: out from the port, down a private track, back
into the peer port. Wires of anisoport instances are drawn as oblique segments.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from xml.sax.saxutils import escape

from lacin.core.factors import is_isoport
from lacin.core.pairing import PairingMatrix, PortRef
from lacin.layout.linear import LaneSide, LinearLayout, check_layout

BG = "#0b1020"
PANEL = "#10192e"
STROKE = "#7dd3fc"
TEXT = "#e5f3ff"
MUTED = "#9fb7d5"
ACCENT_WARM = "#f59e0b"
ACCENT_HOT = "#fb7185"

_FONT = 'font-family="ui-monospace, SFMono-Regular, Menlo, monospace"'


@dataclass(frozen=True)
class SvgOptions:
    pitch: int = 24  # vertical distance between switches
    port_pitch: int = 18  # minimum column width
    track_pitch: int = 3  # distance between parallel tracks in a column
    lanes: bool = False
    highlight_port: int | None = None
    title: str = ""


def _svg_header(width: int, height: int, title: str) -> list[str]:
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        (
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
            f'height="{height}" viewBox="0 0 {width} {height}">'
        ),
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="{BG}"/>',
    ]
    if title:
        parts.append(
            f'<text x="{width // 2}" y="20" fill="{TEXT}" {_FONT} font-size="14" '
            f'text-anchor="middle">{escape(title)}</text>'
        )
    return parts


def _label(x: float, y: float, text: str, size: int = 10, anchor: str = "middle") -> str:
    return (
        f'<text x="{x:.1f}" y="{y:.1f}" fill="{MUTED}" {_FONT} '
        f'font-size="{size}" text-anchor="{anchor}">{escape(text)}</text>'
    )


def _wire(points: list[tuple[float, float]], color: str, width: float) -> str:
    coords = " ".join(f"{x:.1f},{y:.1f}" for x, y in points)
    return (
        f'<polyline class="wire" points="{coords}" fill="none" '
        f'stroke="{color}" stroke-width="{width:.1f}"/>'
    )


def _tracks(m: PairingMatrix, layout: LinearLayout) -> dict[tuple[int, int], int]:
    """Track rank per (switch, port) end; shorter spans sit closer to the port."""
    ranks: dict[tuple[int, int], int] = {}
    for port in range(m.ports):
        column = sorted(
            (layout.span((s, ref.switch)), s, ref.switch)
            for s in range(m.n)
            for ref in [m.peer(s, port)]
            if ref is not None and s < ref.switch
        )
        for rank, (_span, a, b) in enumerate(column, start=1):
            ranks[(a, port)] = rank
            ranks[(b, port)] = rank
    return ranks


def render_svg(
    m: PairingMatrix,
    layout: LinearLayout,
    options: SvgOptions | None = None,
) -> str:
    """Render the matrix; identical inputs always give identical text."""
    check_layout(m, layout)
    opts = options or SvgOptions()
    isoport = is_isoport(m)
    ranks = _tracks(m, layout) if isoport else {}
    max_rank = max(ranks.values(), default=0)
    half_column = max(opts.port_pitch / 2, (max_rank + 1) * opts.track_pitch)
    column_width = 2 * half_column

    left, top = 48.0, 56.0
    width = int(left + m.ports * column_width + 24)
    height = int(top + m.n * opts.pitch + 16)
    parts = _svg_header(width, height, opts.title)

    def port_x(port: int) -> float:
        return left + port * column_width + half_column

    def switch_y(switch: int) -> float:
        return top + layout.slot(switch) * opts.pitch + opts.pitch / 2

    for port in range(m.ports):
        parts.append(_label(port_x(port), top - 8, f"i={port}", size=9))
    for switch in sorted(range(m.n), key=layout.slot):
        y = switch_y(switch)
        parts.append(
            f'<rect class="switch" x="{left - 2:.1f}" y="{y - 4:.1f}" '
            f'width="{m.ports * column_width + 4:.1f}" height="8" rx="3" '
            f'fill="{PANEL}" stroke="{STROKE}" stroke-width="1"/>'
        )
        parts.append(_label(left - 10, y + 3, str(switch), anchor="end"))

    for a, b in m.links():
        highlighted = opts.highlight_port is not None and opts.highlight_port in (a.port, b.port)
        color = ACCENT_WARM if highlighted else STROKE
        stroke = 2.0 if highlighted else 1.0
        if isoport:
            parts.append(_bracket(m, layout, opts, ranks, a, b, port_x, switch_y, color, stroke))
        else:
            ends = [(port_x(a.port), switch_y(a.switch)), (port_x(b.port), switch_y(b.switch))]
            parts.append(_wire(ends, color, stroke))

    for idle in m.idle_ports():
        parts.append(
            f'<circle class="idle" cx="{port_x(idle.port):.1f}" cy="{switch_y(idle.switch):.1f}" '
            f'r="2.5" fill="none" stroke="{ACCENT_HOT}" stroke-width="1"/>'
        )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _bracket(
    m: PairingMatrix,
    layout: LinearLayout,
    opts: SvgOptions,
    ranks: dict[tuple[int, int], int],
    a: PortRef,
    b: PortRef,
    port_x: Callable[[int], float],
    switch_y: Callable[[int], float],
    color: str,
    stroke: float,
) -> str:
    sign = 1.0
    if opts.lanes and layout.side(m, a.port, (a.switch, b.switch)) is LaneSide.LEFT:
        sign = -1.0
    x = port_x(a.port)
    track = x + sign * ranks[(a.switch, a.port)] * opts.track_pitch
    ya, yb = switch_y(a.switch), switch_y(b.switch)
    return _wire([(x, ya), (track, ya), (track, yb), (x, yb)], color, stroke)
