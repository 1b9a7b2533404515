#!/usr/bin/env python3
"""Generate the layout drawings used by the README."""

from __future__ import annotations

from pathlib import Path

from lacin.core.pairing import CinInstanceKind, build_pairing
from lacin.layout.linear import LinearLayout
from lacin.layout.svg import SvgOptions, render_svg

_DRAWINGS = {
    "circle-8.svg": (CinInstanceKind.CIRCLE, 8, SvgOptions(highlight_port=3, title="circle n=8")),
    "circle-8-lanes.svg": (
        CinInstanceKind.CIRCLE,
        8,
        SvgOptions(lanes=True, title="circle n=8, lanes"),
    ),
    "xor-8.svg": (CinInstanceKind.XOR, 8, SvgOptions(title="xor n=8")),
    "swap-8.svg": (CinInstanceKind.SWAP, 8, SvgOptions(title="swap n=8")),
    "circle-7.svg": (CinInstanceKind.CIRCLE, 7, SvgOptions(title="circle n=7")),
}


def main() -> None:
    root = Path(__file__).resolve().parents[1]
    assets = root / "assets"
    assets.mkdir(parents=True, exist_ok=True)

    for name, (kind, n, options) in _DRAWINGS.items():
        svg = render_svg(build_pairing(kind, n), LinearLayout.identity(n), options)
        path = assets / name
        path.write_text(svg, encoding="utf-8")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
