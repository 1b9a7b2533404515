from __future__ import annotations

from lacin.core.pairing import CinInstanceKind, build_pairing
from lacin.layout.linear import LinearLayout
from lacin.layout.svg import SvgOptions, render_svg


def _render(kind: CinInstanceKind, n: int, options: SvgOptions | None = None) -> str:
    return render_svg(build_pairing(kind, n), LinearLayout.identity(n), options)


def test_one_wire_per_link() -> None:
    for kind in CinInstanceKind:
        assert _render(kind, 8).count('class="wire"') == 28
    assert _render(CinInstanceKind.CIRCLE, 2).count('class="wire"') == 1


def test_output_is_deterministic() -> None:
    options = SvgOptions(lanes=True, title="circle n=8")
    assert _render(CinInstanceKind.CIRCLE, 8, options) == _render(
        CinInstanceKind.CIRCLE, 8, options
    )


def test_document_is_svg_with_labels() -> None:
    svg = _render(CinInstanceKind.XOR, 4, SvgOptions(title="xor <4>"))
    assert svg.startswith("<?xml")
    assert "<svg " in svg
    assert svg.endswith("</svg>\n")
    assert svg.count('class="switch"') == 4
    assert "i=2" in svg
    assert "xor &lt;4&gt;" in svg


def test_lanes_flip_the_designated_wires() -> None:
    plain = _render(CinInstanceKind.CIRCLE, 8)
    laned = _render(CinInstanceKind.CIRCLE, 8, SvgOptions(lanes=True))
    assert plain != laned
    assert laned.count('class="wire"') == 28


def test_idle_ports_are_marked() -> None:
    svg = _render(CinInstanceKind.CIRCLE, 7)
    assert svg.count('class="idle"') == 7
    assert svg.count('class="wire"') == 21


def test_highlight_port_thickens_its_column() -> None:
    svg = _render(CinInstanceKind.CIRCLE, 8, SvgOptions(highlight_port=3))
    assert svg.count('stroke-width="2.0"') == 4
