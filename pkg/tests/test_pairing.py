from __future__ import annotations

import pytest

from lacin.core.pairing import (
    CinInstanceKind,
    PairingMatrix,
    PortRef,
    build_pairing,
    validate_pairing,
)
from lacin.errors import InvalidSizeError, PairingViolation, UnsupportedSizeError


def _peers(m: PairingMatrix, switch: int) -> list[int | None]:
    return [ref.switch if ref is not None else None for ref in m.entries[switch]]


def test_circle_row_zero_for_eight_switches() -> None:
    m = build_pairing(CinInstanceKind.CIRCLE, 8)
    assert _peers(m, 0) == [7, 2, 4, 6, 1, 3, 5]
    assert all(ref.port == i for i, ref in enumerate(m.entries[0]))


def test_swap_uses_first_free_port_on_each_side() -> None:
    m = build_pairing(CinInstanceKind.SWAP, 4)
    assert m.entries[0] == (PortRef(1, 0), PortRef(2, 0), PortRef(3, 0))
    assert m.entries[3] == (PortRef(0, 2), PortRef(1, 2), PortRef(2, 2))


def test_xor_pairs_switch_with_port_plus_one() -> None:
    m = build_pairing(CinInstanceKind.XOR, 4)
    assert m.entries[1] == (PortRef(0, 0), PortRef(3, 1), PortRef(2, 2))


@pytest.mark.parametrize("kind", list(CinInstanceKind))
def test_eight_switches_have_28_links(kind: CinInstanceKind) -> None:
    m = build_pairing(kind, 8)
    assert m.link_count() == 28
    assert m.idle_ports() == []
    assert m.kind is kind


def test_links_list_lower_switch_first() -> None:
    m = build_pairing(CinInstanceKind.SWAP, 6)
    assert all(a.switch < b.switch for a, b in m.links())


def test_xor_rejects_non_power_of_two() -> None:
    with pytest.raises(UnsupportedSizeError):
        build_pairing(CinInstanceKind.XOR, 6)


@pytest.mark.parametrize("kind", list(CinInstanceKind))
def test_single_switch_is_invalid(kind: CinInstanceKind) -> None:
    with pytest.raises(InvalidSizeError):
        build_pairing(kind, 1)


def test_odd_circle_keeps_one_idle_port_per_switch() -> None:
    m = build_pairing(CinInstanceKind.CIRCLE, 7)
    assert m.ports == 7
    assert m.link_count() == 21
    assert m.idle_ports() == [PortRef(s, s) for s in range(7)]


def test_neighbor_port_inverts_the_matrix() -> None:
    m = build_pairing(CinInstanceKind.CIRCLE, 8)
    for a in range(8):
        for b in range(8):
            if a != b:
                assert m.peer(a, m.neighbor_port(a, b)).switch == b


def test_broken_involution_is_named() -> None:
    rows = (
        (PortRef(1, 0), PortRef(2, 0)),
        (PortRef(0, 0), PortRef(2, 1)),
        (PortRef(1, 1), PortRef(1, 1)),
    )
    with pytest.raises(PairingViolation) as info:
        PairingMatrix(n=3, entries=rows)
    assert info.value.check == "involution"


def test_self_loop_is_named() -> None:
    rows = ((PortRef(0, 0),), (PortRef(0, 0),))
    with pytest.raises(PairingViolation) as info:
        PairingMatrix(n=2, entries=rows)
    assert info.value.check == "self-loop"


def test_even_matrix_may_not_carry_idle_ports() -> None:
    rows = tuple((None,) * 2 for _ in range(2))
    with pytest.raises(PairingViolation) as info:
        PairingMatrix(n=2, entries=rows)
    assert info.value.check == "shape"


def test_validate_accepts_every_constructed_matrix() -> None:
    for kind in CinInstanceKind:
        for n in (2, 4, 8, 16):
            validate_pairing(build_pairing(kind, n))


def test_documented_entries() -> None:
    circle = build_pairing(CinInstanceKind.CIRCLE, 8)
    assert circle.entries[7][3] == PortRef(3, 3)
    assert circle.entries[3][3] == PortRef(7, 3)
    assert build_pairing(CinInstanceKind.XOR, 8).entries[3][3] == PortRef(7, 3)
    swap = build_pairing(CinInstanceKind.SWAP, 2)
    assert swap.entries == ((PortRef(1, 0),), (PortRef(0, 0),))
