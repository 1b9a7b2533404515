from __future__ import annotations

import pytest

from lacin.composite.hyperx import (
    HopRecord,
    HyperXFabric,
    MultiDigitAddress,
    address_bits,
    enumerate_links,
    fabric_stats,
    format_hops,
    global_port,
    pack_address,
    route_dor,
    unpack_address,
)
from lacin.core.pairing import CinInstanceKind
from lacin.errors import AddressError, InvalidSizeError, LacinError, UnsupportedSizeError

XOR = CinInstanceKind.XOR
CIRCLE = CinInstanceKind.CIRCLE


def _cube(kind: CinInstanceKind = XOR, size: int = 16, edge: int = 16) -> HyperXFabric:
    return HyperXFabric.build([(size, kind)] * 3, edge_ports=edge)


def _addr(*digits: int) -> MultiDigitAddress:
    return MultiDigitAddress(digits=digits)


def test_fabric_stats_for_16_cubed() -> None:
    stats = fabric_stats(_cube())
    assert (stats.switches, stats.endpoints, stats.radix, stats.network_links) == (
        4096,
        65536,
        61,
        92160,
    )


def test_fabric_stats_small_cases() -> None:
    line = fabric_stats(HyperXFabric.build([(8, CIRCLE)], edge_ports=8))
    assert (line.switches, line.endpoints, line.radix, line.network_links) == (8, 64, 15, 28)
    square = fabric_stats(HyperXFabric.build([(2, XOR), (2, XOR)], edge_ports=1))
    assert (square.switches, square.endpoints, square.radix, square.network_links) == (
        4,
        4,
        3,
        4,
    )


def test_enumerated_links_match_stats() -> None:
    f = HyperXFabric.build([(4, CIRCLE), (3, CIRCLE), (2, XOR)], edge_ports=2)
    links = list(enumerate_links(f))
    assert len(links) == fabric_stats(f).network_links
    unordered = {frozenset((a, b)) for a, b, _, _ in links}
    assert len(unordered) == len(links)
    assert all(sum(x != y for x, y in zip(a, b)) == 1 for a, b, _, _ in links)


def test_build_rejects_bad_dimensions() -> None:
    with pytest.raises(InvalidSizeError):
        HyperXFabric.build([], edge_ports=4)
    with pytest.raises(InvalidSizeError):
        HyperXFabric.build([(4, XOR)], edge_ports=0)
    with pytest.raises(UnsupportedSizeError):
        HyperXFabric.build([(4, XOR), (6, XOR)], edge_ports=4)


def test_xor_dor_single_dimension() -> None:
    f = _cube()
    hops = route_dor(f, _addr(0, 0, 0, 0), _addr(5, 0, 0, 0))
    assert hops == [HopRecord(dimension=0, port=4), HopRecord(dimension=None, port=0)]
    assert format_hops(f, hops) == "Z:4; eject 0"


def test_dor_corrects_every_differing_digit_in_order() -> None:
    f = _cube()
    hops = route_dor(f, _addr(1, 2, 3, 0), _addr(1, 7, 0, 9))
    assert [h.dimension for h in hops] == [1, 2, None]
    assert format_hops(f, hops) == "Y:4; X:2; eject 9"


def test_same_switch_only_ejects() -> None:
    f = _cube(CIRCLE, size=5, edge=4)
    assert route_dor(f, _addr(1, 2, 3, 0), _addr(1, 2, 3, 3)) == [HopRecord(None, 3)]


def test_custom_dimension_order() -> None:
    f = _cube()
    hops = route_dor(f, _addr(0, 0, 0, 0), _addr(1, 1, 1, 0), dim_order=(2, 1, 0))
    assert [h.dimension for h in hops] == [2, 1, 0, None]
    with pytest.raises(LacinError):
        route_dor(f, _addr(0, 0, 0, 0), _addr(1, 1, 1, 0), dim_order=(0, 0, 1))


def test_dor_path_lands_on_destination() -> None:
    f = HyperXFabric.build([(6, CIRCLE), (4, XOR), (5, CinInstanceKind.SWAP)], edge_ports=3)
    src, dst = _addr(5, 0, 4, 1), _addr(2, 3, 1, 2)
    current = src.switch
    for hop in route_dor(f, src, dst):
        if hop.is_eject:
            break
        current = f.neighbor(current, hop.dimension, hop.port)
    assert current == dst.switch


def test_invalid_addresses() -> None:
    f = _cube(edge=4)
    with pytest.raises(AddressError):
        route_dor(f, _addr(0, 0, 0), _addr(1, 0, 0, 0))
    with pytest.raises(AddressError):
        route_dor(f, _addr(0, 0, 16, 0), _addr(1, 0, 0, 0))
    with pytest.raises(AddressError):
        route_dor(f, _addr(0, 0, 0, 0), _addr(1, 0, 0, 4))


def test_dimension_labels() -> None:
    f = _cube(size=2, edge=1)
    assert [f.dimension_label(d) for d in range(3)] == ["Z", "Y", "X"]
    wide = HyperXFabric.build([(2, XOR)] * 4, edge_ports=1)
    assert [wide.dimension_label(d) for d in range(4)] == ["D4", "D3", "D2", "D1"]


def test_global_ports_follow_edge_block() -> None:
    f = _cube()
    assert global_port(f, 0, 0) == 16
    assert global_port(f, 1, 0) == 31
    assert global_port(f, 2, 14) == 60
    with pytest.raises(AddressError):
        global_port(f, 0, 15)


def test_packed_address_for_16_cubed() -> None:
    f = _cube()
    assert address_bits(f) == 16
    value = pack_address(f, _addr(1, 2, 3, 4))
    assert value == 0x1234
    assert unpack_address(f, value) == _addr(1, 2, 3, 4)


def test_packing_needs_power_of_two_digits() -> None:
    f = HyperXFabric.build([(6, CIRCLE)], edge_ports=4)
    with pytest.raises(AddressError):
        pack_address(f, _addr(1, 1))
    with pytest.raises(AddressError):
        unpack_address(_cube(), 1 << 16)
