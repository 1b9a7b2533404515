from __future__ import annotations

import pytest

from lacin.composite.bundles import hierarchical_bundle_report, hyperx_rack_report
from lacin.composite.hyperx import HyperXFabric
from lacin.core.pairing import CinInstanceKind
from lacin.errors import InvalidSizeError, LacinError


def test_four_by_four_hierarchy() -> None:
    report = hierarchical_bundle_report(4, 4)
    assert report.intra_partition_links == 24
    assert report.hose_count == 6
    assert report.wires_per_hose == 16
    assert report.inter_partition_links == 96
    assert report.total_links == 120


def test_hierarchy_totals_match_flat_cin() -> None:
    for outer, inner in [(2, 3), (8, 16), (5, 7)]:
        report = hierarchical_bundle_report(outer, inner)
        n = outer * inner
        assert report.total_links == n * (n - 1) // 2
    assert hierarchical_bundle_report(8, 16).hose_count == 28
    assert hierarchical_bundle_report(8, 16).wires_per_hose == 256


def test_hierarchy_sizes_must_be_positive() -> None:
    with pytest.raises(InvalidSizeError):
        hierarchical_bundle_report(0, 4)


def test_rack_report_for_16_cubed() -> None:
    f = HyperXFabric.build([(16, CinInstanceKind.CIRCLE)] * 3, edge_ports=16)
    report = hyperx_rack_report(f, rack_dim=0)
    assert report.switches_per_rack == 16
    assert report.racks == 256
    assert report.intra_rack_links == 120
    assert report.column_wires == tuple((port, 8) for port in range(15))
    assert report.length_histogram == {length: 16 - length for length in range(1, 16)}

    assert [p.dimension for p in report.planar] == [1, 2]
    for planar in report.planar:
        assert planar.super_ports_per_rack == 15
        assert planar.ports_per_super_port == 16
        assert planar.lines == 16
        assert planar.hoses_per_line == 120
        assert planar.wires_per_hose == 16
        assert planar.total_hoses == 1920
        assert planar.hose_classes == tuple((port, 8) for port in range(15))


def test_anisoport_racks_have_no_port_columns() -> None:
    f = HyperXFabric.build([(8, CinInstanceKind.SWAP), (4, CinInstanceKind.XOR)], edge_ports=2)
    report = hyperx_rack_report(f, rack_dim=0)
    assert report.column_wires == ()
    assert report.intra_rack_links == 28
    assert report.to_dict()["planar"][0]["hosesPerLine"] == 6


def test_rack_dimension_must_exist() -> None:
    f = HyperXFabric.build([(4, CinInstanceKind.XOR)] * 2, edge_ports=4)
    with pytest.raises(LacinError):
        hyperx_rack_report(f, rack_dim=2)


def test_single_partition_has_no_hoses() -> None:
    report = hierarchical_bundle_report(1, 9)
    assert report.hose_count == 0
    assert report.intra_partition_links == 36
