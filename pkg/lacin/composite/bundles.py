"""Cable accounting: two-level CIN hierarchies and HyperX rack deployments."""

from __future__ import annotations

import math
from dataclasses import dataclass

from lacin.composite.hyperx import HyperXFabric
from lacin.core.factors import is_isoport, link_count, one_factors
from lacin.core.pairing import PairingMatrix, PortId
from lacin.errors import InvalidSizeError, LacinError
from lacin.layout.linear import LinearLayout, wire_lengths


@dataclass(frozen=True)
class BundleReport:
    """A CIN of outer x inner switches split into `outer` partitions.

    Each pair of partitions is joined by one hose carrying a wire for every
    pair of their switches, i.e. inner^2 wires.
    """

    intra_partition_links: int
    inter_partition_links: int
    hose_count: int
    wires_per_hose: int

    @property
    def total_links(self) -> int:
        return self.intra_partition_links + self.inter_partition_links

    def to_dict(self) -> dict:
        return {
            "intraPartitionLinks": self.intra_partition_links,
            "interPartitionLinks": self.inter_partition_links,
            "hoseCount": self.hose_count,
            "wiresPerHose": self.wires_per_hose,
            "totalLinks": self.total_links,
        }


def hierarchical_bundle_report(outer_n: int, inner_n: int) -> BundleReport:
    if outer_n < 1 or inner_n < 1:
        raise InvalidSizeError(f"partition sizes must be positive, got ({outer_n}, {inner_n})")
    hoses = link_count(outer_n)
    wires = inner_n * inner_n
    return BundleReport(
        intra_partition_links=outer_n * link_count(inner_n),
        inter_partition_links=hoses * wires,
        hose_count=hoses,
        wires_per_hose=wires,
    )


def _column_wires(m: PairingMatrix) -> tuple[tuple[PortId, int], ...]:
    # Anisoport links change column on the way, so only isoport columns are counted.
    if not is_isoport(m):
        return ()
    return tuple((factor.port, len(factor.links)) for factor in one_factors(m))


@dataclass(frozen=True)
class PlanarReport:
    """Super-port and hose view of one dimension cabled between racks."""

    dimension: int
    super_ports_per_rack: int
    ports_per_super_port: int
    lines: int  # rows or columns of racks along this dimension
    hoses_per_line: int
    wires_per_hose: int
    hose_classes: tuple[tuple[PortId, int], ...]  # per line, hoses sharing a port colour

    @property
    def total_hoses(self) -> int:
        return self.lines * self.hoses_per_line

    def to_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "superPortsPerRack": self.super_ports_per_rack,
            "portsPerSuperPort": self.ports_per_super_port,
            "lines": self.lines,
            "hosesPerLine": self.hoses_per_line,
            "wiresPerHose": self.wires_per_hose,
            "totalHoses": self.total_hoses,
            "hoseClasses": [{"port": p, "hoses": c} for p, c in self.hose_classes],
        }


@dataclass(frozen=True)
class RackReport:
    """One rack stacks the switches of a `rack_dimension` line, one switch per chassis.

    Intra-rack links are shown two ways: per port column (an isoport column
    holds the N/2 links of its 1-factor) and per wire length under the
    linear stacking (N-w wires of length w).
    """

    rack_dimension: int
    switches_per_rack: int
    racks: int
    intra_rack_links: int
    column_wires: tuple[tuple[PortId, int], ...]
    length_histogram: dict[int, int]
    planar: tuple[PlanarReport, ...]

    def to_dict(self) -> dict:
        return {
            "rackDimension": self.rack_dimension,
            "switchesPerRack": self.switches_per_rack,
            "racks": self.racks,
            "intraRackLinks": self.intra_rack_links,
            "columnWires": [{"port": p, "wires": c} for p, c in self.column_wires],
            "lengthHistogram": {str(k): v for k, v in sorted(self.length_histogram.items())},
            "planar": [p.to_dict() for p in self.planar],
        }


def hyperx_rack_report(f: HyperXFabric, rack_dim: int) -> RackReport:
    if not 0 <= rack_dim < f.num_dims:
        raise LacinError(f"rack dimension {rack_dim} outside 0..{f.num_dims - 1}")
    rack_matrix = f.matrices[rack_dim]
    per_rack = f.sizes[rack_dim]
    racks = math.prod(size for d, size in enumerate(f.sizes) if d != rack_dim)

    planar: list[PlanarReport] = []
    for dim, matrix in enumerate(f.matrices):
        if dim == rack_dim:
            continue
        lines = racks // f.sizes[dim]
        planar.append(
            PlanarReport(
                dimension=dim,
                super_ports_per_rack=f.sizes[dim] - 1,
                ports_per_super_port=per_rack,
                lines=lines,
                hoses_per_line=matrix.link_count(),
                wires_per_hose=per_rack,
                hose_classes=_column_wires(matrix),
            )
        )

    return RackReport(
        rack_dimension=rack_dim,
        switches_per_rack=per_rack,
        racks=racks,
        intra_rack_links=rack_matrix.link_count(),
        column_wires=_column_wires(rack_matrix),
        length_histogram=wire_lengths(rack_matrix, LinearLayout.identity(per_rack)).histogram,
        planar=tuple(planar),
    )
