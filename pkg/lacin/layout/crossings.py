"""Same-column wire crossings of an isoport LACIN."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from lacin.core.factors import one_factors
from lacin.core.pairing import PairingMatrix, PortId
from lacin.layout.linear import LaneSide, LinearLayout, check_layout


@dataclass(frozen=True)
class CrossingReport:
    per_factor: tuple[tuple[PortId, int], ...]
    total: int

    def to_dict(self) -> dict:
        return {
            "perFactor": [{"port": port, "crossings": count} for port, count in self.per_factor],
            "total": self.total,
        }


def _interleaving_pairs(lo: np.ndarray, hi: np.ndarray, lane: np.ndarray) -> int:
    # a < c < b < d; nested intervals ride different offsets and do not cross
    crosses = (
        (lo[:, None] < lo[None, :])
        & (lo[None, :] < hi[:, None])
        & (hi[:, None] < hi[None, :])
        & (lane[:, None] == lane[None, :])
    )
    return int(np.count_nonzero(crosses))


def crossing_count(
    m: PairingMatrix,
    layout: LinearLayout,
    use_lanes: bool = False,
) -> CrossingReport:
    """Count crossings per port column.

    Links in different columns never cross, so only pairs sharing a port
    index are compared. With lanes, wires on opposite sides cannot cross.
    """
    check_layout(m, layout)
    per_factor: list[tuple[PortId, int]] = []
    for factor in one_factors(m):
        if len(factor.links) < 2:
            per_factor.append((factor.port, 0))
            continue
        spans = np.array([layout.span(link) for link in factor.links], dtype=np.int64)
        if use_lanes:
            lane = np.array(
                [layout.side(m, factor.port, link) is LaneSide.LEFT for link in factor.links]
            )
        else:
            lane = np.zeros(len(factor.links), dtype=bool)
        per_factor.append((factor.port, _interleaving_pairs(spans[:, 0], spans[:, 1], lane)))
    return CrossingReport(
        per_factor=tuple(per_factor),
        total=sum(count for _, count in per_factor),
    )
