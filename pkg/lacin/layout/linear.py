"""Linear arrangement of switches (LACIN) and wire-length accounting."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from lacin.core.factors import Link, is_isoport
from lacin.core.pairing import CinInstanceKind, PairingMatrix, PortId, SwitchId
from lacin.errors import InvalidSizeError, LacinError
from lacin.routing.routers import ROUTING_COST


class LaneSide(Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class LinearLayout:
    """positions[switch] is the slot of that switch on the line.

    With lanes on, each port column sends one designated link down its left
    lane and everything else down the right lane. The designated link is the
    one touching the switch in the last slot unless `left_links` names another.
    """

    positions: tuple[int, ...]
    left_links: tuple[tuple[PortId, Link], ...] = ()

    def __post_init__(self) -> None:
        if sorted(self.positions) != list(range(len(self.positions))):
            raise LacinError(f"positions {self.positions} are not a permutation")

    @classmethod
    def identity(cls, n: int) -> LinearLayout:
        return cls(positions=tuple(range(n)))

    @classmethod
    def from_order(cls, order: list[SwitchId]) -> LinearLayout:
        """Build from switches listed in slot order."""
        if sorted(order) != list(range(len(order))):
            raise LacinError(f"order {order} does not list every switch exactly once")
        positions = [0] * len(order)
        for slot, switch in enumerate(order):
            positions[switch] = slot
        return cls(positions=tuple(positions))

    @property
    def n(self) -> int:
        return len(self.positions)

    def slot(self, switch: SwitchId) -> int:
        return self.positions[switch]

    def span(self, link: Link) -> tuple[int, int]:
        a, b = self.slot(link[0]), self.slot(link[1])
        return (a, b) if a < b else (b, a)

    def lane_link(self, m: PairingMatrix, port: PortId) -> Link | None:
        for override_port, link in self.left_links:
            if override_port == port:
                return _normalise(link)
        last = self.positions.index(self.n - 1)
        ref = m.peer(last, port)
        if ref is None:
            return None
        return _normalise((last, ref.switch))

    def side(self, m: PairingMatrix, port: PortId, link: Link) -> LaneSide:
        return LaneSide.LEFT if _normalise(link) == self.lane_link(m, port) else LaneSide.RIGHT


def _normalise(link: Link) -> Link:
    a, b = link
    return (a, b) if a < b else (b, a)


def check_layout(m: PairingMatrix, layout: LinearLayout) -> None:
    if layout.n != m.n:
        raise LacinError(f"layout places {layout.n} switches, matrix has {m.n}")


@dataclass(frozen=True)
class WireLengthReport:
    histogram: dict[int, int]  # length -> wire count
    total: int

    def to_dict(self) -> dict:
        return {
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "total": self.total,
        }


def wire_lengths(m: PairingMatrix, layout: LinearLayout) -> WireLengthReport:
    """Vertical run of every link, in inter-switch pitches."""
    check_layout(m, layout)
    positions = np.asarray(layout.positions, dtype=np.int64)
    pairs = np.array([(a.switch, b.switch) for a, b in m.links()], dtype=np.int64)
    if pairs.size == 0:
        return WireLengthReport(histogram={}, total=0)
    lengths = np.abs(positions[pairs[:, 0]] - positions[pairs[:, 1]])
    values, counts = np.unique(lengths, return_counts=True)
    return WireLengthReport(
        histogram={int(v): int(c) for v, c in zip(values, counts)},
        total=int(lengths.sum()),
    )


def isoport_total_length(n: int) -> int:
    """w wires of length N-w for 1 <= w <= N-1."""
    return (n**3 - n) // 6


@dataclass(frozen=True)
class SwapLength:
    euclidean_total: float
    ratio_to_iso: float

    def to_dict(self) -> dict:
        return {"euclideanTotal": self.euclidean_total, "ratioToIso": self.ratio_to_iso}


def swap_wire_lengths(n: int) -> SwapLength:
    """Swap links spanning k switches also run k-1 ports sideways.

    Port pitch equals switch pitch, so each link measures sqrt(k^2 + (k-1)^2)
    and N-k links share each span k.
    """
    if n < 2:
        raise InvalidSizeError(f"a CIN needs at least 2 switches, got {n}")
    k = np.arange(1, n, dtype=np.float64)
    total = float(np.sum((n - k) * np.hypot(k, k - 1)))
    return SwapLength(euclidean_total=total, ratio_to_iso=total / isoport_total_length(n))


def oblique_wire_lengths(m: PairingMatrix, layout: LinearLayout) -> float:
    """Euclidean total of every link, moving |dslot| down and |dport| across."""
    check_layout(m, layout)
    rows = np.array(
        [
            (layout.slot(a.switch), a.port, layout.slot(b.switch), b.port)
            for a, b in m.links()
        ],
        dtype=np.float64,
    )
    if rows.size == 0:
        return 0.0
    return float(np.sum(np.hypot(rows[:, 0] - rows[:, 2], rows[:, 1] - rows[:, 3])))


@dataclass(frozen=True)
class LayoutSummary:
    kind: CinInstanceKind
    isoport: bool
    sizes: str
    wire_length_factor: float
    routing_cost: int

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "isoport": self.isoport,
            "sizes": self.sizes,
            "wireLengthFactor": self.wire_length_factor,
            "routingCost": self.routing_cost,
        }


def summary_row(m: PairingMatrix) -> LayoutSummary:
    """Asymptotic properties of a 1D layout of this instance."""
    if m.kind is None:
        raise LacinError("summary rows need a matrix built from a known instance kind")
    isoport = is_isoport(m)
    return LayoutSummary(
        kind=m.kind,
        isoport=isoport,
        sizes="N=2^n" if m.kind is CinInstanceKind.XOR else "any",
        wire_length_factor=1.0 if isoport else math.sqrt(2.0),
        routing_cost=ROUTING_COST[m.kind],
    )
