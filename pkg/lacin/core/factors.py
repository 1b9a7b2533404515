"""Graph-level queries: isoport classification, 1-factors and sizing formulas."""

from __future__ import annotations

from dataclasses import dataclass

from lacin.core.pairing import PairingMatrix, PortId, SwitchId
from lacin.errors import InvalidSizeError, NotIsoportError

Link = tuple[SwitchId, SwitchId]


@dataclass(frozen=True)
class OneFactor:
    """Links that use port `port` on both ends.

    `partial` is set for odd-sized networks, where a port column cannot
    form a perfect matching and one switch leaves that port idle.
    """

    port: PortId
    links: tuple[Link, ...]
    partial: bool = False

    def switches(self) -> list[SwitchId]:
        return sorted(s for link in self.links for s in link)

    def is_perfect_matching(self, n: int) -> bool:
        return self.switches() == list(range(n))

    def to_dict(self) -> dict:
        return {
            "port": self.port,
            "links": [list(link) for link in self.links],
            "partial": self.partial,
        }


def is_isoport(m: PairingMatrix) -> bool:
    return all(
        ref.port == i
        for row in m.entries
        for i, ref in enumerate(row)
        if ref is not None
    )


def one_factors(m: PairingMatrix) -> list[OneFactor]:
    """Split an isoport matrix into its per-port-index matchings."""
    if not is_isoport(m):
        raise NotIsoportError("1-factors are only defined for isoport matrices")
    partial = m.n % 2 == 1
    factors: list[OneFactor] = []
    for port in range(m.ports):
        links = tuple(
            (s, ref.switch)
            for s, row in enumerate(m.entries)
            for ref in [row[port]]
            if ref is not None and s < ref.switch
        )
        factors.append(OneFactor(port=port, links=links, partial=partial))
    return factors


def _require_positive(n: int) -> None:
    if n < 1:
        raise InvalidSizeError(f"switch count must be positive, got {n}")


def link_count(n: int) -> int:
    _require_positive(n)
    return n * (n - 1) // 2


def radix_required(n: int) -> int:
    """N edge ports plus N-1 network ports."""
    _require_positive(n)
    return 2 * n - 1


def endpoint_capacity(n: int) -> int:
    _require_positive(n)
    return n * n


def links_per_endpoint(n: int) -> float:
    # Approaches 1/2 from below as N grows.
    return link_count(n) / endpoint_capacity(n)


def switches_per_endpoint(n: int) -> float:
    return n / endpoint_capacity(n)
