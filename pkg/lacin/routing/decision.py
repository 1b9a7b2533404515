"""Per-switch forwarding decisions for two-digit endpoint addresses."""

from __future__ import annotations

from dataclasses import dataclass

from lacin.core.pairing import PairingMatrix, PortId, SwitchId
from lacin.errors import AddressError, RoutingError
from lacin.routing.routers import route


@dataclass(frozen=True)
class EndpointAddress:
    switch: SwitchId  # C1
    local: int  # C0, the edge port on that switch


@dataclass(frozen=True)
class Eject:
    port: PortId


@dataclass(frozen=True)
class Forward:
    port: PortId


RoutingDecision = Eject | Forward


def _check_address(m: PairingMatrix, address: EndpointAddress, edge_ports: int) -> None:
    if not 0 <= address.switch < m.n:
        raise AddressError(f"switch digit {address.switch} outside 0..{m.n - 1}")
    if not 0 <= address.local < edge_ports:
        raise AddressError(f"local digit {address.local} outside 0..{edge_ports - 1}")


def decide(
    m: PairingMatrix,
    current: SwitchId,
    dst: EndpointAddress,
    edge_ports: int | None = None,
) -> RoutingDecision:
    """Eject through edge port C0 at the destination switch, otherwise forward.

    edge_ports defaults to N, the well-dimensioned CIN.
    """
    if not 0 <= current < m.n:
        raise AddressError(f"current switch {current} outside 0..{m.n - 1}")
    _check_address(m, dst, m.n if edge_ports is None else edge_ports)
    if current == dst.switch:
        return Eject(dst.local)
    return Forward(route(m, current, dst.switch))


def deliver(
    m: PairingMatrix,
    src: EndpointAddress,
    dst: EndpointAddress,
    edge_ports: int | None = None,
) -> list[RoutingDecision]:
    """Walk a packet from src to ejection, one decision per visited switch."""
    _check_address(m, src, m.n if edge_ports is None else edge_ports)
    decisions: list[RoutingDecision] = []
    current = src.switch
    # Minimal paths in a CIN are at most one network hop.
    for _ in range(2):
        decision = decide(m, current, dst, edge_ports)
        decisions.append(decision)
        if isinstance(decision, Eject):
            return decisions
        peer = m.peer(current, decision.port)
        if peer is None:
            raise AddressError(f"port {decision.port} of switch {current} is idle")
        current = peer.switch
    raise RoutingError(f"packet for switch {dst.switch} not ejected after one hop")
