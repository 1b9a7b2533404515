"""Table-free minimal routing: pick the port of switch A that reaches switch B."""

from __future__ import annotations

from lacin.core.pairing import CinInstanceKind, PairingMatrix, PortId, SwitchId
from lacin.errors import AddressError, SameSwitchError

# Extra adders/comparators each router needs on top of the XOR router.
ROUTING_COST: dict[CinInstanceKind, int] = {
    CinInstanceKind.XOR: 0,
    CinInstanceKind.SWAP: 1,
    CinInstanceKind.CIRCLE: 5,
}


def _check_pair(a: SwitchId, b: SwitchId, n: int | None = None) -> None:
    if n is not None and not (0 <= a < n and 0 <= b < n):
        raise AddressError(f"switches ({a}, {b}) outside 0..{n - 1}")
    if a < 0 or b < 0:
        raise AddressError(f"negative switch id in ({a}, {b})")
    if a == b:
        raise SameSwitchError(f"source and destination are both switch {a}")


def route_oracle(m: PairingMatrix, a: SwitchId, b: SwitchId) -> PortId:
    """Invert the pairing matrix; every closed-form router must agree with this."""
    _check_pair(a, b, m.n)
    return m.neighbor_port(a, b)


def route_xor(a: SwitchId, b: SwitchId) -> PortId:
    _check_pair(a, b)
    return (a ^ b) - 1


def route_circle(n: int, a: SwitchId, b: SwitchId) -> PortId:
    """Circle routing for even N. Odd sizes route on the N+1 construction."""
    _check_pair(a, b, n)
    if n % 2 == 1:
        n += 1
    last = n - 1
    t = a + b
    if t == last:
        return 0
    if b == last:
        return a
    if a == last:
        return b
    if t % 2 == 0:
        return t // 2
    if t < last:
        return (t + last) // 2
    return (t - last) // 2


def route_swap(n: int, a: SwitchId, b: SwitchId) -> PortId:
    """Swap routing derived from its pairing rule.

    P[S,i] pairs P[i+1,S] for S <= i, so a lower source reaches B through
    port B-1 and a higher source through port B.
    """
    _check_pair(a, b, n)
    return b - 1 if a < b else b


def route_swap_as_stated(a: SwitchId, b: SwitchId) -> PortId:
    """The textual Swap rule (B if A <= B else B+1), one port off the pairing rule.

    Kept only to document the discrepancy; never used for forwarding.
    """
    _check_pair(a, b)
    return b if a <= b else b + 1


def route(m: PairingMatrix, a: SwitchId, b: SwitchId) -> PortId:
    """Dispatch to the closed-form router matching how `m` was built."""
    if m.kind is CinInstanceKind.XOR:
        _check_pair(a, b, m.n)
        return route_xor(a, b)
    if m.kind is CinInstanceKind.CIRCLE:
        return route_circle(m.n, a, b)
    if m.kind is CinInstanceKind.SWAP:
        return route_swap(m.n, a, b)
    return route_oracle(m, a, b)
