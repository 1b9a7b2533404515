"""Port-pairing matrices for complete interconnection networks (CINs)."""

from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

import numpy as np

from lacin.errors import InvalidSizeError, PairingViolation, UnsupportedSizeError

log = logging.getLogger(__name__)

SwitchId = int
PortId = int


class CinInstanceKind(Enum):
    SWAP = "swap"
    CIRCLE = "circle"
    XOR = "xor"


@dataclass(frozen=True, order=True)
class PortRef:
    switch: SwitchId
    port: PortId


Entry = PortRef | None


@dataclass(frozen=True)
class PairingMatrix:
    """Row S, column i names the peer of port i on switch S; None marks an idle port.

    Rows normally hold N-1 network ports. An odd-N Circle keeps the N ports of
    the (N+1)-switch construction, exactly one of them idle per switch.
    Construction validates every invariant, so a PairingMatrix is always sound.
    """

    n: int
    entries: tuple[tuple[Entry, ...], ...]
    kind: CinInstanceKind | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        validate_pairing(self)

    @property
    def ports(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def peer(self, switch: SwitchId, port: PortId) -> PortRef | None:
        return self.entries[switch][port]

    def links(self) -> Iterator[tuple[PortRef, PortRef]]:
        """Yield every physical link once, lower switch first."""
        for s, row in enumerate(self.entries):
            for i, ref in enumerate(row):
                if ref is not None and s < ref.switch:
                    yield PortRef(s, i), ref

    def link_count(self) -> int:
        return sum(1 for _ in self.links())

    def idle_ports(self) -> list[PortRef]:
        return [
            PortRef(s, i)
            for s, row in enumerate(self.entries)
            for i, ref in enumerate(row)
            if ref is None
        ]

    @cached_property
    def _port_towards(self) -> np.ndarray:
        # table[a, b] = port of a whose peer is b; -1 on the diagonal
        table = np.full((self.n, self.n), -1, dtype=np.int64)
        for s, row in enumerate(self.entries):
            for i, ref in enumerate(row):
                if ref is not None:
                    table[s, ref.switch] = i
        return table

    def neighbor_port(self, a: SwitchId, b: SwitchId) -> PortId:
        return int(self._port_towards[a, b])


def _require_size(n: int) -> None:
    if n < 2:
        raise InvalidSizeError(f"a CIN needs at least 2 switches, got {n}")


def _is_power_of_two(n: int) -> bool:
    return n > 0 and (n & (n - 1)) == 0


def validate_pairing(m: PairingMatrix) -> None:
    """Raise PairingViolation naming the first broken invariant."""
    n = m.n
    if len(m.entries) != n:
        raise PairingViolation("shape", f"expected {n} rows, got {len(m.entries)}")
    width = m.ports
    if width not in (n - 1, n) or any(len(row) != width for row in m.entries):
        raise PairingViolation("shape", f"rows must all hold {n - 1} ports")
    if width == n and n % 2 == 0:
        raise PairingViolation("shape", "only odd-sized matrices may carry an idle column")

    for s, row in enumerate(m.entries):
        idle = sum(1 for ref in row if ref is None)
        expected_idle = width - (n - 1)
        if idle != expected_idle:
            raise PairingViolation(
                "idle", f"switch {s} has {idle} idle ports, expected {expected_idle}"
            )
        seen: set[int] = set()
        for i, ref in enumerate(row):
            if ref is None:
                continue
            if not (0 <= ref.switch < n and 0 <= ref.port < width):
                raise PairingViolation("shape", f"P[{s},{i}] = {ref} is out of range")
            if ref.switch == s:
                raise PairingViolation("self-loop", f"P[{s},{i}] points back to switch {s}")
            back = m.entries[ref.switch][ref.port]
            if back != PortRef(s, i):
                raise PairingViolation(
                    "involution",
                    f"P[{s},{i}] = ({ref.switch},{ref.port}) but "
                    f"P[{ref.switch},{ref.port}] = {_format_entry(back)}",
                )
            if ref.switch in seen:
                raise PairingViolation(
                    "completeness", f"switches {s} and {ref.switch} are linked twice"
                )
            seen.add(ref.switch)


def _format_entry(ref: Entry) -> str:
    return "idle" if ref is None else f"({ref.switch},{ref.port})"


def _swap_entries(n: int) -> list[list[Entry]]:
    # First free port on each side: S<=i pairs with (i+1, S), S>i with (i, S-1).
    return [
        [PortRef(i + 1, s) if s <= i else PortRef(i, s - 1) for i in range(n - 1)]
        for s in range(n)
    ]


def _circle_entries(n: int) -> list[list[Entry]]:
    """Round-robin 1-factorization; n must be even."""
    last = n - 1
    rows: list[list[Entry]] = [[None] * (n - 1) for _ in range(n)]
    for i in range(n - 1):
        for s in range(n):
            if s == last:
                peer = i
            elif s == i:
                peer = last
            else:
                peer = (2 * i - s) % last
            rows[s][i] = PortRef(peer, i)
    return rows


def _xor_entries(n: int) -> list[list[Entry]]:
    return [[PortRef(s ^ (i + 1), i) for i in range(n - 1)] for s in range(n)]


def build_pairing(kind: CinInstanceKind, n: int) -> PairingMatrix:
    """Build and validate the port-pairing matrix of a CIN instance."""
    _require_size(n)
    if kind is CinInstanceKind.SWAP:
        rows = _swap_entries(n)
    elif kind is CinInstanceKind.XOR:
        if not _is_power_of_two(n):
            raise UnsupportedSizeError(f"xor needs a power-of-two switch count, got {n}")
        rows = _xor_entries(n)
    elif n % 2 == 0:
        rows = _circle_entries(n)
    else:
        # Drop the last switch of the even construction; its peers keep an idle port.
        rows = [
            [ref if ref is not None and ref.switch != n else None for ref in row]
            for row in _circle_entries(n + 1)[:n]
        ]

    matrix = PairingMatrix(n=n, entries=tuple(tuple(row) for row in rows), kind=kind)
    log.debug("built %s pairing for n=%d (%d ports/switch)", kind.value, n, matrix.ports)
    return matrix
