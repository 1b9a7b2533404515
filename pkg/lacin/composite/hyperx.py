"""HyperX fabrics: one CIN per dimension, multi-digit addressing and DOR."""

from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from lacin.core.pairing import CinInstanceKind, PairingMatrix, PortId, build_pairing
from lacin.errors import AddressError, InvalidSizeError, LacinError
from lacin.routing.routers import route

log = logging.getLogger(__name__)

Coordinates = tuple[int, ...]
_AXIS_NAMES = "XYZ"


@dataclass(frozen=True)
class Dimension:
    size: int
    kind: CinInstanceKind


@dataclass(frozen=True)
class HyperXFabric:
    """dims[0] holds the most significant switch digit (Z in a 3D fabric)."""

    dims: tuple[Dimension, ...]
    edge_ports: int
    matrices: tuple[PairingMatrix, ...]

    @classmethod
    def build(
        cls,
        dims: Sequence[tuple[int, CinInstanceKind]],
        edge_ports: int,
    ) -> HyperXFabric:
        if not dims:
            raise InvalidSizeError("a HyperX fabric needs at least one dimension")
        if edge_ports < 1:
            raise InvalidSizeError(f"edge ports must be positive, got {edge_ports}")
        dimensions = tuple(Dimension(size=size, kind=kind) for size, kind in dims)
        matrices = tuple(build_pairing(d.kind, d.size) for d in dimensions)
        log.debug(
            "built hyperx %s with %d edge ports",
            "x".join(str(d.size) for d in dimensions),
            edge_ports,
        )
        return cls(dims=dimensions, edge_ports=edge_ports, matrices=matrices)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(d.size for d in self.dims)

    @property
    def num_dims(self) -> int:
        return len(self.dims)

    def switch_coordinates(self) -> Iterator[Coordinates]:
        return itertools.product(*(range(size) for size in self.sizes))

    def switch_index(self, coords: Coordinates) -> int:
        index = 0
        for digit, size in zip(coords, self.sizes):
            index = index * size + digit
        return index

    def neighbor(self, coords: Coordinates, dim: int, port: PortId) -> Coordinates:
        peer = self.matrices[dim].peer(coords[dim], port)
        if peer is None:
            raise AddressError(f"port {port} of dimension {dim} is idle at {coords}")
        return coords[:dim] + (peer.switch,) + coords[dim + 1 :]

    def dimension_label(self, dim: int) -> str:
        axis = self.num_dims - 1 - dim
        if self.num_dims <= len(_AXIS_NAMES):
            return _AXIS_NAMES[axis]
        return f"D{axis + 1}"


@dataclass(frozen=True)
class MultiDigitAddress:
    """Switch digits C_D..C_1 followed by the local endpoint digit C_0."""

    digits: tuple[int, ...]

    @property
    def switch(self) -> Coordinates:
        return self.digits[:-1]

    @property
    def local(self) -> int:
        return self.digits[-1]

    def validate(self, f: HyperXFabric) -> None:
        if len(self.digits) != f.num_dims + 1:
            raise AddressError(
                f"address {self.digits} needs {f.num_dims + 1} digits for this fabric"
            )
        for dim, (digit, size) in enumerate(zip(self.switch, f.sizes)):
            if not 0 <= digit < size:
                raise AddressError(f"digit {digit} of dimension {dim} outside 0..{size - 1}")
        if not 0 <= self.local < f.edge_ports:
            raise AddressError(f"local digit {self.local} outside 0..{f.edge_ports - 1}")


@dataclass(frozen=True)
class HopRecord:
    dimension: int | None  # None marks ejection through an edge port
    port: PortId

    @property
    def is_eject(self) -> bool:
        return self.dimension is None


def _resolve_order(f: HyperXFabric, dim_order: Sequence[int] | None) -> tuple[int, ...]:
    if dim_order is None:
        return tuple(range(f.num_dims))
    order = tuple(dim_order)
    if sorted(order) != list(range(f.num_dims)):
        raise LacinError(f"dimension order {order} is not a permutation of 0..{f.num_dims - 1}")
    return order


def route_dor(
    f: HyperXFabric,
    src: MultiDigitAddress,
    dst: MultiDigitAddress,
    dim_order: Sequence[int] | None = None,
) -> list[HopRecord]:
    """Correct one differing digit per dimension in order, then eject at C_0.

    Dimensions whose digits already agree are skipped.
    """
    src.validate(f)
    dst.validate(f)
    hops: list[HopRecord] = []
    current = src.switch
    for dim in _resolve_order(f, dim_order):
        if current[dim] == dst.switch[dim]:
            continue
        port = route(f.matrices[dim], current[dim], dst.switch[dim])
        hops.append(HopRecord(dimension=dim, port=port))
        current = f.neighbor(current, dim, port)
    hops.append(HopRecord(dimension=None, port=dst.local))
    return hops


def format_hops(f: HyperXFabric, hops: Sequence[HopRecord]) -> str:
    return "; ".join(
        f"eject {hop.port}" if hop.is_eject else f"{f.dimension_label(hop.dimension)}:{hop.port}"
        for hop in hops
    )


def global_port(f: HyperXFabric, dim: int, port: PortId) -> int:
    """Physical port number: edge ports first, then one block per dimension."""
    if not 0 <= dim < f.num_dims:
        raise LacinError(f"dimension {dim} outside 0..{f.num_dims - 1}")
    if not 0 <= port < f.matrices[dim].ports:
        raise AddressError(f"port {port} outside dimension {dim}")
    return f.edge_ports + sum(m.ports for m in f.matrices[:dim]) + port


@dataclass(frozen=True)
class FabricStats:
    switches: int
    endpoints: int
    radix: int
    network_links: int

    def to_dict(self) -> dict:
        return {
            "switches": self.switches,
            "endpoints": self.endpoints,
            "radix": self.radix,
            "networkLinks": self.network_links,
        }


def fabric_stats(f: HyperXFabric) -> FabricStats:
    switches = math.prod(f.sizes)
    network_ports = sum(size - 1 for size in f.sizes)
    return FabricStats(
        switches=switches,
        endpoints=switches * f.edge_ports,
        radix=f.edge_ports + network_ports,
        network_links=switches * network_ports // 2,
    )


def enumerate_links(f: HyperXFabric) -> Iterator[tuple[Coordinates, Coordinates, int, PortId]]:
    """Every physical link once as (switch, peer switch, dimension, port on switch)."""
    for dim, matrix in enumerate(f.matrices):
        others = [range(size) if d != dim else range(1) for d, size in enumerate(f.sizes)]
        for base in itertools.product(*others):
            for a, b in matrix.links():
                here = base[:dim] + (a.switch,) + base[dim + 1 :]
                there = base[:dim] + (b.switch,) + base[dim + 1 :]
                yield here, there, dim, a.port


def _digit_bits(size: int, what: str) -> int:
    if size < 1 or size & (size - 1):
        raise AddressError(f"{what} range {size} is not a power of two; cannot pack")
    return size.bit_length() - 1


def pack_address(f: HyperXFabric, address: MultiDigitAddress) -> int:
    """Concatenate the digits as bit fields, C_0 in the low bits."""
    address.validate(f)
    value = 0
    for digit, size in zip(address.switch, f.sizes):
        value = (value << _digit_bits(size, "dimension")) | digit
    return (value << _digit_bits(f.edge_ports, "edge port")) | address.local


def unpack_address(f: HyperXFabric, value: int) -> MultiDigitAddress:
    local_bits = _digit_bits(f.edge_ports, "edge port")
    local = value & ((1 << local_bits) - 1)
    value >>= local_bits
    digits: list[int] = []
    for size in reversed(f.sizes):
        bits = _digit_bits(size, "dimension")
        digits.append(value & ((1 << bits) - 1))
        value >>= bits
    if value:
        raise AddressError("packed address has bits beyond the fabric's digit fields")
    return MultiDigitAddress(digits=tuple(reversed(digits)) + (local,))


def address_bits(f: HyperXFabric) -> int:
    return sum(_digit_bits(size, "dimension") for size in f.sizes) + _digit_bits(
        f.edge_ports, "edge port"
    )
