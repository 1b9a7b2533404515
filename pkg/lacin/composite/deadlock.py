"""Channel dependency graphs for dimension-ordered routing."""

from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Iterator, Sequence

import networkx as nx

from lacin.composite.hyperx import (
    Coordinates,
    HopRecord,
    HyperXFabric,
    MultiDigitAddress,
    route_dor,
)
from lacin.errors import InvalidSizeError

log = logging.getLogger(__name__)

# One buffer per port: a channel is a directed link, named by its source end.
Channel = tuple[Coordinates, int, int]

MAX_CDG_SWITCHES = 4096


def _channels(f: HyperXFabric, start: Coordinates, hops: list[HopRecord]) -> list[Channel]:
    channels: list[Channel] = []
    current = start
    for hop in hops:
        if hop.dimension is None:
            break
        channels.append((current, hop.dimension, hop.port))
        current = f.neighbor(current, hop.dimension, hop.port)
    return channels


def _two_digit_destinations(f: HyperXFabric, src: Coordinates) -> Iterator[Coordinates]:
    for d, e in itertools.combinations(range(f.num_dims), 2):
        for a in range(f.sizes[d]):
            if a == src[d]:
                continue
            for b in range(f.sizes[e]):
                if b == src[e]:
                    continue
                dst = list(src)
                dst[d], dst[e] = a, b
                yield tuple(dst)


def channel_dependency_graph(
    f: HyperXFabric,
    dim_orders: Sequence[Sequence[int] | None] = (None,),
) -> nx.DiGraph:
    """Edge c1 -> c2 when some route holds c1 and next requests c2.

    Each dimension's router only looks at that dimension's digits, so every
    consecutive pair of hops on a DOR path is itself the full DOR path between
    two switches differing in exactly two digits. Enumerating those pairs
    yields every dependency of the all-pairs traffic pattern.
    Several orders may be given to model a mixture of routing functions.
    """
    switches = math.prod(f.sizes)
    if switches > MAX_CDG_SWITCHES:
        raise InvalidSizeError(
            f"{switches} switches exceed the explicit CDG limit of {MAX_CDG_SWITCHES}"
        )
    graph = nx.DiGraph()
    for src in f.switch_coordinates():
        for dim, matrix in enumerate(f.matrices):
            for port in range(matrix.ports):
                if matrix.peer(src[dim], port) is not None:
                    graph.add_node((src, dim, port))

    for order in dim_orders:
        for src in f.switch_coordinates():
            src_address = MultiDigitAddress(digits=src + (0,))
            for dst in _two_digit_destinations(f, src):
                hops = route_dor(f, src_address, MultiDigitAddress(digits=dst + (0,)), order)
                graph.add_edges_from(itertools.pairwise(_channels(f, src, hops)))
    log.debug(
        "cdg for %s: %d channels, %d dependencies",
        "x".join(map(str, f.sizes)),
        graph.number_of_nodes(),
        graph.number_of_edges(),
    )
    return graph


def cdg_is_acyclic(f: HyperXFabric, dim_order: Sequence[int] | None = None) -> bool:
    return nx.is_directed_acyclic_graph(channel_dependency_graph(f, (dim_order,)))


def find_dependency_cycle(
    f: HyperXFabric,
    dim_orders: Sequence[Sequence[int] | None] = (None,),
) -> list[tuple[Channel, Channel]] | None:
    """One cycle of waiting channels, or None when the routing is deadlock-free."""
    try:
        return list(nx.find_cycle(channel_dependency_graph(f, dim_orders)))
    except nx.NetworkXNoCycle:
        return None
