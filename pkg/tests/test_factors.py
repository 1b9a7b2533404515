from __future__ import annotations

import pytest

from lacin.core.factors import (
    endpoint_capacity,
    is_isoport,
    link_count,
    links_per_endpoint,
    one_factors,
    radix_required,
    switches_per_endpoint,
)
from lacin.core.pairing import CinInstanceKind, build_pairing
from lacin.errors import InvalidSizeError, NotIsoportError


def test_isoport_classification() -> None:
    assert is_isoport(build_pairing(CinInstanceKind.CIRCLE, 8))
    assert is_isoport(build_pairing(CinInstanceKind.XOR, 8))
    assert is_isoport(build_pairing(CinInstanceKind.CIRCLE, 7))
    assert is_isoport(build_pairing(CinInstanceKind.SWAP, 2))
    assert not is_isoport(build_pairing(CinInstanceKind.SWAP, 3))
    assert not is_isoport(build_pairing(CinInstanceKind.SWAP, 8))


@pytest.mark.parametrize("kind", [CinInstanceKind.CIRCLE, CinInstanceKind.XOR])
def test_factors_partition_complete_graph(kind: CinInstanceKind) -> None:
    m = build_pairing(kind, 16)
    factors = one_factors(m)
    assert len(factors) == 15
    assert all(f.is_perfect_matching(16) and not f.partial for f in factors)
    links = [link for f in factors for link in f.links]
    assert len(set(links)) == link_count(16)


def test_odd_circle_factors_are_partial() -> None:
    factors = one_factors(build_pairing(CinInstanceKind.CIRCLE, 5))
    assert len(factors) == 5
    assert all(f.partial and len(f.links) == 2 for f in factors)
    # port i sits idle on switch i
    assert all(i not in f.switches() for i, f in enumerate(factors))


def test_anisoport_has_no_factors() -> None:
    with pytest.raises(NotIsoportError):
        one_factors(build_pairing(CinInstanceKind.SWAP, 8))


def test_cost_formulas() -> None:
    assert link_count(8) == 28
    assert radix_required(8) == 15
    assert endpoint_capacity(8) == 64
    assert links_per_endpoint(8) == pytest.approx(28 / 64)
    assert switches_per_endpoint(8) == pytest.approx(1 / 8)
    assert link_count(1) == 0


def test_links_per_endpoint_approaches_half_from_below() -> None:
    values = [links_per_endpoint(n) for n in (2, 4, 16, 256, 4096)]
    assert values == sorted(values)
    assert all(v < 0.5 for v in values)
    assert values[-1] > 0.499


def test_non_positive_sizes_rejected() -> None:
    with pytest.raises(InvalidSizeError):
        link_count(0)
    with pytest.raises(InvalidSizeError):
        radix_required(-3)


def test_documented_factors() -> None:
    circle = one_factors(build_pairing(CinInstanceKind.CIRCLE, 8))
    assert all(len(f.links) == 4 for f in circle)
    assert set(circle[3].links) == {(3, 7), (0, 6), (1, 5), (2, 4)}
    xor = one_factors(build_pairing(CinInstanceKind.XOR, 8))
    assert set(xor[0].links) == {(0, 1), (2, 3), (4, 5), (6, 7)}
