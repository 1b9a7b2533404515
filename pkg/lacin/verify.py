"""Invariant sweeps over CIN instances: construction, routing, factors and layout."""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from pathlib import Path

from lacin.core.factors import is_isoport, one_factors
from lacin.core.pairing import CinInstanceKind, PairingMatrix, build_pairing
from lacin.errors import LacinError, PairingViolation
from lacin.export import topology_file
from lacin.layout.crossings import crossing_count
from lacin.layout.linear import LinearLayout, isoport_total_length, wire_lengths
from lacin.routing.decision import EndpointAddress, Forward, deliver
from lacin.routing.routers import route, route_oracle

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckResult:
    kind: str
    n: int
    check: str
    ok: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "check": self.check,
            "ok": self.ok,
            "detail": self.detail,
        }


def sweep_sizes(kind: CinInstanceKind, n_min: int, n_max: int) -> list[int]:
    sizes = range(max(n_min, 2), n_max + 1)
    if kind is CinInstanceKind.XOR:
        return [n for n in sizes if n & (n - 1) == 0]
    return list(sizes)


def _check_isoport(m: PairingMatrix) -> str | None:
    if m.kind is None:
        return None
    expected = m.kind is not CinInstanceKind.SWAP or m.n < 3
    if is_isoport(m) != expected:
        return f"is_isoport returned {not expected}"
    return None


def _check_oracle(m: PairingMatrix) -> str | None:
    for a in range(m.n):
        for b in range(m.n):
            if a == b:
                continue
            port = route(m, a, b)
            if port != route_oracle(m, a, b):
                return f"route({a},{b}) = {port}, oracle says {route_oracle(m, a, b)}"
            if m.peer(a, port).switch != b:
                return f"port {port} of switch {a} does not reach {b}"
    return None


def _check_delivery(m: PairingMatrix) -> str | None:
    for a in range(m.n):
        for b in range(m.n):
            decisions = deliver(m, EndpointAddress(a, 0), EndpointAddress(b, 0))
            forwards = sum(isinstance(d, Forward) for d in decisions)
            if forwards != (a != b):
                return f"{a}->{b} took {forwards} network hops"
    return None


def _check_factors(m: PairingMatrix) -> str | None:
    if m.n % 2 or not is_isoport(m):
        return None
    factors = one_factors(m)
    if len(factors) != m.n - 1:
        return f"{len(factors)} factors, expected {m.n - 1}"
    for factor in factors:
        if not factor.is_perfect_matching(m.n):
            return f"factor {factor.port} is not a perfect matching"
    pairs = [link for factor in factors for link in factor.links]
    if len(pairs) != len(set(pairs)) or len(pairs) != m.n * (m.n - 1) // 2:
        return "factors do not partition the complete graph"
    return None


def _check_wire_length(m: PairingMatrix) -> str | None:
    if m.n % 2 or not is_isoport(m):
        return None
    report = wire_lengths(m, LinearLayout.identity(m.n))
    if report.total != isoport_total_length(m.n):
        return f"total {report.total}, expected {isoport_total_length(m.n)}"
    for w in range(1, m.n):
        if report.histogram.get(m.n - w) != w:
            return f"{report.histogram.get(m.n - w)} wires of length {m.n - w}, expected {w}"
    return None


def _check_crossings(m: PairingMatrix) -> str | None:
    if m.kind is not CinInstanceKind.CIRCLE or m.n % 2:
        return None
    layout = LinearLayout.identity(m.n)
    plain = crossing_count(m, layout)
    for port, count in plain.per_factor:
        expected = port if port < m.n // 2 else m.n - 2 - port
        if count != expected:
            return f"factor {port} has {count} crossings, expected {expected}"
    laned = crossing_count(m, layout, use_lanes=True)
    if laned.total != 0:
        return f"{laned.total} crossings left with lanes"
    return None


_CHECKS: tuple[tuple[str, Callable[[PairingMatrix], str | None]], ...] = (
    ("isoport", _check_isoport),
    ("oracle", _check_oracle),
    ("delivery", _check_delivery),
    ("factors", _check_factors),
    ("wire-length", _check_wire_length),
    ("crossings", _check_crossings),
)


def verify_matrix(m: PairingMatrix) -> list[CheckResult]:
    kind = m.kind.value if m.kind is not None else "custom"
    results: list[CheckResult] = []
    for name, check in _CHECKS:
        try:
            failure = check(m)
        except LacinError as exc:
            failure = str(exc)
        if failure is not None:
            log.warning("check failed: kind=%s n=%d %s: %s", kind, m.n, name, failure)
        results.append(CheckResult(kind, m.n, name, failure is None, failure or ""))
    return results


def verify_sweep(
    kinds: Iterable[CinInstanceKind],
    n_min: int,
    n_max: int,
) -> list[CheckResult]:
    results: list[CheckResult] = []
    for kind in kinds:
        for n in sweep_sizes(kind, n_min, n_max):
            try:
                m = build_pairing(kind, n)
            except LacinError as exc:
                log.warning("construction failed: kind=%s n=%d: %s", kind.value, n, exc)
                results.append(CheckResult(kind.value, n, "construction", False, str(exc)))
                continue
            results.append(CheckResult(kind.value, n, "construction", True))
            results.extend(verify_matrix(m))
    return results


def verify_topology_file(path: Path) -> list[CheckResult]:
    try:
        m = topology_file.load(path)
    except PairingViolation as exc:
        return [CheckResult("file", 0, exc.check, False, exc.detail)]
    return [CheckResult(r.kind, r.n, r.check, r.ok, r.detail) for r in verify_matrix(m)]
