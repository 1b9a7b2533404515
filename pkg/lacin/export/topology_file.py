"""TopologyFile: a pairing matrix as JSON, each link listed once."""

from __future__ import annotations

import json
from pathlib import Path

from lacin.core.pairing import CinInstanceKind, Entry, PairingMatrix, PortRef, build_pairing
from lacin.errors import LacinError, PairingViolation, TopologyFileError

VERSION = 1


def _links_to_list(m: PairingMatrix) -> list[list[int]]:
    return [[a.switch, a.port, b.switch, b.port] for a, b in m.links()]


def to_dict(m: PairingMatrix) -> dict:
    return {
        "version": VERSION,
        "kind": m.kind.value if m.kind is not None else None,
        "n": m.n,
        "entries": _links_to_list(m),
        "idlePorts": [[ref.switch, ref.port] for ref in m.idle_ports()],
    }


def _parse_kind(value: object) -> CinInstanceKind | None:
    if value is None:
        return None
    try:
        return CinInstanceKind(value)
    except ValueError:
        raise TopologyFileError(f"unknown instance kind {value!r}") from None


def _int_row(row: object, width: int, what: str) -> list[int]:
    if (
        not isinstance(row, list)
        or len(row) != width
        or not all(isinstance(v, int) and not isinstance(v, bool) for v in row)
    ):
        raise TopologyFileError(f"{what} must be a list of {width} integers, got {row!r}")
    return row


def _check_kind(kind: CinInstanceKind, n: int, entries: tuple[tuple[Entry, ...], ...]) -> None:
    # route() dispatches on the label
    try:
        expected = build_pairing(kind, n).entries
    except LacinError as exc:
        raise PairingViolation("kind", f"{kind.value} cannot label n={n}: {exc}") from None
    if entries != expected:
        s = next(s for s in range(n) if entries[s] != expected[s])
        raise PairingViolation("kind", f"switch {s} is not wired as {kind.value} n={n}")


def from_dict(d: dict) -> PairingMatrix:
    """Rebuild and validate a matrix; PairingViolation names the broken invariant."""
    if not isinstance(d, dict):
        raise TopologyFileError("topology file must hold a JSON object")
    if d.get("version") != VERSION:
        raise TopologyFileError(f"unsupported topology file version {d.get('version')!r}")
    n = d.get("n")
    if not isinstance(n, int) or n < 2:
        raise TopologyFileError(f"n must be an integer >= 2, got {n!r}")
    kind = _parse_kind(d.get("kind"))
    links = [_int_row(row, 4, "link") for row in d.get("entries", [])]
    idle = [_int_row(row, 2, "idle port") for row in d.get("idlePorts", [])]

    width = n if idle else n - 1
    rows: list[list[Entry]] = [[None] * width for _ in range(n)]
    assigned: set[tuple[int, int]] = set()

    def claim(switch: int, port: int) -> None:
        if not (0 <= switch < n and 0 <= port < width):
            raise PairingViolation("shape", f"port ({switch},{port}) is out of range")
        if (switch, port) in assigned:
            raise PairingViolation("involution", f"port ({switch},{port}) appears in two links")
        assigned.add((switch, port))

    for s, i, t, j in links:
        claim(s, i)
        claim(t, j)
        rows[s][i] = PortRef(t, j)
        rows[t][j] = PortRef(s, i)
    for s, i in idle:
        claim(s, i)
    if len(assigned) != n * width:
        missing = next(
            (s, i) for s in range(n) for i in range(width) if (s, i) not in assigned
        )
        raise PairingViolation("completeness", f"port {missing} is neither linked nor idle")

    entries = tuple(tuple(row) for row in rows)
    m = PairingMatrix(n=n, entries=entries)
    if kind is None:
        return m
    _check_kind(kind, n, entries)
    return PairingMatrix(n=n, entries=entries, kind=kind)


def dumps(m: PairingMatrix) -> str:
    return json.dumps(to_dict(m), indent=2, sort_keys=True) + "\n"


def loads(text: str) -> PairingMatrix:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TopologyFileError(f"malformed JSON: {exc}") from exc
    return from_dict(data)


def save(m: PairingMatrix, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(m))


def load(path: Path) -> PairingMatrix:
    return loads(path.read_text())
