"""Runtime configuration for lacin."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from lacin.core.pairing import CinInstanceKind


class OutputFormat(Enum):
    JSON = "json"
    DOT = "dot"
    SVG = "svg"


@dataclass
class LacinConfig:
    # Topology
    kind: CinInstanceKind = CinInstanceKind.CIRCLE
    n: int = 8
    edge_ports: int | None = None  # None: N edge ports, the well-dimensioned CIN

    # HyperX
    hyperx: tuple[int, ...] = ()
    hyperx_kinds: tuple[CinInstanceKind, ...] = ()  # empty: `kind` in every dimension
    dim_order: tuple[int, ...] | None = None  # None: highest digit first

    # Layout / rendering
    lanes: bool = False
    output_format: OutputFormat = OutputFormat.JSON
    svg_pitch: int = 24
    svg_port_pitch: int = 18

    # Verification sweep
    verify_min_n: int = 2
    verify_max_n: int = 32

    # Paths
    data_dir: Path = field(default_factory=lambda: Path.home() / ".lacin")

    def resolved_edge_ports(self, size: int) -> int:
        return self.edge_ports if self.edge_ports is not None else size


def load_config_file(path: Path) -> dict:
    """Load config overrides from a TOML file. Returns empty dict if not found."""
    if not path.exists():
        return {}
    import tomllib
    return tomllib.loads(path.read_text())


def apply_overrides(config: LacinConfig, overrides: dict) -> LacinConfig:
    """Apply dict overrides (from TOML or CLI) onto a config."""
    for key, value in overrides.items():
        if value is None:
            continue
        if key == "kind":
            kinds = parse_kind_list(value)
            if len(kinds) == 1:
                config.kind, config.hyperx_kinds = kinds[0], ()
            else:
                config.hyperx_kinds = kinds
        elif key == "output_format" and isinstance(value, str):
            config.output_format = OutputFormat(value.lower().strip())
        elif key in ("hyperx", "dim_order"):
            setattr(config, key, parse_int_list(value))
        elif key == "data_dir" and isinstance(value, str):
            config.data_dir = Path(value)
        elif hasattr(config, key):
            setattr(config, key, value)
    return config


def parse_kind_list(value: str | list[str]) -> tuple[CinInstanceKind, ...]:
    """'xor,circle,circle' (or a TOML array) -> one kind per entry."""
    parts = value.split(",") if isinstance(value, str) else value
    kinds = tuple(CinInstanceKind(str(p).lower().strip()) for p in parts if str(p).strip())
    if not kinds:
        raise ValueError("no instance kind given")
    return kinds


def parse_int_list(value: str | list[int] | tuple[int, ...]) -> tuple[int, ...]:
    """Parse '16,16,16' (or '16x16x16', or a TOML array) into a tuple."""
    if isinstance(value, list | tuple):
        return tuple(int(v) for v in value)
    parts = value.lower().replace("x", ",").split(",")
    return tuple(int(p) for p in parts if p.strip())
