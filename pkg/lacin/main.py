"""Main entry point: generate | route | metrics | verify."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from lacin.composite.bundles import hierarchical_bundle_report, hyperx_rack_report
from lacin.composite.deadlock import cdg_is_acyclic
from lacin.composite.hyperx import (
    HyperXFabric,
    MultiDigitAddress,
    address_bits,
    fabric_stats,
    format_hops,
    pack_address,
    route_dor,
)
from lacin.config import (
    LacinConfig,
    OutputFormat,
    apply_overrides,
    load_config_file,
    parse_int_list,
)
from lacin.core.factors import endpoint_capacity, is_isoport, radix_required
from lacin.core.pairing import CinInstanceKind, PairingMatrix, build_pairing
from lacin.errors import AddressError, LacinError
from lacin.export import topology_file
from lacin.export.dot import to_dot
from lacin.layout.crossings import crossing_count
from lacin.layout.linear import (
    LinearLayout,
    isoport_total_length,
    oblique_wire_lengths,
    summary_row,
    wire_lengths,
)
from lacin.layout.svg import SvgOptions, render_svg
from lacin.routing.decision import EndpointAddress, Forward, deliver
from lacin.ui.report import print_route, print_verify
from lacin.verify import verify_sweep, verify_topology_file

log = logging.getLogger("lacin")

_COMMANDS = ("generate", "route", "metrics", "verify")


def _command(config: LacinConfig) -> str | None:
    return getattr(config, "_command", None)


def _args(config: LacinConfig) -> argparse.Namespace:
    return getattr(config, "_args", argparse.Namespace())


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--kind", type=str, default=None, help="swap|circle|xor, or one per HyperX dimension"
    )
    common.add_argument("--n", type=int, default=None, help="Switch count")
    common.add_argument("--hyperx", type=str, default=None, help="Dimension sizes: 16,16,16")
    common.add_argument("--edge-ports", type=int, default=None, help="Endpoints per switch")
    common.add_argument("--dim-order", type=str, default=None, help="Routing order: 0,1,2")
    common.add_argument("--topology", type=str, default=None, help="TopologyFile to load")
    common.add_argument("--debug", action="store_true", help="Debug logging")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lacin", description="Complete interconnection networks and their layouts"
    )
    commands = parser.add_subparsers(dest="command", required=True)
    common = _common_flags()

    generate = commands.add_parser("generate", parents=[common], help="Emit a topology")
    generate.add_argument("--format", choices=[f.value for f in OutputFormat], default=None)
    generate.add_argument("--output", type=str, default=None, help="File (stdout if absent)")
    generate.add_argument("--lanes", action="store_true", help="Draw lane sides in SVG")
    generate.add_argument("--highlight-port", type=int, default=None, help="SVG port column")

    route = commands.add_parser("route", parents=[common], help="Trace a route")
    route.add_argument("src", help="Source address: digits, comma-separated")
    route.add_argument("dst", help="Destination address: digits, comma-separated")
    route.add_argument("--packed", action="store_true", help="Also print packed addresses")

    metrics = commands.add_parser("metrics", parents=[common], help="Wiring and fabric report")
    metrics.add_argument("--rack-dim", type=int, default=None, help="HyperX dimension per rack")
    metrics.add_argument("--hierarchy", type=str, default=None, help="OUTER,INNER partitions")
    metrics.add_argument("--check-deadlock", action="store_true", help="Build the HyperX CDG")

    verify = commands.add_parser("verify", parents=[common], help="Run invariant sweeps")
    verify.add_argument("--kinds", type=str, default=None, help="swap,circle,xor")
    verify.add_argument("--n-min", type=int, default=None)
    verify.add_argument("--n-max", type=int, default=None)
    return parser


def parse_kinds(value: str | None) -> list[CinInstanceKind]:
    """'swap,xor' -> kinds in the given order; None selects every kind."""
    if not value:
        return list(CinInstanceKind)
    return [CinInstanceKind(k.strip().lower()) for k in value.split(",") if k.strip()]


def build_config(argv: list[str] | None = None) -> LacinConfig:
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.debug else logging.WARNING,
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
        datefmt="%H:%M:%S",
    )

    config = LacinConfig()

    # Load from config file
    config_path = config.data_dir / "config.toml"
    try:
        apply_overrides(config, load_config_file(config_path))
    except (ValueError, TypeError) as exc:
        parser.error(f"bad setting in {config_path}: {exc}")

    # Apply CLI overrides
    try:
        apply_overrides(
            config,
            {
                "kind": args.kind,
                "n": args.n,
                "edge_ports": args.edge_ports,
                "hyperx": args.hyperx,
                "dim_order": args.dim_order,
                "output_format": getattr(args, "format", None),
                "verify_min_n": getattr(args, "n_min", None),
                "verify_max_n": getattr(args, "n_max", None),
            },
        )
    except ValueError as exc:
        parser.error(str(exc))
    if getattr(args, "lanes", False):
        config.lanes = True

    if config.hyperx_kinds and len(config.hyperx_kinds) != len(config.hyperx):
        parser.error(
            f"--kind lists {len(config.hyperx_kinds)} kinds for {len(config.hyperx)} dimensions"
        )
    if args.command == "route" and args.packed and not config.hyperx:
        parser.error("--packed needs --hyperx")
    if args.command == "metrics" and args.rack_dim is not None and not config.hyperx:
        parser.error("--rack-dim needs --hyperx")
    if args.topology and config.hyperx:
        parser.error("--topology and --hyperx are exclusive")
    if args.command == "verify":
        try:
            args.kinds = parse_kinds(args.kinds)
        except ValueError as exc:
            parser.error(str(exc))

    config._command = args.command  # type: ignore[attr-defined]
    config._args = args  # type: ignore[attr-defined]
    return config


def _matrix(config: LacinConfig) -> PairingMatrix:
    topology = _args(config).topology
    if topology:
        return topology_file.load(Path(topology))
    return build_pairing(config.kind, config.n)


def _fabric(config: LacinConfig) -> HyperXFabric:
    edge_ports = config.resolved_edge_ports(config.hyperx[0])
    kinds = config.hyperx_kinds or (config.kind,) * len(config.hyperx)
    return HyperXFabric.build(list(zip(config.hyperx, kinds, strict=True)), edge_ports)


def _emit(text: str, output: str | None) -> None:
    if output:
        path = Path(output)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
        log.info("wrote %s", path)
    else:
        sys.stdout.write(text)


def _json(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _parse_digits(text: str) -> tuple[int, ...]:
    try:
        digits = parse_int_list(text)
    except ValueError:
        raise AddressError(f"address {text!r} is not a comma-separated digit tuple") from None
    if not digits:
        raise AddressError("empty address")
    return digits


def _run_generate(config: LacinConfig) -> int:
    args = _args(config)
    m = _matrix(config)
    if config.output_format is OutputFormat.DOT:
        text = to_dot(m)
    elif config.output_format is OutputFormat.SVG:
        kind = m.kind.value if m.kind is not None else "custom"
        options = SvgOptions(
            pitch=config.svg_pitch,
            port_pitch=config.svg_port_pitch,
            lanes=config.lanes,
            highlight_port=args.highlight_port,
            title=f"{kind} n={m.n}",
        )
        text = render_svg(m, LinearLayout.identity(m.n), options)
    else:
        text = topology_file.dumps(m)
    _emit(text, args.output)
    return 0


def _endpoint(text: str) -> EndpointAddress:
    digits = _parse_digits(text)
    if len(digits) > 2:
        raise AddressError(f"address {text!r} has more than switch,local digits")
    return EndpointAddress(switch=digits[0], local=digits[1] if len(digits) == 2 else 0)


def _run_route(config: LacinConfig) -> int:
    args = _args(config)
    if config.hyperx:
        f = _fabric(config)
        src = MultiDigitAddress(digits=_parse_digits(args.src))
        dst = MultiDigitAddress(digits=_parse_digits(args.dst))
        hops = route_dor(f, src, dst, config.dim_order)
        packed: list[str] = []
        if args.packed:
            width = address_bits(f)
            for name, address in (("src", src), ("dst", dst)):
                packed.append(f"{name} {pack_address(f, address):0{width}b}")
        print_route(format_hops(f, hops), packed)
        return 0

    m = _matrix(config)
    decisions = deliver(
        m, _endpoint(args.src), _endpoint(args.dst), config.resolved_edge_ports(m.n)
    )
    print_route(
        "; ".join(
            f"forward port {d.port}" if isinstance(d, Forward) else f"eject {d.port}"
            for d in decisions
        )
    )
    return 0


def matrix_metrics(m: PairingMatrix) -> dict:
    """Layout figures for one CIN stacked in its identity order."""
    layout = LinearLayout.identity(m.n)
    isoport = is_isoport(m)
    report: dict = {
        "kind": m.kind.value if m.kind is not None else None,
        "n": m.n,
        "links": m.link_count(),
        "isoport": isoport,
        "radix": radix_required(m.n),
        "endpoints": endpoint_capacity(m.n),
        "summary": summary_row(m).to_dict() if m.kind is not None else None,
    }
    reference = isoport_total_length(m.n)
    if isoport:
        lengths = wire_lengths(m, layout)
        plain = crossing_count(m, layout)
        laned = crossing_count(m, layout, use_lanes=True)
        report.update(
            totalWireLength=lengths.total,
            wireLengthHistogram=lengths.to_dict()["histogram"],
            wireLengthRatio=lengths.total / reference,
            crossings=plain.total,
            crossingsWithLanes=laned.total,
            crossingsPerFactor=plain.to_dict()["perFactor"],
        )
    else:
        # Oblique wires leave their column, so same-column crossings do not apply.
        total = oblique_wire_lengths(m, layout)
        report.update(
            totalWireLength=total,
            wireLengthRatio=total / reference,
            crossings=None,
            crossingsWithLanes=None,
        )
    return report


def fabric_metrics(
    f: HyperXFabric,
    check_deadlock: bool = False,
    dim_order: tuple[int, ...] | None = None,
) -> dict:
    report: dict = {
        "hyperx": list(f.sizes),
        "edgePorts": f.edge_ports,
        "fabric": fabric_stats(f).to_dict(),
        "dimensions": [
            {"label": f.dimension_label(dim), **matrix_metrics(matrix)}
            for dim, matrix in enumerate(f.matrices)
        ],
    }
    try:
        report["addressBits"] = address_bits(f)
    except AddressError:
        report["addressBits"] = None
    if check_deadlock:
        report["deadlockFree"] = cdg_is_acyclic(f, dim_order)
    return report


def _run_metrics(config: LacinConfig) -> int:
    args = _args(config)
    if config.hyperx:
        f = _fabric(config)
        report = fabric_metrics(f, args.check_deadlock, config.dim_order)
        if args.rack_dim is not None:
            report["rack"] = hyperx_rack_report(f, args.rack_dim).to_dict()
    else:
        report = matrix_metrics(_matrix(config))
    if args.hierarchy:
        try:
            outer_inner = parse_int_list(args.hierarchy)
        except ValueError:
            outer_inner = ()
        if len(outer_inner) != 2:
            raise LacinError(f"--hierarchy needs OUTER,INNER, got {args.hierarchy!r}")
        report["hierarchy"] = hierarchical_bundle_report(*outer_inner).to_dict()
    sys.stdout.write(_json(report))
    return 0


def _run_verify(config: LacinConfig) -> int:
    args = _args(config)
    if args.topology:
        results = verify_topology_file(Path(args.topology))
    else:
        results = verify_sweep(args.kinds, config.verify_min_n, config.verify_max_n)
    print_verify(results)
    failed = [r for r in results if not r.ok]
    for r in failed:
        print(f"lacin: {r.kind} n={r.n} {r.check} failed: {r.detail}", file=sys.stderr)
    return 1 if failed or not results else 0


_RUNNERS = {
    "generate": _run_generate,
    "route": _run_route,
    "metrics": _run_metrics,
    "verify": _run_verify,
}


def run(config: LacinConfig) -> int:
    """Execute the selected command; returns the process exit status."""
    command = _command(config)
    if command not in _COMMANDS:
        print(f"lacin: unknown command {command!r}", file=sys.stderr)
        return 2
    try:
        return _RUNNERS[command](config)
    except LacinError as exc:
        log.debug("%s failed", command, exc_info=True)
        print(f"lacin: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"lacin: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    config = build_config()
    sys.exit(run(config))


if __name__ == "__main__":
    main()
