from __future__ import annotations

import json

from rich.console import Console

from lacin.core.pairing import CinInstanceKind, PairingMatrix, build_pairing
from lacin.export import topology_file
from lacin.ui.report import print_verify, verify_table
from lacin.verify import (
    CheckResult,
    sweep_sizes,
    verify_matrix,
    verify_sweep,
    verify_topology_file,
)


def test_full_sweep_passes() -> None:
    results = verify_sweep(list(CinInstanceKind), 2, 32)
    failures = [r for r in results if not r.ok]
    assert failures == []
    assert {r.check for r in results} == {
        "construction",
        "isoport",
        "oracle",
        "delivery",
        "factors",
        "wire-length",
        "crossings",
    }


def test_xor_sweep_covers_powers_of_two() -> None:
    assert sweep_sizes(CinInstanceKind.XOR, 4, 32) == [4, 8, 16, 32]
    results = verify_sweep([CinInstanceKind.XOR], 4, 32)
    assert sorted({r.n for r in results}) == [4, 8, 16, 32]
    assert all(r.ok for r in results)


def test_custom_matrix_is_checked_without_kind_rules() -> None:
    built = build_pairing(CinInstanceKind.XOR, 8)
    results = verify_matrix(PairingMatrix(n=8, entries=built.entries))
    assert all(r.ok and r.kind == "custom" for r in results)


def test_corrupted_file_names_involution(tmp_path) -> None:
    data = topology_file.to_dict(build_pairing(CinInstanceKind.CIRCLE, 8))
    data["entries"][1][:2] = data["entries"][0][:2]
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(data))

    results = verify_topology_file(path)
    assert len(results) == 1
    assert results[0].check == "involution"
    assert not results[0].ok


def test_good_file_verifies(tmp_path) -> None:
    path = tmp_path / "circle.json"
    topology_file.save(build_pairing(CinInstanceKind.CIRCLE, 10), path)
    results = verify_topology_file(path)
    assert results and all(r.ok for r in results)
    assert results[0].to_dict()["kind"] == "circle"


def test_report_table_groups_by_instance() -> None:
    results = verify_sweep([CinInstanceKind.SWAP], 2, 4)
    broken = CheckResult("swap", 5, "oracle", False, "route(0,1) = 2")
    table = verify_table([*results, broken])
    assert table.row_count == 4

    console = Console(record=True, width=120)
    print_verify([*results, broken], console=console)
    text = console.export_text()
    assert "FAIL" in text
    assert "route(0,1) = 2" in text
    assert "1 failed" in text


def test_mislabelled_file_names_kind(tmp_path) -> None:
    data = topology_file.to_dict(build_pairing(CinInstanceKind.CIRCLE, 4))
    data["kind"] = "xor"
    path = tmp_path / "mislabelled.json"
    path.write_text(json.dumps(data))

    results = verify_topology_file(path)
    assert [(r.check, r.ok) for r in results] == [("kind", False)]
