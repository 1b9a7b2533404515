"""Terminal output using rich: verification tables and routing traces."""

from __future__ import annotations

from collections.abc import Sequence

from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from lacin.verify import CheckResult


def _status(ok: bool) -> Text:
    return Text("pass", "green") if ok else Text("FAIL", "bold red")


def _group(results: Sequence[CheckResult]) -> dict[tuple[str, int], list[CheckResult]]:
    groups: dict[tuple[str, int], list[CheckResult]] = {}
    for result in results:
        groups.setdefault((result.kind, result.n), []).append(result)
    return groups


def verify_table(results: Sequence[CheckResult]) -> Table:
    """One row per (kind, n); failing checks are spelled out."""
    table = Table(title="lacin verify", title_justify="left", header_style="bold")
    table.add_column("kind", style="cyan")
    table.add_column("n", justify="right")
    table.add_column("checks", justify="right")
    table.add_column("status")
    table.add_column("failures", overflow="fold")

    for (kind, n), group in _group(results).items():
        failed = [r for r in group if not r.ok]
        failures = Text()
        for i, result in enumerate(failed):
            if i > 0:
                failures.append("\n")
            failures.append(result.check, "bold")
            if result.detail:
                failures.append(f": {result.detail}", "dim")
        table.add_row(kind, str(n), str(len(group)), _status(not failed), failures)
    return table


def verify_summary(results: Sequence[CheckResult]) -> Panel:
    failed = sum(1 for r in results if not r.ok)
    text = Text()
    text.append(f"{len(results)} checks", "bold white")
    text.append("  ")
    if failed:
        text.append(f"{failed} failed", "red")
    else:
        text.append("all passed", "green")
    return Panel(text, height=3)


def print_verify(results: Sequence[CheckResult], console: Console | None = None) -> None:
    console = console or Console()
    console.print(verify_table(results))
    console.print(verify_summary(results))


def print_route(line: str, packed: Sequence[str] = (), console: Console | None = None) -> None:
    """Plain hop line on stdout; packed addresses follow, one per line."""
    console = console or Console(highlight=False, soft_wrap=True, emoji=False)
    console.print(line, markup=False)
    for entry in packed:
        console.print(entry, markup=False)
