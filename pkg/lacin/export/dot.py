"""Graphviz DOT export with switch ports carried as edge attributes."""

from __future__ import annotations

from lacin.core.pairing import PairingMatrix


def to_dot(m: PairingMatrix, name: str = "cin") -> str:
    """Undirected graph, one edge per link.

    DOT has no switch-port notion, so each edge carries `ports="i:j"` plus
    tail/head labels with the port used at each end.
    """
    kind = m.kind.value if m.kind is not None else "custom"
    lines = [
        f"graph {name} {{",
        f'  label="{kind} n={m.n}";',
        "  node [shape=box];",
    ]
    idle_by_switch = {ref.switch: ref.port for ref in m.idle_ports()}
    for s in range(m.n):
        if s in idle_by_switch:
            lines.append(f'  s{s} [label="{s}", idle="{idle_by_switch[s]}"];')
        else:
            lines.append(f'  s{s} [label="{s}"];')
    for a, b in m.links():
        lines.append(
            f'  s{a.switch} -- s{b.switch} [ports="{a.port}:{b.port}", '
            f'taillabel="{a.port}", headlabel="{b.port}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
