"""Step-wise all-to-all exchange built from the 1-factors of an isoport CIN."""

from __future__ import annotations

from dataclasses import dataclass

from lacin.core.factors import Link, OneFactor, one_factors
from lacin.core.pairing import PairingMatrix, SwitchId


@dataclass(frozen=True)
class ExchangeSchedule:
    """Step w pairs every switch with its neighbour on port w.

    Within a step no switch appears twice, so all exchanges of a step can run
    concurrently without sharing a link or a port.
    """

    steps: tuple[OneFactor, ...]

    def __len__(self) -> int:
        return len(self.steps)

    def pairs(self) -> list[Link]:
        return [link for step in self.steps for link in step.links]

    def partner(self, step: int, switch: SwitchId) -> SwitchId | None:
        """Peer of `switch` in the given step; None when it sits the step out."""
        for a, b in self.steps[step].links:
            if a == switch:
                return b
            if b == switch:
                return a
        return None

    def to_dict(self) -> dict:
        return {"steps": [step.to_dict() for step in self.steps]}


def all_to_all_schedule(m: PairingMatrix) -> ExchangeSchedule:
    return ExchangeSchedule(steps=tuple(one_factors(m)))
