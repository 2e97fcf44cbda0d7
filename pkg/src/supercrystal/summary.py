"""Decomposition summaries shared by the crystal search and the closed-form generators."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .roots import Weight


@dataclass
class DecompositionSummary:
    """Component lowest weights (with repetition) and per-weight multiplicities.

    Everything at weights with omega_0 coefficient <= ``complete_below`` is exact.
    """

    summands: list
    cap: int
    complete_below: int
    multiplicities: dict = field(default_factory=dict)

    def __post_init__(self):
        self.summands = sorted(Weight(w) for w in self.summands)

    def summand_counter(self) -> Counter:
        return Counter(w for w in self.summands if w.n0 <= self.complete_below)

    def to_json(self) -> dict:
        counts = Counter(self.summands)
        return {
            "cap": self.cap,
            "complete_below": self.complete_below,
            "components": [
                {"weight": w.to_json(), "multiplicity": m} for w, m in sorted(counts.items())
            ],
            "weight_multiplicities": [
                {"weight": w.to_json(), "multiplicity": m}
                for w, m in sorted(self.multiplicities.items())
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "DecompositionSummary":
        summands = []
        for item in data["components"]:
            summands.extend([Weight.from_json(item["weight"])] * item["multiplicity"])
        mults = {
            Weight.from_json(item["weight"]): item["multiplicity"]
            for item in data.get("weight_multiplicities", [])
        }
        return cls(summands, data["cap"], data["complete_below"], mults)
