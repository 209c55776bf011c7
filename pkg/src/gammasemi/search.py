"""Bounded counterexample search for the three open problems."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .enumeration import EnumSpec, Enumeration, to_structure
from .gsgp import dumps, loads
from .theoremcheck import check

PROBLEM_IDS = {1: "Problem1", 2: "Problem2", 3: "Problem3"}


@dataclass
class SearchOutcome:
    problem: int
    max_m: int
    max_g: int
    nodes: int
    instances: int
    budget_exhausted: bool = False
    counterexample: Optional[str] = None  # GSGP text
    witness: dict = field(default_factory=dict)
    size: Optional[tuple] = None

    @property
    def found(self) -> bool:
        return self.counterexample is not None

    def replays(self) -> bool:
        """Reload the counterexample from text and re-run the implication."""
        if not self.found:
            return True
        return check(loads(self.counterexample), PROBLEM_IDS[self.problem]).violated

    def render(self) -> str:
        head = f"problem {self.problem}: "
        if self.found:
            m, g = self.size
            lines = [head + f"counterexample at m={m} g={g} after {self.nodes} nodes, {self.instances} instances"]
            lines.append("witness " + " ".join(f"{k}={v}" for k, v in self.witness.items()))
            lines.append(self.counterexample.rstrip("\n"))
            return "\n".join(lines) + "\n"
        status = "budget exhausted" if self.budget_exhausted else "exhausted bounds"
        return head + f"{status} max_m={self.max_m} max_g={self.max_g} nodes={self.nodes} instances={self.instances}\n"

    def as_dict(self) -> dict:
        return {
            "problem": self.problem,
            "status": "counterexample" if self.found else ("budget" if self.budget_exhausted else "exhausted"),
            "max_m": self.max_m,
            "max_g": self.max_g,
            "nodes": self.nodes,
            "instances": self.instances,
            "size": list(self.size) if self.size else None,
            "witness": self.witness,
            "counterexample": self.counterexample,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True) + "\n"


def search_counterexample(problem: int, max_m: int, max_g: int, budget: Optional[int] = None,
                          up_to_iso: bool = False) -> SearchOutcome:
    """Walk the enumeration in increasing ``(m, g)`` and return the first
    structure violating the problem's implication, or an exhausted marker."""
    if problem not in PROBLEM_IDS:
        raise ValueError("problem must be 1, 2 or 3")
    if max_m < 1 or max_g < 1:
        raise ValueError("bounds must be at least 1")
    stmt = PROBLEM_IDS[problem]
    out = SearchOutcome(problem, max_m, max_g, 0, 0)
    for m in range(1, max_m + 1):
        for g in range(1, max_g + 1):
            remaining = None if budget is None else budget - out.nodes
            spec = EnumSpec(m, g, up_to_iso=up_to_iso, budget=remaining)
            stream = Enumeration(spec, workers=1)
            try:
                for flat in stream.flats():
                    out.instances += 1
                    M = to_structure(flat, m, g)
                    report = check(M, stmt)
                    if report.violated:
                        out.counterexample = dumps(M)
                        out.witness = dict(report.witness)
                        out.size = (m, g)
                        return out
            finally:
                out.nodes += stream.nodes
            if stream.budget_exhausted:
                out.budget_exhausted = True
                return out
    return out
