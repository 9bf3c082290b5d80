"""Verification reports shared by the identity and congruence checkers."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

MAX_RECORDED_COUNTEREXAMPLES = 5


@dataclass
class VerificationReport:
    """Outcome of one verification: an identity, a congruence claim, or
    an adjudication between candidate statements."""

    name: str
    params: dict = field(default_factory=dict)
    status: str = "pass"          # "pass" | "fail" | "skipped"
    terms_checked: int = 0
    counterexamples: list = field(default_factory=list)  # (index, found, expected)
    progression: Optional[tuple[int, int]] = None        # (step, offset)
    modulus: Optional[int] = None                        # None = exact equality
    reason: str = ""                                     # only for "skipped"
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def describe(self) -> str:
        bits = [self.name]
        if self.params:
            bits.append("[" + ", ".join(f"{k}={v}" for k, v in sorted(self.params.items())) + "]")
        if self.progression is not None:
            a, b = self.progression
            bits.append(f"({a}n+{b})")
        bits.append("exact" if self.modulus is None else f"mod {self.modulus}")
        return " ".join(bits)

    def to_json_dict(self) -> dict:
        d = {
            "name": self.name,
            "params": {k: self.params[k] for k in sorted(self.params)},
            "status": self.status,
            "terms_checked": self.terms_checked,
            "counterexamples": [list(c) for c in self.counterexamples],
            "modulus": self.modulus,
            "seconds": round(self.seconds, 3),
        }
        if self.progression is not None:
            d["progression"] = {"step": self.progression[0], "offset": self.progression[1]}
        if self.reason:
            d["reason"] = self.reason
        if self.detail:
            d["detail"] = self.detail
        return d


def reports_to_json(reports: list[VerificationReport]) -> str:
    """Canonical JSON for a report list: stable key order, no spaces,
    so that parse + re-serialize is byte-identical."""
    return json.dumps([r.to_json_dict() for r in reports],
                      sort_keys=True, separators=(",", ":"))


def compare_coefficients(lhs, rhs, terms: int, modulus: Optional[int]):
    """Coefficientwise comparison helper.

    Returns (counterexamples, checked) where counterexamples holds at
    most MAX_RECORDED_COUNTEREXAMPLES (index, found, expected) triples
    and checked is the number of indices compared.
    """
    bad = []
    total_bad = 0
    for i in range(terms):
        a, b = lhs[i], rhs[i]
        differs = (a - b) % modulus != 0 if modulus is not None else a != b
        if differs:
            total_bad += 1
            if len(bad) < MAX_RECORDED_COUNTEREXAMPLES:
                if modulus is not None:
                    bad.append((i, a % modulus, b % modulus))
                else:
                    bad.append((i, a, b))
    return bad, terms, total_bad
