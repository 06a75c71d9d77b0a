"""Structured result of a criterion check."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

INCONCLUSIVE = "inconclusive"


@dataclass
class Verdict:
    """Outcome of one check.

    ``conclusion`` is True, False or ``"inconclusive"``; it is always
    inconclusive when ``applicable`` is False.  ``direct`` holds the
    answer of an independent direct computation when one was made, and
    ``consistent`` is False only if that direct answer contradicts what the
    criterion promises (a bug trap; the CLI maps it to exit code 4).
    """

    criterion: str
    applicable: bool
    conclusion: Any
    witnesses: list = field(default_factory=list)
    bounds: dict = field(default_factory=dict)
    inputs: dict = field(default_factory=dict)
    direct: Any = None
    consistent: bool = True
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.applicable:
            self.conclusion = INCONCLUSIVE

    @property
    def holds(self):
        return self.conclusion is True

    def witness(self, label, default=None):
        for k, v in self.witnesses:
            if k == label:
                return v
        return default


def not_applicable(criterion, reason, inputs=None, **kw):
    return Verdict(criterion, False, INCONCLUSIVE, witnesses=[("reason", reason)],
                   inputs=inputs or {}, **kw)
