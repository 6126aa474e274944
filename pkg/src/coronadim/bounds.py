"""Result types shared by the closed-form dimension rules."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional


class BoundKind(str, enum.Enum):
    EXACT = "EXACT"
    LOWER = "LOWER"
    UPPER = "UPPER"
    INAPPLICABLE = "INAPPLICABLE"


# Stable identifiers for every implemented rule.
SOURCES = (
    "thm:lower",
    "thm:diam2",
    "thm:alphabeta",
    "cor:emptyH",
    "thm:completeH",
    "thm:k1join-upper",
    "thm:diam6-or-cycle",
    "thm:k1-corona",
    "lem:n-2",
    "rem:wheel",
    "rem:fan",
    "lem:tree",
    "thm:tree-corona",
    "cor:wheel-fan",
    "fam:path",
    "fam:cycle",
    "fam:complete",
    "fam:base",
)


@dataclass(frozen=True)
class BoundResult:
    kind: BoundKind
    value: Optional[int]
    source: str
    conditions_checked: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.source not in SOURCES:
            raise ValueError(f"unknown rule identifier {self.source!r}")
        if self.kind is BoundKind.INAPPLICABLE:
            if self.value is not None:
                raise ValueError("inapplicable results carry no value")
        elif self.value is None or self.value < 0:
            raise ValueError(f"{self.kind.value} result needs a nonnegative value")

    @property
    def applicable(self) -> bool:
        return self.kind is not BoundKind.INAPPLICABLE

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "kind": self.kind.value,
            "value": self.value,
            "conditions": list(self.conditions_checked),
        }


def exact(value: int, source: str, conditions=()) -> BoundResult:
    return BoundResult(BoundKind.EXACT, value, source, tuple(conditions))


def lower(value: int, source: str, conditions=()) -> BoundResult:
    return BoundResult(BoundKind.LOWER, value, source, tuple(conditions))


def upper(value: int, source: str, conditions=()) -> BoundResult:
    return BoundResult(BoundKind.UPPER, value, source, tuple(conditions))


def inapplicable(source: str, conditions=()) -> BoundResult:
    return BoundResult(BoundKind.INAPPLICABLE, None, source, tuple(conditions))
