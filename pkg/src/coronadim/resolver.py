"""Resolving sets and exact metric dimension by pruned exhaustive search.

The exact search walks candidate landmark sets in increasing size and, within
a size, in lexicographic order of the sorted vertex lists, so the first
resolving set found is the lexicographically smallest minimum one. The only
pruning is the twin rule: every resolving set contains all but at most one
vertex of each twin class.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import DisconnectedGraphError, InvalidVertexError, TrivialInputError
from .graph import Graph
from .metric import DistanceMatrix, all_pairs

LandmarkSet = tuple[int, ...]


def landmark_set(vertices: Iterable[int], n: Optional[int] = None) -> LandmarkSet:
    """Normalize to a sorted tuple of distinct ids, range-checked against n."""
    result = tuple(sorted(set(vertices)))
    if n is not None:
        for v in result:
            if not 0 <= v < n:
                raise InvalidVertexError(f"landmark {v} out of range for n={n}")
    return result


def _finite_array(dm: DistanceMatrix) -> np.ndarray:
    if not dm.connected:
        raise DisconnectedGraphError("graph is disconnected (distance matrix has unreachable pairs)")
    return dm.array


def _codes(d: np.ndarray, landmarks: Sequence[int]) -> list[tuple[int, ...]]:
    if not landmarks:
        return [()] * d.shape[0]
    return [tuple(row) for row in d[:, list(landmarks)].tolist()]


def is_resolving(dm: DistanceMatrix, landmarks: Iterable[int]) -> bool:
    """True iff every vertex has a distinct distance vector to the landmarks."""
    s = landmark_set(landmarks, dm.n)
    d = _finite_array(dm)
    return len(set(_codes(d, s))) == dm.n


def collisions(dm: DistanceMatrix, landmarks: Iterable[int]) -> list[list[int]]:
    """Groups of two or more vertices sharing a representation, sorted."""
    s = landmark_set(landmarks, dm.n)
    d = _finite_array(dm)
    groups: dict[tuple[int, ...], list[int]] = {}
    for v, code in enumerate(_codes(d, s)):
        groups.setdefault(code, []).append(v)
    return sorted(g for g in groups.values() if len(g) > 1)


def find_collision(dm: DistanceMatrix, landmarks: Iterable[int]) -> Optional[tuple[int, int]]:
    """Lexicographically smallest pair ``(u, v)`` sharing a representation."""
    groups = collisions(dm, landmarks)
    return (groups[0][0], groups[0][1]) if groups else None


def twin_partition(dm: DistanceMatrix) -> list[list[int]]:
    """Classes of mutually twin vertices, ordered by smallest member.

    u and v are twins when ``d(u, x) == d(v, x)`` for every x other than
    u and v. Twinness is an equivalence relation, so classes are found by
    comparing each vertex with the first member of the existing classes.
    """
    d = dm.array
    n = dm.n
    classes: list[list[int]] = []
    for v in range(n):
        for cls in classes:
            u = cls[0]
            mask = np.ones(n, dtype=bool)
            mask[[u, v]] = False
            if np.array_equal(d[u, mask], d[v, mask]):
                cls.append(v)
                break
        else:
            classes.append([v])
    return classes


def twin_lower_bound(partition: Sequence[Sequence[int]]) -> int:
    n = sum(len(cls) for cls in partition)
    bound = sum(len(cls) - 1 for cls in partition)
    if n >= 2:
        bound = max(bound, 1)
    return bound


def greedy_upper_bound(dm: DistanceMatrix) -> LandmarkSet:
    """Resolving set grown by always adding the vertex that splits the most
    still-unresolved pairs (smallest id on ties)."""
    d = _finite_array(dm)
    n = dm.n
    chosen: list[int] = []
    classes = [list(range(n))] if n > 1 else []
    while classes:
        best, best_gain = -1, 0
        for w in range(n):
            gain = 0
            for cls in classes:
                _, counts = np.unique(d[cls, w], return_counts=True)
                gain += (len(cls) ** 2 - int((counts**2).sum())) // 2
            if gain > best_gain:
                best, best_gain = w, gain
        chosen.append(best)
        refined = []
        for cls in classes:
            groups: dict[int, list[int]] = {}
            for v in cls:
                groups.setdefault(int(d[v, best]), []).append(v)
            refined.extend(g for g in groups.values() if len(g) > 1)
        classes = refined
    return landmark_set(chosen)


class Status(str, enum.Enum):
    EXACT = "EXACT"
    BOUNDS_ONLY = "BOUNDS_ONLY"


@dataclass(frozen=True)
class SolverBudget:
    """Limits for the exact search. ``None`` for max_subset_size means n-1."""

    max_subset_size: Optional[int] = None
    time_limit: float = 60.0
    max_subsets_checked: int = 10**8

    def __post_init__(self) -> None:
        if self.max_subset_size is not None and self.max_subset_size < 1:
            raise ValueError("max_subset_size must be positive")
        if self.time_limit <= 0 or self.max_subsets_checked <= 0:
            raise ValueError("budget limits must be positive")


@dataclass(frozen=True)
class SolverResult:
    status: Status
    witness: LandmarkSet
    lower: int
    upper: int
    subsets_checked: int = 0
    elapsed: float = field(default=0.0, compare=False)

    @property
    def value(self) -> Optional[int]:
        """The dimension when the search finished, else ``None``."""
        return self.lower if self.status is Status.EXACT else None

    @property
    def exact(self) -> bool:
        return self.status is Status.EXACT


class _BudgetExhausted(Exception):
    pass


class _Search:
    """Lexicographic DFS over twin-admissible landmark sets of one size."""

    def __init__(self, d: np.ndarray, classes: list[list[int]], budget: SolverBudget, start: float):
        self.d = d
        self.n = d.shape[0]
        self.class_of = [0] * self.n
        for i, cls in enumerate(classes):
            for v in cls:
                self.class_of[v] = i
        self.n_classes = len(classes)
        self.budget = budget
        self.deadline = start + budget.time_limit
        self.checked = 0
        # Distances are below n, so base n keeps concatenated codes injective.
        self.base = max(self.n, 2)
        self.limit = np.iinfo(np.int64).max // self.base - self.base

    def run(self, size: int) -> Optional[LandmarkSet]:
        self.size = size
        self.chosen: list[int] = []
        omitted = [0] * self.n_classes
        keys = np.zeros(self.n, dtype=np.int64)
        return self._extend(0, keys, omitted)

    def _tail_ok(self, start: int, omitted: list[int]) -> bool:
        counts = omitted[:]
        for v in range(start, self.n):
            c = self.class_of[v]
            counts[c] += 1
            if counts[c] >= 2:
                return False
        return True

    def _extend(self, start: int, keys: np.ndarray, omitted: list[int]) -> Optional[LandmarkSet]:
        remaining = self.size - len(self.chosen)
        omitted = omitted[:]
        if keys.max() > self.limit:
            _, inverse = np.unique(keys, return_inverse=True)
            keys = inverse.astype(np.int64).ravel()
        for c in range(start, self.n - remaining + 1):
            new_keys = keys * self.base + self.d[:, c]
            self.chosen.append(c)
            if remaining == 1:
                if self._tail_ok(c + 1, omitted):
                    self._tick()
                    if len(set(new_keys.tolist())) == self.n:
                        return tuple(self.chosen)
            else:
                found = self._extend(c + 1, new_keys, omitted)
                if found is not None:
                    return found
            self.chosen.pop()
            # Moving past c leaves it out of the set.
            cls = self.class_of[c]
            omitted[cls] += 1
            if omitted[cls] >= 2:
                break
        return None

    def _tick(self) -> None:
        self.checked += 1
        if self.checked >= self.budget.max_subsets_checked:
            raise _BudgetExhausted
        if self.checked % 1024 == 0 and time.monotonic() > self.deadline:
            raise _BudgetExhausted


def metric_dimension_exact(
    g: Graph,
    budget: Optional[SolverBudget] = None,
    *,
    dm: Optional[DistanceMatrix] = None,
) -> SolverResult:
    """Metric dimension of a connected graph with at least two vertices.

    Returns an EXACT result with the lexicographically smallest minimum
    resolving set as witness, or BOUNDS_ONLY (witness = greedy set) when the
    budget runs out first.
    """
    if g.n < 2:
        raise TrivialInputError(f"metric dimension search needs n >= 2, got n={g.n}")
    budget = budget or SolverBudget()
    start = time.monotonic()
    if dm is None:
        dm = all_pairs(g)
    if not dm.connected:
        raise DisconnectedGraphError("graph is disconnected; metric dimension needs a connected graph")
    classes = twin_partition(dm)
    lower = twin_lower_bound(classes)
    greedy = greedy_upper_bound(dm)
    max_size = min(budget.max_subset_size or g.n - 1, g.n - 1)
    search = _Search(dm.array, classes, budget, start)

    def bounds_only(lower: int) -> SolverResult:
        return SolverResult(
            Status.BOUNDS_ONLY,
            greedy,
            lower,
            len(greedy),
            search.checked,
            time.monotonic() - start,
        )

    size = lower
    while size <= len(greedy):
        if size > max_size:
            return bounds_only(size)
        try:
            witness = search.run(size)
        except _BudgetExhausted:
            return bounds_only(size)
        if witness is not None:
            return SolverResult(
                Status.EXACT, witness, size, size, search.checked, time.monotonic() - start
            )
        size += 1
    raise AssertionError("greedy resolving set was not found by exhaustive search")
