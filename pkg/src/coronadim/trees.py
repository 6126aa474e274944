"""Leaf, major-vertex and terminal-degree bookkeeping for trees."""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from typing import Sequence

from .bounds import BoundResult, exact, inapplicable
from .errors import NotATreeError
from .graph import Graph, is_connected
from .metric import all_pairs


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.size == g.n - 1


@dataclass(frozen=True)
class TreeProfile:
    is_path: bool
    leaf_count: int
    exterior_major_count: int
    # (vertex, terminal degree) for every vertex of degree >= 3
    major_vertices: tuple[tuple[int, int], ...]


def _require_tree(t: Graph, min_order: int = 2) -> None:
    if not is_tree(t):
        raise NotATreeError("input graph is not a tree")
    if t.n < min_order:
        raise NotATreeError(f"tree must have at least {min_order} vertices, got {t.n}")


def tree_profile(t: Graph) -> TreeProfile:
    _require_tree(t)
    degrees = t.degrees()
    leaves = [v for v in t.vertices() if degrees[v] == 1]
    majors = [v for v in t.vertices() if degrees[v] >= 3]
    terminal = dict.fromkeys(majors, 0)
    if majors:
        d = all_pairs(t).array
        for u in leaves:
            dist = sorted((int(d[u, w]), w) for w in majors)
            # Paths from a leaf to two majors split at a vertex of degree >= 3,
            # which is itself a strictly closer major, so the minimum is unique.
            assert len(dist) == 1 or dist[0][0] < dist[1][0], "terminal vertex tie in a tree"
            terminal[dist[0][1]] += 1
    return TreeProfile(
        is_path=not majors,
        leaf_count=len(leaves),
        exterior_major_count=sum(1 for v in majors if terminal[v] > 0),
        major_vertices=tuple((v, terminal[v]) for v in majors),
    )


def tree_dim(t: Graph) -> BoundResult:
    """Leaves minus exterior major vertices; 1 for paths."""
    profile = tree_profile(t)
    if profile.is_path:
        return exact(1, "lem:tree", ("tree", "path"))
    return exact(
        profile.leaf_count - profile.exterior_major_count, "lem:tree", ("tree", "not_path")
    )


def tree_corona_k1_dim(t: Graph, k: int) -> BoundResult:
    """Dimension of the tree with k rounds of pendant vertices attached."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    _require_tree(t, min_order=1)
    if t.n < 3:
        return inapplicable("thm:tree-corona", ("tree",))
    conditions = ("tree", "order>=3")
    if k == 1:
        leaves = sum(1 for deg in t.degrees() if deg == 1)
        return exact(leaves, "thm:tree-corona", conditions)
    return exact(2 ** (k - 2) * t.n, "thm:tree-corona", conditions)


def prufer_to_tree(sequence: Sequence[int]) -> Graph:
    """Decode a Prüfer sequence over ``0..len+1`` into a labeled tree."""
    n = len(sequence) + 2
    degree = [1] * n
    for v in sequence:
        if not 0 <= v < n:
            raise ValueError(f"Prüfer entry {v} out of range for n={n}")
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in sequence:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph(n, edges)


def random_prufer(n: int, rng: random.Random) -> list[int]:
    """Uniform Prüfer sequence for a labeled tree on n >= 2 vertices."""
    if n < 2:
        raise ValueError("random trees need at least two vertices")
    return [rng.randrange(n) for _ in range(n - 2)]
