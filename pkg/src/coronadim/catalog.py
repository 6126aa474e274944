"""Brute-force enumeration of small graphs up to isomorphism.

Only meant for orders up to about 5: canonical forms try every permutation.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from typing import Optional

from .graph import FamilyDescriptor, Graph, family, is_connected, make_family


def canonical_form(g: Graph) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Lexicographically smallest relabeled edge list over all permutations."""
    best = None
    for perm in permutations(range(g.n)):
        relabeled = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in g.edges))
        if best is None or relabeled < best:
            best = relabeled
    return g.n, best or ()


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.size != h.size or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


@lru_cache(maxsize=None)
def nonisomorphic_graphs(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of graphs on n vertices."""
    pairs = list(combinations(range(n), 2))
    seen = {}
    for mask in range(1 << len(pairs)):
        g = Graph(n, (pairs[i] for i in range(len(pairs)) if mask >> i & 1))
        seen.setdefault(canonical_form(g), g)
    return tuple(seen[key] for key in sorted(seen, key=lambda k: (len(k[1]), k[1])))


def _candidates(n: int) -> list[FamilyDescriptor]:
    base = []
    for m in range(1, n + 1):
        base += [family("path", m), family("complete", m), family("empty", m)]
        if m >= 3:
            base.append(family("cycle", m))
        if m >= 2:
            base.append(family("star", m - 1))
        if m >= 4:
            base += [family("wheel", m - 1), family("fan", m - 1)]
    out = [d for d in base if d.order == n]
    for a in base:
        for b in base:
            if a.order + b.order == n:
                out.append(family("union", a, b))
    out += [family("complement", d) for d in list(out)]
    return out


def describe(g: Graph) -> Optional[FamilyDescriptor]:
    """A family expression isomorphic to g, if a short one exists."""
    key = canonical_form(g)
    for desc in _candidates(g.n):
        if canonical_form(make_family(desc)) == key:
            return desc
    return None


def connected_graphs(n: int) -> list[Graph]:
    return [g for g in nonisomorphic_graphs(n) if is_connected(g)]


def disconnected_graphs_with_edges(n: int) -> list[Graph]:
    return [g for g in nonisomorphic_graphs(n) if g.size > 0 and not is_connected(g)]
