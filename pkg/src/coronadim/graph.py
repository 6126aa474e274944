"""Simple undirected graphs, the standard families, and graph products.

Vertices are always the integers ``0..n-1``. Every construction here has a
fixed labeling so that products (in particular coronas) can be inspected
reproducibly:

* ``join(g, h)`` and ``disjoint_union(g, h)`` keep g's ids and shift h's ids
  by ``g.n``.
* ``corona(g, h)`` puts the copy of g on ids ``0..n1-1`` (the spine) and the
  i-th copy of h on ids ``n1 + i*n2 .. n1 + (i+1)*n2 - 1``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Union

from .errors import InvalidDescriptorError, InvalidVertexError, SizeLimitError

#: Default cap on the order of any product graph built by ``iterated_corona``.
MAX_ORDER = 10**6

Edge = tuple[int, int]


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("_n", "_edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        normalized = set()
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertexError(f"edge ({u}, {v}) out of range for n={n}")
            if u > v:
                u, v = v, u
            normalized.add((u, v))
            adj[u].add(v)
            adj[v].add(u)
        self._n = n
        self._edges = frozenset(normalized)
        self._adj = tuple(frozenset(a) for a in adj)

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> frozenset[Edge]:
        """Edges as ``(u, v)`` pairs with ``u < v``."""
        return self._edges

    def __len__(self) -> int:
        return self._n

    @property
    def size(self) -> int:
        return len(self._edges)

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self._adj[u]

    def edge_list(self) -> list[Edge]:
        """Edges in lexicographic order."""
        return sorted(self._edges)

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Subgraph induced by ``vertices``, relabeled in ascending id order."""
        keep = sorted(set(vertices))
        for v in keep:
            self._check(v)
        index = {v: i for i, v in enumerate(keep)}
        return Graph(
            len(keep),
            ((index[u], index[v]) for u, v in self._edges if u in index and v in index),
        )

    def _check(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise InvalidVertexError(f"vertex {v} out of range for n={self._n}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edge_list()})"


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n
    result = []
    for start in g.vertices():
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        result.append(sorted(comp))
    return result


def is_connected(g: Graph) -> bool:
    """True for graphs with exactly one component (the null graph is not)."""
    return g.n > 0 and len(components(g)) == 1


# ---------------------------------------------------------------------------
# Operations


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph(
        g.n + h.n,
        list(g.edges) + [(u + shift, v + shift) for u, v in h.edges],
    )


def join(g: Graph, h: Graph) -> Graph:
    shift = g.n
    cross = [(u, v + shift) for u in g.vertices() for v in h.vertices()]
    return Graph(
        g.n + h.n,
        list(g.edges) + [(u + shift, v + shift) for u, v in h.edges] + cross,
    )


def complement(g: Graph) -> Graph:
    return Graph(g.n, (e for e in combinations(range(g.n), 2) if e not in g.edges))


@dataclass(frozen=True)
class CoronaStructure:
    """Where the spine and each copy of h sit inside a corona product.

    ``copies[i]`` lists the ids of the copy attached to ``spine[i]``.
    """

    spine: tuple[int, ...]
    copies: tuple[tuple[int, ...], ...]

    @property
    def n1(self) -> int:
        return len(self.spine)

    @property
    def n2(self) -> int:
        return len(self.copies[0]) if self.copies else 0

    def copy_index(self) -> dict[int, int]:
        """Map each copy vertex to the index of the copy containing it."""
        return {v: i for i, copy in enumerate(self.copies) for v in copy}


def corona(g: Graph, h: Graph) -> tuple[Graph, CoronaStructure]:
    """Corona product of g and h: one copy of h hung off every vertex of g."""
    if g.n < 1:
        raise ValueError("corona needs a nonempty left operand")
    n1, n2 = g.n, h.n
    edges = list(g.edges)
    copies = []
    for i in range(n1):
        base = n1 + i * n2
        copies.append(tuple(range(base, base + n2)))
        edges.extend((u + base, v + base) for u, v in h.edges)
        edges.extend((i, base + j) for j in range(n2))
    structure = CoronaStructure(tuple(range(n1)), tuple(copies))
    return Graph(n1 * (n2 + 1), edges), structure


def iterated_corona(
    g: Graph, h: Graph, k: int, *, max_order: int = MAX_ORDER
) -> tuple[Graph, list[CoronaStructure]]:
    """k-fold left-associated corona, with one structure record per level."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    final_order = g.n * (h.n + 1) ** k
    if final_order > max_order:
        raise SizeLimitError(
            f"iterated corona of order {final_order} exceeds limit {max_order}"
        )
    structures = []
    current = g
    for _ in range(k):
        current, cs = corona(current, h)
        structures.append(cs)
    return current, structures


# ---------------------------------------------------------------------------
# Families


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidDescriptorError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)])


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_bipartite_graph(s: int, t: int) -> Graph:
    return join(empty_graph(s), empty_graph(t))


def star_graph(n: int) -> Graph:
    """K_{1,n}: hub 0, leaves 1..n."""
    return complete_bipartite_graph(1, n)


def wheel_graph(n: int) -> Graph:
    """Hub 0 joined to a rim cycle on 1..n (order n+1)."""
    return join(complete_graph(1), cycle_graph(n))


def fan_graph(n: int) -> Graph:
    """Hub 0 joined to a path on 1..n (order n+1)."""
    return join(complete_graph(1), path_graph(n))


# tag -> (parameter kinds, minimum value of each integer parameter)
_INT = "int"
_SUB = "expr"
FAMILY_SIGNATURES: dict[str, tuple[tuple[str, int], ...]] = {
    "path": ((_INT, 1),),
    "cycle": ((_INT, 3),),
    "complete": ((_INT, 1),),
    "empty": ((_INT, 0),),
    "complete_bipartite": ((_INT, 1), (_INT, 1)),
    "star": ((_INT, 1),),
    "wheel": ((_INT, 3),),
    "fan": ((_INT, 1),),
    "join": ((_SUB, 0), (_SUB, 0)),
    "union": ((_SUB, 0), (_SUB, 0)),
    "complement": ((_SUB, 0),),
    "corona": ((_SUB, 0), (_SUB, 0), (_INT, 1)),
}

# Names used in the textual expression language where they differ from tags.
EXPR_NAMES = {"complete_bipartite": "kst"}

Param = Union[int, "FamilyDescriptor"]


@dataclass(frozen=True)
class FamilyDescriptor:
    """Symbolic description of a graph built from families and operations.

    ``corona`` carries three parameters ``(g, h, k)``; the rest carry the
    integers or child descriptors their family needs.
    """

    tag: str
    params: tuple[Param, ...]

    def __post_init__(self) -> None:
        signature = FAMILY_SIGNATURES.get(self.tag)
        if signature is None:
            raise InvalidDescriptorError(f"unknown family {self.tag!r}")
        if len(self.params) != len(signature):
            raise InvalidDescriptorError(
                f"{self.tag} takes {len(signature)} parameters, got {len(self.params)}"
            )
        for value, (kind, minimum) in zip(self.params, signature):
            if kind == _SUB:
                if not isinstance(value, FamilyDescriptor):
                    raise InvalidDescriptorError(f"{self.tag} expects graph operands")
            elif isinstance(value, bool) or not isinstance(value, int):
                raise InvalidDescriptorError(f"{self.tag} expects integer parameters")
            elif value < minimum:
                raise InvalidDescriptorError(
                    f"{self.tag} parameter {value} below minimum {minimum}"
                )
        if self.tag == "corona" and _order(self.params[0]) < 1:
            raise InvalidDescriptorError("corona needs a nonempty left operand")

    def __str__(self) -> str:
        name = EXPR_NAMES.get(self.tag, self.tag)
        params = list(self.params)
        if self.tag == "corona" and params[2] == 1:
            params = params[:2]
        return f"{name}({', '.join(str(p) for p in params)})"

    @property
    def order(self) -> int:
        return _order(self)


def family(tag: str, *params: Param) -> FamilyDescriptor:
    """Shorthand constructor; ``corona`` defaults to k=1."""
    if tag == "corona" and len(params) == 2:
        params = (*params, 1)
    return FamilyDescriptor(tag, tuple(params))


def _order(desc: FamilyDescriptor) -> int:
    tag, p = desc.tag, desc.params
    if tag in ("path", "cycle", "complete", "empty"):
        return p[0]
    if tag == "complete_bipartite":
        return p[0] + p[1]
    if tag in ("star", "wheel", "fan"):
        return p[0] + 1
    if tag in ("join", "union"):
        return _order(p[0]) + _order(p[1])
    if tag == "complement":
        return _order(p[0])
    # corona
    return _order(p[0]) * (_order(p[1]) + 1) ** p[2]


_BASE_BUILDERS = {
    "path": path_graph,
    "cycle": cycle_graph,
    "complete": complete_graph,
    "empty": empty_graph,
    "complete_bipartite": complete_bipartite_graph,
    "star": star_graph,
    "wheel": wheel_graph,
    "fan": fan_graph,
}


def make_family(desc: FamilyDescriptor, *, max_order: int = MAX_ORDER) -> Graph:
    """Build the canonically labeled graph a descriptor stands for."""
    if desc.order > max_order:
        raise SizeLimitError(f"graph of order {desc.order} exceeds limit {max_order}")
    builder = _BASE_BUILDERS.get(desc.tag)
    if builder is not None:
        return builder(*desc.params)
    p = desc.params
    if desc.tag == "join":
        return join(make_family(p[0]), make_family(p[1]))
    if desc.tag == "union":
        return disjoint_union(make_family(p[0]), make_family(p[1]))
    if desc.tag == "complement":
        return complement(make_family(p[0]))
    graph, _ = iterated_corona(make_family(p[0]), make_family(p[1]), p[2], max_order=max_order)
    return graph


# ---------------------------------------------------------------------------
# Edge-list text format


def to_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edge_list())
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    """Parse the ``n <count>`` header followed by ``u v`` lines."""
    lines = [line.split() for line in text.splitlines() if line.strip()]
    if not lines or len(lines[0]) != 2 or lines[0][0] != "n":
        raise ValueError("edge list must start with a line 'n <count>'")
    try:
        n = int(lines[0][1])
        edges = []
        for lineno, fields in enumerate(lines[1:], start=2):
            if len(fields) != 2:
                raise ValueError(f"line {lineno}: expected 'u v', got {' '.join(fields)!r}")
            edges.append((int(fields[0]), int(fields[1])))
    except ValueError as exc:
        raise ValueError(f"malformed edge list: {exc}") from None
    return Graph(n, edges)

