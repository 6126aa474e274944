"""Shortest-path distances, diameter and metric representations."""

from __future__ import annotations

from collections import deque
from typing import Optional, Sequence, Union

import numpy as np

from .errors import InvalidVertexError
from .graph import Graph


class _Unreachable:
    """Distance between vertices in different components.

    Orders strictly above every finite distance. Arithmetic is deliberately
    unsupported so that adding to it raises ``TypeError``.
    """

    _instance: Optional[_Unreachable] = None

    def __new__(cls) -> _Unreachable:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNREACHABLE"

    def __reduce__(self):
        return (_Unreachable, ())

    def __lt__(self, other: object) -> bool:
        return False

    def __le__(self, other: object) -> bool:
        return other is self

    def __gt__(self, other: object) -> bool:
        return other is not self

    def __ge__(self, other: object) -> bool:
        return True

    def __hash__(self) -> int:
        return hash("UNREACHABLE")


UNREACHABLE = _Unreachable()

Distance = Union[int, _Unreachable]

# Internal encoding of UNREACHABLE inside numpy arrays.
_NO_PATH = -1


class DistanceMatrix:
    """All-pairs shortest-path distances of a graph.

    Indexing with ``dm[u, v]`` returns an ``int`` or ``UNREACHABLE``. The raw
    array (``dm.array``) encodes unreachable pairs as ``-1`` and is meant for
    vectorised consumers such as the resolver.
    """

    __slots__ = ("_d",)

    def __init__(self, array: np.ndarray):
        array = np.asarray(array, dtype=np.int64)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise ValueError("distance matrix must be square")
        array = array.copy()
        array.setflags(write=False)
        self._d = array

    @property
    def n(self) -> int:
        return self._d.shape[0]

    @property
    def array(self) -> np.ndarray:
        return self._d

    def __getitem__(self, pair: tuple[int, int]) -> Distance:
        u, v = pair
        self._check(u)
        self._check(v)
        value = int(self._d[u, v])
        return UNREACHABLE if value == _NO_PATH else value

    def row(self, v: int) -> list[Distance]:
        self._check(v)
        return [UNREACHABLE if x == _NO_PATH else int(x) for x in self._d[v]]

    @property
    def connected(self) -> bool:
        """True when every pair is at finite distance."""
        return self.n > 0 and not bool((self._d == _NO_PATH).any())

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InvalidVertexError(f"vertex {v} out of range for n={self.n}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DistanceMatrix):
            return NotImplemented
        return np.array_equal(self._d, other._d)

    def __repr__(self) -> str:
        return f"DistanceMatrix(n={self.n})"


def _bfs_row(g: Graph, source: int) -> list[int]:
    dist = [_NO_PATH] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.neighbors(u):
            if dist[w] == _NO_PATH:
                dist[w] = du
                queue.append(w)
    return dist


def bfs_distances(g: Graph, source: int) -> list[Distance]:
    if not 0 <= source < g.n:
        raise InvalidVertexError(f"source {source} out of range for n={g.n}")
    return [UNREACHABLE if d == _NO_PATH else d for d in _bfs_row(g, source)]


def all_pairs(g: Graph) -> DistanceMatrix:
    rows = [_bfs_row(g, s) for s in g.vertices()]
    return DistanceMatrix(np.array(rows, dtype=np.int64).reshape(g.n, g.n))


def diameter(g: Graph) -> Optional[int]:
    """Largest distance, or ``None`` when g is disconnected or null.

    The one-vertex graph has diameter 0.
    """
    if g.n == 0:
        return None
    dm = all_pairs(g)
    if not dm.connected:
        return None
    return int(dm.array.max())


def representation(
    dm: DistanceMatrix, v: int, landmarks: Sequence[int]
) -> tuple[Distance, ...]:
    """Distances from v to each landmark, in landmark order."""
    dm._check(v)
    for w in landmarks:
        dm._check(w)
    return tuple(dm[v, w] for w in landmarks)
