"""Finite simple undirected graphs and the constructions used for clean graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from .errors import ParamError

APEX = "z"


class Graph:
    """A finite simple graph on an ordered list of hashable vertex labels.

    Internally vertices are numbered by their position in ``vertices`` and
    ``adj[i]`` is the frozenset of neighbours of vertex ``i``. Graphs are
    immutable.
    """

    __slots__ = ("vertices", "adj", "_index", "_memo")

    def __init__(self, vertices: Sequence[Hashable], adj: Sequence[Iterable[int]]):
        self.vertices = tuple(vertices)
        if len(adj) != len(self.vertices):
            raise ValueError("adjacency length does not match vertex count")
        self.adj = tuple(frozenset(a) for a in adj)
        self._index = {v: i for i, v in enumerate(self.vertices)}
        self._memo = {}
        if len(self._index) != len(self.vertices):
            raise ValueError("duplicate vertex labels")
        for i, nbrs in enumerate(self.adj):
            if i in nbrs:
                raise ValueError(f"self-loop at {self.vertices[i]!r}")
            for j in nbrs:
                if i not in self.adj[j]:
                    raise ValueError("adjacency is not symmetric")

    @classmethod
    def from_edges(cls, vertices: Sequence[Hashable], edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build from index pairs; duplicate edges are merged."""
        adj = [set() for _ in vertices]
        for i, j in edges:
            if i == j:
                raise ValueError("self-loop")
            adj[i].add(j)
            adj[j].add(i)
        return cls(vertices, adj)

    # -- queries ---------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def index(self, label: Hashable) -> int:
        return self._index[label]

    def degree(self, i: int) -> int:
        return len(self.adj[i])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.adj[i]

    def edges(self) -> list[tuple[int, int]]:
        """Every edge once as ``(i, j)`` with ``i < j``, lexicographically sorted."""
        return [(i, j) for i in range(self.order) for j in sorted(self.adj[i]) if i < j]

    def label_edges(self) -> set[frozenset]:
        return {frozenset((self.vertices[i], self.vertices[j])) for i, j in self.edges()}

    def components(self) -> list[list[int]]:
        seen = [False] * self.order
        out = []
        for s in range(self.order):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [], [s]
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            out.append(sorted(comp))
        return out

    # -- derived graphs --------------------------------------------------

    def induced(self, indices: Sequence[int]) -> "Graph":
        """Induced subgraph on ``indices``, keeping labels and the given order."""
        pos = {v: k for k, v in enumerate(indices)}
        adj = [[pos[w] for w in self.adj[v] if w in pos] for v in indices]
        return Graph([self.vertices[v] for v in indices], adj)

    def relabeled(self, perm: Sequence[int]) -> "Graph":
        """Move vertex ``i`` to position ``perm[i]``; labels travel with vertices."""
        n = self.order
        labels = [None] * n
        adj = [None] * n
        for i in range(n):
            labels[perm[i]] = self.vertices[i]
            adj[perm[i]] = [perm[j] for j in self.adj[i]]
        return Graph(labels, adj)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.adj == other.adj

    def __hash__(self):
        return hash((self.vertices, self.adj))

    def __repr__(self) -> str:
        return f"<Graph order={self.order} size={self.size}>"


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(range(n), [()] * n)


def complete_graph(n: int) -> Graph:
    if n < 0:
        raise ParamError("negative vertex count")
    return Graph(range(n), [[j for j in range(n) if j != i] for i in range(n)])


def disjoint_union(*graphs: Graph) -> Graph:
    """Vertex-disjoint union; vertex ``v`` of the ``k``-th graph becomes ``(k, v)``."""
    labels, adj = [], []
    offset = 0
    for k, g in enumerate(graphs):
        labels.extend((k, v) for v in g.vertices)
        adj.extend([w + offset for w in a] for a in g.adj)
        offset += g.order
    return Graph(labels, adj)


def copies(m: int, g: Graph) -> Graph:
    """``m`` disjoint copies of ``g``, written ``mG``."""
    if m < 0:
        raise ParamError("negative copy count")
    return disjoint_union(*([g] * m))


def graph_join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    n1 = g1.order
    union = disjoint_union(g1, g2)
    adj = [set(a) for a in union.adj]
    for i in range(n1):
        adj[i].update(range(n1, union.order))
    for j in range(n1, union.order):
        adj[j].update(range(n1))
    return Graph(union.vertices, adj)


@dataclass(frozen=True)
class ShurikenParams:
    t: int
    n: int
    base: Graph

    def __post_init__(self):
        if self.n < 1:
            raise ParamError(f"n must be positive, got {self.n}")
        if not 0 <= self.t <= self.n:
            raise ParamError(f"need 0 <= t <= n, got t={self.t}, n={self.n}")
        if (self.n - self.t) % 2:
            raise ParamError(f"n - t must be even, got t={self.t}, n={self.n}")


def shuriken(t: int, n: int, base: Graph) -> Graph:
    """The ``(t, n)``-shuriken graph of ``base``.

    Add an apex ``z`` to ``base`` and take ``n`` copies; vertex ``v`` of copy
    ``i`` is labelled ``(i, v)`` and the apex ``(i, APEX)``, with copies
    numbered from 0 and the apex first within each copy. Edges:

    * ``(i, u) ~ (j, v)`` for every base edge ``uv`` and every ``i, j``
      (including ``i == j``);
    * copies ``0 .. t-1`` are cliques;
    * copy ``i`` is completely joined to copy ``n + t - 1 - i`` for
      ``t <= i < (n + t) / 2``.
    """
    ShurikenParams(t, n, base)
    b = base.order
    width = b + 1
    labels = [(i, v) for i in range(n) for v in (APEX, *base.vertices)]

    def vid(i, k):  # k = 0 is the apex, k >= 1 is base vertex k-1
        return i * width + k

    adj = [set() for _ in labels]
    for u, v in base.edges():
        for i in range(n):
            for j in range(n):
                adj[vid(i, u + 1)].add(vid(j, v + 1))
                adj[vid(j, v + 1)].add(vid(i, u + 1))
    for i in range(t):
        block = range(vid(i, 0), vid(i, width))
        for x in block:
            adj[x].update(y for y in block if y != x)
    for i in range(t, (n + t) // 2):
        j = n + t - 1 - i
        a = range(vid(i, 0), vid(i, width))
        c = range(vid(j, 0), vid(j, width))
        for x in a:
            adj[x].update(c)
        for y in c:
            adj[y].update(a)
    return Graph(labels, adj)
