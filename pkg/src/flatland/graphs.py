"""Simple graphs and the common-neighbor invariants used to separate
triangulations.

G_c(G) joins two vertices exactly when they have c common neighbors in G;
it commutes with relabeling, so differing G_c shapes certify that two
complexes are non-isomorphic.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

Edge = tuple[int, int]


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected graph on vertices 0..n-1, no loops or multi-edges."""

    n: int
    edges: frozenset[Edge]  # (a, b) with a < b

    def __post_init__(self) -> None:
        for a, b in self.edges:
            if not (0 <= a < b < self.n):
                raise ValueError(f"bad edge ({a}, {b}) for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        return cls(n, frozenset(tuple(sorted(e)) for e in edges))

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        return cls(n, frozenset((a, b) for a in range(n) for b in range(a + 1, n)))

    @classmethod
    def cycle(cls, verts: Iterable[int]) -> "SimpleGraph":
        vs = list(verts)
        n = max(vs) + 1
        edges = [tuple(sorted((vs[i], vs[(i + 1) % len(vs)]))) for i in range(len(vs))]
        return cls.from_edges(n, edges)

    @classmethod
    def null(cls, n: int) -> "SimpleGraph":
        return cls(n, frozenset())

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return tuple(frozenset(s) for s in adj)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


def common_neighbor_graph(g: SimpleGraph, c: int) -> SimpleGraph:
    """The graph on V(g) joining u, v iff they have exactly c common
    neighbors in g."""
    if c < 0:
        raise ValueError("common-neighbor count must be >= 0")
    adj = g.adjacency
    edges = frozenset(
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if len(adj[u] & adj[v]) == c
    )
    return SimpleGraph(g.n, edges)


# Component descriptors: ("isolated",), ("cycle", k), ("complete", k),
# ("path", k), ("other", nv, ne, degree multiset).
Descriptor = tuple


@dataclass(frozen=True)
class GraphShape:
    """Multiset of connected-component descriptors."""

    components: tuple[Descriptor, ...]

    def __str__(self) -> str:
        groups = Counter(self.components)
        rank = {"complete": 0, "cycle": 1, "path": 2, "other": 3, "isolated": 4}
        parts = []
        for desc in sorted(groups, key=lambda d: (rank[d[0]], -(d[1] if len(d) > 1 else 0))):
            count = groups[desc]
            kind = desc[0]
            if kind == "isolated":
                parts.append(f"null_{count}")
                continue
            mult = "" if count == 1 else str(count)
            if kind == "cycle":
                parts.append(f"{mult}C_{desc[1]}")
            elif kind == "complete":
                parts.append(f"{mult}K_{desc[1]}")
            elif kind == "path":
                parts.append(f"{mult}P_{desc[1]}")
            else:
                parts.append(f"{mult}other({desc[1]}v,{desc[2]}e)")
        return "+".join(parts) if parts else "null_0"


def _classify_component(g: SimpleGraph, comp: list[int]) -> Descriptor:
    k = len(comp)
    if k == 1:
        return ("isolated",)
    adj = g.adjacency
    degs = sorted(len(adj[v] & set(comp)) for v in comp)
    ne = sum(degs) // 2
    if k >= 3 and degs == [2] * k:
        return ("cycle", k)
    if ne == k * (k - 1) // 2:
        return ("complete", k)
    if ne == k - 1 and degs == [1, 1] + [2] * (k - 2):
        return ("path", k)
    return ("other", k, ne, tuple(degs))


def graph_shape(g: SimpleGraph) -> GraphShape:
    """Decompose into connected components and classify each."""
    seen = [False] * g.n
    descriptors: list[Descriptor] = []
    for v in range(g.n):
        if seen[v]:
            continue
        comp = [v]
        seen[v] = True
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        descriptors.append(_classify_component(g, comp))
    return GraphShape(tuple(sorted(descriptors)))


def _refine_colors(g: SimpleGraph) -> tuple[int, ...]:
    colors = [g.degree(v) for v in range(g.n)]
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in g.adjacency[v])))
            for v in range(g.n)
        ]
        mapping = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [mapping[s] for s in sigs]
        if new == colors:
            return tuple(colors)
        colors = new


def graphs_isomorphic(g: SimpleGraph, h: SimpleGraph) -> bool:
    """Edge-preserving bijection test via degree refinement plus
    backtracking; intended for the small graphs arising here."""
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    cg, ch = _refine_colors(g), _refine_colors(h)
    if sorted(cg) != sorted(ch):
        return False

    h_by_color: dict[int, list[int]] = {}
    for v in range(h.n):
        h_by_color.setdefault(ch[v], []).append(v)

    # Map the most constrained vertices first.
    order = sorted(range(g.n), key=lambda v: (sorted(cg).count(cg[v]), -g.degree(v)))
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in h_by_color[cg[v]]:
            if w in used:
                continue
            ok = True
            for u, x in mapping.items():
                if (u in g.adjacency[v]) != (x in h.adjacency[w]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used.add(w)
                if extend(i + 1):
                    return True
                del mapping[v]
                used.remove(w)
        return False

    return extend(0)
