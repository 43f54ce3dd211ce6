"""Multigraph substrate: connectivity queries and separation checking.

Vertices are dense integers in [0, n); edges are indexed in [0, m) and may
repeat endpoints (parallel edges) or loop back to the same vertex.
Self-loops are accepted but never contribute to connectivity, so they are
kept out of the adjacency lists. Graphs are immutable after construction
and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class Multigraph:
    """An undirected multigraph over vertices 0..n-1.

    Edge ids index into ``edges`` and stay stable for the lifetime of the
    object. Parallel edges get distinct ids (their probabilities may
    differ downstream), which is why adjacency entries carry the edge id
    alongside the neighbor.
    """

    __slots__ = ("n", "edges", "adjacency")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(
            (int(u), int(v)) for u, v in edges
        )
        for u, v in self.edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        adjacency: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for eid, (u, v) in enumerate(self.edges):
            if u == v:
                continue
            adjacency[u].append((v, eid))
            adjacency[v].append((u, eid))
        self.adjacency: tuple[tuple[tuple[int, int], ...], ...] = tuple(
            tuple(row) for row in adjacency
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    def endpoints(self, edge_id: int) -> tuple[int, int]:
        return self.edges[edge_id]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Separation:
    """A candidate split (A, B) of the vertex set; A ∩ B is the separator."""

    a_side: frozenset[int]
    b_side: frozenset[int]

    @property
    def separator(self) -> frozenset[int]:
        return self.a_side & self.b_side


def connected_components(g: Multigraph, active_edges: Iterable[int]) -> list[int]:
    """Label each vertex with the smallest vertex id in its component.

    Only edges listed in ``active_edges`` are traversable. With no active
    edges every vertex is its own component. Labels are canonical minima,
    so the result is independent of edge order.
    """
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for eid in active_edges:
        u, v = g.edges[eid]
        if u == v:
            continue
        ru, rv = find(u), find(v)
        if ru != rv:
            # keep the smaller id as the representative
            if ru < rv:
                parent[rv] = ru
            else:
                parent[ru] = rv
    return [find(v) for v in range(g.n)]


def reaches(
    g: Multigraph,
    active_edges: Iterable[int],
    source: int,
    targets: Iterable[int],
) -> bool:
    """True iff some target shares a component with the source.

    A source that is itself a target is trivially reached, even with no
    active edges.
    """
    target_set = set(targets)
    if source in target_set:
        return True
    labels = connected_components(g, active_edges)
    src_label = labels[source]
    return any(labels[t] == src_label for t in target_set)


def verify_separation(g: Multigraph, sep: Separation) -> bool:
    """Check both separation invariants by direct edge scan.

    (i) A ∪ B covers every vertex; (ii) no edge joins A \\ B to B \\ A.
    """
    if len(sep.a_side | sep.b_side) != g.n:
        return False
    a_only = sep.a_side - sep.b_side
    b_only = sep.b_side - sep.a_side
    for u, v in g.edges:
        if (u in a_only and v in b_only) or (u in b_only and v in a_only):
            return False
    return True


def induced_edge_ids(g: Multigraph, vertices: Iterable[int]) -> list[int]:
    """Edge ids whose both endpoints lie in ``vertices``."""
    vs = set(vertices)
    return [eid for eid, (u, v) in enumerate(g.edges) if u in vs and v in vs]


def is_connected(g: Multigraph) -> bool:
    if g.n <= 1:
        return True
    labels = connected_components(g, range(g.m))
    return all(lab == labels[0] for lab in labels)


def simple_adjacency(g: Multigraph) -> list[set[int]]:
    """Neighbor sets with parallel edges collapsed and self-loops dropped."""
    adj: list[set[int]] = [set() for _ in range(g.n)]
    for u, v in g.edges:
        if u != v:
            adj[u].add(v)
            adj[v].add(u)
    return adj


def edge_multiset(edges: Sequence[tuple[int, int]]) -> dict[tuple[int, int], int]:
    """Multiset of endpoint pairs in canonical (min, max) form."""
    out: dict[tuple[int, int], int] = {}
    for u, v in edges:
        key = (u, v) if u <= v else (v, u)
        out[key] = out.get(key, 0) + 1
    return out
