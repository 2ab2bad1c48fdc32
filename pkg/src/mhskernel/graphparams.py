"""Incidence-graph parameters: Dilworth number, neighborhood diversity, matching.

These are the verification-side parameters: the reduced size reachable by
the edge/vertex deletion rules is bounded by ``2 * alpha * dilworth`` of
the incidence graph, and the engines' round count is bounded by its
matching number plus one.  Everything here is exact and meant for desk
scale, not production preprocessing.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .instance import Hypergraph


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on nodes ``0..num_nodes-1``."""

    adj: tuple[frozenset[int], ...]

    @classmethod
    def from_edges(cls, num_nodes: int, edges) -> "Graph":
        sets: list[set[int]] = [set() for _ in range(num_nodes)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            sets[u].add(v)
            sets[v].add(u)
        return cls(tuple(frozenset(s) for s in sets))

    @property
    def num_nodes(self) -> int:
        return len(self.adj)

    @property
    def num_edges(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    @cached_property
    def adj_bits(self) -> tuple[int, ...]:
        return tuple(sum(1 << v for v in s) for s in self.adj)


@dataclass(frozen=True)
class IncidenceGraph:
    """Bipartite incidence graph of a hypergraph.

    Vertex ``j`` of the hypergraph becomes node ``j-1``; edge ``i`` becomes
    node ``num_left + i - 1``.  An edge-side node is adjacent exactly to
    the vertices the hyperedge contains.
    """

    graph: Graph
    num_left: int  # hypergraph vertices
    num_right: int  # hypergraph edges

    def vertex_node(self, j: int) -> int:
        return j - 1

    def edge_node(self, i: int) -> int:
        return self.num_left + i - 1


def incidence_graph(h: Hypergraph) -> IncidenceGraph:
    pairs = []
    for i, members in enumerate(h.edges, start=1):
        for j in members:
            pairs.append((j - 1, h.n + i - 1))
    return IncidenceGraph(Graph.from_edges(h.n + h.m, pairs), h.n, h.m)


def vinical_leq(g: Graph, u: int, v: int) -> bool:
    """Whether u's neighborhood is contained in v's closed neighborhood."""
    if not (0 <= u < g.num_nodes and 0 <= v < g.num_nodes):
        raise IndexError(f"node out of range 0..{g.num_nodes - 1}")
    closed_v = g.adj_bits[v] | (1 << v)
    return g.adj_bits[u] & ~closed_v == 0


def _comparability_classes(g: Graph) -> tuple[list[list[int]], list[list[bool]]]:
    """Group mutually comparable nodes and return the strict class order.

    The containment relation above is a preorder; nodes comparable in both
    directions collapse into one class (such a class is itself a chain).
    The induced relation between distinct classes is a strict partial
    order, returned as a dense boolean matrix over class indices.
    """
    n = g.num_nodes
    leq = [[vinical_leq(g, u, v) for v in range(n)] for u in range(n)]
    class_of = [-1] * n
    classes: list[list[int]] = []
    for u in range(n):
        if class_of[u] >= 0:
            continue
        cls = len(classes)
        classes.append([u])
        class_of[u] = cls
        for v in range(u + 1, n):
            if class_of[v] < 0 and leq[u][v] and leq[v][u]:
                class_of[v] = cls
                classes[cls].append(v)
    k = len(classes)
    below = [[False] * k for _ in range(k)]
    for a in range(k):
        for b in range(k):
            if a != b and leq[classes[a][0]][classes[b][0]]:
                below[a][b] = True
    return classes, below


def dilworth_number(g: Graph) -> int:
    """Minimum number of chains of the neighborhood-containment preorder
    covering all nodes; equals the largest antichain.  0 for the empty graph.

    Computed as a minimum path cover of the quotient order: number of
    classes minus a maximum matching of the split comparability graph.
    """
    if g.num_nodes == 0:
        return 0
    classes, below = _comparability_classes(g)
    k = len(classes)
    adjacency = {a: [b for b in range(k) if below[a][b]] for a in range(k)}
    return k - _hopcroft_karp(list(range(k)), adjacency)


def neighborhood_diversity(g: Graph) -> int:
    """Number of classes of nodes with identical neighborhoods up to each
    other (adjacent twins and non-adjacent twins both collapse)."""
    n = g.num_nodes
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in range(n):
        bu = g.adj_bits[u]
        for v in range(u + 1, n):
            if bu & ~(1 << v) == g.adj_bits[v] & ~(1 << u):
                parent[find(u)] = find(v)
    return len({find(x) for x in range(n)})


def _bipartition(g: Graph) -> tuple[list[int], list[int]]:
    color = [-1] * g.num_nodes
    left, right = [], []
    for start in range(g.num_nodes):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    raise ValueError("graph is not bipartite")
    for u in range(g.num_nodes):
        (left if color[u] == 0 else right).append(u)
    return left, right


def _hopcroft_karp(left: list[int], adjacency: dict[int, list[int]]) -> int:
    """Layered augmenting-path maximum matching; deterministic in node order."""
    INF = float("inf")
    match_l: dict[int, int | None] = {u: None for u in left}
    match_r: dict[int, int | None] = {}
    size = 0
    while True:
        dist: dict[int, float] = {}
        queue = deque()
        for u in left:
            if match_l[u] is None:
                dist[u] = 0
                queue.append(u)
        reachable_free = False
        while queue:
            u = queue.popleft()
            for v in adjacency[u]:
                w = match_r.get(v)
                if w is None:
                    reachable_free = True
                elif w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if not reachable_free:
            return size

        def try_augment(u: int) -> bool:
            for v in adjacency[u]:
                w = match_r.get(v)
                if w is None or (dist.get(w) == dist[u] + 1 and try_augment(w)):
                    match_l[u] = v
                    match_r[v] = u
                    return True
            dist[u] = INF
            return False

        for u in left:
            if match_l[u] is None and try_augment(u):
                size += 1


def matching_number(g: Graph) -> int:
    """Maximum number of pairwise disjoint edges; rejects non-bipartite input."""
    left, _ = _bipartition(g)
    adjacency = {u: sorted(g.adj[u]) for u in left}
    return _hopcroft_karp(left, adjacency)


def kernel_bound(h: Hypergraph) -> int:
    """Size bound ``2 * alpha * dilworth(incidence graph)`` guaranteed for
    the reduced instance after one edge phase followed by one vertex phase."""
    if h.n == 0 and h.m == 0:
        return 0
    return 2 * h.alpha * dilworth_number(incidence_graph(h).graph)
