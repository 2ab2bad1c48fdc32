"""Shared instances and independent oracles.

Everything here is deliberately naive: subset enumeration, triple-loop
counting, recursive matching search.  Oracles never reuse the code paths
they check.
"""

from __future__ import annotations

import random
from itertools import combinations

import pytest

from mhskernel import Graph, Hypergraph, parse_instance, vinical_leq

# Three edges {1,2}, {2,3,4}, {2,3,5}, all demanding two hits.  The
# canonical regression instance: vertex 3 must never be deleted by the
# domination rule (doing so raises the optimum from 3 to 4).
CE_TEXT = """\
p mhs 5 3
e 2 1 2
e 2 2 3 4
e 2 2 3 5
"""


@pytest.fixture
def ce() -> Hypergraph:
    return parse_instance(CE_TEXT)


def singletons(n: int) -> Hypergraph:
    """n disjoint singleton edges with unit demands (the tight family)."""
    return Hypergraph(n, tuple((j,) for j in range(1, n + 1)), (1,) * n)


def brute_force_opt(h: Hypergraph) -> int | None:
    """Minimum hitting set size by subset enumeration; None if infeasible."""
    universe = list(range(1, h.n + 1))
    for size in range(h.n + 1):
        for subset in combinations(universe, size):
            picked = set(subset)
            if all(len(picked.intersection(e)) >= f for e, f in zip(h.edges, h.demand)):
                return size
    return None


def brute_force_feasible(h: Hypergraph) -> bool:
    full = set(range(1, h.n + 1))
    return all(len(full.intersection(e)) >= f for e, f in zip(h.edges, h.demand))


def naive_edge_intersections(h: Hypergraph, edge_alive, vertex_alive):
    """|e_i ∩ e_j| over alive items, by plain set arithmetic."""
    members = [
        {v for v in e if vertex_alive[v - 1]} if edge_alive[i] else set()
        for i, e in enumerate(h.edges)
    ]
    return [
        [len(members[i] & members[j]) if edge_alive[i] and edge_alive[j] else None
         for j in range(h.m)]
        for i in range(h.m)
    ]


def naive_vertex_intersections(h: Hypergraph, edge_alive, vertex_alive):
    """|E(v_i) ∩ E(v_j)| over alive items."""
    incident = [
        {i for i in h.vertex_edges[j] if edge_alive[i - 1]} if vertex_alive[j] else set()
        for j in range(h.n)
    ]
    return [
        [len(incident[i] & incident[j]) if vertex_alive[i] and vertex_alive[j] else None
         for j in range(h.n)]
        for i in range(h.n)
    ]


def brute_force_matching(g: Graph) -> int:
    """Maximum matching size by exhaustive search over edge subsets."""
    edges = sorted({(min(u, v), max(u, v)) for u in range(g.num_nodes) for v in g.adj[u]})

    def grow(idx: int, used: set[int]) -> int:
        if idx == len(edges):
            return 0
        best = grow(idx + 1, used)
        u, v = edges[idx]
        if u not in used and v not in used:
            used |= {u, v}
            best = max(best, 1 + grow(idx + 1, used))
            used -= {u, v}
        return best

    return grow(0, set())


def brute_force_max_antichain(g: Graph) -> int:
    """Largest set of pairwise incomparable nodes, by subset enumeration."""
    n = g.num_nodes
    best = 0
    for mask in range(1 << n):
        nodes = [u for u in range(n) if mask >> u & 1]
        if len(nodes) <= best:
            continue
        ok = all(
            not vinical_leq(g, u, v) and not vinical_leq(g, v, u)
            for a, u in enumerate(nodes)
            for v in nodes[a + 1 :]
        )
        if ok:
            best = len(nodes)
    return best


def random_graph(seed: int, max_nodes: int = 12) -> Graph:
    rng = random.Random(seed)
    n = rng.randint(1, max_nodes)
    p = rng.choice([0.15, 0.3, 0.5, 0.8])
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, pairs)


def nested_neighborhood_graph(n: int) -> Graph:
    """2n nodes added as (isolated, adjacent-to-all-before) pairs.

    One neighborhood-containment chain covers everything, yet all node
    pairs except the first two are pairwise distinguishable, so the
    diversity count is 2n - 1 while the chain-cover number is 1.
    """
    pairs = []
    added: list[int] = []
    for i in range(n):
        u = 2 * i
        added.append(u)
        v = 2 * i + 1
        pairs.extend((v, w) for w in added)
        added.append(v)
    return Graph.from_edges(2 * n, pairs)


def disjoint_union(a: Hypergraph, b: Hypergraph) -> Hypergraph:
    edges = a.edges + tuple(tuple(v + a.n for v in e) for e in b.edges)
    return Hypergraph(a.n + b.n, edges, a.demand + b.demand)
