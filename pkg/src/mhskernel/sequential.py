"""Incrementally maintained sequential reduction engine.

Produces exactly the parallel engine's fixpoint, but instead of rebuilding
matrices every round it maintains pairwise intersection counts under
deletion and narrows each phase's scan with candidate lists:

* deleting an edge can only newly enable vertex domination for that edge's
  vertices, so they are the only new vertex candidates;
* deleting a vertex can only newly enable supersedence *by* the edges that
  contained it, so those are the only new superseder candidates.

Candidate lists may hold duplicates and dead indices (cheap insertion
keeps the amortized accounting: each item enters once at startup plus once
per incident deletion); scans skip dead entries.  Rows and columns of dead
items go stale rather than being zeroed; they are never read.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .instance import Hypergraph, instance_size, validate_feasibility
from .report import KernelReport, KernelRun
from .rules import ActiveInstance


@dataclass
class ReductionState:
    """Intersection-count matrices, alive flags and candidate lists.

    Between phase calls the following holds for the hypergraph restricted
    to alive items: ``edge_inter[i][j]`` is the intersection size of edges
    ``i+1`` and ``j+1`` (diagonal: edge size); ``vertex_inter[i][j]`` is
    the number of shared edges of vertices ``i+1`` and ``j+1`` (diagonal:
    degree); ``cand_edges`` contains every edge currently able to
    supersede another; ``cand_vertices`` contains every vertex currently
    deletable by domination.  Demands are read-only here.
    """

    active: ActiveInstance
    edge_inter: np.ndarray
    vertex_inter: np.ndarray
    cand_edges: list[int]
    cand_vertices: list[int]
    insertions: int = 0  # total candidate-list appends, for work accounting

    @property
    def edge_alive(self) -> list[bool]:
        return self.active.edge_alive

    @property
    def vertex_alive(self) -> list[bool]:
        return self.active.vertex_alive


def init_state(h: Hypergraph, demand=None) -> ReductionState:
    """Fill both matrices by pair counting and start with full candidate lists.

    Each vertex contributes one unit to every pair of its edges; each edge
    contributes one unit to every pair of its vertices.
    """
    active = ActiveInstance(h, demand)
    edge_inter = np.zeros((h.m, h.m), dtype=np.int32)
    for incident in h.vertex_edges:
        idx = np.fromiter((i - 1 for i in incident), dtype=np.intp, count=len(incident))
        edge_inter[np.ix_(idx, idx)] += 1
    vertex_inter = np.zeros((h.n, h.n), dtype=np.int32)
    for members in h.edges:
        idx = np.fromiter((j - 1 for j in members), dtype=np.intp, count=len(members))
        vertex_inter[np.ix_(idx, idx)] += 1
    state = ReductionState(
        active=active,
        edge_inter=edge_inter,
        vertex_inter=vertex_inter,
        cand_edges=list(range(1, h.m + 1)),
        cand_vertices=list(range(1, h.n + 1)),
    )
    state.insertions = h.m + h.n
    return state


def seq_reduce_edges(state: ReductionState) -> int:
    """One exhaustive demand-pushing phase; returns the deletion count.

    Candidates are scanned against a fixed snapshot (deletions are queued
    and committed afterwards), so the deleted set equals the parallel edge
    phase's.  Committing a deletion decrements the vertex co-occurrence
    counts over the edge's alive vertex pairs and queues those vertices as
    domination candidates.
    """
    active = state.active
    inter = state.edge_inter
    demand = active.demand
    queued: list[int] = []
    superseders = [i for i in dict.fromkeys(state.cand_edges) if active.edge_alive[i - 1]]
    for j in active.alive_edge_ids():
        fj = demand[j - 1]
        jj = int(inter[j - 1, j - 1])
        for i in superseders:
            if i == j:
                continue
            ij = int(inter[i - 1, j - 1])
            fwd = demand[i - 1] - (int(inter[i - 1, i - 1]) - ij) >= fj
            if not fwd:
                continue
            back = fj - (jj - ij) >= demand[i - 1]
            if not back or i < j:
                queued.append(j)
                break
    for j in queued:
        active.edge_alive[j - 1] = False
        members = [v - 1 for v in active.edge_members(j)]
        state.vertex_inter[np.ix_(members, members)] -= 1
        for v in members:
            state.cand_vertices.append(v + 1)
        state.insertions += len(members)
    state.cand_edges.clear()
    return len(queued)


def seq_reduce_vertices(state: ReductionState) -> int:
    """One exhaustive multiple-domination phase; returns the deletion count.

    For each candidate the needed dominator count starts at the largest
    demand among its alive edges (zero, hence immediate deletion, for a
    vertex left in no edge) and is counted down over the alive dominators
    under the usual index tie-break.  Committing a deletion decrements the
    edge intersection counts over the vertex's alive incident pairs and
    queues those edges as superseder candidates.
    """
    active = state.active
    inter = state.vertex_inter
    demand = active.demand
    queued: list[int] = []
    scheduled = [False] * active.h.n
    for j in dict.fromkeys(state.cand_vertices):
        if not active.vertex_alive[j - 1] or scheduled[j - 1]:
            continue
        need = max((demand[i - 1] for i in active.vertex_incidences(j)), default=0)
        if need == 0:
            queued.append(j)
            scheduled[j - 1] = True
            continue
        jj = int(inter[j - 1, j - 1])
        for i in range(1, active.h.n + 1):
            if i == j or not active.vertex_alive[i - 1]:
                continue
            ij = int(inter[i - 1, j - 1])
            if ij == jj and (ij != int(inter[i - 1, i - 1]) or i < j):
                need -= 1
                if need == 0:
                    queued.append(j)
                    scheduled[j - 1] = True
                    break
    for j in queued:
        active.vertex_alive[j - 1] = False
        incident = [i - 1 for i in active.vertex_incidences(j)]
        state.edge_inter[np.ix_(incident, incident)] -= 1
        for i in incident:
            state.cand_edges.append(i + 1)
        state.insertions += len(incident)
    state.cand_vertices.clear()
    return len(queued)


def seq_kernelize(h: Hypergraph, demand=None) -> KernelRun:
    """Alternate the two phases on one incrementally maintained state until
    neither deletes anything; output matches the parallel engine exactly."""
    check = validate_feasibility(h)
    if not check:
        raise ValueError(f"instance is infeasible: {check.reason}")
    report = KernelReport(n_before=h.n, m_before=h.m, size_before=instance_size(h))
    started = time.perf_counter()
    state = init_state(h, demand)
    while True:
        report.rounds += 1
        dropped_edges = seq_reduce_edges(state)
        dropped_vertices = seq_reduce_vertices(state)
        report.deleted_by_rule["dp"] += dropped_edges
        report.deleted_by_rule["md"] += dropped_vertices
        if dropped_edges == 0 and dropped_vertices == 0:
            break
    report.wall_times_ms["sequential-engine"] = (time.perf_counter() - started) * 1e3
    reduced, vertex_ids, edge_ids = state.active.extract()
    report.n_after = reduced.n
    report.m_after = reduced.m
    report.size_after = instance_size(reduced)
    return KernelRun(reduced, report, tuple(vertex_ids), tuple(edge_ids))
