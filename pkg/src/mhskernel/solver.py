"""Exact Multiple Hitting Set solver (branch and bound).

Ground truth for optimum-preservation checks and the default lower-bound
provider for the subinstance-based edge deletion rule.  Deterministic:
every branching choice is tie-broken by index.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .instance import Hypergraph

DEFAULT_NODE_LIMIT = 10_000_000


class SolveStatus(str, Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    BUDGET_EXCEEDED = "budget-exceeded"  # search node budget exhausted


@dataclass(frozen=True)
class Solution:
    status: SolveStatus
    chosen: frozenset[int]  # 1-based vertex ids
    cardinality: int
    nodes: int = 0


class _NodeBudget(Exception):
    pass


def verify_solution(h: Hypergraph, chosen: Iterable[int]) -> bool:
    """Whether every edge's demand is met by the given vertex set."""
    picked = set(chosen)
    for v in picked:
        if not 1 <= v <= h.n:
            raise IndexError(f"vertex {v} out of range 1..{h.n}")
    mask = 0
    for v in picked:
        mask |= 1 << (v - 1)
    return all((bits & mask).bit_count() >= f for bits, f in zip(h.edge_bits, h.demand))


def _greedy_cover(edge_bits: list[int], demand: list[int], n: int) -> int:
    """Feasible solution mask by repeatedly taking the vertex hitting the
    most unsatisfied edges (initial upper bound for the search)."""
    residual = list(demand)
    chosen = 0
    while True:
        best_v, best_gain = -1, 0
        for v in range(n):
            if chosen >> v & 1:
                continue
            gain = sum(1 for bits, r in zip(edge_bits, residual) if r > 0 and bits >> v & 1)
            if gain > best_gain:
                best_v, best_gain = v, gain
        if best_v < 0:
            return chosen
        chosen |= 1 << best_v
        for i, bits in enumerate(edge_bits):
            if bits >> best_v & 1 and residual[i] > 0:
                residual[i] -= 1


def solve_opt(h: Hypergraph, node_limit: int = DEFAULT_NODE_LIMIT) -> Solution:
    """Minimum-cardinality multiple hitting set of ``h``.

    Returns an infeasible status when some edge demands more hits than it
    has vertices.  Exceeding ``node_limit`` search nodes is reported as a
    distinct status rather than a silently suboptimal answer.
    """
    for bits, f in zip(h.edge_bits, h.demand):
        if f > bits.bit_count():
            return Solution(SolveStatus.INFEASIBLE, frozenset(), 0)
    edge_bits = list(h.edge_bits)
    demand = list(h.demand)
    n = h.n

    best_mask = _greedy_cover(edge_bits, demand, n)
    best_size = best_mask.bit_count()
    nodes = 0

    def packing_bound(residual: list[int], avail: int) -> int:
        # Disjoint edges each need `residual` distinct vertices, so their
        # residual demands add up to a valid lower bound.
        used = 0
        bound = 0
        for bits, r in zip(edge_bits, residual):
            if r <= 0:
                continue
            live = bits & avail
            if live & used == 0:
                bound += r
                used |= live
        return bound

    def search(count: int, residual: list[int], avail: int, picked: int) -> None:
        nonlocal best_mask, best_size, nodes
        nodes += 1
        if nodes > node_limit:
            raise _NodeBudget
        # Select the tightest unsatisfied edge; none means `picked` is feasible.
        target, target_ratio = -1, -1.0
        for i, r in enumerate(residual):
            if r <= 0:
                continue
            live = (edge_bits[i] & avail).bit_count()
            if r > live:
                return  # demand no longer satisfiable on this branch
            ratio = r / live
            if ratio > target_ratio:
                target, target_ratio = i, ratio
        if target < 0:
            if count < best_size:
                best_mask, best_size = picked, count
            return
        if count + packing_bound(residual, avail) >= best_size:
            return
        # Branch on the highest-degree available vertex of the target edge.
        candidates = edge_bits[target] & avail
        branch_v, branch_deg = -1, -1
        cand = candidates
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            deg = sum(1 for bits, r in zip(edge_bits, residual) if r > 0 and bits >> v & 1)
            if deg > branch_deg:
                branch_v, branch_deg = v, deg
            cand ^= low
        vbit = 1 << branch_v
        taken = [r - 1 if bits & vbit and r > 0 else r for bits, r in zip(edge_bits, residual)]
        search(count + 1, taken, avail & ~vbit, picked | vbit)
        search(count, residual, avail & ~vbit, picked)

    status = SolveStatus.OPTIMAL
    try:
        search(0, demand, (1 << n) - 1 if n else 0, 0)
    except _NodeBudget:
        status = SolveStatus.BUDGET_EXCEEDED
    chosen = frozenset(v + 1 for v in range(n) if best_mask >> v & 1)
    return Solution(status, chosen, len(chosen), nodes)
