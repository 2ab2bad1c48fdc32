import pytest

from mhskernel import (
    ActiveInstance,
    Hypergraph,
    generate_random,
    incidence_matrix,
    matching_number,
    incidence_graph,
    md_applicable,
    par_kernelize,
    par_reduce_edges,
    par_reduce_vertices,
    solve_opt,
    supersedes,
)

from conftest import brute_force_opt, singletons


def test_edge_phase_tie_breaks_duplicates():
    h = Hypergraph(1, ((1,), (1,)), (1, 1))
    keep = par_reduce_edges(incidence_matrix(h), h.demand)
    assert keep == [True, False]


def test_edge_phase_ce_deletes_nothing(ce):
    keep = par_reduce_edges(incidence_matrix(ce), ce.demand)
    assert keep == [True, True, True]


def test_edge_phase_one_way_supersedence():
    h = Hypergraph.from_edges(4, [[1, 2, 3], [3, 4]], [3, 1])
    keep = par_reduce_edges(incidence_matrix(h), h.demand)
    assert keep == [True, False]


def test_edge_phase_se_variant():
    # containment with lower demand must NOT fire under the superedge rule
    h = Hypergraph.from_edges(3, [[1, 2], [1, 2, 3]], [1, 2])
    assert par_reduce_edges(incidence_matrix(h), h.demand, rule="se") == [True, True]
    equal = Hypergraph.from_edges(3, [[1, 2], [1, 2, 3]], [2, 2])
    assert par_reduce_edges(incidence_matrix(equal), equal.demand, rule="se") == [True, False]
    with pytest.raises(ValueError):
        par_reduce_edges(incidence_matrix(h), h.demand, rule="w2")


def test_vertex_phase_dominated_tail():
    h = Hypergraph.from_edges(4, [[1, 2, 3], [1, 2, 3, 4]], [2, 2])
    keep = par_reduce_vertices(incidence_matrix(h), h.demand)
    assert keep == [True, True, False, False]


def test_vertex_phase_ce_protects_vertex_three(ce):
    keep = par_reduce_vertices(incidence_matrix(ce), ce.demand)
    assert keep[2]  # vertex 3 has one dominator against demand two
    assert keep[:2] == [True, True]
    # vertices 4 and 5 each have two dominators against demand two
    assert keep[3] is False and keep[4] is False


def test_vertex_phase_unit_demand_domination():
    h = Hypergraph.from_edges(3, [[1, 2], [1, 3]], [1, 1])
    # every edge with vertex 2 or 3 also has vertex 1
    keep = par_reduce_vertices(incidence_matrix(h), h.demand)
    assert keep == [True, False, False]


def test_vertex_phase_orphans_go():
    h = Hypergraph(3, ((2,),), (1,))
    keep = par_reduce_vertices(incidence_matrix(h), h.demand)
    assert keep == [False, True, False]


def test_kernelize_fixpoints(ce):
    run = par_kernelize(singletons(5))
    assert run.alive_vertices == (1, 2, 3, 4, 5)
    assert run.alive_edges == (1, 2, 3, 4, 5)
    assert run.report.rounds == 1

    run = par_kernelize(ce)
    assert run.alive_vertices == (1, 2, 3)
    assert run.alive_edges == (1, 2)
    assert run.report.rounds == 3
    assert run.report.deleted_by_rule["md"] == 2
    assert run.report.deleted_by_rule["dp"] == 1
    assert run.hypergraph == Hypergraph(3, ((1, 2), (2, 3)), (2, 2))

    dup = Hypergraph(1, ((1,), (1,)), (1, 1))
    run = par_kernelize(dup)
    assert run.alive_edges == (1,)
    assert run.report.rounds == 2


def test_kernelize_rejects_infeasible():
    with pytest.raises(ValueError):
        par_kernelize(Hypergraph(1, ((1,),), (2,)))


def test_kernelize_se_variant_is_weaker():
    # demand pushing removes the partially overlapped edge; containment cannot
    h = Hypergraph.from_edges(4, [[1, 2, 3], [3, 4]], [3, 1])
    strong = par_kernelize(h)
    weak = par_kernelize(h, rule="se")
    assert strong.alive_edges == (1,)
    assert weak.alive_edges == (1, 2)
    assert weak.report.deleted_by_rule["se"] == 0
    assert weak.report.deleted_by_rule["md"] >= 1  # vertex 4 is still dominated


@pytest.mark.parametrize("seed", range(40))
def test_worker_counts_agree(seed):
    h = generate_random(n=3 + seed % 20, m=3 + (7 * seed) % 20, p=0.4, alpha=1 + seed % 3, seed=seed)
    runs = [par_kernelize(h, workers=w) for w in (1, 4, 8)]
    assert runs[0].alive_vertices == runs[1].alive_vertices == runs[2].alive_vertices
    assert runs[0].alive_edges == runs[1].alive_edges == runs[2].alive_edges
    assert runs[0].hypergraph == runs[1].hypergraph == runs[2].hypergraph


@pytest.mark.parametrize("seed", range(30))
def test_matrix_product_path_agrees_with_popcount(seed):
    h = generate_random(n=2 + seed % 15, m=2 + (3 * seed) % 15, p=0.5, alpha=2, seed=seed)
    A = incidence_matrix(h)
    assert par_reduce_edges(A, h.demand) == par_reduce_edges(A, h.demand, use_matrix_product=True)
    assert par_reduce_vertices(A, h.demand) == par_reduce_vertices(A, h.demand, use_matrix_product=True)
    fast = par_kernelize(h)
    slow = par_kernelize(h, use_matrix_product=True)
    assert fast.alive_vertices == slow.alive_vertices
    assert fast.alive_edges == slow.alive_edges


@pytest.mark.parametrize("seed", range(25))
def test_intersection_counts_match_triple_loop(seed):
    h = generate_random(n=2 + seed % 10, m=2 + seed % 10, p=0.5, alpha=2, seed=seed)
    A = incidence_matrix(h)
    rows = A.row_bitsets
    cols = A.col_bitsets
    for i in range(h.m):
        for j in range(h.m):
            naive = sum(
                1 for k in range(1, h.n + 1) if k in h.edges[i] and k in h.edges[j]
            )
            assert (rows[i] & rows[j]).bit_count() == naive
    for i in range(h.n):
        for j in range(h.n):
            naive = sum(
                1
                for k in range(h.m)
                if (i + 1) in h.edges[k] and (j + 1) in h.edges[k]
            )
            assert (cols[i] & cols[j]).bit_count() == naive


@pytest.mark.parametrize("seed", range(40))
def test_phases_are_exhaustive(seed):
    h = generate_random(n=2 + seed % 12, m=2 + (5 * seed) % 12, p=0.45, alpha=1 + seed % 3, seed=seed)
    run = par_kernelize(h)
    survivors = ActiveInstance(run.hypergraph)
    for i in range(1, run.hypergraph.m + 1):
        for j in range(1, run.hypergraph.m + 1):
            if i != j:
                assert not supersedes(survivors, i, j)
    for j in range(1, run.hypergraph.n + 1):
        assert not md_applicable(survivors, j)


@pytest.mark.parametrize("seed", range(60))
def test_optimum_preserved(seed):
    h = generate_random(n=1 + seed % 14, m=1 + (3 * seed) % 12, p=0.4, alpha=1 + seed % 3, seed=seed)
    run = par_kernelize(h)
    assert brute_force_opt(h) == brute_force_opt(run.hypergraph)
    assert solve_opt(h).cardinality == solve_opt(run.hypergraph).cardinality


@pytest.mark.parametrize("seed", range(40))
def test_round_bound(seed):
    h = generate_random(n=2 + seed % 16, m=2 + (7 * seed) % 16, p=0.35, alpha=1 + seed % 3, seed=seed)
    run = par_kernelize(h)
    assert run.report.rounds <= matching_number(incidence_graph(h).graph) + 1


@pytest.mark.parametrize("seed", range(30))
def test_deletion_relation_is_acyclic(seed):
    # arcs i -> j when i may cause j's deletion under the tie-break
    h = generate_random(n=8, m=8, p=0.5, alpha=2, seed=seed)
    a = ActiveInstance(h)

    def relates(i, j):
        return supersedes(a, i, j)

    arcs = {
        (i, j)
        for i in range(1, h.m + 1)
        for j in range(1, h.m + 1)
        if i != j and relates(i, j) and (not relates(j, i) or i < j)
    }
    order: list[int] = []
    state = {i: 0 for i in range(1, h.m + 1)}

    def visit(u):
        assert state[u] != 1, "cycle in deletion relation"
        if state[u] == 0:
            state[u] = 1
            for x, y in arcs:
                if x == u:
                    visit(y)
            state[u] = 2
            order.append(u)

    for u in range(1, h.m + 1):
        visit(u)
