import random
from itertools import combinations

import pytest

from pvcdim import (
    CapacityError,
    Graph,
    Hypergraph,
    InputError,
    build_hypergraph,
    class_count,
    dual,
    is_shattered,
    is_twin_free,
    max_degree,
    neighborhood_hypergraph,
    remove_twins,
    trace_profile,
    vertices_of,
)
from pvcdim.generate import random_hypergraph


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def power_set_hypergraph(n):
    return Hypergraph(n, tuple(range(1 << n)))


def small_family_hypergraph(n, max_size):
    """All subsets of {1..n} of cardinality at most max_size, as edges."""
    edges = [m for m in range(1 << n) if m.bit_count() <= max_size]
    return Hypergraph(n, tuple(edges))


class TestBuild:
    def test_direct_construction(self):
        H = build_hypergraph(3, [{1, 2}, {2}, set()])
        assert H.m == 3
        assert H.edge_vertices(1) == (1, 2)
        assert H.edge_vertices(3) == ()

    def test_empty(self):
        H = build_hypergraph(0, [])
        assert H.n == 0 and H.m == 0

    def test_duplicates_retained(self):
        H = build_hypergraph(2, [{1}, {1}, {2}])
        assert H.m == 3

    def test_bad_index_names_position(self):
        with pytest.raises(InputError, match="edge 2"):
            build_hypergraph(3, [{1}, {4}])

    def test_capacity(self):
        with pytest.raises(CapacityError):
            Hypergraph(5000, ())


class TestTraceProfile:
    def test_p3_single_vertex(self):
        H = neighborhood_hypergraph(path_graph(3))
        prof = trace_profile(H, {1})
        assert prof.class_count == 2
        assert prof.traces == (0, 1)

    def test_empty_solution_single_class(self):
        H = build_hypergraph(4, [{1}, {2, 3}, {4}])
        assert trace_profile(H, set()).class_count == 1

    def test_full_shatter(self):
        H = Hypergraph(2, (0b00, 0b01, 0b10, 0b11))
        assert trace_profile(H, {1, 2}).class_count == 4

    def test_representatives_are_lowest(self):
        H = build_hypergraph(2, [{1}, {1}, {2}, {1}])
        prof = trace_profile(H, {1})
        # traces 0 (from edge 3) and {1} (first seen at edge 1)
        assert prof.traces == (0, 1)
        assert prof.representatives == (3, 1)

    def test_mask_argument(self):
        H = build_hypergraph(3, [{1, 2}, {3}])
        assert class_count(H, 0b011) == class_count(H, {1, 2})


class TestShattering:
    def test_power_set_shatters_itself(self):
        assert is_shattered(power_set_hypergraph(3), {1, 2, 3})

    def test_small_family_no_pair_shattered(self):
        H = small_family_hypergraph(4, 1)
        for pair in combinations(range(1, 5), 2):
            assert not is_shattered(H, set(pair))

    def test_empty_set_shattered_iff_edges_exist(self):
        assert is_shattered(build_hypergraph(1, [{1}]), set())
        assert not is_shattered(build_hypergraph(1, []), set())


class TestRemoveTwins:
    def test_duplicate_edge_dropped(self):
        H = build_hypergraph(2, [{1}, {1}, {2}])
        reduced, vmap, emap = remove_twins(H)
        assert reduced.m == 2
        assert emap == (1, 3)
        assert vmap == (1, 2)

    def test_p2_collapses_to_a_point(self):
        # Enumerating by hand: both closed neighborhoods are {1,2}, so the
        # edges are twins and then the two vertex columns coincide.
        H = neighborhood_hypergraph(path_graph(2))
        reduced, vmap, emap = remove_twins(H)
        assert (reduced.n, reduced.m) == (1, 1)
        assert vmap == (1,) and emap == (1,)

    def test_idempotent_on_twin_free(self):
        H = neighborhood_hypergraph(path_graph(3))
        reduced, vmap, emap = remove_twins(H)
        assert reduced == H
        assert vmap == (1, 2, 3) and emap == (1, 2, 3)


class TestDual:
    def test_transpose_by_hand(self):
        H = build_hypergraph(2, [{1}, {1, 2}])
        D = dual(H)
        assert D.n == 2 and D.m == 2
        assert D.edge_vertices(1) == (1, 2)  # vertex 1 was in both edges
        assert D.edge_vertices(2) == (2,)

    def test_empty(self):
        D = dual(build_hypergraph(0, []))
        assert D.n == 0 and D.m == 0

    def test_involution_bit_exact(self):
        for seed in range(20):
            H = random_hypergraph(7, 9, 0.4, seed)
            assert dual(dual(H)).edges == H.edges


class TestNeighborhoodHypergraph:
    def test_p3(self):
        H = neighborhood_hypergraph(path_graph(3))
        assert [vertices_of(e) for e in H.edges] == [(1, 2), (1, 2, 3), (2, 3)]

    def test_isolated_vertex(self):
        H = neighborhood_hypergraph(Graph.from_edges(1, []))
        assert H.edges == (1,)

    def test_triangle_all_twins(self):
        K3 = Graph.from_edges(3, [(1, 2), (2, 3), (1, 3)])
        H = neighborhood_hypergraph(K3)
        assert len(set(H.edges)) == 1


class TestMaxDegree:
    def test_basic(self):
        assert max_degree(build_hypergraph(2, [{1, 2}, {1}])) == 2

    def test_empty(self):
        assert max_degree(build_hypergraph(3, [])) == 0

    def test_cubic_neighborhoods(self):
        K4 = Graph.from_edges(4, [(u, v) for u in range(1, 5)
                                  for v in range(u + 1, 5)])
        assert max_degree(neighborhood_hypergraph(K4)) == 4


class TestInvariants:
    """Randomized checks of the structural properties every solver leans on."""

    def test_monotone_class_count_under_nested_sets(self):
        rng = random.Random("monotone")
        for trial in range(150):
            H = random_hypergraph(8, rng.randint(1, 14), 0.4, rng.random())
            small = {v for v in range(1, 9) if rng.random() < 0.3}
            big = small | {v for v in range(1, 9) if rng.random() < 0.4}
            assert class_count(H, small) <= class_count(H, big)

    def test_class_count_cap(self):
        rng = random.Random("cap")
        for trial in range(100):
            H = random_hypergraph(8, rng.randint(1, 12), 0.5, rng.random())
            C = {v for v in range(1, 9) if rng.random() < 0.4}
            assert 1 <= class_count(H, C) <= min(1 << len(C), H.m)

    def test_twin_reduction_preserves_class_counts(self):
        rng = random.Random("twins")
        for trial in range(100):
            H = random_hypergraph(7, rng.randint(1, 12), 0.5, rng.random())
            reduced, vmap, _ = remove_twins(H)
            assert is_twin_free(reduced)
            back = {old: new for new, old in enumerate(vmap, 1)}
            C_old = [v for v in vmap if rng.random() < 0.5]
            C_new = [back[v] for v in C_old]
            assert class_count(H, C_old) == class_count(reduced, C_new)

    def test_degree_bound_exhaustive(self):
        rng = random.Random("degree")
        for trial in range(60):
            n = rng.randint(2, 7)
            H = random_hypergraph(n, rng.randint(1, 12), 0.5, rng.random())
            delta = max_degree(H)
            for size in range(min(n, 4) + 1):
                for combo in combinations(range(1, n + 1), size):
                    assert class_count(H, set(combo)) <= size * (delta + 1) // 2 + 1

    def test_sauer_forces_a_shattered_set(self):
        rng = random.Random("sauer")
        from math import comb
        for trial in range(80):
            n = rng.randint(3, 8)
            H = random_hypergraph(n, rng.randint(2, 20), 0.5, rng.random())
            distinct = H.distinct_edge_count()
            d = 0
            while distinct > sum(comb(n, i) for i in range(d + 1)):
                d += 1
            # Brute-force oracle: some d-set must be shattered.
            if d:
                assert any(is_shattered(H, set(c))
                           for c in combinations(range(1, n + 1), d))


class TestGraphValidation:
    def test_self_loop_rejected(self):
        with pytest.raises(InputError):
            Graph.from_edges(2, [(1, 1)])

    def test_asymmetric_adjacency_rejected(self):
        with pytest.raises(InputError):
            Graph(2, ((2,), ()))

    def test_edge_list_round(self):
        G = Graph.from_edges(4, [(2, 1), (3, 4), (1, 3)])
        assert G.edge_list() == [(1, 2), (1, 3), (3, 4)]
