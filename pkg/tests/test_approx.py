import random
from itertools import combinations
from math import comb

import pytest

from pvcdim import (
    Hypergraph,
    InputError,
    approx_max_partial_vc,
    approx_max_vc_dimension,
    approx_via_double_hitting,
    build_hypergraph,
    class_count,
    double_hit_count,
    extract_shattered,
    greedy_classes,
    greedy_partial_double_hitting,
    greedy_vertex_order,
    is_shattered,
    neighborhood_hypergraph,
    sauer_threshold,
    upper_bound_classes,
    vc_dimension,
)
from pvcdim.core import Graph
from pvcdim.generate import (
    random_graph,
    random_hypergraph,
    random_linear_hypergraph,
    random_twin_free_hypergraph,
)


def path_nh(n):
    return neighborhood_hypergraph(
        Graph.from_edges(n, [(i, i + 1) for i in range(1, n)]))


def brute_max_classes(H, k):
    return max(class_count(H, set(c))
               for c in combinations(range(1, H.n + 1), k))


class TestGreedy:
    def test_p3_budget_two(self):
        # By hand: {1} gives two classes, adding vertex 3 separates all three.
        res = greedy_classes(path_nh(3), 2)
        assert res.value == 3
        assert res.witness_vertices == (1, 3)

    def test_single_edge(self):
        H = build_hypergraph(2, [{1}])
        res = greedy_classes(H, 1)
        assert res.value >= min(H.m, 2) == 1

    def test_guarantee_sweep(self):
        rng = random.Random("greedy-sweep")
        for trial in range(80):
            n = rng.randint(3, 12)
            m = rng.randint(max(4, n), min(24, 1 << n))
            H = random_twin_free_hypergraph(n, m, 0.5, rng.random())
            order = greedy_vertex_order(H, n - 1)
            mask = 0
            for k, v in enumerate(order, 1):
                mask |= 1 << (v - 1)
                assert class_count(H, mask) >= min(H.m, k + 1)

    def test_twins_rejected(self):
        with pytest.raises(InputError):
            greedy_classes(build_hypergraph(2, [{1}, {1}]), 1)
        with pytest.raises(InputError, match="twin vertices"):
            greedy_classes(build_hypergraph(3, [{1, 2}]), 1)

    def test_budget_bound(self):
        with pytest.raises(InputError):
            greedy_classes(path_nh(3), 3)


class TestUpperBound:
    def test_degree_instance(self):
        # k=2 with max degree 3 and plenty of edges: min(4, 2*4//2+1) = 4.
        H = build_hypergraph(6, [{1, 2}, {1, 3}, {1, 4}, {2, 3}, {5}, {6}, {4, 5}])
        assert upper_bound_classes(H, 2) == 4

    def test_dimension_hint(self):
        H = random_hypergraph(8, 40, 0.5, 3)
        got = upper_bound_classes(H, 3, d_hint=1)
        assert got <= sum(comb(3, i) for i in range(2)) == 4

    def test_k_zero(self):
        assert upper_bound_classes(build_hypergraph(2, [{1}]), 0) == 1

    def test_soundness_against_optimum(self):
        rng = random.Random("ub-sound")
        for trial in range(60):
            n = rng.randint(3, 9)
            H = random_hypergraph(n, rng.randint(1, 16), 0.5, rng.random())
            for k in range(min(n, 4) + 1):
                assert upper_bound_classes(H, k) >= brute_max_classes(H, k)


class TestApproxMaxPartialVc:
    def test_handles_twins_and_pads(self):
        H = build_hypergraph(5, [{1}, {1}, {1, 2}, {3}, {3}])
        res = approx_max_partial_vc(H, 3)
        assert len(res.witness_vertices) == 3
        assert res.value == class_count(H, res.witness)

    def test_matching_is_solved_optimally(self):
        # Max degree 1: the certified bound collapses to k+1 and the greedy
        # meets it, so the claimed ratio is 1.
        H = build_hypergraph(8, [{1, 2}, {3, 4}, {5, 6}, {7, 8}])
        res = approx_max_partial_vc(H, 3)
        assert res.claimed_ratio == 1
        assert res.value == brute_max_classes(H, 3)

    def test_single_budget_ratio_one(self):
        H = random_twin_free_hypergraph(6, 8, 0.5, "k1")
        res = approx_max_partial_vc(H, 1)
        assert res.value == 2 and res.upper_bound == 2

    def test_ratio_realization_sweep(self):
        rng = random.Random("ratio")
        for trial in range(60):
            n = rng.randint(4, 10)
            m = rng.randint(6, 20)
            H = random_hypergraph(n, m, 0.5, rng.random())
            k = rng.randint(1, min(4, n - 1))
            res = approx_max_partial_vc(H, k)
            opt = brute_max_classes(H, k)
            assert opt <= res.upper_bound
            assert opt * (k + 1) <= res.value * min(1 << k, m)


class TestExtractShattered:
    def test_power_set(self):
        H = Hypergraph(3, tuple(range(8)))
        cert = extract_shattered(H, 3)
        assert cert.dimension == 3 and cert.shattered == 0b111
        assert cert.verify(H)

    def test_six_distinct_edges_force_a_pair(self):
        rng = random.Random("six-edges")
        threshold = sauer_threshold(4, 2)  # 5
        for trial in range(40):
            masks = rng.sample(range(16), 6)
            H = Hypergraph(4, tuple(masks))
            assert H.distinct_edge_count() == 6 > threshold
            cert = extract_shattered(H, 2)
            assert cert.dimension == 2 and cert.verify(H)
            # brute-force confirms a shattered pair exists at all
            assert any(is_shattered(H, set(c)) for c in combinations((1, 2, 3, 4), 2))

    def test_dimension_zero(self):
        cert = extract_shattered(build_hypergraph(2, [{1}]), 0)
        assert cert.dimension == 0 and cert.verify(build_hypergraph(2, [{1}]))

    def test_threshold_not_exceeded(self):
        H = build_hypergraph(3, [{1}, {2}])
        with pytest.raises(InputError, match="Sauer threshold"):
            extract_shattered(H, 2)

    def test_certificates_verify_in_sweep(self):
        rng = random.Random("extract-sweep")
        for trial in range(60):
            n = rng.randint(3, 9)
            H = random_hypergraph(n, rng.randint(2, 24), 0.5, rng.random())
            distinct = H.distinct_edge_count()
            d = 0
            while distinct > sauer_threshold(n, d + 1):
                d += 1
            cert = extract_shattered(H, d)
            assert cert.dimension == d
            assert cert.verify(H)

    def test_tampered_certificate_fails(self):
        H = Hypergraph(3, tuple(range(8)))
        cert = extract_shattered(H, 2)
        from dataclasses import replace
        bad = replace(cert, trace_witnesses=tuple(reversed(cert.trace_witnesses)))
        assert not bad.verify(H)


class TestVcDimensionTransfer:
    def test_single_edge(self):
        cert = approx_max_vc_dimension(build_hypergraph(2, [{1}]))
        assert cert.dimension == 0

    def test_tight_family(self):
        # All subsets of size <= 1 of {1..5}: exact dimension is 1 and the
        # transfer must not fall below it.
        edges = [m for m in range(1 << 5) if m.bit_count() <= 1]
        H = Hypergraph(5, tuple(edges))
        cert = approx_max_vc_dimension(H)
        assert cert.dimension >= 1 and cert.verify(H)

    def test_factor_two_sweep(self):
        rng = random.Random("transfer")
        for trial in range(80):
            n = rng.randint(2, 12)
            H = random_hypergraph(n, rng.randint(1, 24), 0.5, rng.random())
            cert = approx_max_vc_dimension(H)
            assert cert.verify(H)
            assert 2 * cert.dimension >= vc_dimension(H).value


class TestDoubleHitting:
    def test_one_edge_two_budget(self):
        H = build_hypergraph(2, [{1, 2}])
        assert greedy_partial_double_hitting(H, 2).value == 1

    def test_tiny_budgets(self):
        H = build_hypergraph(3, [{1, 2}, {2, 3}])
        assert greedy_partial_double_hitting(H, 0).value == 0
        assert greedy_partial_double_hitting(H, 1).value == 0

    def test_triangle(self):
        H = build_hypergraph(3, [{1, 2}, {2, 3}, {1, 3}])
        assert greedy_partial_double_hitting(H, 2).value == 1

    def test_floor_half_k_on_matchings(self):
        # As long as an un-hit edge with two unchosen vertices exists, every
        # pair step gains one, so value >= floor(k/2); matchings (plus noise
        # edges) keep that supply available for the whole budget.
        rng = random.Random("dh-floor")
        for trial in range(30):
            p = rng.randint(2, 7)
            n = 2 * p + rng.randint(0, 3)
            edges = [{2 * i + 1, 2 * i + 2} for i in range(p)]
            for extra in range(rng.randint(0, 3)):
                edges.append({rng.randint(1, n)})
            H = build_hypergraph(n, edges)
            for k in range(2 * p + 1):
                assert greedy_partial_double_hitting(H, k).value >= k // 2

    def test_linear_accepted_shared_pair_rejected(self):
        lin = random_linear_hypergraph(10, 8, "accepted")
        approx_via_double_hitting(lin, 3)  # no error
        bad = build_hypergraph(3, [{1, 2}, {1, 2, 3}])
        with pytest.raises(InputError, match="edges 1 and 2"):
            approx_via_double_hitting(bad, 2)

    def test_classes_dominate_double_hits(self):
        rng = random.Random("dh-dominate")
        for trial in range(60):
            H = random_linear_hypergraph(rng.randint(5, 12), rng.randint(2, 8),
                                         rng.random())
            for _ in range(10):
                C = {v for v in range(1, H.n + 1) if rng.random() < 0.4}
                assert class_count(H, C) >= double_hit_count(H, C)

    def test_transfer_beats_double_hit_greedy(self):
        rng = random.Random("dh-transfer")
        for trial in range(30):
            G = random_graph(rng.randint(4, 9), 0.5, rng.random())
            H = Hypergraph(G.n, tuple(
                (1 << (u - 1)) | (1 << (v - 1)) for u, v in G.edge_list()))
            if not H.m:
                continue
            k = rng.randint(2, min(4, H.n - 1))
            res = approx_via_double_hitting(H, k)
            dh = greedy_partial_double_hitting(H, k)
            assert res.value >= class_count(H, dh.witness) >= dh.value

    def test_chain_bound_on_graphs(self):
        # opt <= 3*opt_2HS + 1 on simple-graph edge sets, both by enumeration.
        rng = random.Random("dh-chain")
        for trial in range(25):
            G = random_graph(rng.randint(4, 9), 0.6, rng.random())
            if not G.m:
                continue
            H = Hypergraph(G.n, tuple(
                (1 << (u - 1)) | (1 << (v - 1)) for u, v in G.edge_list()))
            k = rng.randint(2, min(5, H.n))
            opt = max(class_count(H, set(c))
                      for c in combinations(range(1, H.n + 1), k))
            opt_2hs = max(double_hit_count(H, set(c))
                          for c in combinations(range(1, H.n + 1), k))
            assert opt <= 3 * opt_2hs + 1
