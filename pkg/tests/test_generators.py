import pytest

from cliquekit.enumeration import brute_force_cliques, count_cliques
from cliquekit.generators import (
    CliqueSumLeaf,
    CliqueSumNode,
    CliqueSumSpec,
    SplitMix64,
    almost_bipartite_graph,
    apollonian,
    clique_sum,
    complete_bipartite,
    complete_graph,
    compose_clique_sum_tree,
    k_tree,
    random_clique_sum_tree,
    random_graph,
)
from cliquekit.graph import GraphError, is_adjacent, is_bipartite


class TestSplitMix64:
    def test_reference_vector(self):
        # published splitmix64 outputs for seed 0
        rng = SplitMix64(0)
        assert rng.next_u64() == 0xE220A8397B1DCDAF
        assert rng.next_u64() == 0x6E789E6AA1B965F4
        assert rng.next_u64() == 0x06C45D188009454F

    def test_randrange_in_bounds(self):
        rng = SplitMix64(5)
        draws = [rng.randrange(7) for _ in range(500)]
        assert set(draws) <= set(range(7))
        assert len(set(draws)) == 7

    def test_randrange_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            SplitMix64(0).randrange(0)


class TestBasicFamilies:
    def test_complete(self):
        assert complete_graph(4).m == 6

    def test_complete_bipartite(self):
        g = complete_bipartite(3, 3)
        assert g.m == 9
        assert is_bipartite(g) is not None

    def test_degenerate_bipartite_side(self):
        assert complete_bipartite(0, 5).m == 0


class TestKTree:
    def test_counts_are_tight(self):
        assert count_cliques(k_tree(2, 5, seed=0)) == 16
        assert count_cliques(k_tree(3, 10, seed=1)) == 8 * (10 - 3 + 1)

    def test_1_tree_is_a_tree(self):
        for n in (2, 5, 9):
            g = k_tree(1, n, seed=2)
            assert g.m == n - 1
            assert count_cliques(g) == 2 * n

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_tightness_grid(self, k):
        for n in range(k + 1, 20, 3):
            for seed in (0, 1):
                g = k_tree(k, n, seed)
                assert count_cliques(g) == (1 << k) * (n - k + 1)

    def test_rejects_too_few_vertices(self):
        with pytest.raises(GraphError):
            k_tree(3, 3, seed=0)


class TestApollonian:
    def test_one_stacking_step_is_k4(self):
        g = apollonian(4, seed=9)
        assert g.n == 4 and g.m == 6

    @pytest.mark.parametrize("n", [3, 5, 8, 12, 20])
    def test_count_is_8_n_minus_2(self, n):
        for seed in (0, 3):
            g = apollonian(n, seed)
            assert count_cliques(g) == 8 * (n - 2)
            assert g.m == 3 * n - 6  # planar triangulation edge count

    def test_rejects_small_n(self):
        with pytest.raises(GraphError):
            apollonian(2, seed=0)


class TestAlmostBipartite:
    def test_full_probability_is_complete_bipartite(self):
        g = almost_bipartite_graph(3, 3, 0, 1.0, seed=0)
        assert g == complete_bipartite(3, 3)

    def test_single_apex(self):
        g = almost_bipartite_graph(2, 2, 1, 1.0, seed=0)
        assert g.n == 5
        assert all(is_adjacent(g, 4, w) for w in range(4))

    @pytest.mark.parametrize("h", [0, 1, 2, 3])
    def test_removing_apices_restores_bipartiteness(self, h):
        from cliquekit.graph import induced_subgraph

        for seed in range(5):
            g = almost_bipartite_graph(5, 6, h, 0.5, seed=seed)
            core, _ = induced_subgraph(g, range(5 + 6))
            assert is_bipartite(core) is not None

    def test_clique_bound_samples(self):
        for seed in range(20):
            g = almost_bipartite_graph(4, 5, 2, 0.6, seed=seed)
            assert count_cliques(g) <= (1 << 2) * g.n * g.n + 2


class TestRandomGraph:
    def test_extreme_probabilities(self):
        assert random_graph(7, 0.0, 1).m == 0
        assert random_graph(7, 1.0, 1) == complete_graph(7)

    def test_golden_edge_count(self):
        # frozen after first build; guards the portable rng contract
        assert random_graph(8, 0.5, 42).m == 15

    def test_deterministic_per_seed(self):
        a = random_graph(20, 0.35, 77)
        b = random_graph(20, 0.35, 77)
        assert a == b
        assert a != random_graph(20, 0.35, 78)


class TestCliqueSum:
    def test_two_k4_over_an_edge(self):
        spec = CliqueSumSpec(k=2, w1=(2, 3), w2=(0, 1))
        g = clique_sum(complete_graph(4), complete_graph(4), spec)
        assert g.n == 6 and g.m == 11
        # value frozen from the brute-force oracle
        assert count_cliques(g) == 28
        assert len(brute_force_cliques(g)) == 28

    def test_zero_sum_is_disjoint_union(self):
        g1 = complete_graph(3)
        g2 = apollonian(5, seed=1)
        g = clique_sum(g1, g2, CliqueSumSpec(k=0, w1=(), w2=()))
        assert g.n == g1.n + g2.n
        assert count_cliques(g) == count_cliques(g1) + count_cliques(g2) - 1

    def test_bowtie(self):
        spec = CliqueSumSpec(k=1, w1=(0,), w2=(0,))
        g = clique_sum(complete_graph(3), complete_graph(3), spec)
        assert g.n == 5
        assert sorted(len(g.adj[v]) for v in range(5)) == [2, 2, 2, 2, 4]

    def test_deleted_join_edges(self):
        spec = CliqueSumSpec(k=2, w1=(2, 3), w2=(0, 1),
                             deleted_join_edges=frozenset({(2, 3)}))
        g = clique_sum(complete_graph(4), complete_graph(4), spec)
        assert not is_adjacent(g, 2, 3)
        assert g.m == 10

    def test_rejects_non_clique_join(self):
        path = complete_bipartite(1, 2)  # 0-1, 0-2: vertices 1,2 not adjacent
        with pytest.raises(GraphError, match="not a clique"):
            clique_sum(path, complete_graph(2), CliqueSumSpec(k=2, w1=(1, 2), w2=(0, 1)))

    def test_rejects_size_mismatch(self):
        with pytest.raises(GraphError):
            clique_sum(complete_graph(3), complete_graph(3),
                       CliqueSumSpec(k=2, w1=(0,), w2=(0, 1)))

    def test_every_result_clique_lives_in_a_summand(self):
        g1 = k_tree(2, 6, seed=0)
        g2 = complete_bipartite(3, 3)
        spec = CliqueSumSpec(k=1, w1=(4,), w2=(2,))
        g = clique_sum(g1, g2, spec)
        image1 = set(range(g1.n))
        image2 = set()
        relabel = {2: 4}
        nxt = g1.n
        for v in range(g2.n):
            if v not in relabel:
                relabel[v] = nxt
                nxt += 1
        image2 = set(relabel.values())
        for clique in brute_force_cliques(g):
            members = set(clique)
            assert members <= image1 or members <= image2


class TestCliqueSumTree:
    def test_single_leaf_identity(self):
        g = complete_graph(4)
        composed, sizes = compose_clique_sum_tree(CliqueSumLeaf(g))
        assert composed == g and sizes == [4]

    def test_two_leaves_equals_direct_sum(self):
        g1, g2 = complete_graph(4), complete_graph(4)
        spec = CliqueSumSpec(k=2, w1=(2, 3), w2=(0, 1))
        tree = CliqueSumNode(CliqueSumLeaf(g1), CliqueSumLeaf(g2), spec)
        composed, sizes = compose_clique_sum_tree(tree)
        assert composed == clique_sum(g1, g2, spec)
        assert sizes == [4, 4]

    def test_balanced_four_leaf_vertex_count(self):
        k4 = complete_graph(4)
        spec = CliqueSumSpec(k=2, w1=(2, 3), w2=(0, 1))
        left = CliqueSumNode(CliqueSumLeaf(k4), CliqueSumLeaf(k4), spec)
        right = CliqueSumNode(CliqueSumLeaf(k4), CliqueSumLeaf(k4), spec)
        top = CliqueSumNode(left, right, CliqueSumSpec(k=2, w1=(4, 5), w2=(0, 1)))
        composed, sizes = compose_clique_sum_tree(top)
        assert composed.n == 4 * 4 - 3 * 2
        assert sizes == [4, 4, 4, 4]

    def test_random_tree_is_reproducible_and_triangle_free(self):
        tree_a = random_clique_sum_tree(5, seed=11)
        tree_b = random_clique_sum_tree(5, seed=11)
        ga, sizes_a = compose_clique_sum_tree(tree_a)
        gb, _ = compose_clique_sum_tree(tree_b)
        assert ga == gb
        assert len(sizes_a) == 5
        # triangle-free leaves compose to a triangle-free graph
        assert count_cliques(ga) == ga.m + ga.n + 1
