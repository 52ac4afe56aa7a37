from fractions import Fraction

import pytest

from cliquekit.bounds import (
    almost_bipartite_clique_bound,
    clique_sum_square_inequality,
    degenerate_clique_bound,
    exact_almost_bipartite_count_bound,
    f_prime,
    planar_clique_bound,
    verify_clique_sum_tree_bound,
    verify_family_bound,
)
from cliquekit.enumeration import count_cliques
from cliquekit.generators import (
    CliqueSumLeaf,
    CliqueSumNode,
    CliqueSumSpec,
    apollonian,
    complete_bipartite,
    complete_graph,
    k_tree,
    random_clique_sum_tree,
)
from cliquekit.graph import GraphError


class TestCalculators:
    def test_degenerate_bound(self):
        assert degenerate_clique_bound(2, 5) == 16
        assert degenerate_clique_bound(3, 10) == 64
        assert degenerate_clique_bound(0, 9) == 10
        with pytest.raises(GraphError):
            degenerate_clique_bound(5, 4)

    def test_planar_bound(self):
        assert planar_clique_bound(3) == 8
        assert planar_clique_bound(12) == 80
        with pytest.raises(GraphError):
            planar_clique_bound(2)

    def test_almost_bipartite_bound(self):
        assert almost_bipartite_clique_bound(0, 6) == 38
        assert almost_bipartite_clique_bound(1, 5) == 52
        assert almost_bipartite_clique_bound(0, 1) == 3
        with pytest.raises(GraphError):
            almost_bipartite_clique_bound(4, 3)

    def test_exact_almost_bipartite_bound(self):
        assert exact_almost_bipartite_count_bound(0, 6) == 16
        assert exact_almost_bipartite_count_bound(0, 2) == 4
        assert exact_almost_bipartite_count_bound(1, 3) == 8
        # quarter factor stays rational for odd residues
        assert exact_almost_bipartite_count_bound(0, 3) == Fraction(25, 4)

    def test_f_prime(self):
        assert f_prime(2, 10) == 256
        assert f_prime(1, 100) == 100
        assert f_prime(3, 1) == 32768
        with pytest.raises(GraphError):
            f_prime(0, 1)

    def test_monotone_in_n(self):
        for d in range(4):
            values = [degenerate_clique_bound(d, n) for n in range(d, d + 30)]
            assert values == sorted(values)
        values = [planar_clique_bound(n) for n in range(3, 40)]
        assert values == sorted(values)
        for h in range(3):
            values = [almost_bipartite_clique_bound(h, n) for n in range(h, h + 30)]
            assert values == sorted(values)
            exact = [exact_almost_bipartite_count_bound(h, n) for n in range(h, h + 30)]
            assert exact == sorted(exact)


class TestSquareInequality:
    def test_equality_case(self):
        r = clique_sum_square_inequality(4, 3, 2)
        assert r.inequality_holds and r.hypotheses_hold
        assert (4 + 3 - 2) ** 2 == 4 * 4 + 3 * 3

    def test_hypothesis_failure_case(self):
        r = clique_sum_square_inequality(2, 2, 2)
        assert not r.hypotheses_hold
        assert not r.inequality_holds

    def test_comfortable_case(self):
        r = clique_sum_square_inequality(10, 5, 3)
        assert r.inequality_holds and r.hypotheses_hold

    def test_hypotheses_imply_inequality_small_grid(self):
        for k in range(0, 8):
            for n1 in range(k + 1, 26):
                for n2 in range(k + 1, 26):
                    r = clique_sum_square_inequality(n1, n2, k)
                    if r.hypotheses_hold:
                        assert r.inequality_holds, (n1, n2, k)

    def test_rejects_degenerate_inputs(self):
        with pytest.raises(GraphError):
            clique_sum_square_inequality(1, 5, 2)
        with pytest.raises(GraphError):
            clique_sum_square_inequality(5, 5, -1)


class TestVerifyFamilyBound:
    def test_apollonian_tight(self):
        report = verify_family_bound(apollonian(20, seed=1), planar_clique_bound(20),
                                     "apollonian")
        assert report.holds and report.tight
        assert report.bound == 144

    def test_k88_under_bipartite_bound(self):
        g = complete_bipartite(8, 8)
        report = verify_family_bound(g, almost_bipartite_clique_bound(0, 16), "K88")
        assert report.actual == 81
        assert report.holds and not report.tight

    def test_k_tree_tight(self):
        g = k_tree(4, 30, seed=6)
        report = verify_family_bound(g, degenerate_clique_bound(4, 30), "k-tree")
        assert report.holds and report.tight
        assert report.bound == 432

    def test_kmm_meets_sharp_bound_exactly(self):
        for m in (2, 3, 5, 8):
            g = complete_bipartite(m, m)
            bound = exact_almost_bipartite_count_bound(0, 2 * m)
            report = verify_family_bound(g, bound, "K_mm")
            assert report.tight, m

    def test_quadratic_law(self):
        for m in (1, 4, 9, 15):
            assert count_cliques(complete_bipartite(m, m)) == m * m + 2 * m + 1


class TestVerifyCliqueSumTree:
    def test_random_tree_holds(self):
        tree = random_clique_sum_tree(6, seed=2)
        report = verify_clique_sum_tree_bound(tree, k=3, f_k=2)
        assert report.holds
        assert report.params["leaves"] == 6
        # all generated leaves are non-small for k=3, so the square sum
        # comparison is reported and satisfies the composite argument
        assert report.params["leaf_square_sum"] <= report.params["n_squared"]

    def test_single_leaf(self):
        tree = CliqueSumLeaf(complete_bipartite(4, 4))
        report = verify_clique_sum_tree_bound(tree, k=3, f_k=2)
        assert report.holds
        assert report.actual <= 2 * 8 * 8

    def test_leaf_with_forbidden_clique_is_rejected(self):
        bad = CliqueSumNode(
            CliqueSumLeaf(complete_graph(4)),
            CliqueSumLeaf(complete_bipartite(4, 4)),
            CliqueSumSpec(k=1, w1=(0,), w2=(0,)),
        )
        with pytest.raises(GraphError, match="leaf 0"):
            verify_clique_sum_tree_bound(bad, k=3, f_k=2)
