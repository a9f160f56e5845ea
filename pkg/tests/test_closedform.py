import pytest

from exactcolor import (
    BadParameterError,
    NotATreeError,
    brute_chi,
    build_graph,
    chi_complete,
    chi_cycle,
    chi_regular_trivial,
    chi_tree,
    chi_wheel,
    clique_lower_bound,
    complete,
    cycle,
    is_exact_coloring,
    path,
    petersen,
    star,
    wheel,
)


class TestChiCycle:
    @pytest.mark.parametrize(
        "n,expect", [(8, 2), (12, 2), (6, 3), (10, 3), (7, None), (5, None), (9, None)]
    )
    def test_d1_pattern(self, n, expect):
        out = chi_cycle(n, 1)
        if expect is None:
            assert out.is_infeasible
        else:
            assert out.chi == expect
            assert is_exact_coloring(cycle(n), out.witness, 1)

    @pytest.mark.parametrize("n", range(3, 12))
    def test_d2_monochromatic(self, n):
        out = chi_cycle(n, 2)
        assert out.chi == 1
        assert is_exact_coloring(cycle(n), out.witness, 2)

    def test_d3_infeasible(self):
        assert chi_cycle(9, 3).is_infeasible

    def test_bad_parameters(self):
        with pytest.raises(BadParameterError):
            chi_cycle(2, 1)
        with pytest.raises(BadParameterError):
            chi_cycle(5, 0)

    @pytest.mark.parametrize("n", range(3, 13))
    @pytest.mark.parametrize("d", [1, 2])
    def test_agrees_with_brute(self, n, d):
        a, b = chi_cycle(n, d), brute_chi(cycle(n), d)
        assert (a.chi, a.is_infeasible) == (b.chi, b.is_infeasible)


class TestChiWheel:
    @pytest.mark.parametrize("n,expect", [(4, 2), (6, 3), (8, 3), (10, 3), (5, None), (7, None), (9, None)])
    def test_pattern(self, n, expect):
        out = chi_wheel(n, 1)
        if expect is None:
            assert out.is_infeasible
        else:
            assert out.chi == expect
            assert is_exact_coloring(wheel(n), out.witness, 1)

    def test_only_d1(self):
        with pytest.raises(BadParameterError):
            chi_wheel(6, 2)

    @pytest.mark.parametrize("n", range(4, 13))
    def test_agrees_with_brute(self, n):
        a, b = chi_wheel(n, 1), brute_chi(wheel(n), 1)
        assert (a.chi, a.is_infeasible) == (b.chi, b.is_infeasible)


class TestChiTree:
    def test_path4(self):
        out = chi_tree(path(4), 1)
        assert out.chi == 2 and is_exact_coloring(path(4), out.witness, 1)

    def test_path3_infeasible(self):
        assert chi_tree(path(3), 1).is_infeasible

    def test_star5_infeasible(self):
        assert chi_tree(star(5), 1).is_infeasible

    def test_k2(self):
        assert chi_tree(path(2), 1).chi == 1

    def test_d2_always_infeasible(self):
        assert chi_tree(path(6), 2).is_infeasible

    def test_single_vertex(self):
        g = build_graph(1, [])
        assert chi_tree(g, 0).chi == 1
        assert chi_tree(g, 1).is_infeasible

    def test_not_a_tree(self):
        with pytest.raises(NotATreeError):
            chi_tree(cycle(4), 1)
        with pytest.raises(NotATreeError):
            chi_tree(build_graph(4, [(0, 1), (2, 3)]), 1)

    @pytest.mark.parametrize("seed", range(12))
    def test_random_trees_agree_with_brute(self, seed):
        import random

        rng = random.Random(seed)
        n = rng.randint(2, 11)
        edges = [(rng.randrange(v), v) for v in range(1, n)]
        t = build_graph(n, edges)
        a, b = chi_tree(t, 1), brute_chi(t, 1)
        assert (a.chi, a.is_infeasible) == (b.chi, b.is_infeasible)
        if a.is_finite:
            assert is_exact_coloring(t, a.witness, 1)


class TestChiComplete:
    @pytest.mark.parametrize("n,d,expect", [(6, 1, 3), (6, 2, 2), (5, 1, None), (12, 3, 3), (7, 0, 7), (1, 0, 1)])
    def test_values(self, n, d, expect):
        out = chi_complete(n, d)
        if expect is None:
            assert out.is_infeasible
        else:
            assert out.chi == expect
            assert is_exact_coloring(complete(n), out.witness, d)

    @pytest.mark.parametrize("n", range(1, 13))
    @pytest.mark.parametrize("d", range(0, 5))
    def test_agrees_with_brute(self, n, d):
        a, b = chi_complete(n, d), brute_chi(complete(n), d)
        assert (a.chi, a.is_infeasible) == (b.chi, b.is_infeasible)


class TestCliqueLowerBound:
    def test_k7_d1(self):
        assert clique_lower_bound(complete(7), 1) == 4

    def test_triangle_free_d1(self):
        assert clique_lower_bound(petersen(), 1) == 1

    def test_petersen_d0(self):
        assert clique_lower_bound(petersen(), 0) == 2


class TestChiRegularTrivial:
    def test_cycle9_d2(self):
        out = chi_regular_trivial(cycle(9), 2)
        assert out.chi == 1 and is_exact_coloring(cycle(9), out.witness, 2)

    def test_petersen_d3(self):
        assert chi_regular_trivial(petersen(), 3).chi == 1

    def test_not_applicable(self):
        assert chi_regular_trivial(path(3), 1) is None
        assert chi_regular_trivial(cycle(9), 1) is None
