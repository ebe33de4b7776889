import math

import networkx as nx
import numpy as np
import pytest

from exclugraph.bounds import IndependentSet, bounds_report, fractional_packing, independence_number, maximal_cliques, packing_lp
from exclugraph.errors import NumericalError, ParameterError
from exclugraph.graph_core import Graph, VertexPermutation, complement
from exclugraph.solvers import solve_theta_sdp


def atlas_graphs(max_nodes: int):
    for reference in nx.graph_atlas_g():
        n = reference.number_of_nodes()
        if 2 <= n <= max_nodes and nx.is_connected(reference):
            yield Graph.from_edges(n, reference.edges())


def test_pentagon_bounds(c5):
    report = bounds_report(c5)
    assert report.alpha == 2
    assert report.theta == pytest.approx(math.sqrt(5), abs=1e-6)
    assert report.alpha_star == pytest.approx(2.5, abs=1e-9)
    assert report.vertex_transitive
    assert report.self_complementary
    assert report.independent_set == [0, 2]
    assert report.s_max_quantum == report.theta
    assert report.theta_gap <= 1e-8


def test_path_flags(p3):
    report = bounds_report(p3)
    assert not report.vertex_transitive
    assert not report.self_complementary
    assert report.alpha == 2
    assert report.theta == pytest.approx(2.0, abs=1e-6)


def test_chsh_bounds(chsh):
    report = bounds_report(chsh)
    assert report.alpha == 3
    assert report.alpha_star == pytest.approx(4.0, abs=1e-9)
    assert report.theta == pytest.approx(2 + math.sqrt(2), abs=1e-5)


def test_chsh_packing_certificate(chsh):
    solution = packing_lp(chsh)
    cliques = list(maximal_cliques(chsh))
    assert all(len(c) == 2 for c in cliques)
    half = np.full(8, 0.5)
    assert all(half[list(c)].sum() <= 1.0 + 1e-12 for c in cliques)
    assert half.sum() == pytest.approx(solution.value, abs=1e-9)
    assert solution.dual.sum() == pytest.approx(4.0, abs=1e-9)
    assert solution.slackness <= 1e-8


def test_petersen_bounds(petersen):
    report = bounds_report(petersen)
    assert report.alpha == 4
    assert report.theta == pytest.approx(4.0, abs=1e-6)
    assert report.alpha_star == pytest.approx(5.0, abs=1e-9)


def test_weighted_independence(c5):
    result = independence_number(c5, [1.0, 1.0, 5.0, 1.0, 1.0])
    assert result.value == 6.0
    assert result.vertices == (0, 2)
    zero = independence_number(c5, np.zeros(5))
    assert zero.value == 0.0
    assert zero.vertices == ()


def test_independence_skips_zero_weight_vertices(p3):
    assert independence_number(p3, [0.0, 1.0, 0.0]).vertices == (1,)


def test_independence_lexicographic_tie_break(make_family):
    assert independence_number(make_family("cycle", 6)).vertices == (0, 2, 4)
    assert independence_number(make_family("empty", 3)).vertices == (0, 1, 2)


def test_independence_matches_networkx():
    for g in atlas_graphs(6):
        reference = nx.Graph()
        reference.add_nodes_from(range(g.n))
        reference.add_edges_from(g.edges())
        largest = max(len(c) for c in nx.find_cliques(nx.complement(reference)))
        assert independence_number(g).value == largest


def test_maximal_cliques(c5, k4, make_family):
    assert list(maximal_cliques(c5)) == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
    assert list(maximal_cliques(k4)) == [(0, 1, 2, 3)]
    assert list(maximal_cliques(make_family("empty", 3))) == [(0,), (1,), (2,)]


def test_maximal_cliques_match_networkx():
    for g in atlas_graphs(6):
        reference = nx.Graph()
        reference.add_nodes_from(range(g.n))
        reference.add_edges_from(g.edges())
        expected = sorted(tuple(sorted(c)) for c in nx.find_cliques(reference))
        assert list(maximal_cliques(g)) == expected


def test_weighted_packing(c5):
    assert fractional_packing(c5, [2.0] * 5).value == pytest.approx(5.0, abs=1e-9)


@pytest.mark.parametrize("kind,n", [("cycle", 4), ("cycle", 6), ("complete", 5), ("path", 5), ("empty", 4)])
def test_perfect_graphs_collapse_the_sandwich(make_family, kind, n):
    report = bounds_report(make_family(kind, n))
    assert report.theta == pytest.approx(report.alpha, abs=1e-6)
    assert report.alpha_star == pytest.approx(report.alpha, abs=1e-9)


def test_bounds_are_invariant_under_relabelling(petersen):
    sigma = VertexPermutation((4, 0, 8, 2, 6, 1, 9, 3, 7, 5))
    original = bounds_report(petersen)
    relabelled = bounds_report(petersen.relabel(sigma))
    assert relabelled.alpha == original.alpha
    assert relabelled.theta == pytest.approx(original.theta, abs=1e-7)
    assert relabelled.alpha_star == pytest.approx(original.alpha_star, abs=1e-9)


def test_weights_are_checked(c5):
    with pytest.raises(ParameterError):
        bounds_report(c5, [1.0] * 4)
    with pytest.raises(ParameterError):
        bounds_report(c5, [1.0, 1.0, float("nan"), 1.0, 1.0])


def test_sandwich_violation_is_numerical(c5, mocker):
    mocker.patch("exclugraph.bounds.report.independence_number", return_value=IndependentSet(3.0, (0, 1, 2)))
    with pytest.raises(NumericalError):
        bounds_report(c5)


@pytest.mark.slow
def test_sandwich_on_all_small_connected_graphs():
    for g in atlas_graphs(7):
        alpha = independence_number(g).value
        theta = solve_theta_sdp(g).value
        alpha_star = fractional_packing(g).value
        assert alpha <= theta + 1e-6
        assert theta <= alpha_star + 1e-6


@pytest.mark.slow
def test_complement_product_is_at_least_n():
    for g in atlas_graphs(6):
        product = solve_theta_sdp(g).value * solve_theta_sdp(complement(g)).value
        assert product >= g.n - 1e-5


def test_sandwich_on_random_weighted_graphs():
    rng = np.random.default_rng(31)
    for _ in range(100):
        n = int(rng.integers(2, 9))
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        g = Graph.from_edges(n, [pair for pair in pairs if rng.uniform() < 0.5])
        w = rng.uniform(0.0, 1.0, n)
        w[rng.integers(n)] += 0.1
        report = bounds_report(g, w)
        assert report.alpha <= report.theta + 1e-6
        assert report.theta <= report.alpha_star + 1e-6


def test_theta_certificates_hold_on_small_atlas_graphs():
    for g in atlas_graphs(5):
        solution = solve_theta_sdp(g)
        assert solution.dual_value >= solution.value - 1e-10
        assert solution.gap <= 1e-8
        assert solution.min_eigenvalue >= -1e-9
