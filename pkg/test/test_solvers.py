import math

import numpy as np
import pytest
from scipy.optimize import linprog

from exclugraph.config import Tolerances
from exclugraph.errors import CapacityError, NumericalError, ParameterError
from exclugraph.graph_core import Graph, complement
from exclugraph.solvers import SymmetricMatrix, solve_lp, solve_theta_sdp, symmetric_eigen


def odd_cycle_theta(n: int) -> float:
    c = math.cos(math.pi / n)
    return n * c / (1 + c)


def assert_healthy(g, solution):
    assert -1e-10 <= solution.gap <= 1e-8
    assert solution.dual_value >= solution.value - 1e-10
    assert solution.min_eigenvalue >= -1e-9
    assert solution.edge_residual(g) <= 1e-9
    assert abs(np.trace(solution.primal_matrix.entries) - 1.0) <= 1e-12


def test_symmetric_matrix_is_symmetrized_and_frozen():
    m = SymmetricMatrix(np.array([[1.0, 2.0], [0.0, 3.0]]))
    assert m[0, 1] == m[1, 0] == 1.0
    with pytest.raises(ValueError):
        m.entries[0, 0] = 5.0
    with pytest.raises(ParameterError):
        SymmetricMatrix(np.zeros((2, 3)))


def test_symmetric_eigen():
    spectrum = symmetric_eigen(np.array([[2.0, 1.0], [1.0, 2.0]]))
    assert spectrum.min == pytest.approx(1.0)
    assert spectrum.max == pytest.approx(3.0)
    v = spectrum.vectors
    assert np.allclose(v.T @ v, np.eye(2))


@pytest.mark.parametrize("n", [5, 7, 9])
def test_theta_odd_cycles(make_family, n):
    g = make_family("cycle", n)
    solution = solve_theta_sdp(g)
    assert solution.value == pytest.approx(odd_cycle_theta(n), abs=1e-6)
    assert_healthy(g, solution)


@pytest.mark.parametrize("kind,n,distances,expected", [
    ("petersen", 10, (), 4.0),
    ("circulant", 8, (1, 4), 2 + math.sqrt(2)),
    ("complete", 4, (), 1.0),
    ("empty", 4, (), 4.0),
    ("cycle", 6, (), 3.0),
    ("paley", 13, (), math.sqrt(13)),
])
def test_theta_closed_forms(make_family, kind, n, distances, expected):
    g = make_family(kind, n, distances)
    solution = solve_theta_sdp(g)
    assert solution.value == pytest.approx(expected, abs=1e-6)
    assert_healthy(g, solution)


def test_theta_of_petersen_complement(petersen):
    assert solve_theta_sdp(complement(petersen)).value == pytest.approx(2.5, abs=1e-6)


def test_weighted_theta_closed_forms(make_family):
    k2 = make_family("complete", 2)
    assert solve_theta_sdp(k2, [1.0, 4.0]).value == pytest.approx(4.0, abs=1e-6)
    e3 = make_family("empty", 3)
    assert solve_theta_sdp(e3, [1.0, 2.0, 3.0]).value == pytest.approx(6.0, abs=1e-6)


def test_theta_is_homogeneous_in_weights(c5):
    rng = np.random.default_rng(7)
    w = rng.uniform(0.1, 1.0, 5)
    base = solve_theta_sdp(c5, w).value
    assert solve_theta_sdp(c5, 3.0 * w).value == pytest.approx(3.0 * base, abs=1e-6)


def test_theta_decreases_when_edges_are_added(c5):
    chord = Graph.from_edges(5, c5.edges() + [(0, 2)])
    assert solve_theta_sdp(chord).value <= solve_theta_sdp(c5).value + 1e-8


def test_theta_ignores_zero_weight_vertices(c5, make_family):
    value = solve_theta_sdp(c5, [1.0, 1.0, 1.0, 1.0, 0.0]).value
    assert value == pytest.approx(2.0, abs=1e-6)


def test_theta_input_checks(c5, make_family):
    with pytest.raises(ParameterError):
        solve_theta_sdp(c5, [1.0, 1.0])
    with pytest.raises(ParameterError):
        solve_theta_sdp(c5, [1.0, -1.0, 1.0, 1.0, 1.0])
    with pytest.raises(ParameterError):
        solve_theta_sdp(c5, np.zeros(5))
    with pytest.raises(ParameterError):
        solve_theta_sdp(c5, tol=0.0)
    with pytest.raises(CapacityError):
        solve_theta_sdp(make_family("empty", 41))


def test_theta_iteration_cap_reports_bracket(c5):
    with pytest.raises(NumericalError) as info:
        solve_theta_sdp(c5, max_iterations=1)
    dual, primal = info.value.bracket
    assert dual >= primal


def test_lp_small_cases():
    box = solve_lp([1.0, 1.0], [([1.0, 0.0], 1.0), ([0.0, 1.0], 2.0)])
    assert box.status == "optimal"
    assert box.value == pytest.approx(3.0)
    assert np.allclose(box.point, [1.0, 2.0])
    assert np.allclose(box.dual, [1.0, 1.0])

    covering = solve_lp([1.0, 1.0], [([-1.0, -1.0], -2.0)], maximize=False)
    assert covering.status == "optimal"
    assert covering.value == pytest.approx(2.0)

    free = solve_lp([-1.0], [([-1.0], 3.0)], nonneg=False)
    assert free.point[0] == pytest.approx(-3.0)
    assert free.value == pytest.approx(3.0)


def test_lp_infeasible_and_unbounded():
    assert solve_lp([1.0], [([1.0], -1.0)]).status == "infeasible"
    assert solve_lp([1.0, 0.0], [([0.0, 1.0], 1.0)]).status == "unbounded"


def test_lp_terminates_on_cycling_example():
    objective = [0.75, -20.0, 0.5, -6.0]
    constraints = [
        ([0.25, -8.0, -1.0, 9.0], 0.0),
        ([0.5, -12.0, -0.5, 3.0], 0.0),
        ([0.0, 0.0, 1.0, 0.0], 1.0),
    ]
    solution = solve_lp(objective, constraints)
    assert solution.status == "optimal"
    assert solution.value == pytest.approx(1.25)


def test_lp_matches_scipy():
    rng = np.random.default_rng(2024)
    for _ in range(20):
        m, k = rng.integers(2, 7), rng.integers(2, 6)
        A = rng.uniform(0.0, 1.0, (m, k))
        b = rng.uniform(1.0, 2.0, m)
        c = rng.uniform(0.0, 1.0, k)
        ours = solve_lp(c, list(zip(A, b)))
        reference = linprog(-c, A_ub=A, b_ub=b, bounds=(0, None), method="highs")
        assert ours.status == "optimal"
        assert ours.value == pytest.approx(-reference.fun, abs=1e-7)
        assert b @ ours.dual == pytest.approx(ours.value, abs=1e-7)
        assert np.all(ours.dual >= -1e-9)
        assert ours.slackness <= 1e-8


def test_lp_shape_check():
    with pytest.raises(ParameterError):
        solve_lp([1.0, 1.0], [([1.0], 1.0)])


def random_graph(rng: np.random.Generator, n: int, density: float) -> Graph:
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph.from_edges(n, [pair for pair in pairs if rng.uniform() < density])


def test_spectrum_is_invariant_under_permutation():
    rng = np.random.default_rng(3)
    for _ in range(10):
        M = rng.normal(size=(7, 7))
        M = M + M.T
        P = np.eye(7)[rng.permutation(7)]
        before = symmetric_eigen(M).values
        after = symmetric_eigen(P.T @ M @ P).values
        assert np.allclose(np.sort(before), np.sort(after), atol=1e-10)


def test_theta_never_grows_when_an_edge_is_added():
    rng = np.random.default_rng(17)
    checked = 0
    while checked < 50:
        n = int(rng.integers(3, 11))
        g = random_graph(rng, n, rng.uniform(0.1, 0.7))
        missing = [(u, v) for u in range(n) for v in range(u + 1, n) if not g.adjacent(u, v)]
        if not missing:
            continue
        extra = missing[rng.integers(len(missing))]
        denser = Graph.from_edges(n, g.edges() + [extra])
        assert solve_theta_sdp(denser).value <= solve_theta_sdp(g).value + 1e-7
        checked += 1


@pytest.mark.parametrize("factor", [0.5, 2.0, 10.0])
def test_theta_scales_linearly(petersen, make_family, factor):
    rng = np.random.default_rng(int(factor * 10))
    for g in (petersen, make_family("cycle", 7), make_family("path", 4)):
        w = rng.uniform(0.1, 1.0, g.n)
        base = solve_theta_sdp(g, w).value
        assert solve_theta_sdp(g, factor * w).value == pytest.approx(factor * base, abs=1e-6 * max(1.0, factor))


def test_certificate_stays_psd_on_small_graphs():
    rng = np.random.default_rng(5)
    for _ in range(60):
        n = int(rng.integers(2, 8))
        g = random_graph(rng, n, rng.uniform(0.2, 0.8))
        solution = solve_theta_sdp(g, rng.uniform(0.0, 1.0, n) + 0.01)
        assert_healthy(g, solution)


def test_dual_multipliers_certify_the_upper_bound(c5, petersen, p4):
    for g in (c5, petersen, p4):
        w = np.linspace(0.3, 1.0, g.n)
        solution = solve_theta_sdp(g, w)
        assert solution.dual_multipliers.shape == (g.edge_count,)
        M = np.outer(np.sqrt(w), np.sqrt(w))
        for (u, v), y in zip(g.edges(), solution.dual_multipliers):
            M[u, v] += y
            M[v, u] += y
        assert symmetric_eigen(M).max == pytest.approx(solution.dual_value, abs=1e-9)
        assert solution.dual_value >= solution.value - 1e-10


def test_lp_checks_complementary_slackness(mocker):
    mocker.patch("exclugraph.solvers.simplex.tolerances", Tolerances(lp_slackness=-1.0))
    with pytest.raises(NumericalError):
        solve_lp([1.0, 1.0], [([1.0, 0.0], 1.0), ([0.0, 1.0], 2.0)])
