import networkx as nx
import numpy as np
import pytest
from networkx.algorithms.isomorphism import GraphMatcher

from exclugraph.config import Tolerances
from exclugraph.errors import CapacityError, ParameterError
from exclugraph.graph_core import (
    Graph,
    VertexPermutation,
    automorphism_group,
    complement,
    find_isomorphism,
    group_order,
    is_self_complementary,
    is_vertex_transitive,
    orbit,
    orbits,
)


def to_networkx(g: Graph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n))
    graph.add_edges_from(g.edges())
    return graph


def is_automorphism(g: Graph, phi: VertexPermutation) -> bool:
    return g.relabel(phi) == g


@pytest.mark.parametrize("kind,n,distances,order", [
    ("cycle", 5, (), 10),
    ("cycle", 6, (), 12),
    ("petersen", 10, (), 120),
    ("circulant", 8, (1, 4), 16),
    ("complete", 4, (), 24),
    ("empty", 4, (), 24),
    ("path", 3, (), 2),
    ("path", 4, (), 2),
    ("paley", 13, (), 78),
])
def test_group_order(make_family, kind, n, distances, order):
    g = make_family(kind, n, distances)
    assert group_order(g) == order


@pytest.mark.parametrize("kind,n,distances", [("cycle", 5, ()), ("petersen", 10, ()), ("circulant", 8, (1, 4))])
def test_automorphism_group_matches_networkx(make_family, kind, n, distances):
    g = make_family(kind, n, distances)
    group = automorphism_group(g)
    expected = sum(1 for _ in GraphMatcher(to_networkx(g), to_networkx(g)).isomorphisms_iter())
    assert group.order == expected
    assert len(set(group)) == group.order
    assert all(is_automorphism(g, phi) for phi in group)
    assert VertexPermutation.identity(n) in group


def test_exhaustive_and_refinement_agree(make_family):
    for g in (make_family("cycle", 6), make_family("path", 5), make_family("antihole", 7)):
        refined = automorphism_group(g)
        exhaustive = automorphism_group(g, method="exhaustive")
        assert refined.elements == exhaustive.elements


def test_exhaustive_search_is_limited(petersen):
    with pytest.raises(CapacityError):
        automorphism_group(petersen, method="exhaustive")


def test_unknown_method_is_rejected(c5):
    with pytest.raises(ParameterError):
        automorphism_group(c5, method="guess")


def test_enumeration_cap(mocker, make_family):
    mocker.patch("exclugraph.graph_core.symmetry.tolerances", Tolerances(automorphism_cap=5))
    with pytest.raises(CapacityError):
        automorphism_group(make_family("empty", 4))


def test_self_complementary(c5, p4, c4, p3, make_family):
    for g in (c5, p4, make_family("paley", 13)):
        sigma = is_self_complementary(g)
        assert sigma is not None
        assert g.relabel(sigma) == complement(g)
    assert is_self_complementary(c4) is None
    assert is_self_complementary(p3) is None


def test_find_isomorphism_between_relabelled_copies(petersen):
    sigma = VertexPermutation((3, 7, 1, 0, 9, 2, 5, 8, 4, 6))
    h = petersen.relabel(sigma)
    found = find_isomorphism(petersen, h)
    assert found is not None
    assert petersen.relabel(found) == h


def test_non_isomorphic_graphs(c5, make_family):
    assert find_isomorphism(make_family("cycle", 6), make_family("circulant", 6, (1, 3))) is None
    assert find_isomorphism(c5, make_family("path", 5)) is None


def test_isomorphism_matches_networkx_on_atlas():
    atlas = [g for g in nx.graph_atlas_g() if 2 <= g.number_of_nodes() <= 5]
    graphs = [Graph.from_edges(g.number_of_nodes(), g.edges()) for g in atlas]
    for g, reference in zip(graphs, atlas):
        expected = nx.is_isomorphic(reference, nx.complement(reference))
        assert (is_self_complementary(g) is not None) == expected


def test_vertex_transitivity(c5, petersen, chsh, p3, p4, make_family):
    assert is_vertex_transitive(c5)
    assert is_vertex_transitive(petersen)
    assert is_vertex_transitive(chsh)
    assert is_vertex_transitive(make_family("paley", 13))
    assert not is_vertex_transitive(p3)
    assert not is_vertex_transitive(p4)


def test_orbits(p3, p4, c5):
    assert orbits(p3) == [[0, 2], [1]]
    assert orbits(p4) == [[0, 3], [1, 2]]
    assert orbits(c5) == [[0, 1, 2, 3, 4]]
    assert orbit(p4, 1) == {1, 2}


def test_automorphism_group_is_closed_under_composition(petersen):
    group = automorphism_group(petersen)
    elements = list(group)
    rng = np.random.default_rng(11)
    for _ in range(100):
        phi, psi = (elements[i] for i in rng.integers(0, len(elements), 2))
        assert phi.compose(psi) in group
        assert phi.inverse() in group
