import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chemindex.graphs import (
    Graph,
    GraphError,
    cycle_graph,
    path_graph,
    star_graph,
)
from chemindex.indices import (
    balaban_j,
    centrality_rms,
    centrality_weighted_mean,
    eigenvector_centralities,
    estrada_mean,
    index_values,
    subgraph_centralities,
    subgraph_centrality_series,
    walk_counts,
)
from chemindex.spectral import decompose

import networkx as nx


def _tree(n, seed):
    return Graph(n, list(nx.random_labeled_tree(n, seed=seed).edges()))


def test_single_edge_centralities():
    # K2: eigenvalues +-1, both centralities cosh(1)
    d = decompose(path_graph(2))
    s = subgraph_centralities(d)
    assert np.allclose(s, math.cosh(1.0), atol=1e-12)
    assert math.isclose(estrada_mean(d), math.cosh(1.0), rel_tol=1e-12)
    assert math.isclose(centrality_rms(s), math.cosh(1.0), rel_tol=1e-12)


def test_three_path_centralities():
    # P3: eigenvalues -sqrt(2), 0, sqrt(2); the center collects
    # cosh(sqrt(2)), each end (cosh(sqrt(2)) + 1) / 2
    g = path_graph(3)
    s = subgraph_centralities(decompose(g))
    c = math.cosh(math.sqrt(2.0))
    assert math.isclose(s[1], c, rel_tol=1e-12)
    assert math.isclose(s[0], (c + 1) / 2, rel_tol=1e-12)
    assert math.isclose(s[2], (c + 1) / 2, rel_tol=1e-12)


def test_estrada_mean_is_mean_of_centralities():
    rng = random.Random(17)
    for _ in range(20):
        g = _tree(rng.randint(2, 10), rng.randint(0, 10**6))
        d = decompose(g)
        s = subgraph_centralities(d)
        assert math.isclose(estrada_mean(d), float(np.mean(s)), rel_tol=1e-12)


def test_eigenvector_centralities_sum_to_one():
    g = star_graph(4)
    x = eigenvector_centralities(decompose(g), g)
    assert math.isclose(float(x.sum()), 1.0, rel_tol=1e-12)
    assert math.isclose(x[0], 1 / 3, rel_tol=1e-12)
    assert np.allclose(x[1:], 1 / 6, atol=1e-12)


def test_centrality_weighted_mean_checks_weights():
    s = np.array([1.0, 2.0])
    with pytest.raises(ValueError):
        centrality_weighted_mean(s, np.array([0.5, 0.6]))
    assert centrality_weighted_mean(s, np.array([0.5, 0.5])) == 1.5


def test_balaban_j_known_values():
    # cycles: distance sums are equal, so J reduces to m^2 / (2 d)
    assert math.isclose(balaban_j(cycle_graph(5)), 25 / 12, rel_tol=1e-12)
    assert math.isclose(balaban_j(cycle_graph(6)), 2.0, rel_tol=1e-12)
    assert math.isclose(balaban_j(path_graph(8)), 2.53006, abs_tol=1e-5)
    with pytest.raises(GraphError):
        balaban_j(Graph(4, [(0, 1), (2, 3)]))


def test_walk_counts():
    assert walk_counts(cycle_graph(5), 0) == [1] * 5
    assert walk_counts(cycle_graph(5), 2) == [2] * 5
    assert walk_counts(cycle_graph(5), 3) == [0] * 5
    # K4: closed 3-walks at a vertex = 2 * triangles through it
    assert walk_counts(Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]), 3) == [6] * 4
    with pytest.raises(ValueError):
        walk_counts(path_graph(2), -1)


def test_series_route_matches_spectral_route():
    rng = random.Random(23)
    graphs = [path_graph(2), star_graph(4), cycle_graph(6)]
    graphs += [_tree(rng.randint(2, 10), rng.randint(0, 10**6)) for _ in range(15)]
    for g in graphs:
        spectral = subgraph_centralities(decompose(g))
        series = subgraph_centrality_series(g)
        assert np.all(np.abs(spectral - series) <= 1e-9), g


def test_series_needs_at_least_one_term():
    with pytest.raises(ValueError):
        subgraph_centrality_series(path_graph(3), terms=0)


def test_index_values_keys_and_regular_graph_identity():
    vals = index_values(cycle_graph(5))
    assert sorted(vals) == ["EE", "J", "RVa", "RVb"]
    assert math.isclose(vals["EE"], 2.29924, abs_tol=1e-5)
    assert abs(vals["EE"] - vals["RVa"]) < 1e-12
    assert abs(vals["EE"] - vals["RVb"]) < 1e-12


@given(st.integers(min_value=3, max_value=10), st.integers(min_value=0, max_value=10**6))
@settings(max_examples=40, deadline=None)
def test_rms_exceeds_mean_on_irregular_trees(n, seed):
    # quadratic mean >= arithmetic mean, strictly unless all centralities
    # agree; trees on 3+ vertices always mix degrees
    g = _tree(n, seed)
    d = decompose(g)
    s = subgraph_centralities(d)
    assert centrality_rms(s) > estrada_mean(d)


@given(st.data())
@settings(max_examples=30, deadline=None)
def test_index_values_are_label_invariant(data):
    n = data.draw(st.integers(min_value=2, max_value=9))
    seed = data.draw(st.integers(min_value=0, max_value=10**6))
    g = _tree(n, seed)
    perm = data.draw(st.permutations(range(n)))
    h = Graph(n, [(perm[u], perm[v]) for u, v in g.edges])
    a, b = index_values(g), index_values(h)
    for k in a:
        assert math.isclose(a[k], b[k], rel_tol=1e-10, abs_tol=1e-10)
