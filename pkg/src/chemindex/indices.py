"""The four topological indices and the centrality vectors behind them.

Two centrality notions feed the spectral indices. The subgraph
centrality of a vertex counts its closed walks, a walk of length k
weighted by 1/k!, which collapses to a spectral expression

    s_i = sum_j (u_j^i)^2 * exp(lambda_j)

over the adjacency eigenpairs. The eigenvector centrality x_i is the
Perron vector rescaled to sum 1. From these:

    estrada_mean             mean of exp(lambda_i), also mean of the s_i
    centrality_rms           sqrt(mean of s_i^2), a quadratic mean
    centrality_weighted_mean sum of x_i * s_i

and the distance-based connectivity index

    balaban_j = m/(m-n+2) * sum over edges 1/sqrt(d(u) d(v))

with d(u) the sum of shortest-path distances from u. A truncated
walk-series evaluation of s is kept alongside the spectral one as an
independent oracle; with degrees at most 4 the spectral radius stays
at or below 4, so the truncated tail beyond K = 40 is under
sum_{k>40} 4^k / k! < 1e-12.
"""
from __future__ import annotations

import math

import numpy as np

from .graphs import GraphError, distance_sums, is_connected
from .spectral import decompose, perron_vector


def subgraph_centralities(d):
    """Per-vertex closed-walk centralities from a spectral decomposition."""
    return (d.eigenvectors**2) @ np.exp(d.eigenvalues)


def eigenvector_centralities(d, g):
    """Perron vector rescaled so the components sum to exactly 1."""
    v = perron_vector(d, g)
    return v / v.sum()


def estrada_mean(d):
    """Arithmetic mean of exp(eigenvalue) over the whole spectrum.

    This is the mean form, not the plain exponential sum: the two differ
    by the factor n, and every reference value in the bundled tables
    uses the mean.
    """
    return float(np.mean(np.exp(d.eigenvalues)))


def centrality_rms(s):
    """Quadratic mean of the subgraph centralities."""
    s = np.asarray(s, dtype=np.float64)
    return float(np.sqrt(np.mean(s * s)))


def centrality_weighted_mean(s, x):
    """Subgraph centralities averaged with eigenvector-centrality weights."""
    s = np.asarray(s, dtype=np.float64)
    x = np.asarray(x, dtype=np.float64)
    if abs(float(x.sum()) - 1.0) > 1e-9:
        raise ValueError("weights must sum to 1")
    return float(x @ s)


def balaban_j(g):
    """Distance-sum connectivity index m/(m-n+2) * sum 1/sqrt(d(u)d(v))."""
    if not is_connected(g):
        raise GraphError("index J requires a connected graph")
    d = distance_sums(g)
    acc = 0.0
    for u, v in g.edges:
        acc += 1.0 / math.sqrt(d[u] * d[v])
    return g.m / (g.m - g.n + 2) * acc


def walk_counts(g, k):
    """Closed walks of length k at every vertex: the diagonal of A^k.

    Exact integers via repeated matrix products in Python bignums, so no
    overflow for any k this package would ever use.
    """
    if k < 0:
        raise ValueError("walk length must be non-negative")
    n = g.n
    a = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        a[u][v] = a[v][u] = 1
    power = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(k):
        power = [
            [sum(row[l] * a[l][j] for l in range(n)) for j in range(n)]
            for row in power
        ]
    return [power[i][i] for i in range(n)]


def subgraph_centrality_series(g, terms=40):
    """Truncated walk-series evaluation of the subgraph centralities.

    Independent of the eigensolver on purpose; used to cross-check the
    spectral route. terms=40 puts the tail below 1e-12 for chemical
    graphs (see module docstring).
    """
    if terms < 1:
        raise ValueError("need at least one series term")
    n = g.n
    a = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        a[u][v] = a[v][u] = 1
    power = [[int(i == j) for j in range(n)] for i in range(n)]
    acc = np.ones(n, dtype=np.float64)  # k = 0 term
    fact = 1.0
    for k in range(1, terms + 1):
        power = [
            [sum(row[l] * a[l][j] for l in range(n)) for j in range(n)]
            for row in power
        ]
        fact *= k
        acc += np.array([power[i][i] for i in range(n)], dtype=np.float64) / fact
    return acc


def index_values(g):
    """All four indices of one connected graph as a dict keyed by the
    column names used in emitted tables: J, EE, RVa, RVb."""
    d = decompose(g)
    s = subgraph_centralities(d)
    x = eigenvector_centralities(d, g)
    return {
        "J": balaban_j(g),
        "EE": estrada_mean(d),
        "RVa": centrality_rms(s),
        "RVb": centrality_weighted_mean(s, x),
    }
