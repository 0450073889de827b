"""Eigendecomposition of adjacency matrices, plus an exact characteristic
polynomial for settling cospectrality questions without floating point."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import GraphError, is_connected


class SpectralError(RuntimeError):
    """Eigensolver failure or a result violating expected structure."""


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues in ascending order and the matching orthonormal
    eigenvector matrix (column j belongs to eigenvalue j)."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def decompose(g):
    """Full symmetric eigendecomposition of the adjacency matrix.

    Output is deterministic: eigenvalues ascending, and each eigenvector
    column is flipped so its largest-magnitude component (lowest vertex
    index on ties) is positive. The centrality formulas only square the
    components, but a fixed sign convention keeps emitted artifacts
    byte-reproducible.
    """
    a = g.adjacency_matrix().astype(np.float64)
    try:
        lam, u = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise SpectralError(f"eigendecomposition failed: {exc}") from exc
    u = u.copy()
    for j in range(u.shape[1]):
        col = u[:, j]
        pivot = int(np.argmax(np.abs(col)))
        if col[pivot] < 0:
            u[:, j] = -col
    lam = lam.copy()
    lam.flags.writeable = False
    u.flags.writeable = False
    return SpectralDecomposition(eigenvalues=lam, eigenvectors=u)


def perron_vector(d, g):
    """Positive unit eigenvector of the largest eigenvalue.

    Exists for connected graphs by Perron-Frobenius; a component at or
    below 1e-12 therefore signals disconnection or solver trouble and is
    reported rather than papered over.
    """
    if not is_connected(g):
        raise GraphError("Perron vector requires a connected graph")
    v = d.eigenvectors[:, -1]
    if float(np.min(v)) <= 1e-12:
        raise SpectralError(
            "Perron vector has a non-positive component; graph disconnected "
            "or decomposition unusable"
        )
    return v


def characteristic_polynomial(g):
    """Coefficients of det(xI - A) as exact integers, highest power first.

    Uses Newton's identities over the power sums trace(A^k), evaluated in
    arbitrary-precision integer arithmetic, so two graphs are cospectral
    exactly when their coefficient tuples are equal. The intermediate
    division by k is always exact (the elementary symmetric functions of
    an integer matrix's spectrum are integers).
    """
    n = g.n
    a = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        a[u][v] = a[v][u] = 1
    power = [[int(i == j) for j in range(n)] for i in range(n)]
    trace = []
    for _ in range(n):
        power = [
            [sum(row[l] * a[l][j] for l in range(n)) for j in range(n)]
            for row in power
        ]
        trace.append(sum(power[i][i] for i in range(n)))
    elem = [1]
    for k in range(1, n + 1):
        acc = sum((-1) ** (i - 1) * elem[k - i] * trace[i - 1] for i in range(1, k + 1))
        if acc % k:
            raise SpectralError("Newton identity produced a non-integer; bug")
        elem.append(acc // k)
    return tuple((-1) ** i * elem[i] for i in range(n + 1))
