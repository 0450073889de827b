"""Undirected simple graphs and their structural invariants.

Everything here targets small graphs (a dozen vertices or so), so the
code favors exact integer arithmetic and obvious algorithms: distances
come from breadth-first search, triangle counts from neighborhood
intersections, canonical forms from explicit minimization. Vertices are
0-based everywhere, including the edge-list text format.
"""
from __future__ import annotations

import itertools


class GraphError(ValueError):
    """Invalid graph input or an operation applied outside its domain."""


class Graph:
    """Immutable simple graph: vertex count plus a normalized edge tuple.

    Edges are stored as (u, v) pairs with u < v, sorted, so two Graph
    objects compare equal exactly when they have the same labeled edge
    set. Isomorphism-insensitive comparison goes through canonical_key.
    """

    __slots__ = ("n", "edges", "neighbors")

    def __init__(self, n, edges):
        if n < 1:
            raise GraphError(f"vertex count must be positive, got {n}")
        seen = set()
        normalized = []
        for e in edges:
            u, v = e
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise GraphError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            normalized.append((u, v))
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", tuple(sorted(normalized)))
        adj = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "neighbors", tuple(tuple(sorted(a)) for a in adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def m(self):
        return len(self.edges)

    @property
    def degrees(self):
        return tuple(len(a) for a in self.neighbors)

    def adjacency_matrix(self):
        """Dense 0/1 adjacency matrix as a numpy int array."""
        import numpy as np

        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1
        return a

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph(n, list(itertools.combinations(range(n), 2)))


def star_graph(leaves):
    """Star with one center (vertex 0) and the given number of leaves."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def parse_edge_list(text):
    """Parse the plain edge-list format.

    First non-comment line is "n m", then m lines "u v" with 0-based
    vertex indices. Lines starting with '#' and blank lines are ignored.
    """
    lines = []
    for raw in text.splitlines():
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append(stripped)
    if not lines:
        raise GraphError("empty edge list")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphError(f"header must be two integers, got {lines[0]!r}") from None
    body = lines[1:]
    if len(body) != m:
        raise GraphError(f"header announces {m} edges but {len(body)} lines follow")
    edges = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"malformed edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"malformed edge line {ln!r}") from None
        edges.append((u, v))
    return Graph(n, edges)


def format_edge_list(g):
    """Inverse of parse_edge_list."""
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def is_connected(g):
    if g.n == 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in g.neighbors[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == g.n


def is_chemical(g):
    """True when every vertex degree is at most 4."""
    return max(g.degrees, default=0) <= 4


def distance_sums(g):
    """Per-vertex sums of shortest-path distances, by BFS from each vertex.

    Exact integers. Raises on disconnected input since the sums would be
    undefined (infinite) there.
    """
    sums = []
    for src in range(g.n):
        dist = [-1] * g.n
        dist[src] = 0
        frontier = [src]
        total = 0
        reached = 1
        while frontier:
            nxt = []
            for u in frontier:
                du = dist[u]
                for v in g.neighbors[u]:
                    if dist[v] < 0:
                        dist[v] = du + 1
                        total += du + 1
                        reached += 1
                        nxt.append(v)
            frontier = nxt
        if reached != g.n:
            raise GraphError("distance sums need a connected graph")
        sums.append(total)
    return sums


def cyclomatic_number(g):
    """m - n + 1 for a connected graph: independent cycles."""
    if not is_connected(g):
        raise GraphError("cyclomatic number assumes a connected graph")
    return g.m - g.n + 1


def triangle_count(g):
    """Exact number of 3-cycles, via neighborhood intersections.

    Each triangle is seen from all three of its edges, hence the
    division by 3 (always exact).
    """
    nbr = [set(a) for a in g.neighbors]
    total = 0
    for u, v in g.edges:
        total += len(nbr[u] & nbr[v])
    assert total % 3 == 0
    return total // 3


def degree_sequence(g):
    """Vertex degrees sorted in non-increasing order."""
    return tuple(sorted(g.degrees, reverse=True))


def degree_string(g):
    return "-".join(str(d) for d in degree_sequence(g))


# ---------------------------------------------------------------------------
# canonical forms


def _is_tree(g):
    return g.m == g.n - 1 and is_connected(g)


def _subtree_centroids(g):
    # Centroid(s) of a tree: vertices minimizing the largest component of
    # the forest left after their removal. Computed from subtree sizes
    # along a BFS order from vertex 0.
    n = g.n
    if n == 1:
        return [0]
    parent = [-1] * n
    order = [0]
    seen = {0}
    for u in order:
        for v in g.neighbors[u]:
            if v not in seen:
                seen.add(v)
                parent[v] = u
                order.append(v)
    size = [1] * n
    for u in reversed(order[1:]):
        size[parent[u]] += size[u]
    best, cents = n + 1, []
    for u in range(n):
        heaviest = n - size[u]
        for v in g.neighbors[u]:
            if v != parent[u]:
                heaviest = max(heaviest, size[v])
        if heaviest < best:
            best, cents = heaviest, [u]
        elif heaviest == best:
            cents.append(u)
    return cents


def _ahu_encoding(g, root):
    # Nested-parentheses encoding of a rooted tree with sorted subtrees;
    # equal encodings exactly characterize rooted isomorphism.
    def encode(u, parent):
        parts = sorted(encode(v, u) for v in g.neighbors[u] if v != parent)
        return "(" + "".join(parts) + ")"

    return encode(root, -1)


def canonical_key(g):
    """Label-independent graph key: equal keys iff isomorphic graphs.

    Trees of any supported order use a centroid-rooted subtree encoding;
    other graphs up to 8 vertices use the lexicographically smallest
    upper-triangular adjacency bit string over all vertex permutations.
    The two families get distinct prefixes so they can never collide.
    """
    if _is_tree(g):
        enc = min(_ahu_encoding(g, c) for c in _subtree_centroids(g))
        return b"T" + enc.encode("ascii")
    if g.n > 8:
        raise GraphError("canonical_key for non-trees is limited to 8 vertices")
    cells = list(itertools.combinations(range(g.n), 2))
    edge_set = set(g.edges)
    best = None
    for perm in itertools.permutations(range(g.n)):
        bits = 0
        for i, (a, b) in enumerate(cells):
            x, y = perm[a], perm[b]
            if (x, y) in edge_set or (y, x) in edge_set:
                bits |= 1 << i
        if best is None or bits < best:
            best = bits
    width = (len(cells) + 7) // 8
    return b"G" + bytes([g.n]) + best.to_bytes(width, "big")


# ---------------------------------------------------------------------------
# planarity (exact, small graphs only)


def _has_k5_subdivision(g):
    # A K5 subdivision on <= 7 vertices has 5 branch vertices and at most
    # 2 subdividing vertices, so the 10 connecting paths are direct edges
    # except for at most two length-2 paths or one length-3 path.
    adj = [set(a) for a in g.neighbors]
    for branch in itertools.combinations(range(g.n), 5):
        spares = [v for v in range(g.n) if v not in branch]
        missing = [
            (u, v)
            for u, v in itertools.combinations(branch, 2)
            if v not in adj[u]
        ]
        if not missing:
            return True
        if len(missing) == 1:
            (u, v) = missing[0]
            for w in spares:
                if u in adj[w] and v in adj[w]:
                    return True
            for w1, w2 in itertools.permutations(spares, 2):
                if u in adj[w1] and w2 in adj[w1] and v in adj[w2]:
                    return True
        elif len(missing) == 2 and len(spares) >= 2:
            (u1, v1), (u2, v2) = missing
            for w1, w2 in itertools.permutations(spares, 2):
                if u1 in adj[w1] and v1 in adj[w1] and u2 in adj[w2] and v2 in adj[w2]:
                    return True
    return False


def _has_k33_subdivision(g):
    # Similarly, a K3,3 subdivision on <= 7 vertices has 6 branch
    # vertices and at most one subdividing vertex.
    adj = [set(a) for a in g.neighbors]
    for branch in itertools.combinations(range(g.n), 6):
        spares = [v for v in range(g.n) if v not in branch]
        rest = branch[1:]
        for pair in itertools.combinations(rest, 2):
            side_a = (branch[0],) + pair
            side_b = tuple(v for v in rest if v not in pair)
            missing = [(u, v) for u in side_a for v in side_b if v not in adj[u]]
            if not missing:
                return True
            if len(missing) == 1:
                (u, v) = missing[0]
                for w in spares:
                    if u in adj[w] and v in adj[w]:
                        return True
    return False


def is_planar(g):
    """Exact planarity test for graphs with at most 7 vertices.

    Searches for subdivisions of K5 and K3,3 directly; with so few
    vertices at most two subdividing vertices can exist, which keeps the
    search tiny. Larger graphs are out of scope and rejected.
    """
    if g.n > 7:
        raise GraphError("planarity test implemented for n <= 7 only")
    if g.n < 5 or g.m < 9:
        # K5 needs 10 edges, its subdivisions more; K3,3 subdivisions
        # need at least 9. Small or sparse graphs are always planar.
        return True
    return not (_has_k5_subdivision(g) or _has_k33_subdivision(g))
