"""Builders and recognizers for the star, ring, grid and complete graph families.

Recognizers work on structure only, so they are robust under node
relabeling; they are not general isomorphism tests and handle only these
four families.  Conventions:

* ``is_star`` returns the center node; for the degenerate 2-node star both
  endpoints qualify and the lexicographically smaller id is returned.
* ``is_ring`` recognizes the wheel shape (cycle of ring nodes plus a center
  connected to all of them) and returns the center; for the fully symmetric
  small cases (n=2 gives a triangle, n=3 gives K4) the lexicographically
  smallest workable center is returned.
* ``is_grid`` returns the dimensions normalized so that m <= n, since an
  (m,n)-grid and an (n,m)-grid are the same unlabeled graph.
* a self-loop adds one to a node's degree (one communication channel).
"""

from __future__ import annotations

from collections import deque
from itertools import combinations

from .model import Graph, edge_key


def build_star(n: int) -> Graph:
    """n satellites x1..xn around a center C; n+1 vertices, n edges."""
    if n < 1:
        raise ValueError("a star needs n >= 1")
    sats = [f"x{i}" for i in range(1, n + 1)]
    return Graph.build(sats + ["C"], [(x, "C") for x in sats])


def build_ring(n: int) -> Graph:
    """Ring nodes x1..xn in a cycle, each also connected to the center x0.

    For n=2 the two ring edges coincide, so the graph is a triangle with
    3 edges; for n >= 3 there are 2n edges.
    """
    if n < 2:
        raise ValueError("a ring needs n >= 2")
    edges = []
    for i in range(1, n + 1):
        edges.append((f"x{i}", f"x{(i % n) + 1}"))
        edges.append((f"x{i}", "x0"))
    return Graph.build([f"x{i}" for i in range(n + 1)], edges)


def grid_node(i: int, j: int) -> str:
    return f"r{i}c{j}"


def build_grid(m: int, n: int) -> Graph:
    """The m-by-n lattice: nodes r{i}c{j}, edges between orthogonal neighbors."""
    if m < 1 or n < 1:
        raise ValueError("grid dimensions must be >= 1")
    nodes = [grid_node(i, j) for i in range(1, m + 1) for j in range(1, n + 1)]
    edges = []
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            if i < m:
                edges.append((grid_node(i, j), grid_node(i + 1, j)))
            if j < n:
                edges.append((grid_node(i, j), grid_node(i, j + 1)))
    return Graph.build(nodes, edges)


def build_complete_with_loops(n: int) -> Graph:
    """Every pair of the n nodes connected, plus a loop on each node."""
    if n < 1:
        raise ValueError("need n >= 1")
    nodes = [f"x{i}" for i in range(1, n + 1)]
    edges = [(a, b) for a, b in combinations(nodes, 2)]
    edges += [(x, x) for x in nodes]
    return Graph.build(nodes, edges)


def max_degree(g: Graph) -> int:
    if not g.nodes:
        return 0
    return max(g.degree(x) for x in g.nodes)


def _has_loops(g: Graph) -> bool:
    return any(a == b for a, b in g.edges)


def _adjacency(g: Graph) -> dict:
    adj = {x: set() for x in g.nodes}
    for a, b in g.edges:
        adj[a].add(b)
        adj[b].add(a)
    return adj


def _bfs_dist(adj: dict, start: str) -> dict:
    dist = {start: 0}
    dq = deque([start])
    while dq:
        x = dq.popleft()
        for y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                dq.append(y)
    return dist


def is_star(g: Graph):
    """The center id if ``g`` is an n-star for some n >= 1, else None."""
    n = len(g.nodes) - 1
    if n < 1 or _has_loops(g) or len(g.edges) != n:
        return None
    if n == 1:
        a, b = g.nodes
        return min(a, b) if g.has_edge(a, b) else None
    adj = _adjacency(g)
    for center in g.nodes:
        if len(adj[center]) != n:
            continue
        if all(len(adj[x]) == 1 for x in g.nodes if x != center):
            return center
    return None


def is_ring(g: Graph):
    """The center id if ``g`` is an n-ring (wheel) for some n >= 2, else None."""
    n = len(g.nodes) - 1
    if n < 2 or _has_loops(g):
        return None
    if len(g.edges) != (3 if n == 2 else 2 * n):
        return None
    adj = _adjacency(g)
    for center in g.nodes:
        others = [x for x in g.nodes if x != center]
        if not all(x in adj[center] for x in others):
            continue
        ring_edges = {e for e in g.edges if center not in e}
        if n == 2:
            if ring_edges == {edge_key(*others)}:
                return center
            continue
        ring_adj = {x: set() for x in others}
        ok = True
        for a, b in ring_edges:
            if a not in ring_adj or b not in ring_adj:
                ok = False
                break
            ring_adj[a].add(b)
            ring_adj[b].add(a)
        if not ok or any(len(v) != 2 for v in ring_adj.values()):
            continue
        # one cycle through all ring nodes, not several smaller ones
        seen = {others[0]}
        frontier = deque([others[0]])
        while frontier:
            x = frontier.popleft()
            for y in ring_adj[x]:
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        if len(seen) == n:
            return center
    return None


def is_grid(g: Graph):
    """Dimensions ``(m, n)`` with m <= n if ``g`` is an (m,n)-grid, else None."""
    total = len(g.nodes)
    if total == 0 or _has_loops(g):
        return None
    if total == 1:
        return (1, 1) if not g.edges else None
    adj = _adjacency(g)
    degrees = {x: len(adj[x]) for x in g.nodes}
    # 1-by-N grids are paths
    if len(g.edges) == total - 1 and all(d <= 2 for d in degrees.values()):
        ends = [x for x, d in degrees.items() if d == 1]
        if len(ends) == 2 and len(_bfs_dist(adj, ends[0])) == total:
            return (1, total)
    corners = sorted(x for x, d in degrees.items() if d == 2)
    if not corners:
        return None
    c = corners[0]
    d1 = _bfs_dist(adj, c)
    if len(d1) != total:
        return None
    for c2 in corners[1:]:
        n = d1[c2] + 1
        if n < 2 or total % n:
            continue
        m = total // n
        if m < 2 or len(g.edges) != m * (n - 1) + n * (m - 1):
            continue
        d2 = _bfs_dist(adj, c2)
        coords = {}
        ok = True
        for x in g.nodes:
            delta = d1[x] + d2[x] - (n - 1)
            if delta < 0 or delta % 2:
                ok = False
                break
            i = delta // 2 + 1
            j = d1[x] - (i - 1) + 1
            if not (1 <= i <= m and 1 <= j <= n):
                ok = False
                break
            coords[x] = (i, j)
        if not ok or len(set(coords.values())) != total:
            continue
        if all(abs(coords[a][0] - coords[b][0]) + abs(coords[a][1] - coords[b][1]) == 1
               for a, b in g.edges):
            return (min(m, n), max(m, n))
    return None


def is_complete_with_loops(g: Graph) -> bool:
    n = len(g.nodes)
    if n < 1:
        return False
    if len(g.edges) != n * (n - 1) // 2 + n:
        return False
    for x in g.nodes:
        if not g.has_edge(x, x):
            return False
    return all(g.has_edge(a, b) for a, b in combinations(g.nodes, 2))
