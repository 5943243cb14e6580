"""Regular graph generators, girth, and the graph-to-FR-code map.

Every vertex of an ``alpha``-regular graph becomes a storage node and every
edge a packet, which yields an ``(n, alpha, 2)`` FR code.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .errors import BadParameters, NonDivisible, NotPrime, NotRegular
from .incidence import FrCode, IncidenceStructure

__all__ = [
    "ACYCLIC",
    "Graph",
    "make_graph",
    "turan_graph",
    "cycle_graph",
    "complete_graph",
    "petersen_graph",
    "circulant_graph",
    "projective_plane_incidence_graph",
    "girth",
    "graph_to_fr",
    "is_prime",
]

#: Girth of a forest. ``math.inf`` compares correctly against any integer bound.
ACYCLIC = math.inf


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % d for d in range(2, math.isqrt(q) + 1))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..vertex_count-1``.

    ``edges`` holds pairs ``(u, v)`` with ``u < v``.
    """

    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise BadParameters("a graph needs at least one vertex")
        for u, v in self.edges:
            if not (0 <= u < v < self.vertex_count):
                raise BadParameters(f"bad edge {(u, v)}: need 0 <= u < v < {self.vertex_count}")

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def regular_degree(self) -> int | None:
        """The common vertex degree, or ``None`` if the graph is not regular."""
        degs = set(self.degrees())
        return degs.pop() if len(degs) == 1 else None

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def make_graph(vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Normalize edge orientation and reject loops and parallel edges."""
    out: set[tuple[int, int]] = set()
    for u, v in edges:
        if u == v:
            raise BadParameters(f"loop at vertex {u}")
        e = (min(u, v), max(u, v))
        if e in out:
            raise BadParameters(f"parallel edge {e}")
        out.add(e)
    return Graph(vertex_count, frozenset(out))


def turan_graph(n: int, r: int) -> Graph:
    """Complete ``r``-partite graph with ``r`` equal parts of size ``n/r``."""
    if n < 2 or r < 2:
        raise BadParameters(f"need n >= 2 and r >= 2, got n={n}, r={r}")
    if n % r:
        raise NonDivisible(f"r={r} does not divide n={n}")
    size = n // r
    edges = [(u, v) for u, v in combinations(range(n), 2) if u // size != v // size]
    return make_graph(n, edges)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise BadParameters(f"a cycle needs at least 3 vertices, got {n}")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 2:
        raise BadParameters(f"complete graph needs at least 2 vertices, got {n}")
    return make_graph(n, combinations(range(n), 2))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return make_graph(10, outer + spokes + inner)


def circulant_graph(n: int, offsets: Iterable[int]) -> Graph:
    """Connect ``i`` to ``i + off (mod n)`` for every offset."""
    offs = list(offsets)
    if n < 3:
        raise BadParameters(f"circulant needs n >= 3, got {n}")
    if not offs or len(set(offs)) != len(offs):
        raise BadParameters(f"offsets must be nonempty and distinct, got {offs}")
    for off in offs:
        if not 1 <= off <= n // 2:
            raise BadParameters(f"offset {off} outside 1..n/2 for n={n}")
    edges = {(min(i, (i + off) % n), max(i, (i + off) % n)) for off in offs for i in range(n)}
    return Graph(n, frozenset(edges))


def _projective_points(q: int) -> list[tuple[int, int, int]]:
    """Normalized representatives of PG(2, q): first nonzero coordinate is 1."""
    pts = []
    for v in ((a, b, c) for a in range(q) for b in range(q) for c in range(q)):
        nz = next((x for x in v if x), None)
        if nz == 1:
            pts.append(v)
    return pts


def projective_plane_incidence_graph(q: int) -> Graph:
    """Point-line incidence graph of PG(2, q) for prime ``q``.

    Vertices ``0..N-1`` are points and ``N..2N-1`` lines, ``N = q^2+q+1``.
    """
    if not is_prime(q):
        raise NotPrime(f"q={q} is not prime (prime powers are ingested as JSON)")
    pts = _projective_points(q)
    size = len(pts)
    edges = [
        (i, size + j)
        for i, p in enumerate(pts)
        for j, line in enumerate(pts)
        if (p[0] * line[0] + p[1] * line[1] + p[2] * line[2]) % q == 0
    ]
    return make_graph(2 * size, edges)


def girth(g: Graph) -> int | float:
    """Length of the shortest cycle, or :data:`ACYCLIC` for a forest.

    BFS from every vertex; a non-tree edge ``(u, w)`` met during the search
    from ``s`` closes a closed walk of length ``dist[u] + dist[w] + 1`` which
    contains a cycle no longer than that, and the shortest cycle is found
    exactly from any of its vertices.
    """
    best: int | float = ACYCLIC
    adj = g.adjacency
    for s in range(g.vertex_count):
        dist = [-1] * g.vertex_count
        parent = [-1] * g.vertex_count
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def graph_to_fr(g: Graph) -> FrCode:
    """Vertices become blocks, edges become points ``0..|E|-1`` in sorted edge order."""
    alpha = g.regular_degree()
    if alpha is None or alpha < 1:
        raise NotRegular(f"graph is not regular with positive degree (degrees {sorted(set(g.degrees()))})")
    incident: list[list[int]] = [[] for _ in range(g.vertex_count)]
    edges = g.sorted_edges()
    for label, (u, v) in enumerate(edges):
        incident[u].append(label)
        incident[v].append(label)
    s = IncidenceStructure(tuple(range(len(edges))), tuple(tuple(b) for b in incident))
    return FrCode(s, g.vertex_count, alpha, 2, len(edges))
