"""Brute-force reference implementations.

Deliberately naive: plain sets and itertools, no bitmasks, no pruning. They
share no code with the library so that agreement means something.
"""

from __future__ import annotations

from itertools import combinations


def blocks_of(code) -> list[set[int]]:
    return [set(b) for b in code.blocks]


def min_union(blocks: list[set[int]], k: int) -> int:
    """Fewest distinct points covered by any ``k`` blocks."""
    return min(len(set().union(*combo)) for combo in combinations(blocks, k))


def profile(blocks: list[set[int]]) -> list[int]:
    return [min_union(blocks, k) for k in range(1, len(blocks) + 1)]


def dual_blocks(blocks: list[set[int]]) -> list[set[int]]:
    """Block ``j`` of the dual = indices of blocks holding the ``j``-th smallest point."""
    points = sorted(set().union(*blocks))
    return [{i for i, b in enumerate(blocks) if p in b} for p in points]


def min_distance(blocks: list[set[int]], M: int) -> int:
    """Fewest erased blocks after which the survivors cover fewer than ``M`` points."""
    n = len(blocks)
    for e in range(1, n + 1):
        for erased in combinations(range(n), e):
            gone = set(erased)
            left = set().union(*(b for i, b in enumerate(blocks) if i not in gone))
            if len(left) < M:
                return e
    raise AssertionError("erasing everything always loses the file")


def repair_locality(blocks: list[set[int]]) -> int:
    """Worst case over blocks of the fewest other blocks that jointly contain it."""
    worst = 0
    for i, target in enumerate(blocks):
        others = [b for j, b in enumerate(blocks) if j != i]
        for size in range(1, len(others) + 1):
            if any(target <= set().union(*combo) for combo in combinations(others, size)):
                worst = max(worst, size)
                break
        else:
            raise AssertionError(f"block {i} cannot be repaired")
    return worst


def girth(vertex_count: int, edges: list[tuple[int, int]]) -> float:
    """Shortest cycle by enumerating simple paths from each start vertex.

    A cycle of length ``L`` is found as a path ``s -> ... -> s`` whose other
    vertices all exceed ``s``, so each cycle is seen from its smallest vertex.
    """
    adj: dict[int, set[int]] = {v: set() for v in range(vertex_count)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    best = float("inf")

    def walk(start: int, v: int, path: list[int]) -> None:
        nonlocal best
        for w in adj[v]:
            if w == start and len(path) >= 3:
                best = min(best, len(path))
            elif w > start and w not in path and len(path) + 1 < best:
                path.append(w)
                walk(start, w, path)
                path.pop()

    for s in range(vertex_count):
        walk(s, s, [s])
    return best


def maximal_arcs(blocks: list[set[int]], size: int) -> list[tuple[int, ...]]:
    """All point sets of ``size`` meeting every block in 0 or 2 points."""
    points = sorted(set().union(*blocks))
    return [
        s for s in combinations(points, size)
        if all(len(b & set(s)) in (0, 2) for b in blocks)
    ]


def is_steiner_2(blocks: list[set[int]]) -> bool:
    """Every pair of points lies in exactly one block."""
    points = sorted(set().union(*blocks))
    return all(
        sum(1 for b in blocks if x in b and y in b) == 1 for x, y in combinations(points, 2)
    )

