"""Combinatorial designs and the FR codes they induce.

Covers Steiner triple systems (Bose and Skolem constructions), maximal arcs,
affine resolvable designs over prime fields, MOLS nets, and a resolvability
search. Constructions emit contiguous point labels ``0..theta-1``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, product
from pathlib import Path
from typing import Sequence

from .errors import (
    BadParameters,
    InadmissibleOrder,
    NotLatin,
    NotOrthogonal,
    NotPrime,
    NotSteiner,
    OrderMismatch,
    RhoOutOfRange,
    SideConditionViolated,
)
from .graphs import is_prime
from .incidence import FrCode, IncidenceStructure, validate_fr

__all__ = [
    "ResolvableDesign",
    "LatinSquare",
    "steiner_triple_system",
    "is_steiner_system",
    "maximal_arc_search",
    "is_maximal_arc",
    "affine_directions",
    "affine_side_condition",
    "affine_design",
    "affine_fr_code",
    "mols_prime",
    "are_orthogonal",
    "mols_design",
    "mols_fr_code",
    "latin_squares_from_json",
    "latin_squares_to_json",
    "load_latin_squares",
    "is_resolvable",
]


@dataclass(frozen=True)
class ResolvableDesign:
    """An FR code together with a partition of its blocks into parallel classes.

    ``parallel_classes[c]`` lists block indices; the blocks of one class
    partition the point set.
    """

    code: FrCode
    parallel_classes: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        points = set(self.code.point_ids)
        used: set[int] = set()
        for cls in self.parallel_classes:
            covered: list[int] = []
            for b in cls:
                covered.extend(self.code.blocks[b])
            if len(covered) != len(points) or set(covered) != points:
                raise BadParameters(f"class {cls} does not partition the point set")
            used.update(cls)
        if used != set(range(self.code.n)) or sum(map(len, self.parallel_classes)) != self.code.n:
            raise BadParameters("parallel classes must partition the blocks")

    @property
    def structure(self) -> IncidenceStructure:
        return self.code.structure


# ---------------------------------------------------------------------------
# Steiner triple systems
# ---------------------------------------------------------------------------


def _bose(theta: int) -> list[tuple[int, int, int]]:
    # theta = 3m with m odd; idempotent commutative quasigroup x∘y = (x+y)/2 mod m
    m = theta // 3
    half = (m + 1) // 2
    label = lambda x, i: 3 * x + i  # noqa: E731
    blocks = [(label(x, 0), label(x, 1), label(x, 2)) for x in range(m)]
    for x, y in combinations(range(m), 2):
        z = (x + y) * half % m
        for i in range(3):
            blocks.append((label(x, i), label(y, i), label(z, (i + 1) % 3)))
    return blocks


def _skolem(theta: int) -> list[tuple[int, int, int]]:
    # theta = 6t+1 on {inf} ∪ Z_2t × Z_3 with the half-idempotent quasigroup of order 2t
    t = (theta - 1) // 6
    order = 2 * t
    inf = theta - 1
    label = lambda x, i: 3 * x + i  # noqa: E731

    def op(x: int, y: int) -> int:
        s = (x + y) % order
        return s // 2 if s % 2 == 0 else (s - 1) // 2 + t

    blocks = [(label(x, 0), label(x, 1), label(x, 2)) for x in range(t)]
    for x in range(t):
        for i in range(3):
            blocks.append((inf, label(t + x, i), label(x, (i + 1) % 3)))
    for x, y in combinations(range(order), 2):
        z = op(x, y)
        for i in range(3):
            blocks.append((label(x, i), label(y, i), label(z, (i + 1) % 3)))
    return blocks


def steiner_triple_system(theta: int) -> FrCode:
    """An S(2,3,theta): Bose construction for theta ≡ 3 (mod 6), Skolem for theta ≡ 1.

    The result is a ``(theta(theta-1)/6, 3, (theta-1)/2)`` FR code.
    """
    if theta < 7 or theta % 6 not in (1, 3):
        raise InadmissibleOrder(f"no S(2,3,{theta}) construction: need theta >= 7, theta ≡ 1,3 (mod 6)")
    raw = _bose(theta) if theta % 6 == 3 else _skolem(theta)
    s = IncidenceStructure(tuple(range(theta)), tuple(tuple(sorted(b)) for b in raw))
    return validate_fr(s)


def is_steiner_system(c: FrCode) -> bool:
    """True iff every unordered pair of points lies in exactly one block."""
    seen: set[tuple[int, int]] = set()
    for block in c.blocks:
        for pair in combinations(block, 2):
            if pair in seen:
                return False
            seen.add(pair)
    t = c.theta
    return len(seen) == t * (t - 1) // 2


def is_maximal_arc(c: FrCode, points: Sequence[int]) -> bool:
    """True iff ``points`` meets every block in zero or two points."""
    chosen = set(points)
    return all(len(chosen.intersection(b)) in (0, 2) for b in c.blocks)


def maximal_arc_search(c: FrCode, size: int) -> tuple[int, ...] | None:
    """Lexicographically least point set of ``size`` points meeting every block in 0 or 2.

    Depth-first over points in ascending label order, include-branch first.
    A branch is cut as soon as a block holds three chosen points or a block
    whose points are all decided holds exactly one.
    """
    if not is_steiner_system(c):
        raise NotSteiner("maximal arcs are searched in Steiner systems only")
    if not 0 <= size <= c.theta:
        raise BadParameters(f"arc size {size} outside 0..{c.theta}")
    pts = sorted(c.point_ids)
    pos = {x: i for i, x in enumerate(pts)}
    theta = len(pts)
    blocks_of: list[list[int]] = [[] for _ in range(theta)]
    closes: list[list[int]] = [[] for _ in range(theta)]
    for bi, block in enumerate(c.blocks):
        idx = [pos[x] for x in block]
        for i in idx:
            blocks_of[i].append(bi)
        closes[max(idx)].append(bi)
    count = [0] * len(c.blocks)
    chosen: list[int] = []

    def extend(i: int) -> bool:
        if len(chosen) == size:
            # every remaining point is excluded, so a block with one point stays odd
            return all(v != 1 for v in count)
        if len(chosen) + (theta - i) < size:
            return False
        # include point i
        if all(count[b] < 2 for b in blocks_of[i]):
            for b in blocks_of[i]:
                count[b] += 1
            chosen.append(i)
            if all(count[b] != 1 for b in closes[i]) and extend(i + 1):
                return True
            chosen.pop()
            for b in blocks_of[i]:
                count[b] -= 1
        # exclude point i
        if all(count[b] != 1 for b in closes[i]) and extend(i + 1):
            return True
        return False

    if extend(0):
        return tuple(pts[i] for i in chosen)
    return None


# ---------------------------------------------------------------------------
# Affine resolvable designs AG(m, q), q prime
# ---------------------------------------------------------------------------


def affine_directions(q: int, m: int) -> list[tuple[int, ...]]:
    """Projective representatives of nonzero vectors of F_q^m, lexicographically ordered."""
    out = []
    for v in product(range(q), repeat=m):
        nz = next((x for x in v if x), None)
        if nz == 1:
            out.append(v)
    return out


def affine_side_condition(q: int, m: int, rho: int) -> bool:
    """If q > m then rho > m; if q <= m then rho <= m."""
    return rho > m if q > m else rho <= m


def affine_design(q: int, m: int, rho: int, *, strict: bool = False) -> ResolvableDesign:
    """``rho`` parallel classes of hyperplanes of AG(m, q), as a ``(q*rho, q^(m-1), rho)`` code.

    Point ``x`` of F_q^m has label ``sum(x[i] * q^(m-1-i))``. Class ``c`` is the
    ``q`` hyperplanes ``a·x = 0..q-1`` for the ``c``-th direction ``a`` of
    :func:`affine_directions`. With ``strict=True`` the file-size side
    condition on ``rho`` is enforced.
    """
    if not is_prime(q):
        raise NotPrime(f"q={q} is not prime (prime powers are ingested as JSON)")
    if m < 2:
        raise BadParameters(f"need m >= 2, got {m}")
    max_rho = (q**m - 1) // (q - 1)
    if not 1 <= rho <= max_rho:
        raise RhoOutOfRange(f"rho={rho} outside 1..{max_rho}")
    if strict and not affine_side_condition(q, m, rho):
        raise SideConditionViolated(
            f"(q, m, rho) = ({q}, {m}, {rho}): need rho > m when q > m and rho <= m when q <= m"
        )
    vectors = list(product(range(q), repeat=m))  # index == label
    blocks: list[tuple[int, ...]] = []
    classes: list[tuple[int, ...]] = []
    for a in affine_directions(q, m)[:rho]:
        hyper: list[list[int]] = [[] for _ in range(q)]
        for label, x in enumerate(vectors):
            hyper[sum(ai * xi for ai, xi in zip(a, x)) % q].append(label)
        classes.append(tuple(range(len(blocks), len(blocks) + q)))
        blocks.extend(tuple(h) for h in hyper)
    code = validate_fr(IncidenceStructure(tuple(range(q**m)), tuple(blocks)))
    return ResolvableDesign(code, tuple(classes))


def affine_fr_code(q: int, m: int, rho: int, *, strict: bool = False) -> FrCode:
    return affine_design(q, m, rho, strict=strict).code


# ---------------------------------------------------------------------------
# Latin squares and MOLS nets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LatinSquare:
    """An ``order x order`` array where each symbol occurs once per row and column."""

    order: int
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = self.order
        if n < 1 or len(self.cells) != n or any(len(row) != n for row in self.cells):
            raise NotLatin(f"cells must form a {n}x{n} array")
        symbols = {x for row in self.cells for x in row}
        if len(symbols) != n:
            raise NotLatin(f"expected {n} symbols, found {len(symbols)}")
        for i, row in enumerate(self.cells):
            if len(set(row)) != n:
                raise NotLatin(f"row {i} repeats a symbol")
        for j in range(n):
            if len({row[j] for row in self.cells}) != n:
                raise NotLatin(f"column {j} repeats a symbol")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "LatinSquare":
        return cls(len(rows), tuple(tuple(r) for r in rows))


def mols_prime(p: int) -> list[LatinSquare]:
    """The ``p-1`` squares ``L_a(i, j) = a*i + j (mod p)``, symbols shifted to ``1..p``."""
    if not is_prime(p):
        raise NotPrime(f"p={p} is not prime")
    return [
        LatinSquare(p, tuple(tuple((a * i + j) % p + 1 for j in range(p)) for i in range(p)))
        for a in range(1, p)
    ]


def are_orthogonal(a: LatinSquare, b: LatinSquare) -> bool:
    if a.order != b.order:
        raise OrderMismatch(f"orders differ: {a.order} vs {b.order}")
    pairs = {(x, y) for ra, rb in zip(a.cells, b.cells) for x, y in zip(ra, rb)}
    return len(pairs) == a.order * a.order


def mols_design(squares: Sequence[LatinSquare], rho: int) -> ResolvableDesign:
    """Net from the first ``rho`` squares: cell ``(i, j)`` is point ``i*N + j``.

    Each square contributes one parallel class, one block per symbol (symbols
    in ascending order). The result is a ``(rho*N, N, rho)`` code.
    """
    if not squares:
        raise RhoOutOfRange("no squares supplied")
    if not 1 <= rho <= len(squares):
        raise RhoOutOfRange(f"rho={rho} outside 1..{len(squares)}")
    used = list(squares[:rho])
    order = used[0].order
    for sq in used:
        if sq.order != order:
            raise OrderMismatch(f"orders differ: {order} vs {sq.order}")
    for i, j in combinations(range(rho), 2):
        if not are_orthogonal(used[i], used[j]):
            raise NotOrthogonal(f"squares {i} and {j} are not orthogonal")
    blocks: list[tuple[int, ...]] = []
    classes: list[tuple[int, ...]] = []
    for sq in used:
        by_symbol: dict[int, list[int]] = {}
        for i, row in enumerate(sq.cells):
            for j, x in enumerate(row):
                by_symbol.setdefault(x, []).append(i * order + j)
        classes.append(tuple(range(len(blocks), len(blocks) + order)))
        blocks.extend(tuple(by_symbol[x]) for x in sorted(by_symbol))
    code = validate_fr(IncidenceStructure(tuple(range(order * order)), tuple(blocks)))
    return ResolvableDesign(code, tuple(classes))


def mols_fr_code(squares: Sequence[LatinSquare], rho: int) -> FrCode:
    return mols_design(squares, rho).code


def latin_squares_from_json(text: str) -> list[LatinSquare]:
    """Parse ``{"order": N, "squares": [[[...], ...], ...]}``."""
    try:
        doc = json.loads(text)
        order = doc["order"]
        raw = doc["squares"]
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise NotLatin(f"not a Latin-squares document: {exc}") from exc
    squares = [LatinSquare.from_rows(rows) for rows in raw]
    for sq in squares:
        if sq.order != order:
            raise OrderMismatch(f"declared order {order}, found a square of order {sq.order}")
    return squares


def latin_squares_to_json(squares: Sequence[LatinSquare]) -> str:
    order = squares[0].order if squares else 0
    return json.dumps({"order": order, "squares": [[list(r) for r in sq.cells] for sq in squares]})


def load_latin_squares(path: str | Path) -> list[LatinSquare]:
    return latin_squares_from_json(Path(path).read_text(encoding="utf-8"))


# ---------------------------------------------------------------------------
# Resolvability
# ---------------------------------------------------------------------------


def is_resolvable(c: FrCode) -> ResolvableDesign | None:
    """Partition the blocks into parallel classes, or return ``None`` if impossible.

    Each class is built by exact cover: the smallest uncovered point is
    covered by each candidate block in turn. A new class always starts with
    the lowest-index unassigned block, so classes come out ordered by their
    first block and the search is deterministic.
    """
    if c.theta % c.alpha:
        return None
    masks = c.masks
    full = (1 << c.theta) - 1
    containing: list[list[int]] = [[] for _ in range(c.theta)]
    for bi, m in enumerate(masks):
        for p in range(c.theta):
            if m >> p & 1:
                containing[p].append(bi)
    assigned = [False] * c.n
    classes: list[tuple[int, ...]] = []

    def fill(cover: int, current: list[int]) -> bool:
        if cover == full:
            classes.append(tuple(sorted(current)))
            if next_class():
                return True
            classes.pop()
            return False
        p = (~cover & full & -(~cover & full)).bit_length() - 1
        for bi in containing[p]:
            if not assigned[bi] and not masks[bi] & cover:
                assigned[bi] = True
                current.append(bi)
                if fill(cover | masks[bi], current):
                    return True
                current.pop()
                assigned[bi] = False
        return False

    def next_class() -> bool:
        first = next((i for i, a in enumerate(assigned) if not a), None)
        if first is None:
            return True
        assigned[first] = True
        if fill(masks[first], [first]):
            return True
        assigned[first] = False
        return False

    if next_class():
        return ResolvableDesign(c, tuple(classes))
    return None
