"""Incidence structures and fractional repetition (FR) codes.

An incidence structure is a list of point labels plus an ordered list of
blocks, each block a set of those labels. An ``(n, alpha, rho)`` FR code is an
incidence structure with ``n`` blocks of ``alpha`` points each in which every
point lies in exactly ``rho`` blocks. Blocks model storage nodes and points
model replicated packets.

All values here are immutable; every function is pure.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable

from .errors import (
    EmptyStructure,
    MalformedStructure,
    NonUniformBlockSize,
    NonUniformPointDegree,
    ParameterMismatch,
)

__all__ = [
    "IncidenceStructure",
    "FrCode",
    "make_structure",
    "validate_fr",
    "fr_code",
    "dual",
    "relabel_contiguous",
    "has_repeated_blocks",
    "disjoint_union",
    "to_json",
    "from_json",
    "load_json",
]


@dataclass(frozen=True)
class IncidenceStructure:
    """Points and blocks; block ``i`` is the sorted tuple ``blocks[i]``.

    Use :func:`make_structure` to build one from arbitrary iterables.
    """

    point_ids: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.point_ids or not self.blocks:
            raise EmptyStructure("an incidence structure needs at least one point and one block")
        seen: set[int] = set()
        for x in self.point_ids:
            if not isinstance(x, int) or isinstance(x, bool) or x < 0:
                raise MalformedStructure(f"point label {x!r} is not a non-negative integer")
            if x in seen:
                raise MalformedStructure(f"point label {x} listed twice")
            seen.add(x)
        for i, block in enumerate(self.blocks):
            if list(block) != sorted(set(block)):
                raise MalformedStructure(
                    f"block {i} must be a strictly increasing tuple (no repeated points)"
                )
            for x in block:
                if x not in seen:
                    raise MalformedStructure(f"block {i} contains unknown point {x}")

    @property
    def num_points(self) -> int:
        return len(self.point_ids)

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    @cached_property
    def point_index(self) -> dict[int, int]:
        """Map from point label to its position in ``point_ids``."""
        return {x: i for i, x in enumerate(self.point_ids)}

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Blocks as bitmasks over point positions (bit ``i`` = ``point_ids[i]``)."""
        index = self.point_index
        out = []
        for block in self.blocks:
            m = 0
            for x in block:
                m |= 1 << index[x]
            out.append(m)
        return tuple(out)

    def point_degrees(self) -> dict[int, int]:
        deg = dict.fromkeys(self.point_ids, 0)
        for block in self.blocks:
            for x in block:
                deg[x] += 1
        return deg


def make_structure(
    blocks: Iterable[Iterable[int]], points: Iterable[int] | None = None
) -> IncidenceStructure:
    """Build an :class:`IncidenceStructure`, sorting each block.

    When ``points`` is omitted the point set is the sorted union of the blocks.
    A block listing the same point twice is rejected (no multi-incidence).
    """
    normalized = []
    for i, block in enumerate(blocks):
        b = list(block)
        if len(set(b)) != len(b):
            raise MalformedStructure(f"block {i} lists a point more than once")
        normalized.append(tuple(sorted(b)))
    if points is None:
        point_ids = tuple(sorted({x for b in normalized for x in b}))
    else:
        point_ids = tuple(points)
    return IncidenceStructure(point_ids, tuple(normalized))


@dataclass(frozen=True)
class FrCode:
    """A validated ``(n, alpha, rho)`` FR code with ``theta = n*alpha/rho`` points."""

    structure: IncidenceStructure
    n: int
    alpha: int
    rho: int
    theta: int

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        return self.structure.blocks

    @property
    def point_ids(self) -> tuple[int, ...]:
        return self.structure.point_ids

    @property
    def masks(self) -> tuple[int, ...]:
        return self.structure.masks

    @property
    def params(self) -> tuple[int, int, int]:
        return (self.n, self.alpha, self.rho)

    def summary(self) -> str:
        return f"n={self.n} alpha={self.alpha} rho={self.rho} theta={self.theta}"

    def __repr__(self) -> str:
        return f"FrCode({self.summary()})"


def validate_fr(s: IncidenceStructure) -> FrCode:
    """Check uniform block size and point degree; infer ``(n, alpha, rho, theta)``.

    Raises :class:`NonUniformBlockSize` or :class:`NonUniformPointDegree` naming
    the first offending block or point, and :class:`EmptyStructure` when the
    blocks carry no points.
    """
    alpha = len(s.blocks[0])
    if alpha == 0:
        raise EmptyStructure("block 0 is empty")
    for i, block in enumerate(s.blocks):
        if len(block) != alpha:
            raise NonUniformBlockSize(
                f"block {i} has {len(block)} points, expected {alpha} (size of block 0)"
            )
    deg = s.point_degrees()
    rho = deg[s.point_ids[0]]
    for x in s.point_ids:
        if deg[x] != rho:
            raise NonUniformPointDegree(
                f"point {x} lies in {deg[x]} blocks, expected {rho} "
                f"(degree of point {s.point_ids[0]})"
            )
    if rho == 0:
        raise EmptyStructure("no point is incident with any block")
    n = s.num_blocks
    # n*alpha == theta*rho always holds by double counting
    return FrCode(s, n, alpha, rho, s.num_points)


def fr_code(blocks: Iterable[Iterable[int]], points: Iterable[int] | None = None) -> FrCode:
    """Shorthand for ``validate_fr(make_structure(blocks, points))``."""
    return validate_fr(make_structure(blocks, points))


def dual(c: FrCode) -> FrCode:
    """Swap the roles of points and blocks.

    Original block ``i`` becomes point ``i``; the ``j``-th point of ``c`` (in
    ``point_ids`` order) becomes block ``j`` holding the indices of the blocks
    that contain it. The result is a ``(theta, rho, alpha)`` code.
    """
    index = c.structure.point_index
    incident: list[list[int]] = [[] for _ in c.point_ids]
    for i, block in enumerate(c.blocks):
        for x in block:
            incident[index[x]].append(i)
    s = IncidenceStructure(tuple(range(c.n)), tuple(tuple(b) for b in incident))
    return FrCode(s, c.theta, c.rho, c.alpha, c.n)


def relabel_contiguous(c: FrCode) -> FrCode:
    """Rename the points of ``c`` to ``0..theta-1`` by their position in ``point_ids``."""
    index = c.structure.point_index
    blocks = tuple(tuple(sorted(index[x] for x in b)) for b in c.blocks)
    s = IncidenceStructure(tuple(range(c.theta)), blocks)
    return FrCode(s, c.n, c.alpha, c.rho, c.theta)


def has_repeated_blocks(c: FrCode) -> bool:
    return len(set(c.blocks)) != c.n


def disjoint_union(a: FrCode, b: FrCode) -> FrCode:
    """Place ``b`` beside ``a``: ``b``'s labels are shifted above ``max(a)``."""
    if (a.alpha, a.rho) != (b.alpha, b.rho):
        raise ParameterMismatch(
            f"cannot join codes with (alpha, rho) = {(a.alpha, a.rho)} and {(b.alpha, b.rho)}"
        )
    shift = max(a.point_ids) + 1
    points = a.point_ids + tuple(x + shift for x in b.point_ids)
    blocks = a.blocks + tuple(tuple(x + shift for x in blk) for blk in b.blocks)
    s = IncidenceStructure(points, blocks)
    return FrCode(s, a.n + b.n, a.alpha, a.rho, a.theta + b.theta)


def to_json(s: IncidenceStructure | FrCode) -> str:
    if isinstance(s, FrCode):
        s = s.structure
    return json.dumps({"points": list(s.point_ids), "blocks": [list(b) for b in s.blocks]})


def from_json(text: str) -> IncidenceStructure:
    try:
        doc = json.loads(text)
        points = doc["points"]
        blocks = doc["blocks"]
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise MalformedStructure(f"not an incidence-structure document: {exc}") from exc
    if not isinstance(points, list) or not isinstance(blocks, list):
        raise MalformedStructure("'points' and 'blocks' must be arrays")
    return make_structure(blocks, points)


def load_json(path: str | Path) -> IncidenceStructure:
    return from_json(Path(path).read_text(encoding="utf-8"))

