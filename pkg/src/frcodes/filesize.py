"""Supported file size of FR codes and the recursive upper bounds on it.

``M_k`` is the fewest distinct points covered by any ``k`` blocks. It is
always computed by exhaustive branch-and-bound search; the closed-form laws
at the bottom of this module are claims to be checked against that search,
never substitutes for it.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import BadParameters, EllOutOfRange, KOutOfRange, SizeLimitExceeded
from .incidence import FrCode, dual

__all__ = [
    "DEFAULT_BUDGET",
    "FileSizeProfile",
    "min_union_size",
    "supported_file_size",
    "file_size_profile",
    "phi_sequence",
    "phi_bound",
    "psi_sequence",
    "psi_bound",
    "dual_indicator_bound",
    "file_size_from_dual",
    "profile_from_dual",
    "regular_graph_law",
    "turan_law",
    "steiner_dual_law",
    "affine_law",
    "mols_law",
]

#: Default cap on search nodes visited by one exhaustive search.
DEFAULT_BUDGET = 10**8


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


# ---------------------------------------------------------------------------
# Exhaustive minimum union
# ---------------------------------------------------------------------------


class _Done(Exception):
    pass


def _greedy_incumbent(masks: Sequence[int], k: int) -> int:
    best = None
    n = len(masks)
    for start in range(n):
        union = masks[start]
        used = {start}
        for _ in range(k - 1):
            j = min((i for i in range(n) if i not in used), key=lambda i: (union | masks[i]).bit_count())
            used.add(j)
            union |= masks[j]
        size = union.bit_count()
        if best is None or size < best:
            best = size
    return best


def _branch(
    masks: Sequence[int], k: int, first: range, best: int, floor: int, budget: int
) -> tuple[int, int]:
    """Search all ``k``-subsets whose smallest index lies in ``first``.

    Returns ``(best, visited)``. A partial selection is abandoned as soon as
    its union is no smaller than the incumbent, since unions only grow.
    """
    n = len(masks)
    visited = 0

    def search(start: int, need: int, union: int) -> None:
        nonlocal best, visited
        visited += 1
        if visited > budget:
            raise SizeLimitExceeded(f"exhaustive search exceeded the budget of {budget} nodes")
        for i in range(start, n - need + 1):
            u = union | masks[i]
            size = u.bit_count()
            if size >= best:
                continue
            if need == 1:
                best = size
                if best <= floor:
                    raise _Done
            else:
                search(i + 1, need - 1, u)

    try:
        for i in first:
            if i > n - k:
                break
            u = masks[i]
            size = u.bit_count()
            if size >= best:
                continue
            if k == 1:
                best = size
                if best <= floor:
                    raise _Done
            else:
                search(i + 1, k - 1, u)
    except _Done:
        pass
    return best, visited


def _branch_task(args: tuple) -> tuple[int, int]:
    masks, k, lo, hi, best, floor, budget = args
    return _branch(masks, k, range(lo, hi), best, floor, budget)


def min_union_size(
    masks: Sequence[int],
    k: int,
    *,
    rho: int | None = None,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
) -> int:
    """Exact minimum popcount of the union of ``k`` of the given bitmasks.

    ``rho`` (the largest number of masks sharing a bit) only sharpens the
    early-exit floor ``ceil(k*alpha/rho)``. With ``jobs > 1`` the choices of
    the first index are split into contiguous ranges run in worker
    processes; the returned minimum is identical to the sequential one.
    """
    n = len(masks)
    if not 1 <= k <= n:
        raise KOutOfRange(f"k={k} outside 1..{n}")
    smallest = min(m.bit_count() for m in masks)
    floor = smallest
    if rho:
        floor = max(floor, _ceil_div(sum(sorted(m.bit_count() for m in masks)[:k]), rho))
    incumbent = _greedy_incumbent(masks, k)
    if incumbent <= floor:
        return incumbent
    # the greedy value is attainable, so searching for strictly smaller suffices
    tops = n - k + 1
    if jobs <= 1 or tops < 2:
        best, visited = _branch(masks, k, range(tops), incumbent, floor, budget)
        return best
    chunks = min(jobs, tops)
    bounds = [tops * i // chunks for i in range(chunks + 1)]
    tasks = [
        (tuple(masks), k, bounds[i], bounds[i + 1], incumbent, floor, budget)
        for i in range(chunks)
    ]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(_branch_task, tasks))
    if sum(v for _, v in results) > budget:
        raise SizeLimitExceeded(f"exhaustive search exceeded the budget of {budget} nodes")
    return min(b for b, _ in results)


def supported_file_size(c: FrCode, k: int, *, budget: int = DEFAULT_BUDGET, jobs: int = 1) -> int:
    """``M_k(c)``: the fewest distinct points held by any ``k`` blocks."""
    if not 1 <= k <= c.n:
        raise KOutOfRange(f"k={k} outside 1..{c.n}")
    if k == c.n:
        return c.theta
    return min_union_size(c.masks, k, rho=c.rho, budget=budget, jobs=jobs)


@dataclass(frozen=True)
class FileSizeProfile:
    """``M_1..M_n`` and the complementary sizes ``N_k = theta - M_k``."""

    n: int
    alpha: int
    rho: int
    theta: int
    m_values: tuple[int, ...]

    @property
    def n_values(self) -> tuple[int, ...]:
        return tuple(self.theta - m for m in self.m_values)

    def m(self, k: int) -> int:
        return self.m_values[k - 1]

    def complementary(self, k: int) -> int:
        return self.theta - self.m_values[k - 1]


def file_size_profile(c: FrCode, *, budget: int = DEFAULT_BUDGET, jobs: int = 1) -> FileSizeProfile:
    """Every ``M_k`` for ``k = 1..n``.

    Refuses up front (``SizeLimitExceeded``) when ``C(n, n//2)`` exceeds the
    budget, before any search is attempted.
    """
    if math.comb(c.n, c.n // 2) > budget:
        raise SizeLimitExceeded(
            f"C({c.n}, {c.n // 2}) = {math.comb(c.n, c.n // 2)} exceeds the budget of {budget}"
        )
    values = tuple(supported_file_size(c, k, budget=budget, jobs=jobs) for k in range(1, c.n + 1))
    return FileSizeProfile(c.n, c.alpha, c.rho, c.theta, values)


# ---------------------------------------------------------------------------
# Recursive bounds
# ---------------------------------------------------------------------------


def _theta(n: int, alpha: int, rho: int) -> int:
    if n < 1 or alpha < 1 or rho < 1:
        raise BadParameters(f"need positive (n, alpha, rho), got {(n, alpha, rho)}")
    if (n * alpha) % rho:
        raise BadParameters(f"n*alpha/rho = {n}*{alpha}/{rho} is not an integer")
    return n * alpha // rho


def phi_sequence(n: int, alpha: int, rho: int) -> tuple[int, ...]:
    """``phi(1..n)`` with ``phi(1) = alpha`` and
    ``phi(k+1) = phi(k) + alpha - ceil((rho*phi(k) - k*alpha) / (n - k))``."""
    _theta(n, alpha, rho)
    vals = [alpha]
    for k in range(1, n):
        p = vals[-1]
        vals.append(p + alpha - _ceil_div(rho * p - k * alpha, n - k))
    return tuple(vals)


def phi_bound(n: int, alpha: int, rho: int, k: int) -> int:
    if not 1 <= k <= n:
        raise KOutOfRange(f"k={k} outside 1..{n}")
    return phi_sequence(n, alpha, rho)[k - 1]


def psi_sequence(n: int, alpha: int, rho: int) -> tuple[int, ...]:
    """``psi(1..theta)``: the same recursion with the roles of alpha and rho swapped."""
    theta = _theta(n, alpha, rho)
    vals = [rho]
    for ell in range(1, theta):
        p = vals[-1]
        vals.append(p + rho - _ceil_div(alpha * p - ell * rho, theta - ell))
    return tuple(vals)


def psi_bound(n: int, alpha: int, rho: int, ell: int) -> int:
    theta = _theta(n, alpha, rho)
    if not 1 <= ell <= theta:
        raise EllOutOfRange(f"ell={ell} outside 1..{theta}")
    return psi_sequence(n, alpha, rho)[ell - 1]


def dual_indicator_bound(n: int, alpha: int, rho: int, k: int) -> int:
    """Number of ``ell`` in ``1..theta`` with ``k > n - psi(ell)``."""
    if not 1 <= k <= n:
        raise KOutOfRange(f"k={k} outside 1..{n}")
    return sum(1 for p in psi_sequence(n, alpha, rho) if k > n - p)


# ---------------------------------------------------------------------------
# File size through the dual code
# ---------------------------------------------------------------------------


def _m_from_dual_values(theta: int, k: int, dual_m: Sequence[int], n: int) -> int:
    # theta - M_k(c) is the largest j with N_j(dual) = n - M_j(dual) >= k (N_0 = n)
    j = 0
    for idx, m in enumerate(dual_m, start=1):
        if n - m >= k:
            j = idx
        else:
            break
    return theta - j


def file_size_from_dual(c: FrCode, k: int, *, budget: int = DEFAULT_BUDGET) -> int:
    """``M_k(c)`` read off the complementary profile of the dual code.

    ``M_k = theta - j`` where ``N_{j+1}(dual) < k <= N_j(dual)``. The
    threshold ``j`` is located by bisection, since ``N_j`` is non-increasing.
    """
    if not 1 <= k <= c.n:
        raise KOutOfRange(f"k={k} outside 1..{c.n}")
    d = dual(c)
    lo, hi = 0, c.theta  # N_lo >= k holds; N_theta = 0 < k
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if c.n - supported_file_size(d, mid, budget=budget) >= k:
            lo = mid
        else:
            hi = mid
    return c.theta - lo


def profile_from_dual(c: FrCode, *, budget: int = DEFAULT_BUDGET) -> FileSizeProfile:
    """Whole profile of ``c`` from one full profile of its dual."""
    d = dual(c)
    dual_m = [supported_file_size(d, j, budget=budget) for j in range(1, d.n + 1)]
    values = tuple(_m_from_dual_values(c.theta, k, dual_m, c.n) for k in range(1, c.n + 1))
    return FileSizeProfile(c.n, c.alpha, c.rho, c.theta, values)


# ---------------------------------------------------------------------------
# Closed-form file-size laws (each returns None outside its validity range)
# ---------------------------------------------------------------------------


def regular_graph_law(alpha: int, g: int | float, k: int) -> int | None:
    """Code of an ``alpha``-regular graph of girth ``g``:
    ``k*alpha - k + 1`` for ``k <= g-1``, ``k*alpha - k`` for ``g <= k <= g + ceil(g/2) - 2``."""
    if k < 1:
        return None
    if k <= g - 1:
        return k * alpha - k + 1
    if math.isfinite(g) and g <= k <= g + _ceil_div(int(g), 2) - 2:
        return k * alpha - k
    return None


def turan_law(n: int, r: int, k: int) -> int | None:
    """``k*alpha - floor((r-1)/r * k^2/2)`` with ``alpha = (r-1)n/r``, valid for ``1 <= k <= alpha``."""
    alpha = (r - 1) * n // r
    if not 1 <= k <= alpha:
        return None
    return k * alpha - ((r - 1) * k * k) // (2 * r)


def steiner_dual_law(rho: int, k: int) -> int | None:
    """``k*rho - C(k, 2)`` for ``1 <= k <= rho + 1``."""
    if not 1 <= k <= rho + 1:
        return None
    return k * rho - math.comb(k, 2)


def affine_law(q: int, m: int, k: int) -> int | None:
    """``q^m * (1 - (1 - 1/q)^k)`` for ``1 <= k <= m``, in exact arithmetic."""
    if not 1 <= k <= m:
        return None
    value = q**m * (1 - (1 - Fraction(1, q)) ** k)
    if value.denominator != 1:
        raise ArithmeticError(f"affine file size {value} is not integral")
    return int(value)


def mols_law(order: int, k: int) -> int | None:
    """``k*N - C(k, 2)``; the caller restricts ``k`` to at most the class count."""
    if k < 1:
        return None
    return k * order - math.comb(k, 2)
