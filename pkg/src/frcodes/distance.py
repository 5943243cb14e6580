"""Repair locality, exact minimum distance, distance upper bounds and optimality checks.

For a stored file of ``M`` packets the minimum distance is the fewest node
failures that leave fewer than ``M`` distinct packets. It equals the
supported file size of the dual code at degree ``theta - M + 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple

from .errors import (
    BadParameters,
    DegenerateDenominator,
    FileTooLarge,
    KOutOfRange,
    NonDivisible,
    OutOfTheoremRange,
    SizeLimitExceeded,
    Unrepairable,
)
from .filesize import DEFAULT_BUDGET, phi_sequence, psi_sequence, supported_file_size
from .incidence import FrCode, dual

__all__ = [
    "BoundReport",
    "Interval",
    "Table3Verdict",
    "repair_locality",
    "reconstruction_degree",
    "min_distance",
    "singleton_bound",
    "locality_bound",
    "improved_bound",
    "local_structure_bound",
    "attains_singleton",
    "attains_locality_bound",
    "singleton_range_regular",
    "singleton_range_regular_beyond",
    "singleton_range_turan",
    "singleton_range_steiner",
    "affine_k0",
    "singleton_range_affine",
    "singleton_range_mols",
    "table3_predicate",
    "dual_graph_optimal_cases",
    "bound_report",
]


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


# ---------------------------------------------------------------------------
# Locality and exact distance
# ---------------------------------------------------------------------------


def _min_cover(target: int, pieces: list[int]) -> int:
    """Fewest ``pieces`` whose union contains ``target`` (all pieces are subsets of it)."""
    best = target.bit_count() + 1  # one piece per point always suffices when coverable

    def search(uncovered: int, used: int) -> None:
        nonlocal best
        if not uncovered:
            best = min(best, used)
            return
        if used + 1 >= best:
            return
        low = uncovered & -uncovered
        for piece in pieces:
            if piece & low:
                search(uncovered & ~piece, used + 1)

    pieces = sorted(set(pieces), key=lambda p: -p.bit_count())
    search(target, 0)
    return best


def repair_locality(c: FrCode) -> int:
    """Worst case, over nodes, of the fewest other nodes holding all of its packets."""
    if c.rho < 2:
        raise Unrepairable(f"rho={c.rho}: a lost packet has no surviving replica")
    masks = c.masks
    worst = 0
    for b, target in enumerate(masks):
        pieces = [m & target for j, m in enumerate(masks) if j != b and m & target]
        worst = max(worst, _min_cover(target, pieces))
    return worst


def reconstruction_degree(
    c: FrCode, M: int, *, budget: int = DEFAULT_BUDGET, jobs: int = 1
) -> int:
    """Smallest ``k`` with ``M_k(c) >= M`` (bisection over the monotone profile)."""
    if not 1 <= M <= c.theta:
        raise FileTooLarge(f"M={M} outside 1..{c.theta}")
    lo, hi = 0, c.n  # M_lo < M <= M_hi, with M_0 = 0 and M_n = theta
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if supported_file_size(c, mid, budget=budget, jobs=jobs) >= M:
            hi = mid
        else:
            lo = mid
    return hi


def min_distance(
    c: FrCode, M: int, *, budget: int = DEFAULT_BUDGET, method: str = "dual", jobs: int = 1
) -> int:
    """Exact ``d_min`` for a stored file of ``M`` packets.

    ``method="dual"`` computes ``M_{theta-M+1}`` of the dual code;
    ``"primal"`` computes ``n - k + 1`` for the reconstruction degree ``k`` of
    ``M``; ``"auto"`` searches whichever code has fewer blocks.
    """
    if M < 1:
        raise BadParameters(f"M={M} must be positive")
    if M > c.theta:
        raise FileTooLarge(f"M={M} exceeds theta={c.theta}")
    if method == "auto":
        method = "dual" if c.theta <= c.n else "primal"
    if method == "dual":
        return supported_file_size(dual(c), c.theta - M + 1, budget=budget, jobs=jobs)
    if method == "primal":
        return c.n - reconstruction_degree(c, M, budget=budget, jobs=jobs) + 1
    raise BadParameters(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# Upper bounds on d_min
# ---------------------------------------------------------------------------


def singleton_bound(n: int, alpha: int, M: int) -> int:
    if M < 1:
        raise BadParameters(f"M={M} must be positive")
    return n - _ceil_div(M, alpha) + 1


def locality_bound(n: int, alpha: int, d: int, M: int) -> int:
    if M < 1 or d < 1:
        raise BadParameters(f"need M >= 1 and d >= 1, got M={M}, d={d}")
    return n - _ceil_div(M, alpha) - _ceil_div(M, d * alpha) + 2


def improved_bound(n: int, alpha: int, rho: int, M: int) -> int:
    """``min(psi(theta - M + 1), #{k : phi(k) > M - 1})``."""
    if (n * alpha) % rho:
        raise BadParameters(f"n*alpha/rho = {n}*{alpha}/{rho} is not an integer")
    theta = n * alpha // rho
    if M < 1:
        raise BadParameters(f"M={M} must be positive")
    if M > theta:
        raise FileTooLarge(f"M={M} exceeds theta={theta}")
    psi = psi_sequence(n, alpha, rho)[theta - M]
    count = sum(1 for p in phi_sequence(n, alpha, rho) if p > M - 1)
    return min(psi, count)


def local_structure_bound(
    n: int, alpha: int, n_local: int, rho_local: int, M: int, *, rho: int | None = None
) -> int:
    """Bound for codes whose nodes each sit in a local ``(n_local, alpha, rho_local)`` code.

    ``n - ceil(n'(1 - 1/rho') * floor((M-1)rho'/(n'alpha)) + M/alpha) + 1``.
    """
    if n < n_local or rho_local < 1 or n_local < 1 or M < 1:
        raise BadParameters(
            f"need n >= n_local >= 1, rho_local >= 1, M >= 1; got {(n, n_local, rho_local, M)}"
        )
    if rho is not None and rho < rho_local:
        raise BadParameters(f"rho={rho} is smaller than rho_local={rho_local}")
    steps = (M - 1) * rho_local // (n_local * alpha)
    inner = Fraction(n_local * (rho_local - 1), rho_local) * steps + Fraction(M, alpha)
    return n - math.ceil(inner) + 1


# ---------------------------------------------------------------------------
# Attainment at a reconstruction degree
# ---------------------------------------------------------------------------


def attains_singleton(c: FrCode, k: int, *, budget: int = DEFAULT_BUDGET) -> bool:
    """``k == ceil(M_k / alpha)`` with the exact ``M_k``."""
    if not 1 <= k <= c.n:
        raise KOutOfRange(f"k={k} outside 1..{c.n}")
    return k == _ceil_div(supported_file_size(c, k, budget=budget), c.alpha)


def attains_locality_bound(
    c: FrCode, k: int, *, d: int | None = None, budget: int = DEFAULT_BUDGET
) -> bool:
    """``k == ceil(M_k/alpha) + ceil(M_k/(d*alpha)) - 1`` with ``d`` the repair locality."""
    if not 1 <= k <= c.n:
        raise KOutOfRange(f"k={k} outside 1..{c.n}")
    if d is None:
        d = repair_locality(c)
    m = supported_file_size(c, k, budget=budget)
    return k == _ceil_div(m, c.alpha) + _ceil_div(m, d * c.alpha) - 1


# ---------------------------------------------------------------------------
# Predicted attainment ranges
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Interval:
    """Closed integer interval ``[lo, hi]``; empty when ``lo > hi``."""

    lo: int
    hi: int

    @property
    def empty(self) -> bool:
        return self.lo > self.hi

    def __contains__(self, k: object) -> bool:
        return isinstance(k, int) and self.lo <= k <= self.hi

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.lo, self.hi + 1))

    def __len__(self) -> int:
        return max(0, self.hi - self.lo + 1)

    def __str__(self) -> str:
        return "[]" if self.empty else f"[{self.lo},{self.hi}]"


EMPTY = Interval(1, 0)


def _as_int(g: int | float) -> int | float:
    return int(g) if math.isfinite(g) else g


def singleton_range_regular(alpha: int, g: int | float) -> Interval:
    """``[1, min(alpha, g-1)]`` for the code of an ``alpha``-regular graph of girth ``g``."""
    if alpha < 2 or g < 3:
        raise BadParameters(f"need alpha >= 2 and g >= 3, got alpha={alpha}, g={g}")
    return Interval(1, int(min(alpha, _as_int(g) - 1)))


def singleton_range_regular_beyond(alpha: int, g: int | float) -> Interval:
    """``[g, min(alpha-1, g + ceil(g/2) - 2)]`` when ``g < alpha``, else empty."""
    if alpha < 2 or g < 3:
        raise BadParameters(f"need alpha >= 2 and g >= 3, got alpha={alpha}, g={g}")
    if not g < alpha:
        return EMPTY
    g = int(g)
    return Interval(g, min(alpha - 1, g + _ceil_div(g, 2) - 2))


def singleton_range_turan(n: int, r: int) -> Interval:
    """``[1, min(n(r-1)/r, largest k with k^2 < 2n)]``."""
    if r < 1 or n < 1:
        raise BadParameters(f"need positive n and r, got n={n}, r={r}")
    if n % r:
        raise NonDivisible(f"r={r} does not divide n={n}")
    alpha = n * (r - 1) // r
    return Interval(1, min(alpha, math.isqrt(2 * n - 1)))


def _ceil_half_sqrt_minus_one(x: int) -> int:
    """``ceil((sqrt(x) - 1) / 2)`` exactly, for ``x >= 1``."""
    s = math.isqrt(x)
    if s * s == x:
        return _ceil_div(s - 1, 2)
    return (s + 1) // 2


def singleton_range_steiner(rho: int) -> Interval:
    """``[1, ceil((sqrt(1 + 8 rho) - 1) / 2)]`` for the dual of a Steiner-system code."""
    if rho < 1:
        raise BadParameters(f"rho={rho} must be positive")
    return Interval(1, _ceil_half_sqrt_minus_one(1 + 8 * rho))


def affine_k0(q: int) -> int:
    """Largest ``k`` with ``q(1 - 1/q)^k + k - q < 1``, by ascending scan in exact arithmetic."""
    if q < 2:
        raise BadParameters(f"q={q} must be at least 2")
    ratio = 1 - Fraction(1, q)
    k = 1  # F(1) = 0 < 1 and F is increasing
    while q * ratio ** (k + 1) + (k + 1) - q < 1:
        k += 1
    return k


def singleton_range_affine(q: int, m: int) -> Interval:
    if m < 1:
        raise BadParameters(f"m={m} must be positive")
    return Interval(1, min(m, affine_k0(q)))


def singleton_range_mols(order: int, rho: int) -> Interval:
    """``[1, min(rho, ceil((sqrt(1 + 8 N) - 1) / 2))]`` for a net of order ``N``."""
    if order < 1 or rho < 1:
        raise BadParameters(f"need positive order and rho, got {order}, {rho}")
    return Interval(1, min(rho, _ceil_half_sqrt_minus_one(1 + 8 * order)))


# ---------------------------------------------------------------------------
# Locality-bound attainment for graph codes and their duals
# ---------------------------------------------------------------------------


class Table3Verdict(NamedTuple):
    holds: bool
    row: int
    branch: str


def _alpha_below_low_root(alpha: int, b: int, disc: int) -> bool:
    # alpha <= (b - sqrt(disc)) / 2  <=>  b - 2 alpha >= sqrt(disc)
    t = b - 2 * alpha
    return t >= 0 and t * t >= disc


def _alpha_above_high_root(alpha: int, b: int, disc: int) -> bool:
    # alpha >= (b + sqrt(disc)) / 2  <=>  2 alpha - b >= sqrt(disc)
    t = 2 * alpha - b
    return t >= 0 and t * t >= disc


def _quadratic_rows(alpha: int, a: int, b: int, numer: int, disc: int, row: int) -> Table3Verdict:
    if not a < b:
        return Table3Verdict(False, row, "a>=b")
    threshold = Fraction(numer, b - a)
    if disc <= 0:
        return Table3Verdict(alpha > threshold, row, "disc<=0")
    if threshold < alpha and _alpha_below_low_root(alpha, b - a, disc):
        return Table3Verdict(True, row, "disc>0:low")
    if alpha >= threshold + 1 and _alpha_above_high_root(alpha, b - a, disc):
        return Table3Verdict(True, row, "disc>0:high")
    return Table3Verdict(False, row, "disc>0")


def table3_predicate(alpha: int, g: int, k: int) -> Table3Verdict:
    """Requirements on ``k > alpha`` for a girth-``g`` graph code to meet the locality bound.

    Writes ``k = a*alpha + b`` and applies the matching row exactly as tabulated:
    row 1 for ``b = 0, k <= g-1``; row 2 for ``b >= 1, k <= g-1``; row 3 for
    ``g <= k <= g + ceil(g/2) - 2`` (which needs ``b >= 1``).
    """
    if not math.isfinite(g):
        raise OutOfTheoremRange("girth must be finite")
    g = int(g)
    top = g + _ceil_div(g, 2) - 2
    if not alpha < k <= top:
        raise OutOfTheoremRange(f"k={k} outside ({alpha}, {top}] for alpha={alpha}, g={g}")
    a, b = divmod(k, alpha)
    if k <= g - 1:
        if b == 0:
            return Table3Verdict(a <= alpha, 1, "a0<=alpha")
        disc = (b - a) ** 2 - 4 * b + 4
        return _quadratic_rows(alpha, a, b, b - 1, disc, 2)
    if b == 0:
        return Table3Verdict(False, 3, "b=0")
    disc = (b - a) ** 2 - 4 * b
    return _quadratic_rows(alpha, a, b, b, disc, 3)


_DUAL_CASES = (
    # (label, numerator(n, alpha), window(g) -> (lo, hi) on n - 4*Lambda, file-size offset)
    ("L1", lambda n, a: (n + 2) * (a - 2), lambda g, h: (0, g - 2), 0),
    ("L2", lambda n, a: n * (a - 2) + 2, lambda g, h: (1, g - 1), 1),
    ("L3", lambda n, a: (n - 2) * (a - 2), lambda g, h: (2, g), 2),
    ("L4", lambda n, a: (n - 4) * (a - 2), lambda g, h: (3, g + 1), 3),
    ("L1'", lambda n, a: n * (a - 2) + 2 * (a - 3), lambda g, h: (g - 1, g + h - 3), 0),
    ("L2'", lambda n, a: n * (a - 2), lambda g, h: (g, g + h - 2), 1),
    ("L3'", lambda n, a: n * (a - 2) - 2 * (a - 1), lambda g, h: (g + 1, g + h - 1), 2),
    ("L4'", lambda n, a: n * (a - 2) - 2 * (a - 3), lambda g, h: (g + 2, g + h), 3),
)


def dual_graph_optimal_cases(n: int, alpha: int, g: int) -> list[tuple[int, str]]:
    """File sizes at which the dual of a graph code is predicted to meet the locality bound.

    Evaluates the eight ``Lambda`` candidates (four primed); each one that is
    a positive integer with ``n - 4*Lambda`` inside its window contributes
    ``(4*Lambda + offset, label)``. Results are sorted by file size.
    """
    if alpha < 2 or g < 3:
        raise BadParameters(f"need alpha >= 2 and g >= 3, got alpha={alpha}, g={g}")
    den = 8 * alpha - 14
    if den <= 0:
        raise DegenerateDenominator(f"8*alpha - 14 = {den}")
    g = int(g)
    half = _ceil_div(g, 2)
    hits = []
    for label, numerator, window, offset in _DUAL_CASES:
        num = numerator(n, alpha)
        if num <= 0 or num % den:
            continue
        lam = num // den
        lo, hi = window(g, half)
        if lo <= n - 4 * lam <= hi:
            hits.append((4 * lam + offset, label))
    return sorted(hits)


# ---------------------------------------------------------------------------
# Aggregate report
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundReport:
    """Bounds on ``d_min`` for one file size; attainment flags need the exact value."""

    M: int
    d_min_exact: int | None
    bound_singleton: int
    bound_locality: int | None
    bound_improved: int
    bound_local_structure: int | None = None
    attains_singleton: bool | None = None
    attains_locality: bool | None = None
    attains_improved: bool | None = None


def bound_report(
    c: FrCode,
    M: int,
    *,
    exact: bool = True,
    local: tuple[int, int] | None = None,
    locality: int | None = None,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
) -> BoundReport:
    """Evaluate every applicable bound at file size ``M``.

    ``local=(n_local, rho_local)`` adds the local-structure bound. The
    locality bound is omitted for codes with ``rho = 1``. When the exact
    search runs out of budget the report carries bounds only.
    """
    if M < 1:
        raise BadParameters(f"M={M} must be positive")
    if M > c.theta:
        raise FileTooLarge(f"M={M} exceeds theta={c.theta}")
    if locality is None and c.rho >= 2:
        locality = repair_locality(c)
    singleton = singleton_bound(c.n, c.alpha, M)
    loc = locality_bound(c.n, c.alpha, locality, M) if locality else None
    improved = improved_bound(c.n, c.alpha, c.rho, M)
    local_b = None
    if local is not None:
        local_b = local_structure_bound(c.n, c.alpha, local[0], local[1], M, rho=c.rho)
    d_min = None
    if exact:
        try:
            d_min = min_distance(c, M, budget=budget, method="auto", jobs=jobs)
        except SizeLimitExceeded:
            d_min = None
    if d_min is None:
        return BoundReport(M, None, singleton, loc, improved, local_b)
    return BoundReport(
        M,
        d_min,
        singleton,
        loc,
        improved,
        local_b,
        attains_singleton=d_min == singleton,
        attains_locality=None if loc is None else d_min == loc,
        attains_improved=d_min == improved,
    )
