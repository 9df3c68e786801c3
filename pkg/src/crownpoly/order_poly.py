"""Order polynomials: counting oracles, crown/zigzag recursions, linear terms.

``Omega_P(m)`` is the number of order-preserving maps ``P -> [m]``.  Every
polynomial here is materialized the same way: exact integer values at
``t = 0..deg`` followed by exact interpolation.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .budget import Budget, as_budget
from .errors import DomainError
from .polynomial import RationalPoly, T, interpolate, negate_argument, shift_argument
from .poset import (
    Poset,
    bit,
    elements_of,
    ideal_masks,
    is_crown,
    is_zigzag,
    make_crown,
    ordinal_sum,
)


class Method(str, enum.Enum):
    ORACLE = "oracle-interpolation"
    CROWN_RECURSION = "crown-recursion"
    ZIGZAG_RECURSION = "zigzag-recursion"
    ORDINAL_SUM = "ordinal-sum-formula"
    PRODUCT = "product-formula"


@dataclass(frozen=True)
class OmegaResult:
    poly: RationalPoly
    method: Method


# -- counting ------------------------------------------------------------------


def count_maps_crown(two_n: int, m: int) -> int:
    """Trace of ``M^n`` with ``M[a][b] = m - max(a, b) + 1``.

    Walking once around the crown, each maximal element sits between two
    minimal ones and has ``m - max + 1`` admissible values.
    """
    if m <= 0:
        return 0
    n = two_n // 2
    # 0-based indices: m - max(a, b) is m - max + 1 for 1-based values
    mat = [[m - max(a, b) for b in range(m)] for a in range(m)]
    power = _matpow(mat, n)
    return sum(power[a][a] for a in range(m))


def _matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def _matpow(mat: list[list[int]], k: int) -> list[list[int]]:
    size = len(mat)
    out = [[int(i == j) for j in range(size)] for i in range(size)]
    base = mat
    while k:
        if k & 1:
            out = _matmul(out, base)
        base = _matmul(base, base)
        k >>= 1
    return out


def count_maps_zigzag(n: int, m: int) -> int:
    """Path DP along ``1 < 2 > 3 < ...``; ``n`` may be 0 (empty poset)."""
    if n == 0:
        return 1
    if m <= 0:
        return 0
    ways = [1] * m  # ways[v]: maps of 1..i with f(i) = v + 1
    for i in range(1, n):
        acc = 0
        new = [0] * m
        if i % 2:  # f(i) <= f(i+1)
            for v in range(m):
                acc += ways[v]
                new[v] = acc
        else:  # f(i) >= f(i+1)
            for v in range(m - 1, -1, -1):
                acc += ways[v]
                new[v] = acc
        ways = new
    return sum(ways)


def _narrow_order(p: Poset) -> list[int]:
    """A topological order that greedily keeps the set of still-needed values small."""
    placed = 0
    order: list[int] = []
    for _ in range(p.n):
        best = None
        for e in range(1, p.n + 1):
            if placed & bit(e) or p.down[e] & ~placed:
                continue
            after = placed | bit(e)
            live = sum(
                1 for x in elements_of(after)
                if any(not after & bit(b) for b in p.upper_covers[x])
            )
            if best is None or live < best[0]:
                best = (live, e)
        order.append(best[1])
        placed |= bit(best[1])
    return order


def count_maps_dfs(p: Poset, m: int, budget: Budget | int | None = None) -> int:
    """Depth-first assignment in a topological order, memoized on the live frontier.

    Each value is bounded below by its lower covers.  After placing the
    first ``k`` elements only the values of those with an unplaced upper
    cover matter, so subcounts are cached on ``(k, live values)``.
    """
    budget = as_budget(budget)
    if p.n == 0:
        return 1
    if m <= 0:
        return 0
    order = _narrow_order(p)
    pos = {e: k for k, e in enumerate(order)}
    lows = [p.lower_covers[e] for e in order]
    # live[k]: elements placed before step k still needed by a later element
    live = []
    for k in range(len(order)):
        live.append(tuple(
            e for e in order[:k]
            if any(pos[b] >= k for b in p.upper_covers[e])
        ))
    value = [0] * (p.n + 1)
    last = len(order) - 1
    memo: dict[tuple, int] = {}

    def go(k: int) -> int:
        key = (k, tuple(value[e] for e in live[k]))
        hit = memo.get(key)
        if hit is not None:
            return hit
        budget.spend()
        e = order[k]
        lb = max((value[a] for a in lows[k]), default=1)
        if k == last:
            total = m - lb + 1
        else:
            total = 0
            for v in range(lb, m + 1):
                value[e] = v
                total += go(k + 1)
        memo[key] = total
        return total

    return go(0)


def count_maps_brute(p: Poset, m: int) -> int:
    """All ``m**n`` assignments; only for tiny cross-checks."""
    if m <= 0:
        return int(p.n == 0)
    total = 0
    for f in itertools.product(range(m), repeat=p.n):
        if all(f[a - 1] <= f[b - 1] for a, b in p.covers):
            total += 1
    return total


def count_maps(
    p: Poset, m: int, method: str = "auto", budget: Budget | int | None = None
) -> int:
    """Number of order-preserving maps ``p -> [m]``.

    ``method="auto"`` uses the crown transfer matrix or the zigzag path DP
    when ``p`` is literally a crown or zigzag, splits disjoint unions into
    a product, peels a global minimum or maximum, and otherwise falls back
    to the DFS.  ``"dfs"`` and ``"brute"`` force a generic path.
    """
    if m < 0:
        raise DomainError(f"target chain length must be nonnegative, got {m}")
    if method == "dfs":
        return count_maps_dfs(p, m, budget)
    if method == "brute":
        return count_maps_brute(p, m)
    if method != "auto":
        raise DomainError(f"unknown counting method {method!r}")
    budget = as_budget(budget)
    return _count_auto(p, m, budget)


def _count_auto(p: Poset, m: int, budget: Budget) -> int:
    if p.n == 0:
        return 1
    if m == 0:
        return 0
    if is_crown(p):
        return count_maps_crown(p.n, m)
    if is_zigzag(p):
        return count_maps_zigzag(p.n, m)
    comps = p.components()
    if len(comps) > 1:
        out = 1
        for c in comps:
            out *= _count_auto(p.induced(c), m, budget)
        return out
    mins, maxs = p.minimal_elements(), p.maximal_elements()
    if len(mins) == 1 or len(maxs) == 1:
        # a unique minimal (maximal) element of a connected poset is a global bound
        z = mins[0] if len(mins) == 1 else maxs[0]
        rest = p.induced(p.full_mask & ~bit(z))
        return sum(_count_auto(rest, k, budget) for k in range(1, m + 1))
    return count_maps_dfs(p, m, budget)


def omega_from_counts(p: Poset, count) -> RationalPoly:
    points = [(t, count(t)) for t in range(p.n + 1)]
    return interpolate(points)


def omega_oracle(
    p: Poset, method: str = "auto", budget: Budget | int | None = None
) -> OmegaResult:
    """Omega_P by counting at ``t = 0..|P|`` and interpolating."""
    budget = as_budget(budget)
    poly = omega_from_counts(p, lambda t: count_maps(p, t, method, budget))
    return OmegaResult(poly, Method.ORACLE)


# -- recursions ----------------------------------------------------------------


@lru_cache(maxsize=None)
def zigzag_value(n: int, t: int) -> int:
    """Omega_{Z_n}(t) for integers ``t >= 0``, with Omega_{Z_-1} = Omega_{Z_0} = 1.

    Telescopes the top-value decomposition from Omega(0) = 0.
    """
    if n < -1:
        raise DomainError(f"zigzag index must be >= -1, got {n}")
    if n <= 0:
        return 1
    if t <= 0:
        return 0
    return zigzag_value(n, t - 1) + zigzag_increment(n, t)


def zigzag_remark_increment(n: int, t: int) -> int:
    """The top-value sum split by the first/last position attaining ``t``, when ``n`` is even.

    Counts maps with f(1) = t, plus maps whose t-valued positions span
    ``[2i, 2j]``.  For odd ``n`` this misses the maps with f(n) = t and
    f(1) < t; :func:`zigzag_increment` adds them.
    """
    v = zigzag_value
    total = v(n - 2, t)
    half = n // 2
    for i in range(1, half + 1):
        left = v(2 * i - 1, t - 1)
        for j in range(i, half + 1):
            total += left * v(2 * j - 2 * i - 1, t) * v(n - 2 * j, t - 1)
    return total


def zigzag_increment(n: int, t: int) -> int:
    """Omega_{Z_n}(t) - Omega_{Z_n}(t - 1): maps attaining the top value ``t``."""
    total = zigzag_remark_increment(n, t)
    if n % 2 and n >= 3:
        # f(n) = f(n-1) = t, f(1) < t, first t-valued position 2i
        for i in range(1, (n - 1) // 2 + 1):
            total += zigzag_value(2 * i - 1, t - 1) * zigzag_value(n - 2 * i - 2, t)
    return total


def omega_zigzag_recursive(n: int) -> RationalPoly:
    if n < -1:
        raise DomainError(f"zigzag index must be >= -1, got {n}")
    if n <= 0:
        return RationalPoly.constant(1)
    return interpolate([(t, zigzag_value(n, t)) for t in range(n + 1)])


@lru_cache(maxsize=None)
def crown_value(two_n: int, t: int) -> int:
    """Omega_{C_2n}(t) by telescoping the crown recursion from Omega(0) = 0."""
    if two_n < 4 or two_n % 2:
        raise DomainError(f"crown recursion needs an even size >= 4, got {two_n}")
    if t <= 0:
        return 0
    n = two_n // 2
    z = zigzag_value
    step = n * z(two_n - 1, t - 1) + z(two_n - 3, t)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            step += z(2 * (n - j + i) - 1, t - 1) * z(2 * (j - i) - 1, t)
    return crown_value(two_n, t - 1) + step


def omega_crown_recursive(two_n: int) -> RationalPoly:
    return interpolate([(t, crown_value(two_n, t)) for t in range(two_n + 1)])


def crown_recursion_residuals(two_n: int) -> tuple[RationalPoly, RationalPoly]:
    """Both recursion identities as polynomial residuals (zero when they hold).

    The first is the telescoped form; the second is the reflected form
    written with Omega(-t) and ``t * Omega_{Z_{2n-3}}(t)``.
    """
    n = two_n // 2
    crown = omega_crown_recursive(two_n)
    zig = {k: omega_zigzag_recursive(k) for k in range(1, two_n, 2)}

    first = crown - shift_argument(crown, -1)
    first = first - shift_argument(zig[two_n - 1], -1) * n - zig[two_n - 3]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            first = first - shift_argument(zig[2 * (n - j + i) - 1], -1) * zig[2 * (j - i) - 1]

    rhs = negate_argument(crown) - negate_argument(zig[two_n - 1]) * n + T * zig[two_n - 3]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if (i, j) == (1, n):
                continue
            rhs = rhs - negate_argument(zig[2 * (n - j + i) - 1]) * zig[2 * (j - i) - 1]
    return first, crown - rhs


# -- closed forms --------------------------------------------------------------


def linear_coefficient_formula(kind: str, size: int) -> Fraction:
    """[t] Omega for the zigzag ``Z_size`` or the crown on ``size`` elements."""
    if kind == "zigzag":
        if size < 1:
            raise DomainError("zigzag size must be >= 1")
        lo, hi = (size - 1) // 2, size // 2
        return Fraction(factorial(lo) * factorial(hi), factorial(size))
    if kind == "crown":
        if size < 2 or size % 2:
            raise DomainError("crown size must be a positive even integer")
        return Fraction(1, comb(size, size // 2))
    raise DomainError(f"unknown poset kind {kind!r}")


def chain_polynomial(p: Poset, budget: Budget | int | None = None) -> RationalPoly:
    """Sum of c_k t^k, c_k = number of chains empty = I_0 < ... < I_k = P in J(P)."""
    ideals = ideal_masks(p, budget)
    chains: dict[int, list[int]] = {0: [1]}
    for idx, ideal in enumerate(ideals[1:], start=1):
        acc: list[int] = []
        for smaller in ideals[:idx]:
            if smaller & ~ideal or smaller == ideal:
                continue
            for k, c in enumerate(chains[smaller]):
                while len(acc) <= k + 1:
                    acc.append(0)
                acc[k + 1] += c
        chains[ideal] = acc
    return RationalPoly.from_ints(chains[p.full_mask])


def phi(p: Poset, budget: Budget | int | None = None) -> Fraction:
    """Alternating chain sum whose value is the linear coefficient of Omega_P."""
    c = chain_polynomial(p, budget)
    return sum(
        (Fraction((-1) ** (k - 1)) * c.coeff(k) / k for k in range(1, p.n + 1)),
        Fraction(0),
    )


def surjection_counts(p: Poset, budget: Budget | int | None = None) -> list[int]:
    """``e_k(P)`` for ``k = 0..|P|`` by inclusion-exclusion over count_maps."""
    budget = as_budget(budget)
    values = [count_maps(p, j, budget=budget) for j in range(p.n + 1)]
    return [
        sum((-1) ** (k - j) * comb(k, j) * values[j] for j in range(k + 1))
        for k in range(p.n + 1)
    ]


def omega_ordinal_sum_with_point(p: Poset, budget: Budget | int | None = None) -> RationalPoly:
    """Omega of ``z + P`` (a new minimum) as sum over k of (e_k + e_{k-1}) binom(t, k).

    The sum runs to ``k = |P| + 1`` so that the degree is ``|P| + 1``.
    """
    if p.n == 0:
        return T
    e = surjection_counts(p, budget) + [0]
    out = RationalPoly()
    for k in range(p.n + 2):
        coeff = e[k] + (e[k - 1] if k else 0)
        if coeff:
            out = out + RationalPoly.binomial(k) * coeff
    return out


def omega_disjoint_union(p: Poset, q: Poset, budget: Budget | int | None = None) -> OmegaResult:
    budget = as_budget(budget)
    poly = omega_oracle(p, budget=budget).poly * omega_oracle(q, budget=budget).poly
    return OmegaResult(poly, Method.PRODUCT)


def ehrhart(p: Poset | RationalPoly, budget: Budget | int | None = None) -> RationalPoly:
    """L(O(P), t) = Omega_P(t + 1)."""
    omega = p if isinstance(p, RationalPoly) else omega_oracle(p, budget=budget).poly
    return shift_argument(omega, 1)


def omega(p: Poset, budget: Budget | int | None = None) -> OmegaResult:
    """Best available route: crown/zigzag recursion when applicable, else the oracle."""
    if is_crown(p) and p.n >= 4:
        return OmegaResult(omega_crown_recursive(p.n), Method.CROWN_RECURSION)
    if is_zigzag(p):
        return OmegaResult(omega_zigzag_recursive(p.n), Method.ZIGZAG_RECURSION)
    return omega_oracle(p, budget=budget)


def polygon_lattice(n: int) -> Poset:
    """Face lattice of an n-gon: a bottom, the 2n-crown, and a top."""
    return ordinal_sum(ordinal_sum(Poset(1), make_crown(2 * n)), Poset(1))


def is_reciprocal(poly: RationalPoly, size: int, rank: int) -> bool:
    """Omega(t - r) == (-1)^|P| Omega(-t)."""
    lhs = shift_argument(poly, -rank)
    rhs = negate_argument(poly) * ((-1) ** size)
    return lhs == rhs
