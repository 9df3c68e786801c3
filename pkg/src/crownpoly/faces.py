"""f-vectors of crown order polytopes: closed formula and CCP enumeration.

Faces of O(P) of dimension k correspond to connected compatible partitions
(CCPs) of P with a bottom and top adjoined that have k + 2 blocks.  The
oracle here enumerates those partitions directly; the closed formula
counts connected partitions of the 2n-cycle by number of parts and odd
parts.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .budget import Budget, as_budget
from .errors import DomainError, MathError, ResourceError
from .polynomial import IntVector, RationalPoly, real_rooted, sequence_predicates
from .poset import CCPChecker, Poset, add_bounds, ideal_masks, make_crown, set_partitions

ORACLE_MAX_ELEMENTS = 10

# f-vectors of O(C_2n) as printed, f_{-1} first
TABLE1 = {
    2: (1, 7, 17, 18, 8, 1),
    3: (1, 18, 73, 129, 116, 54, 12, 1),
    4: (1, 47, 265, 656, 896, 730, 360, 104, 16, 1),
    5: (1, 123, 881, 2810, 5170, 6045, 4672, 2405, 810, 170, 20, 1),
    6: (1, 322, 2785, 10884, 25228, 38517, 40692, 30408, 16140, 6018, 1532, 252, 24, 1),
}


def binom(a: int, b: int) -> int:
    """Binomial coefficient that is 0 whenever ``b < 0`` or ``b > a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class FVector:
    """f-vector with ``v[-1] == 1`` stored first."""

    v: IntVector
    dim: int

    def __post_init__(self):
        if self.v.offset != -1:
            raise DomainError("f-vectors are stored with offset -1")

    def __getitem__(self, k: int) -> int:
        return self.v[k]

    def to_list(self) -> list[int]:
        return self.v.to_list()

    def as_poly(self) -> RationalPoly:
        """f-polynomial with f_{-1} as constant term."""
        return self.v.as_poly()

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * self[k] for k in range(-1, self.dim + 1))


def _check_range(n: int, i: int, m: int) -> None:
    if n < 1 or not 2 <= i <= 2 * n or not 1 <= m or 2 * m > i:
        raise DomainError(f"(n, i, m) = {(n, i, m)} outside 2 <= i <= 2n, 1 <= m <= i/2")


def p_n_formula(n: int, i: int, m: int) -> int:
    """Connected partitions of the 2n-cycle into ``i`` arcs, exactly ``2m`` of them odd."""
    _check_range(n, i, m)
    value = Fraction(2 * n, i) * comb(i, 2 * m) * binom(n + m - 1, i - 1)
    if value.denominator != 1:
        raise MathError(f"p_{n}({i}, {2 * m}) = {value} is not an integer")
    return int(value)


def p_n_oracle(n: int, i: int, m: int, budget: Budget | int | None = None) -> int:
    """Same count by cutting every ``i``-subset of the cycle's edges."""
    _check_range(n, i, m)
    budget = as_budget(budget)
    size = 2 * n
    budget.spend(comb(size, i))
    hits = 0
    # edge c joins vertices c and c+1 (mod 2n); cutting edges c_0 < ... leaves arcs between them
    for cut in itertools.combinations(range(size), i):
        odd = sum(
            1 for r in range(i)
            if (cut[(r + 1) % i] - cut[r]) % size % 2
        )
        if odd == 2 * m:
            hits += 1
    return hits


def _p_table(n: int) -> dict[tuple[int, int], int]:
    return {
        (i, m): p_n_formula(n, i, m)
        for i in range(2, 2 * n + 1)
        for m in range(1, i // 2 + 1)
    }


def a_k_count(n: int, k: int) -> int:
    """|A_k|: CCPs of the 2n-crown paired with a subset S of their odd blocks, |P| - |S| = k - 2."""
    if k < 2:
        raise DomainError("k must be >= 2")
    total = binom(0, 3 - k)
    for (i, m), p in _p_table(n).items():
        total += p * binom(2 * m, i - k + 2)
    return total


def _delta(k: int) -> int:
    return {0: 2, 1: 1}.get(k, 0)


def fvector_formula(n: int) -> FVector:
    """Closed-form f-vector of O(C_2n), summing over parts ``i`` then odd-pair count ``m``."""
    if n < 1:
        raise DomainError("n must be >= 1")
    f = [_delta(k) for k in range(2 * n + 1)]
    for (i, m), p in _p_table(n).items():
        # binom(2m, i - k) is nonzero only for i - 2m <= k <= i
        for k in range(max(i - 2 * m, 0), i + 1):
            f[k] += p * comb(2 * m, i - k)
    return FVector(IntVector((1, *f), offset=-1), 2 * n)


def fvector_formula_m_outer(n: int) -> FVector:
    """The same double sum with the odd-pair count ``m`` as the outer index."""
    if n < 1:
        raise DomainError("n must be >= 1")
    f = []
    for k in range(2 * n + 1):
        total = _delta(k)
        for m in range(1, n + 1):
            for i in range(2 * m, 2 * n + 1):
                total += p_n_formula(n, i, m) * binom(2 * m, i - k)
        f.append(total)
    return FVector(IntVector((1, *f), offset=-1), 2 * n)


def ccp_block_histogram(
    p: Poset, budget: Budget | int | None = None, max_elements: int = ORACLE_MAX_ELEMENTS
) -> dict[int, int]:
    """Number of CCPs of ``p`` by block count, over every set partition."""
    if p.n > max_elements:
        raise ResourceError(
            f"set-partition enumeration of {p.n} elements exceeds the limit of {max_elements}"
        )
    budget = as_budget(budget)
    checker = CCPChecker(p)
    counts: dict[int, int] = {}
    for blocks in set_partitions(p.n):
        budget.spend()
        if checker.is_ccp(blocks):
            counts[len(blocks)] = counts.get(len(blocks), 0) + 1
    return counts


def fvector_from_ccps(
    p: Poset, budget: Budget | int | None = None, max_elements: int = ORACLE_MAX_ELEMENTS
) -> FVector:
    """f-vector of O(P): k-faces are the (k+2)-block CCPs of P with bounds adjoined.

    The single-block partition accounts for f_{-1} = 1.
    """
    counts = ccp_block_histogram(add_bounds(p), budget, max_elements)
    entries = [counts.get(k + 2, 0) for k in range(-1, p.n + 1)]
    return FVector(IntVector(tuple(entries), offset=-1), p.n)


def fvector_oracle(n: int, budget: Budget | int | None = None) -> FVector:
    return fvector_from_ccps(make_crown(2 * n), budget)


def ccps_with_odd_blocks(n: int, budget: Budget | int | None = None) -> list[tuple[int, int]]:
    """``(parts, odd parts)`` for every CCP of the 2n-crown itself."""
    crown = make_crown(2 * n)
    budget = as_budget(budget)
    checker = CCPChecker(crown)
    out = []
    for blocks in set_partitions(crown.n):
        budget.spend()
        if checker.is_ccp(blocks):
            out.append((len(blocks), sum(bin(b).count("1") % 2 for b in blocks)))
    return out


def a_k_enumerated(n: int, k: int, budget: Budget | int | None = None) -> int:
    """|A_k| counted from an explicit list of the crown's CCPs."""
    return sum(binom(odd, parts - k + 2) for parts, odd in ccps_with_odd_blocks(n, budget))


def lucas(k: int) -> int:
    if k < 0:
        raise DomainError("Lucas index must be nonnegative")
    a, b = 2, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def vertex_identity_check(n: int) -> bool:
    """f_0 from the formula, L(2n), and the number of order ideals of C_2n all agree."""
    f0 = fvector_formula(n)[0]
    ideals = len(ideal_masks(make_crown(2 * n)))
    return f0 == lucas(2 * n) == ideals


@dataclass(frozen=True)
class LogConcavityRow:
    n: int
    fvector: tuple[int, ...]
    log_concave: bool
    # None when outside the real-rootedness range of the scan
    f_real_rooted: bool | None
    f_proper_real_rooted: bool | None


def log_concavity_scan(n_max: int, n_min: int = 1, real_rooted_upto: int = 6) -> list[LogConcavityRow]:
    """Per-n verdicts for log-concavity of f(O(C_2n)) and real-rootedness of its f-polynomials.

    The proper f-polynomial drops the empty face and the polytope itself.
    """
    rows = []
    for n in range(n_min, n_max + 1):
        f = fvector_formula(n)
        entries = f.to_list()
        rooted = proper = None
        if n <= real_rooted_upto:
            rooted = real_rooted(f.as_poly())
            proper = real_rooted(RationalPoly.from_ints(entries[1:-1]))
        rows.append(LogConcavityRow(
            n, tuple(entries), sequence_predicates(entries).log_concave, rooted, proper
        ))
    return rows


def pyramid_f(n: int) -> RationalPoly:
    """f-polynomial of O(0 + C_2n + 1): two pyramids over O(C_2n)."""
    if n < 2:
        raise DomainError("n must be >= 2")
    return RationalPoly.from_ints([1, 1]) ** 2 * fvector_formula(n).as_poly()
