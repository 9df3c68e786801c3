"""Finite posets on ``{1, ..., n}`` given by their Hasse diagram.

Elements are always the integers 1..n.  A labeling is a separate injective
map (``labels[e - 1]`` is the label of element ``e``), so one structure
serves both the plain poset and its naturally or canonically labeled
variants.  Internally, subsets of elements are int bitmasks with element
``e`` at bit ``e - 1``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .budget import DEFAULT_ENUMERATION_BOUND, Budget, as_budget
from .errors import DomainError, ResourceError

Cover = tuple[int, int]


def bit(e: int) -> int:
    return 1 << (e - 1)


def elements_of(mask: int) -> list[int]:
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return out


@dataclass(frozen=True)
class Poset:
    """A finite poset stored as its cover relations.

    ``(a, b)`` in ``covers`` means ``a`` is covered by ``b``.
    """

    n: int
    covers: frozenset[Cover] = field(default_factory=frozenset)
    labels: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.n < 0:
            raise DomainError("poset size must be nonnegative")
        covers = frozenset((int(a), int(b)) for a, b in self.covers)
        object.__setattr__(self, "covers", covers)
        for a, b in covers:
            if not (1 <= a <= self.n and 1 <= b <= self.n):
                raise DomainError(f"cover {(a, b)} outside 1..{self.n}")
            if a == b:
                raise DomainError(f"reflexive cover {(a, b)}")
        if self.labels is not None:
            labels = tuple(int(x) for x in self.labels)
            object.__setattr__(self, "labels", labels)
            if len(labels) != self.n or len(set(labels)) != self.n:
                raise DomainError("labels must be an injective map on the elements")
        # both checks below raise on failure
        self.topological_order
        for a, b in covers:
            for c in self.upper_covers[a]:
                if c != b and self.up[c] & bit(b):
                    raise DomainError(f"cover {(a, b)} is implied by transitivity")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_relations(
        cls, n: int, relations: Iterable[Cover], labels: Sequence[int] | None = None
    ) -> "Poset":
        """Build from any generating set of relations ``a < b`` (transitively reduced here)."""
        rel = {(a, b) for a, b in relations if a != b}
        succ = {e: set() for e in range(1, n + 1)}
        for a, b in rel:
            succ[a].add(b)
        # strict up-sets by DFS; also detects cycles
        up: dict[int, int] = {}
        state: dict[int, int] = {}

        def visit(e: int) -> int:
            if state.get(e) == 2:
                return up[e]
            if state.get(e) == 1:
                raise DomainError("relations contain a cycle")
            state[e] = 1
            m = 0
            for s in succ[e]:
                m |= bit(s) | visit(s)
            state[e] = 2
            up[e] = m
            return m

        for e in range(1, n + 1):
            visit(e)
        covers = set()
        for a in range(1, n + 1):
            for b in elements_of(up[a]):
                if not any(up[c] & bit(b) for c in elements_of(up[a]) if c != b):
                    covers.add((a, b))
        return cls(n, frozenset(covers), None if labels is None else tuple(labels))

    def relabeled(self, labels: Sequence[int] | None) -> "Poset":
        return Poset(self.n, self.covers, None if labels is None else tuple(labels))

    # -- derived structure -------------------------------------------------

    @cached_property
    def lower_covers(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.n + 1)]
        for a, b in sorted(self.covers):
            out[b].append(a)
        return out

    @cached_property
    def upper_covers(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.n + 1)]
        for a, b in sorted(self.covers):
            out[a].append(b)
        return out

    @cached_property
    def topological_order(self) -> list[int]:
        indeg = [0] * (self.n + 1)
        for _, b in self.covers:
            indeg[b] += 1
        ready = [e for e in range(1, self.n + 1) if indeg[e] == 0]
        order = []
        while ready:
            e = ready.pop(0)
            order.append(e)
            for b in self.upper_covers[e]:
                indeg[b] -= 1
                if indeg[b] == 0:
                    ready.append(b)
        if len(order) != self.n:
            raise DomainError("cover relation contains a cycle")
        return order

    @cached_property
    def up(self) -> list[int]:
        """``up[e]``: bitmask of elements strictly above ``e``."""
        out = [0] * (self.n + 1)
        for e in reversed(self.topological_order):
            for b in self.upper_covers[e]:
                out[e] |= bit(b) | out[b]
        return out

    @cached_property
    def down(self) -> list[int]:
        """``down[e]``: bitmask of elements strictly below ``e``."""
        out = [0] * (self.n + 1)
        for e in self.topological_order:
            for a in self.lower_covers[e]:
                out[e] |= bit(a) | out[a]
        return out

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def leq(self, a: int, b: int) -> bool:
        return a == b or bool(self.up[a] & bit(b))

    def minimal_elements(self) -> list[int]:
        return [e for e in range(1, self.n + 1) if not self.lower_covers[e]]

    def maximal_elements(self) -> list[int]:
        return [e for e in range(1, self.n + 1) if not self.upper_covers[e]]

    def label(self, e: int) -> int:
        return e if self.labels is None else self.labels[e - 1]

    def element_of_label(self) -> dict[int, int]:
        return {self.label(e): e for e in range(1, self.n + 1)}

    def induced(self, mask: int) -> "Poset":
        """Induced subposet on ``mask``, elements renumbered in increasing order."""
        elems = elements_of(mask)
        index = {e: i + 1 for i, e in enumerate(elems)}
        rel = [
            (index[a], index[b])
            for a in elems
            for b in elements_of(self.up[a] & mask)
        ]
        return Poset.from_relations(len(elems), rel)

    def components(self) -> list[int]:
        """Connected components of the comparability graph, as bitmasks."""
        seen = 0
        comps = []
        for e in range(1, self.n + 1):
            if seen & bit(e):
                continue
            comp = bit(e)
            frontier = [e]
            while frontier:
                x = frontier.pop()
                for y in self.lower_covers[x] + self.upper_covers[x]:
                    if not comp & bit(y):
                        comp |= bit(y)
                        frontier.append(y)
            seen |= comp
            comps.append(comp)
        return comps

    # -- serialization -------------------------------------------------------

    def to_dict(self) -> dict:
        data: dict = {"n": self.n, "covers": [list(c) for c in sorted(self.covers)]}
        if self.labels is not None:
            data["labels"] = list(self.labels)
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "Poset":
        labels = data.get("labels")
        return cls(
            int(data["n"]),
            frozenset(tuple(c) for c in data.get("covers", [])),
            None if labels is None else tuple(labels),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "Poset":
        return cls.from_dict(json.loads(text))


# -- standard posets ----------------------------------------------------------


def antichain(n: int) -> Poset:
    return Poset(n)


def chain(n: int) -> Poset:
    return Poset(n, frozenset((i, i + 1) for i in range(1, n)))


def make_zigzag(n: int) -> Poset:
    """Fence ``1 < 2 > 3 < 4 ...``: odd elements are minimal."""
    if n <= 0:
        raise DomainError(f"zigzag size must be positive, got {n}")
    covers = [(i, i + 1) if i % 2 else (i + 1, i) for i in range(1, n)]
    return Poset(n, frozenset(covers))


def make_crown(two_n: int) -> Poset:
    """Zigzag on ``2n`` elements closed up by ``1 < 2n``; ``make_crown(2)`` is the 2-chain."""
    if two_n <= 0 or two_n % 2:
        raise DomainError(f"crown size must be a positive even integer, got {two_n}")
    covers = set(make_zigzag(two_n).covers)
    covers.add((1, two_n))
    return Poset(two_n, frozenset(covers))


def boolean_lattice(k: int) -> Poset:
    """Subsets of a k-set under inclusion; subset ``s`` (a bitmask) is element ``s + 1``."""
    size = 1 << k
    covers = [
        (s + 1, (s | (1 << j)) + 1)
        for s in range(size)
        for j in range(k)
        if not s & (1 << j)
    ]
    return Poset(size, frozenset(covers))


def add_bounds(p: Poset) -> Poset:
    """``P`` with a new minimum ``n+1`` and a new maximum ``n+2``."""
    lo, hi = p.n + 1, p.n + 2
    covers = set(p.covers)
    if p.n == 0:
        covers.add((lo, hi))
    covers.update((lo, e) for e in p.minimal_elements())
    covers.update((e, hi) for e in p.maximal_elements())
    return Poset(p.n + 2, frozenset(covers))


def ordinal_sum(p: Poset, q: Poset) -> Poset:
    """Every element of ``p`` below every element of ``q``; ``q`` is shifted by ``p.n``."""
    shift = p.n
    covers = set(p.covers)
    covers.update((a + shift, b + shift) for a, b in q.covers)
    if p.n and q.n:
        covers.update(
            (a, b + shift) for a in p.maximal_elements() for b in q.minimal_elements()
        )
    return Poset(p.n + q.n, frozenset(covers), _joined_labels(p, q))


def disjoint_union(p: Poset, q: Poset) -> Poset:
    shift = p.n
    covers = set(p.covers)
    covers.update((a + shift, b + shift) for a, b in q.covers)
    return Poset(p.n + q.n, frozenset(covers), _joined_labels(p, q))


def _joined_labels(p: Poset, q: Poset) -> tuple[int, ...] | None:
    if p.labels is None and q.labels is None:
        return None
    lp = [p.label(e) for e in range(1, p.n + 1)]
    base = max(lp, default=0)
    lq = [base + q.label(e) - min(q.label(x) for x in range(1, q.n + 1)) + 1
          for e in range(1, q.n + 1)]
    return tuple(lp + lq)


def is_crown(p: Poset) -> bool:
    return p.n >= 2 and p.n % 2 == 0 and p.covers == make_crown(p.n).covers


def is_zigzag(p: Poset) -> bool:
    return p.n >= 1 and p.covers == make_zigzag(p.n).covers


# -- labelings -----------------------------------------------------------------


def is_naturally_labeled(p: Poset) -> bool:
    return all(p.label(a) < p.label(b) for a, b in p.covers)


def with_natural_labeling(p: Poset) -> Poset:
    """Label elements by their position in the lexicographically first linear extension.

    For a crown this gives the odd elements labels 1..n and the even ones
    n+1..2n, e.g. ``1 < 3 > 2 < 4 > 1`` for the 4-crown.
    """
    placed = 0
    order = []
    for _ in range(p.n):
        e = next(
            x for x in range(1, p.n + 1)
            if not placed & bit(x) and p.down[x] & ~placed == 0
        )
        order.append(e)
        placed |= bit(e)
    labels = [0] * p.n
    for pos, e in enumerate(order, start=1):
        labels[e - 1] = pos
    return p.relabeled(labels)


def adjoin_top_canonical(p: Poset) -> Poset:
    """Adjoin a greatest element carrying the smallest label.

    Labels are renormalized to 1..n+1 preserving relative order, so the
    new top is labeled 1 and the old labels move up by one rank.
    """
    if not is_naturally_labeled(p):
        raise DomainError("adjoin_top_canonical needs a naturally labeled poset")
    top = p.n + 1
    covers = set(p.covers)
    covers.update((e, top) for e in p.maximal_elements())
    ranked = sorted(range(1, p.n + 1), key=p.label)
    labels = [0] * (p.n + 1)
    for r, e in enumerate(ranked, start=2):
        labels[e - 1] = r
    labels[top - 1] = 1
    return Poset(p.n + 1, frozenset(covers), tuple(labels))


# -- enumeration ---------------------------------------------------------------


def _check_bound(p: Poset, bound: int | None) -> None:
    limit = DEFAULT_ENUMERATION_BOUND if bound is None else bound
    if p.n > limit:
        raise ResourceError(f"poset of size {p.n} exceeds enumeration bound {limit}")


def linear_extensions(p: Poset, bound: int | None = None) -> list[tuple[int, ...]]:
    """All linear extensions as label words, in lexicographic order.

    >>> linear_extensions(with_natural_labeling(make_crown(4)))
    [(1, 2, 3, 4), (1, 2, 4, 3), (2, 1, 3, 4), (2, 1, 4, 3)]
    """
    _check_bound(p, bound)
    by_label = sorted(range(1, p.n + 1), key=p.label)
    words: list[tuple[int, ...]] = []
    word: list[int] = []

    def extend(placed: int) -> None:
        if placed == p.full_mask:
            words.append(tuple(word))
            return
        for e in by_label:
            if not placed & bit(e) and p.down[e] & ~placed == 0:
                word.append(p.label(e))
                extend(placed | bit(e))
                word.pop()

    extend(0)
    return words


def ideal_masks(p: Poset, budget: Budget | int | None = None) -> list[int]:
    """All order ideals as bitmasks, sorted by (size, mask)."""
    budget = as_budget(budget)
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for ideal in frontier:
            for e in range(1, p.n + 1):
                if ideal & bit(e) or p.down[e] & ~ideal:
                    continue
                budget.spend()
                bigger = ideal | bit(e)
                if bigger not in seen:
                    seen.add(bigger)
                    nxt.append(bigger)
        frontier = nxt
    return sorted(seen, key=lambda m: (bin(m).count("1"), m))


def order_ideals(p: Poset, bound: int | None = None) -> list[frozenset[int]]:
    """The distributive lattice J(P) as a list of down-closed sets, smallest first."""
    _check_bound(p, bound)
    return [frozenset(elements_of(m)) for m in ideal_masks(p)]


def count_linear_extensions(p: Poset, budget: Budget | int | None = None) -> int:
    """e(P) by a sweep over the ideal lattice (no explicit listing)."""
    ways = {0: 1}
    for ideal in ideal_masks(p, budget):
        w = ways.get(ideal, 0)
        for e in range(1, p.n + 1):
            if not ideal & bit(e) and p.down[e] & ~ideal == 0:
                ways[ideal | bit(e)] = ways.get(ideal | bit(e), 0) + w
    return ways[p.full_mask]


# -- partitions and CCPs -------------------------------------------------------


@dataclass(frozen=True)
class BlockPartition:
    """Disjoint nonempty blocks, stored sorted by minimum element."""

    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        blocks = tuple(
            sorted((frozenset(b) for b in self.blocks), key=lambda b: min(b) if b else 0)
        )
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]]) -> "BlockPartition":
        return cls(tuple(frozenset(b) for b in blocks))

    def __len__(self) -> int:
        return len(self.blocks)

    def validate(self, n: int) -> None:
        seen: set[int] = set()
        for b in self.blocks:
            if not b:
                raise DomainError("empty block")
            if seen & b:
                raise DomainError("blocks overlap")
            seen |= b
        if seen != set(range(1, n + 1)):
            raise DomainError("blocks do not cover the ground set")

    def masks(self) -> list[int]:
        return [sum(bit(e) for e in b) for b in self.blocks]


def set_partitions(n: int) -> Iterator[list[int]]:
    """Set partitions of 1..n as lists of block bitmasks, via restricted growth strings.

    Blocks appear in order of their minimum element.
    """
    if n == 0:
        yield []
        return
    blocks: list[int] = []

    def grow(e: int) -> Iterator[list[int]]:
        if e > n:
            yield list(blocks)
            return
        b = bit(e)
        for i in range(len(blocks)):
            blocks[i] |= b
            yield from grow(e + 1)
            blocks[i] &= ~b
        blocks.append(b)
        yield from grow(e + 1)
        blocks.pop()

    yield from grow(1)


class CCPChecker:
    """Connectivity/compatibility tests for partitions of one fixed poset."""

    def __init__(self, p: Poset):
        self.p = p
        self.adj = [0] * (p.n + 1)
        self.up_closed = [0] * (p.n + 1)
        for e in range(1, p.n + 1):
            self.adj[e] = p.up[e] | p.down[e]
            self.up_closed[e] = p.up[e] | bit(e)

    def connected(self, block: int) -> bool:
        start = block & -block
        reached = start
        frontier = start
        while frontier:
            grow = 0
            for e in elements_of(frontier):
                grow |= self.adj[e]
            grow &= block & ~reached
            reached |= grow
            frontier = grow
        return reached == block

    def compatible(self, blocks: Sequence[int]) -> bool:
        k = len(blocks)
        if k <= 1:
            return True
        above = []
        for b in blocks:
            m = 0
            for e in elements_of(b):
                m |= self.up_closed[e]
            above.append(m)
        succ = [[j for j in range(k) if j != i and above[i] & blocks[j]] for i in range(k)]
        indeg = [0] * k
        for i in range(k):
            for j in succ[i]:
                indeg[j] += 1
        ready = [i for i in range(k) if indeg[i] == 0]
        done = 0
        while ready:
            i = ready.pop()
            done += 1
            for j in succ[i]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    ready.append(j)
        return done == k

    def flags(self, blocks: Sequence[int]) -> tuple[bool, bool]:
        return all(self.connected(b) for b in blocks), self.compatible(blocks)

    def is_ccp(self, blocks: Sequence[int]) -> bool:
        return all(self.connected(b) for b in blocks) and self.compatible(blocks)


def is_ccp(p: Poset, pi: BlockPartition | Iterable[Iterable[int]]) -> tuple[bool, bool]:
    """``(connected, compatible)`` for a partition of the ground set of ``p``."""
    if not isinstance(pi, BlockPartition):
        pi = BlockPartition.of(pi)
    pi.validate(p.n)
    return CCPChecker(p).flags(pi.masks())


def is_graded(p: Poset) -> int | None:
    """Common length of all maximal chains, or None if they differ (or ``p`` is empty)."""
    if p.n == 0:
        return None
    shortest = [0] * (p.n + 1)
    longest = [0] * (p.n + 1)
    for e in p.topological_order:
        lows = p.lower_covers[e]
        if lows:
            shortest[e] = 1 + min(shortest[a] for a in lows)
            longest[e] = 1 + max(longest[a] for a in lows)
    tops = p.maximal_elements()
    lengths = {shortest[e] for e in tops} | {longest[e] for e in tops}
    return lengths.pop() if len(lengths) == 1 else None
