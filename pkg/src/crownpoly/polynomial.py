"""Exact univariate polynomials over the rationals, plus sequence predicates.

Everything here is exact: coefficients are :class:`fractions.Fraction` and
no floating point is ever introduced.

>>> p = RationalPoly.from_ints([0, 1, 1])
>>> p(3)
Fraction(12, 1)
>>> negate_argument(p).coeffs == RationalPoly.from_ints([0, -1, 1]).coeffs
True
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .errors import DomainError

Number = int | Fraction


def _trim(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


@dataclass(frozen=True)
class RationalPoly:
    """Dense polynomial, ``coeffs[k]`` is the coefficient of ``t**k``.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "coeffs", _trim([Fraction(c) for c in self.coeffs])
        )

    @classmethod
    def from_ints(cls, values: Iterable[Number]) -> "RationalPoly":
        return cls(tuple(Fraction(v) for v in values))

    @classmethod
    def constant(cls, c: Number) -> "RationalPoly":
        return cls((Fraction(c),))

    @classmethod
    def monomial(cls, k: int, c: Number = 1) -> "RationalPoly":
        return cls((Fraction(0),) * k + (Fraction(c),))

    @classmethod
    def binomial(cls, k: int) -> "RationalPoly":
        """The polynomial ``binom(t, k) = t(t-1)...(t-k+1)/k!``."""
        out = cls.constant(1)
        for j in range(k):
            out = out * cls((Fraction(-j), Fraction(1)))
        return out * Fraction(1, _factorial(k))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return RationalPoly(tuple(self.coeff(k) + other.coeff(k) for k in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return RationalPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalPoly(tuple(c * other for c in self.coeffs))
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return RationalPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative power")
        out = RationalPoly.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other: "RationalPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.leading()
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lead
            if c == 0:
                continue
            quot[k - dq] = c
            for j, b in enumerate(other.coeffs):
                rem[k - dq + j] -= c * b
        return RationalPoly(tuple(quot)), RationalPoly(tuple(rem))

    def derivative(self) -> "RationalPoly":
        return RationalPoly(tuple(k * c for k, c in enumerate(self.coeffs) if k))

    def monic(self) -> "RationalPoly":
        if self.is_zero():
            return self
        return self * (1 / self.leading())

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise DomainError(f"non-integral coefficients in {self}")
        return [int(c) for c in self.coeffs]

    def to_json(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "RationalPoly":
        return cls(tuple(Fraction(s) for s in data))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono:
                terms.append(f"({c})*{mono}")
            else:
                terms.append(str(c))
        return " + ".join(terms)


def _coerce(x) -> RationalPoly:
    if isinstance(x, RationalPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return RationalPoly.constant(x)
    raise TypeError(f"cannot treat {type(x).__name__} as a polynomial")


def _factorial(k: int) -> int:
    out = 1
    for j in range(2, k + 1):
        out *= j
    return out


T = RationalPoly((Fraction(0), Fraction(1)))


def interpolate(points: Sequence[tuple[Number, Number]]) -> RationalPoly:
    """Unique polynomial of degree < len(points) through ``points`` (Newton form)."""
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise DomainError("interpolation abscissae must be distinct")
    table = [Fraction(y) for _, y in points]
    n = len(xs)
    # in-place divided differences; table[k] ends as f[x_0..x_k]
    for level in range(1, n):
        for k in range(n - 1, level - 1, -1):
            table[k] = (table[k] - table[k - 1]) / (xs[k] - xs[k - level])
    out = RationalPoly()
    for k in range(n - 1, -1, -1):
        out = out * RationalPoly((-xs[k], Fraction(1))) + table[k]
    return out


def negate_argument(p: RationalPoly) -> RationalPoly:
    """``q(t) = p(-t)``."""
    return RationalPoly(tuple(-c if k % 2 else c for k, c in enumerate(p.coeffs)))


def shift_argument(p: RationalPoly, a: Number) -> RationalPoly:
    """``q(t) = p(t + a)`` by exact binomial expansion."""
    a = Fraction(a)
    d = len(p.coeffs)
    out = [Fraction(0)] * d
    for j, c in enumerate(p.coeffs):
        if c == 0:
            continue
        power = Fraction(1)
        # contribution of c*(t+a)^j to t^k is c*binom(j,k)*a^(j-k)
        for k in range(j, -1, -1):
            out[k] += c * comb(j, k) * power
            power *= a
    return RationalPoly(tuple(out))


def scale_argument(p: RationalPoly, a: Number) -> RationalPoly:
    """``q(t) = p(a*t)``."""
    a = Fraction(a)
    return RationalPoly(tuple(c * a**k for k, c in enumerate(p.coeffs)))


@dataclass(frozen=True)
class IntVector:
    """Exact integer sequence; ``offset`` is the index of the first entry.

    f-vectors use ``offset=-1`` so that ``entries[0]`` is f_{-1}.
    """

    entries: tuple[int, ...]
    offset: int = 0

    def __post_init__(self):
        if self.offset not in (-1, 0):
            raise DomainError(f"offset must be -1 or 0, got {self.offset}")
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))

    def __getitem__(self, index: int) -> int:
        k = index - self.offset
        if 0 <= k < len(self.entries):
            return self.entries[k]
        return 0

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def as_poly(self) -> RationalPoly:
        """Polynomial with ``entries[0]`` as the constant term."""
        return RationalPoly.from_ints(self.entries)

    def to_list(self) -> list[int]:
        return list(self.entries)


@dataclass(frozen=True)
class SequenceReport:
    symmetric: bool
    unimodal: bool
    log_concave: bool
    nonnegative: bool


def sequence_predicates(v: IntVector | Sequence[int]) -> SequenceReport:
    xs = list(v)
    nonneg = all(x >= 0 for x in xs)
    symmetric = xs == xs[::-1]

    unimodal = True
    k = 0
    while k + 1 < len(xs) and xs[k] <= xs[k + 1]:
        k += 1
    while k + 1 < len(xs):
        if xs[k] < xs[k + 1]:
            unimodal = False
            break
        k += 1

    log_concave = nonneg and all(
        xs[i] * xs[i] >= xs[i - 1] * xs[i + 1] for i in range(1, len(xs) - 1)
    )
    return SequenceReport(symmetric, unimodal, log_concave, nonneg)


def gamma_basis(i: int, d: int) -> RationalPoly:
    """``t^i (1+t)^(d-2i)``."""
    return RationalPoly.monomial(i) * RationalPoly.from_ints([1, 1]) ** (d - 2 * i)


def gamma_expand(h: RationalPoly, d: int) -> IntVector:
    """Coordinates of a symmetric ``h`` in the basis ``t^i (1+t)^(d-2i)``.

    >>> gamma_expand(RationalPoly.from_ints([1, 2, 1]), 2).to_list()
    [1, 0]
    """
    if d < 0:
        raise DomainError("symmetric degree must be nonnegative")
    if h.degree > d:
        raise DomainError(f"degree {h.degree} exceeds symmetric degree {d}")
    cs = [h.coeff(k) for k in range(d + 1)]
    if cs != cs[::-1]:
        raise DomainError(f"polynomial is not symmetric of symmetric degree {d}")
    residual = h
    gamma: list[int] = []
    # basis element i starts at t^i with coefficient 1: unit-triangular solve
    for i in range(d // 2 + 1):
        g = residual.coeff(i)
        if g.denominator != 1:
            raise DomainError(f"non-integral gamma coefficient {g}")
        gamma.append(int(g))
        residual = residual - gamma_basis(i, d) * g
    if not residual.is_zero():
        raise DomainError("gamma expansion left a nonzero residual")
    return IntVector(tuple(gamma))


def gamma_reexpand(gamma: Sequence[int], d: int) -> RationalPoly:
    out = RationalPoly()
    for i, g in enumerate(gamma):
        out = out + gamma_basis(i, d) * g
    return out


def poly_gcd(a: RationalPoly, b: RationalPoly) -> RationalPoly:
    while not b.is_zero():
        a, b = b, divmod(a, b)[1]
    return a.monic()


def square_free_part(p: RationalPoly) -> RationalPoly:
    g = poly_gcd(p, p.derivative())
    return divmod(p, g)[0].monic()


def sturm_sequence(p: RationalPoly) -> list[RationalPoly]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        seq.append(-divmod(seq[-2], seq[-1])[1])
    return seq[:-1]


def _sign_changes(signs: Iterable[int]) -> int:
    nz = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def count_real_roots(p: RationalPoly) -> int:
    """Number of distinct real roots, via a Sturm chain evaluated at +-infinity."""
    if p.is_zero():
        raise DomainError("the zero polynomial has infinitely many roots")
    seq = sturm_sequence(p)

    def sign(c: Fraction) -> int:
        return (c > 0) - (c < 0)

    at_pos = [sign(q.leading()) for q in seq]
    at_neg = [sign(q.leading()) * (-1) ** q.degree for q in seq]
    return _sign_changes(at_neg) - _sign_changes(at_pos)


def real_rooted(p: RationalPoly) -> bool:
    """True iff every complex root of ``p`` is real.

    The Sturm count is taken on the square-free part, whose roots are the
    distinct roots of ``p``; ``p`` is real-rooted iff that count equals its
    degree.

    >>> real_rooted(RationalPoly.from_ints([1, 0, 1]))
    False
    """
    if p.is_zero():
        raise DomainError("real-rootedness of the zero polynomial is undefined")
    sqf = square_free_part(p)
    if sqf.degree <= 0:
        return True
    return count_real_roots(sqf) == sqf.degree
