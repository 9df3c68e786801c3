from fractions import Fraction
from math import comb, factorial

import pytest

from crownpoly.errors import DomainError
from crownpoly.order_poly import (
    Method,
    count_maps,
    crown_recursion_residuals,
    ehrhart,
    is_reciprocal,
    linear_coefficient_formula,
    omega,
    omega_crown_recursive,
    omega_disjoint_union,
    omega_oracle,
    omega_ordinal_sum_with_point,
    omega_zigzag_recursive,
    phi,
    polygon_lattice,
    surjection_counts,
    zigzag_remark_increment,
    zigzag_value,
)
from crownpoly.polynomial import RationalPoly, T
from crownpoly.poset import (
    Poset,
    antichain,
    chain,
    count_linear_extensions,
    disjoint_union,
    is_graded,
    make_crown,
    make_zigzag,
    ordinal_sum,
)

HALF = Fraction(1, 2)


def test_count_maps_small():
    c4 = make_crown(4)
    assert count_maps(c4, 2) == 7
    assert count_maps(c4, 2, "brute") == 7
    assert [count_maps(make_crown(2), t) for t in (1, 2, 3)] == [1, 3, 6]
    for p in (make_crown(6), make_zigzag(5), antichain(3), Poset(0)):
        assert count_maps(p, 1) == 1
    assert count_maps(Poset(0), 0) == 1
    assert count_maps(make_crown(4), 0) == 0
    with pytest.raises(DomainError):
        count_maps(c4, -1)
    with pytest.raises(DomainError):
        count_maps(c4, 2, "fastest")


@pytest.mark.parametrize("p", [
    make_crown(4), make_crown(6), make_zigzag(4), make_zigzag(5),
    antichain(3), ordinal_sum(antichain(2), make_crown(4)),
    disjoint_union(make_zigzag(3), chain(2)),
    Poset.from_relations(5, [(1, 2), (2, 4), (3, 4), (3, 5)]),
])
def test_count_routes_agree(p):
    for m in range(5):
        brute = count_maps(p, m, "brute")
        assert count_maps(p, m) == brute
        assert count_maps(p, m, "dfs") == brute


def test_omega_oracle_known():
    assert omega_oracle(make_crown(2)).poly == RationalPoly((0, HALF, HALF))
    assert omega_oracle(make_zigzag(1)).poly == T
    assert omega_oracle(make_zigzag(3)).poly == T * (T + 1) * (2 * T + 1) * Fraction(1, 6)


def test_zigzag_recursion():
    assert omega_zigzag_recursive(-1) == RationalPoly.constant(1)
    assert omega_zigzag_recursive(1) == T
    for n in range(1, 10):
        assert omega_zigzag_recursive(n) == omega_oracle(make_zigzag(n)).poly


def test_zigzag_remark_as_printed_misses_odd_terms():
    # the literal top-value sum undercounts odd zigzags from n = 3 on
    assert [zigzag_value(3, t) for t in range(4)] == [0, 1, 5, 14]
    assert [zigzag_remark_increment(3, t) for t in (1, 2, 3)] == [1, 3, 7]
    # the missing maps have f(3) = f(2) = t > f(1): t - 1 of them
    assert [zigzag_value(3, t) - zigzag_value(3, t - 1) for t in (1, 2, 3)] == [1, 4, 9]
    for n in (2, 4, 6):
        assert all(
            zigzag_remark_increment(n, t) == zigzag_value(n, t) - zigzag_value(n, t - 1)
            for t in range(1, 6)
        )


def test_crown_recursion():
    assert omega_crown_recursive(4) == omega_oracle(make_crown(4)).poly
    assert omega_crown_recursive(4)(2) == 7
    assert omega_crown_recursive(4).coeff(1) == Fraction(1, 6)
    for two_n in range(4, 11, 2):
        first, second = crown_recursion_residuals(two_n)
        assert first.is_zero() and second.is_zero()


def test_linear_coefficient_formulas():
    assert linear_coefficient_formula("zigzag", 3) == Fraction(1, 6)
    assert linear_coefficient_formula("crown", 4) == Fraction(1, 6)
    assert linear_coefficient_formula("crown", 2) == HALF
    crown_values = [linear_coefficient_formula("crown", 2 * n) for n in range(2, 6)]
    assert crown_values == [Fraction(1, 6), Fraction(1, 20), Fraction(1, 70), Fraction(1, 252)]
    with pytest.raises(DomainError):
        linear_coefficient_formula("crown", 5)
    with pytest.raises(DomainError):
        linear_coefficient_formula("cycle", 4)


def test_phi():
    assert phi(Poset(1)) == 1
    assert phi(antichain(4)) == 0
    assert phi(make_crown(4)) == Fraction(1, 6)
    assert phi(make_crown(6)) == Fraction(1, 20)
    for n in range(1, 6):
        assert phi(make_zigzag(n)) == omega_oracle(make_zigzag(n)).poly.coeff(1)


def test_surjections():
    # surjections of a 2-antichain onto [1], [2]
    assert surjection_counts(antichain(2)) == [0, 1, 2]
    assert surjection_counts(chain(2)) == [0, 1, 1]


def test_ordinal_sum_with_point():
    assert omega_ordinal_sum_with_point(Poset(1)) == T * (T + 1) * HALF
    assert omega_ordinal_sum_with_point(Poset(0)) == T
    a4 = omega_ordinal_sum_with_point(antichain(4))
    assert a4.coeff(1) == Fraction(-1, 30)
    assert a4 == omega_oracle(ordinal_sum(Poset(1), antichain(4))).poly
    for p in (make_crown(4), make_zigzag(4)):
        assert omega_ordinal_sum_with_point(p) == omega_oracle(ordinal_sum(Poset(1), p), "dfs").poly


def test_disjoint_union():
    two = omega_disjoint_union(Poset(1), Poset(1))
    assert two.poly == T * T and two.method == Method.PRODUCT
    z = omega_disjoint_union(make_zigzag(1), make_zigzag(3)).poly
    assert z == omega_oracle(disjoint_union(make_zigzag(1), make_zigzag(3)), "dfs").poly
    assert omega_disjoint_union(Poset(0), make_crown(4)).poly == omega_oracle(make_crown(4)).poly


def test_ehrhart():
    assert ehrhart(make_crown(2)) == (T + 1) * (T + 2) * HALF
    assert ehrhart(make_crown(4))(1) == 7
    lead = ehrhart(make_crown(4)).leading()
    assert lead * factorial(4) == count_linear_extensions(make_crown(4)) == 4


def test_polygon_lattice_linear_coefficient():
    assert omega_oracle(polygon_lattice(7)).poly.coeff(1) == Fraction(-3, 1430)


def test_omega_routes():
    assert omega(make_crown(6)).method == Method.CROWN_RECURSION
    assert omega(make_zigzag(6)).method == Method.ZIGZAG_RECURSION
    assert omega(antichain(2)).method == Method.ORACLE


@pytest.mark.parametrize("p", [make_crown(2 * n) for n in range(1, 6)] + [make_zigzag(n) for n in range(1, 11)])
def test_reciprocity(p):
    assert is_reciprocal(omega_oracle(p).poly, p.n, is_graded(p))


def test_nonnegative_crown_coefficients():
    for two_n in range(2, 13, 2):
        assert all(c >= 0 for c in omega_oracle(make_crown(two_n)).poly.coeffs)


def test_crown_linear_coefficient_matches_binomial():
    for n in range(1, 6):
        lin = omega_oracle(make_crown(2 * n)).poly.coeff(1)
        assert lin == Fraction(1, comb(2 * n, n))
