from math import comb

import pytest

from crownpoly.errors import DomainError, ResourceError
from crownpoly.faces import (
    TABLE1,
    a_k_count,
    a_k_enumerated,
    ccp_block_histogram,
    fvector_formula,
    fvector_formula_m_outer,
    fvector_from_ccps,
    fvector_oracle,
    log_concavity_scan,
    lucas,
    p_n_formula,
    p_n_oracle,
    pyramid_f,
    vertex_identity_check,
)
from crownpoly.order_poly import polygon_lattice
from crownpoly.polynomial import RationalPoly, sequence_predicates
from crownpoly.poset import add_bounds, make_crown


def test_p_n_values():
    assert p_n_formula(2, 2, 1) == 4
    assert p_n_oracle(2, 2, 1) == 4
    # formula and cut enumeration agree on 9 for the hexagon
    assert p_n_formula(3, 2, 1) == p_n_oracle(3, 2, 1) == 9
    for n in range(1, 7):
        assert p_n_formula(n, 2 * n, n) == p_n_oracle(n, 2 * n, n) == 1


def test_p_n_subset_bound():
    for n in range(1, 5):
        for i in range(2, 2 * n + 1):
            assert sum(p_n_oracle(n, i, m) for m in range(1, i // 2 + 1)) <= comb(2 * n, i)


def test_p_n_range():
    with pytest.raises(DomainError):
        p_n_formula(2, 1, 1)
    with pytest.raises(DomainError):
        p_n_formula(2, 4, 3)


def test_a_k():
    assert a_k_count(2, 2) + 2 == 7
    assert a_k_count(2, 3) == 17
    assert a_k_count(2, 7) == 0
    assert a_k_count(3, 20) == 0
    with pytest.raises(DomainError):
        a_k_count(2, 1)


@pytest.mark.parametrize("n", [2, 3])
def test_a_k_against_enumeration(n):
    for k in range(2, 2 * n + 4):
        assert a_k_enumerated(n, k) == a_k_count(n, k)


def test_a_k_against_bounded_ccps():
    # A_k counts the (k+2)-block CCPs of the crown with bounds, except the two extra vertices at k = 2
    for n in (2, 3):
        hist = ccp_block_histogram(add_bounds(make_crown(2 * n)))
        for k in range(2, 2 * n + 3):
            assert hist.get(k, 0) == a_k_count(n, k) + (2 if k == 2 else 0)


def test_table1():
    for n, row in TABLE1.items():
        assert tuple(fvector_formula(n).to_list()) == row
        assert fvector_formula_m_outer(n) == fvector_formula(n)


def test_facets():
    for n in range(2, 7):
        assert fvector_formula(n)[2 * n - 1] == 4 * n


def test_euler_relation():
    for n in range(1, 15):
        assert fvector_formula(n).euler_characteristic() == 0


def test_oracle_small():
    assert fvector_oracle(2).to_list() == [1, 7, 17, 18, 8, 1]
    assert fvector_oracle(3).to_list() == [1, 18, 73, 129, 116, 54, 12, 1]
    assert fvector_oracle(1).to_list() == fvector_formula(1).to_list() == [1, 3, 3, 1]


def test_oracle_bucket_completeness():
    hist = ccp_block_histogram(add_bounds(make_crown(4)))
    assert sum(hist.values()) == sum(fvector_formula(2).to_list())


def test_oracle_limits():
    with pytest.raises(ResourceError):
        fvector_oracle(5)
    with pytest.raises(ResourceError):
        fvector_oracle(3, budget=100)


def test_lucas():
    assert lucas(0) == 2 and lucas(1) == 1
    assert lucas(4) == 7 and lucas(6) == 18
    for n in range(1, 11):
        assert vertex_identity_check(n)
    with pytest.raises(DomainError):
        lucas(-1)


def test_log_concavity_scan():
    rows = log_concavity_scan(50)
    assert len(rows) == 50 and all(r.log_concave for r in rows)
    assert rows[0].fvector == (1, 3, 3, 1)
    assert rows[10].f_real_rooted is None


def test_f_polynomial_real_rootedness():
    # with f_{-1} as constant term, n = 2, 3 are real-rooted (double root at -1); n = 4..6 are not
    verdicts = {r.n: r.f_real_rooted for r in log_concavity_scan(6, 2)}
    assert verdicts == {2: True, 3: True, 4: False, 5: False, 6: False}
    # dropping the empty face and the polytope itself: none are real-rooted
    assert not any(r.f_proper_real_rooted for r in log_concavity_scan(6, 2))
    f2 = fvector_formula(2).as_poly()
    assert f2 == RationalPoly.from_ints([1, 1]) ** 2 * RationalPoly.from_ints([1, 5, 6, 1])


def test_pyramid():
    assert pyramid_f(2) == RationalPoly.from_ints([1, 2, 1]) * RationalPoly.from_ints([1, 7, 17, 18, 8, 1])
    assert pyramid_f(2) == fvector_from_ccps(polygon_lattice(2)).as_poly()
    for n in range(2, 6):
        assert pyramid_f(n).degree == fvector_formula(n).as_poly().degree + 2
        assert sequence_predicates(pyramid_f(n).int_coeffs()).log_concave
    with pytest.raises(DomainError):
        pyramid_f(1)
