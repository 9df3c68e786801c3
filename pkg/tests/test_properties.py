"""Property-based checks on random small posets and polynomials."""

import itertools
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from crownpoly.faces import fvector_from_ccps
from crownpoly.hstar import (
    CAP,
    cswap_set,
    enumerate_caps,
    hstar_from_descents,
    hstar_from_ehrhart,
    inv,
    swap_to,
)
from crownpoly.order_poly import count_maps, omega_oracle
from crownpoly.polynomial import (
    RationalPoly,
    gamma_expand,
    gamma_reexpand,
    interpolate,
    negate_argument,
    real_rooted,
    shift_argument,
)
from crownpoly.poset import Poset, count_linear_extensions, ideal_masks, linear_extensions

CAPS8 = enumerate_caps(8)


@st.composite
def posets(draw, max_n=6):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    # relabel by a random permutation so that element order is not a linear extension
    perm = draw(st.permutations(range(1, n + 1)))
    return Poset.from_relations(n, [(perm[a - 1], perm[b - 1]) for a, b in chosen])


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
polys = st.lists(rationals, max_size=6).map(lambda cs: RationalPoly(tuple(cs)))


def strict_maps(p, m):
    return sum(
        1 for values in itertools.product(range(1, m + 1), repeat=p.n)
        if all(values[a - 1] < values[b - 1] for a, b in p.covers)
    )


@settings(max_examples=60, deadline=None)
@given(posets(5), st.integers(min_value=0, max_value=3))
def test_counting_routes_agree(p, m):
    brute = count_maps(p, m, "brute")
    assert count_maps(p, m) == brute
    assert count_maps(p, m, "dfs") == brute


@settings(max_examples=40, deadline=None)
@given(posets(5), st.integers(min_value=1, max_value=3))
def test_reciprocity_with_strict_maps(p, m):
    # (-1)^|P| Omega(-m) counts strictly order-preserving maps into [m]
    omega = omega_oracle(p).poly
    assert (-1) ** p.n * omega(-m) == strict_maps(p, m)


@settings(max_examples=40, deadline=None)
@given(posets(6), st.data())
def test_hstar_independent_of_natural_labeling(p, data):
    extensions = linear_extensions(p)
    order = data.draw(st.sampled_from(extensions)) if p.n else ()
    labels = [0] * p.n
    for pos, e in enumerate(order, start=1):
        labels[e - 1] = pos
    labeled = p.relabeled(labels) if p.n else p.relabeled(())
    h = hstar_from_descents(labeled)
    assert h == hstar_from_ehrhart(p)
    assert h[0] == 1
    assert sum(h) == count_linear_extensions(p) == len(extensions)


@settings(max_examples=25, deadline=None)
@given(posets(5))
def test_order_polytope_faces(p):
    f = fvector_from_ccps(p)
    assert f.euler_characteristic() == 0
    assert f[0] == len(ideal_masks(p))
    assert f[p.n] == 1


@given(polys, st.integers(min_value=0, max_value=3))
def test_interpolation_round_trip(p, extra):
    points = [(x, p(x)) for x in range(max(p.degree, 0) + 1 + extra)]
    assert interpolate(points) == p


@given(polys, rationals)
def test_argument_transforms(p, a):
    assert negate_argument(negate_argument(p)) == p
    assert shift_argument(shift_argument(p, a), -a) == p
    assert shift_argument(p, a)(2) == p(2 + a)


@given(polys, polys)
def test_division_identity(a, b):
    if b.is_zero():
        return
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(st.lists(st.integers(min_value=0, max_value=20), min_size=1, max_size=4), st.integers(min_value=0, max_value=3))
def test_gamma_round_trip(gamma, slack):
    d = 2 * (len(gamma) - 1) + slack
    h = gamma_reexpand(gamma, d)
    assert gamma_expand(h, d).to_list() == gamma + [0] * (d // 2 + 1 - len(gamma))


@given(st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=3), min_size=1, max_size=5),
       st.fractions(min_value=Fraction(1, 4), max_value=4, max_denominator=4))
def test_real_rootedness_of_products(roots, c):
    p = RationalPoly.constant(1)
    for r in roots:
        p = p * RationalPoly((-r, 1))
    assert real_rooted(p)
    assert not real_rooted(p * RationalPoly((c, 0, 1)))


@given(st.sampled_from(CAPS8))
def test_cyclic_swaps_lower_inversions_by_one(sigma):
    for i in cswap_set(sigma):
        tau = swap_to(sigma, i)
        assert isinstance(tau, CAP)
        assert inv(sigma) - inv(tau) == 1
