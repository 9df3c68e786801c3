"""Acceptance criteria 1-14, one pass/fail line per criterion.

Run directly (``python3 tests/test_acceptance.py``) for the summary alone,
or under pytest, where each criterion is its own test and still prints
its line.
"""

from __future__ import annotations

import sys
import time
from fractions import Fraction
from math import comb

import pytest

from crownpoly import faces, hstar, order_poly
from crownpoly.polynomial import RationalPoly, gamma_expand, real_rooted
from crownpoly.poset import (
    Poset,
    antichain,
    bit,
    is_graded,
    make_crown,
    make_zigzag,
    ordinal_sum,
)


def _timed(limit: float, fn):
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - start
    if elapsed >= limit:
        return False, f"{detail}; took {elapsed:.1f}s, limit {limit:.0f}s"
    return ok, f"{detail} ({elapsed:.2f}s)"


def c01_table1():
    def run():
        bad = [n for n, row in faces.TABLE1.items() if tuple(faces.fvector_formula(n).to_list()) != row]
        return not bad, "n=2..6 rows match" if not bad else f"mismatch at n={bad}"
    return _timed(1, run)


def c02_faces_oracle():
    def run():
        bad = [n for n in (2, 3, 4) if faces.fvector_oracle(n) != faces.fvector_formula(n)]
        return not bad, "CCP enumeration equals formula for n=2..4" if not bad else f"n={bad}"
    return _timed(120, run)


def c03_pn():
    def run():
        bad, total = [], 0
        for n in range(1, 7):
            for i in range(2, 2 * n + 1):
                for m in range(1, i // 2 + 1):
                    total += 1
                    if faces.p_n_formula(n, i, m) != faces.p_n_oracle(n, i, m):
                        bad.append((n, i, m))
        return not bad, f"{total} triples agree" if not bad else f"mismatch {bad}"
    return _timed(60, run)


def _antichains(p: Poset) -> int:
    return sum(
        1 for mask in range(1 << p.n)
        if all(not (p.up[e] & mask) for e in range(1, p.n + 1) if mask & bit(e))
    )


def c04_lucas():
    bad = []
    for n in range(1, 7):
        f0 = faces.fvector_formula(n)[0]
        if not (f0 == faces.lucas(2 * n) == _antichains(make_crown(2 * n))):
            bad.append(n)
    return not bad, "f_0 = L(2n) = #antichains for n=1..6" if not bad else f"n={bad}"


def c05_table2():
    def run():
        problems = []
        for n in (2, 3, 4):
            report = hstar.hstar_all(2 * n)
            if not report.agree or tuple(report.h) != hstar.TABLE2_PRINTED[n]:
                problems.append(n)
        report = hstar.hstar_all(10)
        h = report.h
        n5_ok = (
            report.agree
            and len(h) - 1 == 8
            and h == h[::-1]
            and set(h) <= {1, 112, 1983, 9684, 16120}
        )
        note = hstar.table2_discrepancy(5, h)
        if not n5_ok or note is None:
            problems.append(5)
        detail = f"n=2..4 match; n=5 agreed {tuple(h)}, flagged: {note is not None}"
        return not problems, detail if not problems else f"problems at n={problems}"
    return _timed(300, run)


def c06_equidistribution():
    bad = [
        two_n for two_n in range(2, 11, 2)
        if hstar.hstar_from_cswap(two_n) != hstar.hstar_from_descents(hstar.natural_crown(two_n))
    ]
    return not bad, "cswap and descent histograms equal for 2n=2..10" if not bad else f"2n={bad}"


def c07_shelling():
    def run():
        bad = []
        for two_n in (4, 6, 8):
            r = hstar.shelling_verify(two_n)
            expected = [hstar.cswap(hstar.CAP.parse(w)) for w in r.order]
            if not (r.ok and r.complete and r.attachments == expected):
                bad.append(two_n)
        return not bad, "full check passes for 2n=4,6,8" if not bad else f"2n={bad}"
    return _timed(300, run)


def c08_crown_recursion():
    bad = []
    for two_n in range(4, 11, 2):
        oracle = order_poly.omega_oracle(make_crown(two_n), "dfs").poly
        first, second = order_poly.crown_recursion_residuals(two_n)
        if order_poly.omega_crown_recursive(two_n) != oracle or not first.is_zero() or not second.is_zero():
            bad.append(two_n)
    return not bad, "recursion equals oracle, both identities hold, 2n=4..10" if not bad else f"2n={bad}"


def c09_reciprocity():
    posets = [make_crown(2 * n) for n in range(1, 6)] + [make_zigzag(n) for n in range(1, 11)]
    bad = [
        p.n for p in posets
        if not order_poly.is_reciprocal(order_poly.omega_oracle(p).poly, p.n, is_graded(p))
    ]
    return not bad, f"{len(posets)} crowns and zigzags" if not bad else f"sizes {bad}"


def c10_linear_coefficients():
    problems = []
    for n in range(1, 10):
        lin = order_poly.omega_oracle(make_zigzag(n)).poly.coeff(1)
        if lin != order_poly.linear_coefficient_formula("zigzag", n):
            problems.append(f"Z_{n}")
    for n in range(1, 6):
        if order_poly.omega_oracle(make_crown(2 * n)).poly.coeff(1) != Fraction(1, comb(2 * n, n)):
            problems.append(f"C_{2 * n}")
    phi_cases = [make_crown(4), make_crown(6)] + [make_zigzag(n) for n in range(1, 6)]
    for p in phi_cases:
        if order_poly.phi(p) != order_poly.omega_oracle(p).poly.coeff(1):
            problems.append(f"phi size {p.n}")
    if order_poly.phi(antichain(4)) != 0:
        problems.append("phi(A4)")
    za4 = ordinal_sum(Poset(1), antichain(4))
    if not (order_poly.phi(za4) == order_poly.omega_oracle(za4).poly.coeff(1) == Fraction(-1, 30)):
        problems.append("z+A4")
    return not problems, "all closed forms and phi values agree" if not problems else str(problems)


def c11_gamma():
    problems = []
    for two_n in (4, 6, 8):
        g = hstar.gamma_via_peaks(two_n)
        expanded = gamma_expand(hstar.hstar_from_cswap(two_n).as_poly(), two_n - 2)
        if g != expanded or min(g) < 0:
            problems.append(two_n)
    tilde = hstar.adjoin_top_canonical(hstar.natural_crown(4))
    peaks = [hstar.peak_count(w) for w in hstar.linear_extensions(tilde)]
    if hstar.gamma_via_peaks(4).to_list() != [1, 0] or peaks.count(1) != 4 or peaks.count(2) != 0:
        problems.append("worked example")
    return not problems, "peak formula equals expansion for 2n=4,6,8; example reproduced" if not problems else str(problems)


def c12_gorenstein():
    bad = [n for n in range(1, 6) if not hstar.gorenstein_checks(2 * n).ok]
    return not bad, "degree, symmetry, unimodality, unique interior point for n=1..5" if not bad else f"n={bad}"


def c13_log_concavity():
    def run():
        rows = faces.log_concavity_scan(50, real_rooted_upto=0)
        return all(r.log_concave for r in rows), "f-vectors log-concave for n=1..50"
    return _timed(10, run)


def c13_hstar_real_rooted():
    bad = [
        n for n in range(2, 6)
        if not real_rooted(hstar.hstar_from_descents(hstar.natural_crown(2 * n)).as_poly())
    ]
    return not bad, "h* real-rooted for n=2..5" if not bad else f"n={bad}"


def c13_f_not_real_rooted():
    rooted = [n for n in range(2, 7) if real_rooted(faces.fvector_formula(n).as_poly())]
    if rooted:
        return False, f"f-polynomial (f_-1 constant) is real-rooted for n={rooted}"
    return True, "no f-polynomial is real-rooted for n=2..6"


def c13_scans():
    parts = [c13_log_concavity(), c13_hstar_real_rooted(), c13_f_not_real_rooted()]
    return all(ok for ok, _ in parts), "; ".join(detail for _, detail in parts)


def c14_ordinal_sums():
    problems = []
    lattice = order_poly.polygon_lattice(2)
    if faces.pyramid_f(2) != faces.fvector_from_ccps(lattice).as_poly():
        problems.append("pyramid")
    for n in (2, 3):
        if hstar.hstar_of(order_poly.polygon_lattice(n)) != hstar.hstar_from_cswap(2 * n):
            problems.append(f"L(P_{n})")
    for p in (antichain(4), make_crown(4), make_zigzag(3)):
        oracle = order_poly.omega_oracle(ordinal_sum(Poset(1), p), "dfs").poly
        if order_poly.omega_ordinal_sum_with_point(p) != oracle:
            problems.append(f"e_k formula size {p.n}")
    return not problems, "pyramid, polygon-lattice h*, e_k formula on A(4), C_4, Z_3" if not problems else str(problems)


CRITERIA = [
    (1, "printed f-vectors", c01_table1),
    (2, "face oracle equivalence", c02_faces_oracle),
    (3, "p_n identity", c03_pn),
    (4, "Lucas identity", c04_lucas),
    (5, "printed h*-vectors", c05_table2),
    (6, "equidistribution", c06_equidistribution),
    (7, "shelling", c07_shelling),
    (8, "order-polynomial recursion", c08_crown_recursion),
    (9, "reciprocity", c09_reciprocity),
    (10, "linear coefficients", c10_linear_coefficients),
    (11, "gamma-vector", c11_gamma),
    (12, "Gorenstein", c12_gorenstein),
    (13, "conjecture scans", c13_scans),
    (14, "ordinal-sum identities", c14_ordinal_sums),
]

# criterion 13 asks that no crown f-polynomial be real-rooted; with f_{-1}
# as constant term the n = 2 and 3 polynomials are real-rooted, so it fails
KNOWN_FAILING = {13}


def _line(number: int, title: str, ok: bool, detail: str) -> str:
    return f"criterion {number:2d} {'PASS' if ok else 'FAIL'} {title}: {detail}"


@pytest.mark.parametrize(
    "number,title,check",
    [
        pytest.param(
            *c,
            marks=pytest.mark.xfail(strict=True, reason="f-polynomials for n=2,3 are real-rooted")
            if c[0] in KNOWN_FAILING else (),
            id=f"criterion-{c[0]:02d}",
        )
        for c in CRITERIA
    ],
)
def test_criterion(number, title, check, capsys):
    ok, detail = check()
    with capsys.disabled():
        print("\n" + _line(number, title, ok, detail))
    assert ok, detail


# the parts of criterion 13 that hold are asserted on their own
def test_criterion_13_log_concavity():
    ok, detail = c13_log_concavity()
    assert ok, detail


def test_criterion_13_hstar_real_rooted():
    ok, detail = c13_hstar_real_rooted()
    assert ok, detail


def test_criterion_13_proper_f_polynomials_not_real_rooted():
    for n in range(2, 7):
        f = faces.fvector_formula(n).to_list()
        assert not real_rooted(RationalPoly.from_ints(f[1:-1]))


def main() -> int:
    failed = 0
    for number, title, check in CRITERIA:
        ok, detail = check()
        failed += not ok
        print(_line(number, title, ok, detail))
    print(f"{len(CRITERIA) - failed}/{len(CRITERIA)} criteria pass")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
