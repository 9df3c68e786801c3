"""Finite conjecture scans; each row is a verdict for one n and nothing more."""

from __future__ import annotations

from typing import Callable

from . import faces, hstar, order_poly
from .budget import Budget, as_budget
from .polynomial import RationalPoly, real_rooted, sequence_predicates
from .poset import boolean_lattice, make_crown


def _f_logconcave(n: int, budget: Budget) -> dict:
    f = faces.fvector_formula(n).to_list()
    return {"holds": sequence_predicates(f).log_concave}


def _f_not_realrooted(n: int, budget: Budget) -> dict:
    """Both the full f-polynomial and the one without the empty face and the polytope."""
    f = faces.fvector_formula(n).to_list()
    full = real_rooted(RationalPoly.from_ints(f))
    proper = real_rooted(RationalPoly.from_ints(f[1:-1])) if len(f) > 2 else None
    return {"holds": not full and not proper, "full_real_rooted": full, "proper_real_rooted": proper}


def _hstar_realrooted(n: int, budget: Budget) -> dict:
    h = hstar.hstar_from_descents(hstar.natural_crown(2 * n), budget).to_list()
    return {"holds": real_rooted(RationalPoly.from_ints(h)), "h": h}


def _boolean_hstar(n: int, budget: Budget) -> dict:
    h = hstar.hstar_of(boolean_lattice(n), budget).to_list()
    return {"holds": real_rooted(RationalPoly.from_ints(h)), "h": h}


def _omega_nonneg(n: int, budget: Budget) -> dict:
    poly = order_poly.omega_oracle(make_crown(2 * n), budget=budget).poly
    return {"holds": all(c >= 0 for c in poly.coeffs)}


def _polygon_ehrhart_nonneg(n: int, budget: Budget) -> dict:
    poly = order_poly.ehrhart(order_poly.polygon_lattice(n), budget)
    return {"holds": all(c >= 0 for c in poly.coeffs), "coeffs": poly.to_json()}


CONJECTURES: dict[str, tuple[Callable[[int, Budget], dict], int]] = {
    "f-logconcave": (_f_logconcave, 1),
    "f-not-realrooted": (_f_not_realrooted, 1),
    "hstar-realrooted": (_hstar_realrooted, 1),
    "boolean-hstar": (_boolean_hstar, 1),
    "omega-nonneg": (_omega_nonneg, 1),
    "polygon-ehrhart-nonneg": (_polygon_ehrhart_nonneg, 1),
}


def scan(conjecture: str, ns: list[int], budget: Budget | int | None = None) -> list[dict]:
    check, n_min = CONJECTURES[conjecture]
    budget = as_budget(budget)
    rows = []
    for n in ns:
        if n < n_min:
            rows.append({"n": n, "holds": None, "note": f"n must be >= {n_min}"})
            continue
        row = {"n": n}
        row.update(check(n, budget))
        rows.append(row)
    return rows
