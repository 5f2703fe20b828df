import random
from fractions import Fraction

import pytest

from helpers import random_integral
from ramac.errors import TraceIdealViolated
from ramac.ramify import (
    RamificationData,
    analyze,
    different_via_breaks,
    different_via_filtration,
    filtration,
    herbrand_upper,
    proposition_check,
    trace_ideal_check,
)
from ramac.tower import Tower, prime_element, valuation_L


def rd_of(b, g, pn):
    return RamificationData(pn, {}, list(b), list(g))


def psi_oracle(tower):
    """Lower breaks and orders of an elementary abelian tower from its upper step breaks.

    The k-th upper jump removes one factor of p; psi has slope p^(k-1) between
    consecutive upper breaks.
    """
    p, n = tower.p, tower.n
    uppers = sorted(tower.upper_step_breaks)
    lower, prev_u, prev_l = [], 0, 0
    for k, u in enumerate(uppers):
        prev_l = prev_l + p ** k * (u - prev_u)
        prev_u = u
        lower.append(prev_l)
    return lower, [p ** (n - k) for k in range(n)]


EXPECTED = {
    "p2b1": ([1], [2], [1], 2, 1),
    "p2b3": ([3], [2], [3], 4, 1),
    "p3b1": ([1], [3], [1], 4, 1),
    "p3b2": ([2], [3], [2], 6, 2),
    "p5b2": ([2], [5], [2], 12, 2),
    "p2b1b3": ([1, 5], [4, 2], [1, 3], 10, 1),
    "p3b1b2": ([1, 4], [9, 3], [1, 2], 22, 4),
}


def test_filtration_examples():
    rd = filtration(Tower.from_rhs(2, ["t^-1"]))
    assert list(rd.i_table.values()) == [2]
    assert (rd.lower_breaks, rd.orders) == ([1], [2])
    rd = filtration(Tower.from_rhs(2, ["t^-1", "t^-3"]))
    assert sorted(rd.i_table.values()) == [2, 2, 6]
    assert (rd.lower_breaks, rd.orders) == ([1, 5], [4, 2])
    rd = filtration(Tower.from_rhs(3, ["t^-2"]))
    assert (rd.lower_breaks, rd.orders) == ([2], [3])


def test_different_via_breaks_examples():
    assert different_via_breaks(rd_of([1], [2], 2)) == 2
    assert different_via_breaks(rd_of([1, 5], [4, 2], 4)) == 10
    assert different_via_breaks(rd_of([2], [3], 3)) == 6


def test_herbrand_examples():
    assert herbrand_upper(rd_of([1], [2], 2)) == [1]
    assert herbrand_upper(rd_of([1, 5], [4, 2], 4)) == [1, 3]
    assert herbrand_upper(rd_of([2], [3], 3)) == [2]
    assert herbrand_upper(rd_of([1, 2], [4, 2], 4)) == [1, Fraction(3, 2)]


def test_proposition_examples():
    for name in ("p2b1", "p2b1b3", "p3b2"):
        T = Tower.from_rhs(*_args(name))
        rep = proposition_check(analyze(T))
        assert rep["identity"] and rep["congruence"] and rep["residue_matches_b_m"]
    rep = proposition_check(analyze(Tower.from_rhs(2, ["t^-1", "t^-3"])))
    assert (rep["d_plus_1"], rep["g_1"], rep["b_m"], rep["u_m"]) == (11, 4, 5, 3)


def _args(name):
    from ramac.catalog import CATALOG

    return CATALOG[name]["p"], CATALOG[name]["rhs"]


def test_catalog_values(tower):
    rd = analyze(tower)
    b, g, u, d, r = EXPECTED[tower.name]
    assert rd.lower_breaks == b
    assert rd.orders == g
    assert rd.upper_breaks == u
    assert rd.d_derivative == rd.d_breaks == rd.d_filtration == d
    assert rd.criterion_residue == r == (-d - 1) % tower.degree


def test_psi_oracle(tower):
    rd = analyze(tower)
    lower, orders = psi_oracle(tower)
    assert rd.lower_breaks == lower
    assert rd.orders == orders
    assert rd.upper_breaks == sorted(tower.upper_step_breaks)


def test_filtration_invariants(tower):
    rd = analyze(tower)
    assert sum(rd.i_table.values()) == rd.d
    assert rd.orders[0] == tower.degree
    assert all(x >= y for x, y in zip(rd.orders, rd.orders[1:]))
    for g in rd.orders:
        while g % tower.p == 0:
            g //= tower.p
        assert g == 1
    assert different_via_filtration(rd) == rd.d
    assert all(u.denominator == 1 for u in rd.upper_breaks)
    assert (rd.criterion_residue - rd.lower_breaks[-1]) % tower.degree == 0


def test_i_table_independent_of_prime(tower):
    rng = random.Random(f"itab-{tower.name}")
    base = filtration(tower).i_table
    pi = prime_element(tower)
    for _ in range(5):
        pi2 = pi * (1 + tower.t() * random_integral(tower, rng)) + tower.t() ** 2 * random_integral(tower, rng)
        assert valuation_L(pi2) == 1
        assert filtration(tower, pi2).i_table == base


def test_trace_ideal_example_p2b1():
    T = Tower.from_rhs(2, ["t^-1"])
    rep = trace_ideal_check(T, 1)
    assert rep["witness_v_L"] == -1 and rep["witness_trace"] == "1" and rep["witness_v_K"] == 0
    assert rep["min_v_K"] >= 1
    rep = trace_ideal_check(T, 0)
    assert rep["witness_trace"] == "t^-1" and rep["witness_v_K"] == -1


@pytest.mark.parametrize("k", range(-2, 4))
def test_trace_ideal_window(tower, k):
    rep = trace_ideal_check(tower, k)
    assert rep["min_v_K"] >= k
    assert rep["witness_v_L"] == k * tower.degree - analyze(tower).d - 1
    assert rep["witness_v_K"] == k - 1


def test_trace_ideal_violation_detected():
    T = Tower.from_rhs(2, ["t^-1"])
    bad = analyze(T)
    bad.d_derivative = 0
    with pytest.raises(TraceIdealViolated):
        trace_ideal_check(T, 0, bad)
