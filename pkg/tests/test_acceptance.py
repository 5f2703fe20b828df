"""Acceptance suite: one check per criterion, each printed as a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines inline, or
``python3 tests/test_acceptance.py`` for the summary alone.
"""

import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from helpers import random_element  # noqa: E402
from ramac.catalog import CATALOG, all_towers  # noqa: E402
from ramac.linalg import naive_rank  # noqa: E402
from ramac.nbasis import (  # noqa: E402
    conjugate_matrix,
    is_normal_generator,
    sharpness_witness,
    tame_counterexample,
    unramified_counterexample,
    verify_criterion,
    verify_euler_traces,
)
from ramac.ramify import analyze, proposition_check, trace_ideal_check  # noqa: E402
from ramac.tower import norm, valuation_L  # noqa: E402

TIME_LIMIT = 10.0
EXPECTED_D = {"p2b1": 2, "p3b2": 6, "p2b1b3": 10}


def c1_different():
    rows = []
    for T in all_towers():
        rd = analyze(T)
        if not rd.d_derivative == rd.d_breaks == rd.d_filtration:
            return False, f"{T.name}: {rd.d_derivative}/{rd.d_breaks}/{rd.d_filtration}"
        if sum(rd.i_table.values()) != rd.d:
            return False, f"{T.name}: i_G sum differs"
        rows.append(f"{T.name}={rd.d}")
    ok = all(analyze(T).d == EXPECTED_D[T.name] for T in all_towers() if T.name in EXPECTED_D)
    return ok, "d: " + " ".join(rows)


def c2_proposition():
    for T in all_towers():
        rep = proposition_check(analyze(T))
        if not (rep["identity"] and rep["congruence"] and rep["residue_matches_b_m"]):
            return False, f"{T.name}: {rep}"
    return True, f"d+1 = g_1 - b_m + p^n u_m and r* = b_m mod p^n on {len(CATALOG)} towers"


def c3_euler():
    for T in all_towers():
        traces = [r["trace"] for r in verify_euler_traces(T)["traces"]]
        if traces != ["0"] * (T.degree - 1) + ["1"]:
            return False, f"{T.name}: {traces}"
    return True, f"traces (0,...,0,1) on {len(CATALOG)} towers"


def c4_soundness():
    total = 0
    for T in all_towers():
        rep = verify_criterion(T, trials=50, seed=2024)
        if rep.generators_found != 50 or len(set(rep.valuations)) < 3:
            return False, f"{T.name}: {rep.generators_found}/50, valuations {sorted(set(rep.valuations))}"
        total += rep.generators_found
    return True, f"{total}/{50 * len(CATALOG)} class-r* samples are generators"


def c5_sharpness():
    count = 0
    for T in all_towers():
        rd = analyze(T)
        for c in range(T.degree):
            if c == rd.criterion_residue:
                continue
            w = sharpness_witness(T, c)
            if w.valuation() % T.degree != c or w.trace() or is_normal_generator(T, w):
                return False, f"{T.name} class {c}"
            count += 1
    return True, f"{count} witnesses: right class, trace 0, det 0"


def c6_trace_ideal():
    for T in all_towers():
        rd = analyze(T)
        for k in range(-2, 4):
            rep = trace_ideal_check(T, k, rd)
            if rep["min_v_K"] < k or rep["witness_v_K"] != k - 1 or rep["witness_v_L"] != k * T.degree - rd.d - 1:
                return False, f"{T.name} k={k}: {rep['min_v_K']}, {rep['witness_v_K']}"
    return True, f"k in -2..3 on {len(CATALOG)} towers"


def c7_necessity():
    for i in range(-3, 6):
        for demo in (tame_counterexample(4, 3, i), unramified_counterexample(2, 2, i)):
            if demo.valuation != i or demo.is_generator or demo.determinant != "0":
                return False, f"{demo.kind} i={i}"
    return True, "tame (q=4,e=3) and unramified (q=2,f=2) non-generators for i in -3..5"


def c8_oracles():
    checked = 0
    for T in all_towers():
        rng = random.Random(f"acceptance-{T.name}")
        n_ok = 0
        while n_ok < 200:
            a = random_element(T, rng)
            if not a:
                continue
            if norm(a).valuation() != valuation_L(a):
                return False, f"{T.name}: valuation mismatch on {a}"
            n_ok += 1
        checked += n_ok
    compared = 0
    for T in all_towers():
        if T.degree > 4:
            continue
        rng = random.Random(f"rank-{T.name}")
        cases = [random_element(T, rng) for _ in range(8)]
        cases += [sharpness_witness(T, c).numerator for c in range(T.degree) if c != analyze(T).criterion_residue]
        cases += [T.element(1), T.t()]
        for rho in cases:
            if not rho:
                continue
            full = naive_rank(conjugate_matrix(T, rho)) == T.degree
            if full != is_normal_generator(T, rho):
                return False, f"{T.name}: Bareiss and naive rank disagree on {rho}"
            compared += 1
    return True, f"{checked} norm/valuation pairs, {compared} determinant verdicts"


def c9_hasse_arf():
    for T in all_towers():
        ups = analyze(T).upper_breaks
        if not all(u.denominator == 1 for u in ups):
            return False, f"{T.name}: {ups}"
    return True, "all upper breaks integral"


CRITERIA = [
    (1, "different-exponent triple agreement", c1_different),
    (2, "break identity and congruence", c2_proposition),
    (3, "Euler trace identity", c3_euler),
    (4, "criterion soundness", c4_soundness),
    (5, "sharpness", c5_sharpness),
    (6, "trace of fractional ideals", c6_trace_ideal),
    (7, "necessity", c7_necessity),
    (8, "oracle cross-checks", c8_oracles),
    (9, "Hasse-Arf integrality", c9_hasse_arf),
]


def evaluate(fn):
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a raised check counts as a failure, reported with its message
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    if elapsed >= TIME_LIMIT:
        ok, detail = False, f"{detail}; took {elapsed:.1f}s"
    return ok, detail, elapsed


def line(num, title, ok, detail, elapsed):
    return f"criterion {num} [{'PASS' if ok else 'FAIL'}] {title} ({elapsed:.2f}s): {detail}"


@pytest.mark.parametrize("num,title,fn", CRITERIA, ids=[f"c{n}" for n, _, _ in CRITERIA])
def test_criterion(num, title, fn, capsys):
    ok, detail, elapsed = evaluate(fn)
    with capsys.disabled():
        print("\n" + line(num, title, ok, detail, elapsed))
    assert ok, detail


if __name__ == "__main__":
    results = [(n, t, *evaluate(fn)) for n, t, fn in CRITERIA]
    for r in results:
        print(line(*r))
    sys.exit(0 if all(r[2] for r in results) else 1)
