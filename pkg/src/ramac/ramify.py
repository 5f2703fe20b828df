"""Ramification filtration, break numbers, the different, and related identities."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DifferentMismatch, IdentityViolated, TraceIdealViolated
from .laurent import INFINITY, LaurentPoly
from .tower import GaloisElem, Tower, different_via_derivative, i_function, trace


@dataclass
class RamificationData:
    degree: int
    i_table: dict
    lower_breaks: list
    orders: list
    upper_breaks: list = field(default_factory=list)
    d_derivative: int | None = None
    d_breaks: int | None = None
    d_filtration: int | None = None
    criterion_residue: int | None = None

    @property
    def d(self):
        return self.d_derivative

    def group_order(self, i):
        """|G_i| for an integer i >= 0."""
        return 1 + sum(1 for v in self.i_table.values() if v >= i + 1)

    def to_dict(self):
        return {
            "degree": self.degree,
            "lower_breaks": list(self.lower_breaks),
            "orders": list(self.orders),
            "upper_breaks": [_frac_json(u) for u in self.upper_breaks],
            "d": self.d_derivative,
            "d_breaks": self.d_breaks,
            "d_filtration": self.d_filtration,
            "criterion_residue": self.criterion_residue,
            "i_table": {str(s): v for s, v in self.i_table.items()},
        }


def _frac_json(u):
    return u.numerator if u.denominator == 1 else f"{u.numerator}/{u.denominator}"


def filtration(tower: Tower, pi=None) -> RamificationData:
    """i_G(sigma) = v_L(sigma(pi) - pi), and the lower breaks with g_i = |G_{b_i}|."""
    table = i_function(tower, pi)
    breaks = sorted({v - 1 for v in table.values()})
    rd = RamificationData(tower.degree, table, breaks, [])
    rd.orders = [rd.group_order(b) for b in breaks]
    return rd


def different_via_breaks(rd: RamificationData) -> int:
    b, g = rd.lower_breaks, rd.orders
    d = (1 + b[0]) * (g[0] - 1)
    for i in range(1, len(b)):
        d += (b[i] - b[i - 1]) * (g[i] - 1)
    return d


def different_via_filtration(rd: RamificationData) -> int:
    """sum_{i >= 0} (|G_i| - 1), walking the chain until it is trivial."""
    total, i = 0, 0
    while True:
        gi = rd.group_order(i)
        if gi == 1:
            return total
        total += gi - 1
        i += 1


def herbrand_upper(rd: RamificationData) -> list:
    """Upper breaks u_i = phi(b_i) as exact fractions."""
    b, g = rd.lower_breaks, rd.orders
    acc = b[0] * g[0]
    uppers = [Fraction(acc, rd.degree)]
    for i in range(1, len(b)):
        acc += (b[i] - b[i - 1]) * g[i]
        uppers.append(Fraction(acc, rd.degree))
    return uppers


def analyze(tower: Tower, pi=None) -> RamificationData:
    """Full ramification data; the three routes to the different must agree."""
    rd = filtration(tower, pi)
    rd.d_derivative = different_via_derivative(tower, pi)
    rd.d_breaks = different_via_breaks(rd)
    rd.d_filtration = different_via_filtration(rd)
    if not rd.d_derivative == rd.d_breaks == rd.d_filtration:
        raise DifferentMismatch(
            f"derivative {rd.d_derivative}, breaks {rd.d_breaks}, filtration {rd.d_filtration}"
        )
    rd.upper_breaks = herbrand_upper(rd)
    rd.criterion_residue = (-rd.d_derivative - 1) % rd.degree
    return rd


def proposition_check(rd: RamificationData) -> dict:
    """d + 1 = g_1 - b_m + p^n u_m, its congruence mod p^n, and r* = b_m mod p^n."""
    pn = rd.degree
    d, g1, bm, um = rd.d_derivative, rd.orders[0], rd.lower_breaks[-1], rd.upper_breaks[-1]
    rhs = g1 - bm + pn * um
    report = {
        "d_plus_1": d + 1,
        "g_1": g1,
        "b_m": bm,
        "u_m": _frac_json(um),
        "g1_is_degree": g1 == pn,
        "identity": d + 1 == rhs,
        "congruence": (d + 1 - (pn * um - bm)) % pn == 0,
        "hasse_arf": all(u.denominator == 1 for u in rd.upper_breaks),
        "residue_matches_b_m": (rd.criterion_residue - bm) % pn == 0,
    }
    if not (report["g1_is_degree"] and report["identity"] and report["congruence"]):
        raise IdentityViolated(f"d + 1 = {d + 1} but g_1 - b_m + p^n u_m = {rhs}")
    if not (report["hasse_arf"] and report["residue_matches_b_m"]):
        raise IdentityViolated(f"abelian tower with non-integral upper breaks {rd.upper_breaks}")
    return report


def trace_ideal_check(tower: Tower, k: int, rd: RamificationData | None = None) -> dict:
    """Check Tr(P_L^(k p^n - d)) in P_K^k and that P_L^(k p^n - d - 1) reaches P_K^(k-1)."""
    from .nbasis import euler_dual_basis

    rd = rd or analyze(tower)
    pn, d = tower.degree, rd.d_derivative
    bound = k * pn - d
    rows = []
    for J in tower.basis_exponents():
        vj = tower.basis_valuation(J)
        e = math.ceil((bound - vj) / pn)
        beta = tower.basis_element(J, e)
        tr = trace(beta)
        vk = tr.valuation()
        rows.append({"J": list(J), "t_exponent": e, "v_L": vj + e * pn, "v_K_trace": vk})
        if vk < k:
            raise TraceIdealViolated(f"trace of t^{e}*y^{J} has v_K = {vk} < {k}")
    witness = euler_dual_basis(tower, pn - 1).scale(LaurentPoly.monomial(tower.field, k - 1))
    wv, wtr = witness.valuation(), witness.trace()
    expected = LaurentPoly.monomial(tower.field, k - 1)
    if wv != bound - 1 or wtr != expected:
        raise TraceIdealViolated(f"witness has v_L = {wv}, trace {wtr}; expected {bound - 1}, {expected}")
    return {
        "k": k,
        "bound": bound,
        "monomials": rows,
        "min_v_K": min((r["v_K_trace"] for r in rows), default=INFINITY),
        "witness_v_L": wv,
        "witness_trace": str(wtr),
        "witness_v_K": wtr.valuation(),
    }


__all__ = [
    "GaloisElem",
    "RamificationData",
    "analyze",
    "different_via_breaks",
    "different_via_filtration",
    "filtration",
    "herbrand_upper",
    "proposition_check",
    "trace_ideal_check",
]
