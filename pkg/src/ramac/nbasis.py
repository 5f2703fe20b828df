"""Normal basis generators: the valuation criterion, its sharpness, and necessity.

An element rho generates a normal basis exactly when its conjugates are
K-linearly independent, which is tested with an exact determinant.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .errors import (
    BadParameters,
    CriterionViolated,
    EulerIdentityViolated,
    InexactDivision,
    InvalidClass,
    SamplerStarved,
)
from .ff import GF, MODULI
from .laurent import LaurentPoly
from .linalg import bareiss_det, naive_rank
from .ramify import analyze
from .tower import LElem, Tower, conjugates, different_element, inverse_parts, prime_element, trace, valuation_L

WITNESS_FAMILY = "t^m * pi^i / p'(pi) with 0 <= i <= p^n - 2"


class ScaledElem:
    """numerator / denominator with the numerator in the tower and the
    denominator a polynomial in K with constant term 1.

    Needed because 1/p'(pi) need not have Laurent-polynomial coordinates.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: LElem, denominator: LaurentPoly | None = None):
        self.numerator = numerator
        self.denominator = denominator if denominator is not None else LaurentPoly.one(numerator.tower.field)

    @property
    def tower(self):
        return self.numerator.tower

    def valuation(self):
        return valuation_L(self.numerator) - self.tower.degree * self.denominator.valuation()

    def trace(self):
        return trace(self.numerator).divexact(self.denominator)

    def scale(self, c):
        return ScaledElem(self.numerator * c, self.denominator)

    def is_integral(self):
        return self.denominator == 1

    def __bool__(self):
        return bool(self.numerator)

    def __str__(self):
        if self.is_integral():
            return str(self.numerator)
        return f"({self.numerator})/({self.denominator})"

    def to_dict(self):
        return {"numerator": str(self.numerator), "denominator": str(self.denominator)}


def _numerator(rho):
    return rho.numerator if isinstance(rho, ScaledElem) else rho


def _rd(tower):
    if "rd" not in tower._cache:
        tower._cache["rd"] = analyze(tower)
    return tower._cache["rd"]


def _dprime_inverse(tower):
    if "dprime_inv" not in tower._cache:
        tower._cache["dprime_inv"] = inverse_parts(different_element(tower))
    return tower._cache["dprime_inv"]


def euler_dual_basis(tower: Tower, i: int) -> ScaledElem:
    """pi^i / p'(pi)."""
    if not 0 <= i < tower.degree:
        raise ValueError(f"index {i} outside 0..{tower.degree - 1}")
    numer, denom = _dprime_inverse(tower)
    beta = ScaledElem(prime_element(tower) ** i * numer, denom)
    d = _rd(tower).d
    assert beta.valuation() == i - d, "Euler basis element has the wrong valuation"
    return beta


def verify_euler_traces(tower: Tower) -> dict:
    """Tr(pi^i / p'(pi)) is 0 for i < p^n - 1 and 1 for i = p^n - 1."""
    one = LaurentPoly.one(tower.field)
    rows = []
    for i in range(tower.degree):
        beta = euler_dual_basis(tower, i)
        try:
            tr = beta.trace()
        except InexactDivision:
            raise EulerIdentityViolated(f"trace of basis element {i} is not in F_q[t, 1/t]") from None
        expected = one if i == tower.degree - 1 else LaurentPoly.zero(tower.field)
        if tr != expected:
            raise EulerIdentityViolated(f"Tr(pi^{i}/p'(pi)) = {tr}, expected {expected}")
        rows.append({"i": i, "v_L": beta.valuation(), "trace": str(tr)})
    return {"traces": rows, "integral": euler_dual_basis(tower, 0).is_integral()}


def conjugate_matrix(tower: Tower, rho) -> list:
    """Rows sigma(rho) in the monomial basis; a ScaledElem contributes its numerator."""
    return [c.flat_coords() for c in conjugates(_numerator(rho))]


def is_normal_generator(tower: Tower, rho) -> bool:
    if not rho:
        return False
    return bool(bareiss_det(conjugate_matrix(tower, rho)))


def criterion_residue(tower: Tower) -> int:
    return _rd(tower).criterion_residue


def sample_element(tower: Tower, v: int, rng: random.Random, budget: int = 1, max_tries: int = 200) -> LElem:
    """Random element with v_L exactly v.

    Each basis monomial y^J gets a random coefficient supported on the
    ``budget`` lowest t-exponents allowed by v_L >= v; draws whose leading
    coefficient vanishes are rejected.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    pn, q = tower.degree, tower.field.q
    field_ = tower.field
    starts = [math.ceil((v - tower.basis_valuation(J)) / pn) for J in tower.basis_exponents()]
    for _ in range(max_tries):
        coords = []
        for e0 in starts:
            terms = {e0 + j: field_.from_code(rng.randrange(q)) for j in range(budget)}
            coords.append(LaurentPoly(field_, terms))
        rho = tower.from_flat(coords)
        if valuation_L(rho) == v:
            return rho
    raise SamplerStarved(f"no element of valuation {v} after {max_tries} draws")


def sharpness_witness(tower: Tower, target_class: int, window_start: int | None = None) -> ScaledElem:
    """A trace-zero non-generator t^m pi^i / p'(pi) with v_L in the given class."""
    return _witness(tower, target_class, window_start)[0]


def _witness(tower, target_class, window_start=None):
    pn = tower.degree
    d = _rd(tower).d
    rstar = criterion_residue(tower)
    if (target_class - rstar) % pn == 0:
        raise InvalidClass(f"class {target_class} is the criterion class {rstar}")
    i = (target_class + d) % pn
    beta = euler_dual_basis(tower, i)
    m = 0 if window_start is None else math.ceil((window_start - beta.valuation()) / pn)
    rho = beta.scale(LaurentPoly.monomial(tower.field, m))
    assert (rho.valuation() - target_class) % pn == 0
    assert not rho.trace(), "sharpness witness has nonzero trace"
    generator = is_normal_generator(tower, rho)
    assert not generator, "sharpness witness generates a normal basis"
    return rho, generator


@dataclass
class CriterionReport:
    tower: str
    degree: int
    d: int
    criterion_residue: int
    seed: object
    trials: int
    generators_found: int = 0
    valuations: list = field(default_factory=list)
    witnesses: dict = field(default_factory=dict)
    witness_family: str = WITNESS_FAMILY

    @property
    def ok(self):
        return self.generators_found == self.trials and all(
            w["trace"] == "0" and not w["generator"] for w in self.witnesses.values()
        )

    def to_dict(self):
        return {
            "tower": self.tower,
            "degree": self.degree,
            "d": self.d,
            "criterion_residue": self.criterion_residue,
            "seed": self.seed,
            "trials": self.trials,
            "generators_found": self.generators_found,
            "valuations": sorted(set(self.valuations)),
            "witnesses": {str(c): w for c, w in sorted(self.witnesses.items())},
            "witness_family": self.witness_family,
            "ok": self.ok,
        }


def trial_plan(tower: Tower, trials: int):
    """(valuation, budget) per trial: four valuations in the class, budgets 1..3."""
    pn, r = tower.degree, criterion_residue(tower)
    vals = [r, r + pn, r - pn, r + 2 * pn]
    return [(vals[i % 4], 1 + (i // 4) % 3) for i in range(trials)]


def verify_criterion(tower: Tower, trials: int = 50, seed=0) -> CriterionReport:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rd = _rd(tower)
    report = CriterionReport(tower.name or repr(tower), tower.degree, rd.d, rd.criterion_residue, seed, trials)
    for idx, (v, budget) in enumerate(trial_plan(tower, trials)):
        rng = random.Random(f"{seed}:{idx}")
        rho = sample_element(tower, v, rng, budget)
        if not trace(rho):
            raise CriterionViolated(f"sample {rho} in the criterion class has trace 0")
        if not is_normal_generator(tower, rho):
            raise CriterionViolated(f"sample {rho} with v_L = {v} is not a normal basis generator")
        report.generators_found += 1
        report.valuations.append(v)
    for c in range(tower.degree):
        if c == rd.criterion_residue:
            continue
        rho, generator = _witness(tower, c)
        report.witnesses[c] = {
            "element": rho.to_dict(),
            "v_L": rho.valuation(),
            "trace": str(rho.trace()),
            "generator": generator,
        }
    return report


# -- necessity outside the fully ramified p-extension case ---------------------


@dataclass
class Demonstration:
    kind: str
    params: dict
    i: int
    element: str
    valuation: int
    conjugates: list
    degree: int
    span_dimension: int
    determinant: str

    @property
    def is_generator(self):
        return self.span_dimension == self.degree

    def to_dict(self):
        d = dict(self.__dict__)
        d["is_generator"] = self.is_generator
        return d


def _prime_power(q):
    for p in (2, 3, 5):
        a, m = 0, q
        while m % p == 0:
            m //= p
            a += 1
        if m == 1 and a:
            return p, a
    raise BadParameters(f"q = {q} is not a supported prime power")


def _primitive_root_of_unity(field_, e):
    for z in field_.elements()[1:]:
        if z ** e == 1 and all(z ** k != 1 for k in range(1, e)):
            return z
    raise BadParameters(f"no primitive {e}-th root of unity in F_{field_.q}")


def tame_counterexample(q: int, e: int, i: int) -> Demonstration:
    """L = K(s), s^e = t; rho = s^i spans a one-dimensional K[G]-module."""
    p, a = _prime_power(q)
    if e <= 1 or (q - 1) % e or e % p == 0:
        raise BadParameters(f"need e > 1, e | q - 1, p does not divide e (q={q}, e={e})")
    F = GF(p, a)
    zeta = _primitive_root_of_unity(F, e)
    rho = LaurentPoly.monomial(F, i, 1, var="s")

    def act(j, x):
        return LaurentPoly(F, {k: c * zeta ** (j * k) for k, c in x.terms.items()}, var="s")

    def coords(x):
        row = [LaurentPoly.zero(F) for _ in range(e)]
        for k, c in x.terms.items():
            row[k % e] = row[k % e] + LaurentPoly.monomial(F, k // e, c)
        return row

    conj = [act(j, rho) for j in range(e)]
    matrix = [coords(x) for x in conj]
    return Demonstration(
        "tame", {"q": q, "e": e, "zeta": str(zeta)}, i, str(rho), rho.valuation(),
        [str(x) for x in conj], e, naive_rank(matrix), str(bareiss_det(matrix)),
    )


def unramified_counterexample(q: int, f: int, i: int) -> Demonstration:
    """L = F_{q^f}((t)); rho = t^i is fixed by Frobenius, so its conjugates coincide."""
    if f <= 1:
        raise BadParameters("need f > 1")
    p, a = _prime_power(q)
    if a != 1:
        raise BadParameters("the unramified demonstration needs q prime")
    if (p, f) not in MODULI:
        raise BadParameters(f"no built-in field F_{p}^{f}")
    E = GF(p, f)
    Fp = GF(p)
    rho = LaurentPoly.monomial(E, i)

    def frob(j, x):
        return LaurentPoly(E, {k: c ** (q ** j) for k, c in x.terms.items()})

    def coords(x):
        # K-coordinates in the basis 1, g, ..., g^(f-1) of F_{q^f} over F_q
        row = [LaurentPoly.zero(Fp) for _ in range(f)]
        for k, c in x.terms.items():
            for l, cl in enumerate(c.coeffs):
                if cl:
                    row[l] = row[l] + LaurentPoly.monomial(Fp, k, cl)
        return row

    conj = [frob(j, rho) for j in range(f)]
    matrix = [coords(x) for x in conj]
    return Demonstration(
        "unramified", {"q": q, "f": f}, i, str(rho), rho.valuation(),
        [str(x) for x in conj], f, naive_rank(matrix), str(bareiss_det(matrix)),
    )
