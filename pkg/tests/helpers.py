"""Shared random generators for tests."""

import math

from ramac.laurent import LaurentPoly


def random_element(tower, rng, span=3, density=0.7, lo=-2):
    coords = []
    for _ in range(tower.degree):
        terms = {e: tower.field.from_code(rng.randrange(tower.field.q))
                 for e in range(lo, lo + span) if rng.random() < density}
        coords.append(LaurentPoly(tower.field, terms))
    return tower.from_flat(coords)


def random_integral(tower, rng, span=2):
    """A random element with v_L >= 0."""
    coords = []
    for J in tower.basis_exponents():
        e0 = math.ceil(-tower.basis_valuation(J) / tower.degree)
        terms = {e0 + j: tower.field.from_code(rng.randrange(tower.field.q)) for j in range(span)}
        coords.append(LaurentPoly(tower.field, terms))
    return tower.from_flat(coords)
