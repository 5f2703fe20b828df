"""Fully ramified elementary abelian p-extensions L/K built from Artin-Schreier steps.

Level 0 is K = F_q((t)) (restricted to Laurent polynomials).  Level k is
L_k = L_{k-1}(y_k) with ``y_k^p = y_k + r_k``, where ``r_k`` is the reduced
right-hand side: the user's equation ``x_k^p - x_k = u_k`` (``u_k`` in K) is
rewritten as ``x_k = y_k + w_k`` with ``u_k = r_k + w_k^p - w_k`` and
``-v(r_k)`` positive and prime to p.

Internally an element of level k is a *raw* value: a LaurentPoly for k = 0,
otherwise a length-p tuple of level-(k-1) raws (coordinates in the basis
1, y_k, ..., y_k^(p-1)).  :class:`LElem` wraps a raw value for public use.
The monomials ``t^e * y_1^j_1 ... y_n^j_n`` have pairwise distinct
valuations, so the valuation of any element is the minimum over its terms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from math import comb

from .errors import (
    GaloisStabilityViolated,
    InexactDivision,
    NonIncreasingUpperBreak,
    NonRepresentableInverse,
    NotFullyRamified,
    TowerMismatch,
    ZeroElement,
    ZeroRhs,
)
from .ff import FqElem, FqField, GF
from .laurent import INFINITY, LaurentPoly, format_term


@dataclass(frozen=True)
class TowerSpec:
    field: FqField
    rhs: tuple
    name: str = ""

    @classmethod
    def from_dict(cls, data, name=""):
        from .expr import parse_laurent

        field = GF(int(data["p"]), int(data.get("f", 1)))
        rhs = tuple(parse_laurent(s, field) for s in data["rhs"])
        return cls(field, rhs, name or data.get("name", ""))

    def to_dict(self):
        d = {"p": self.field.p, "f": self.field.f, "rhs": [str(u) for u in self.rhs]}
        if self.name:
            d["name"] = self.name
        return d


@dataclass(frozen=True)
class GaloisElem:
    """sigma acting by x_k -> x_k + c_k; composition adds the vectors."""

    c: tuple
    p: int = dc_field(default=0, compare=False)

    def __add__(self, other):
        return GaloisElem(tuple((a + b) % self.p for a, b in zip(self.c, other.c)), self.p)

    def is_identity(self):
        return not any(self.c)

    def __str__(self):
        return "(" + ",".join(map(str, self.c)) + ")"


@dataclass(frozen=True)
class TowerStep:
    """One step; ``reduced_rhs`` and ``shift`` are raw values of the level below."""

    rhs: LaurentPoly
    reduced_rhs: tuple
    shift: tuple
    step_break: int
    upper_break: int
    s: int
    m: int


def _bezout(b, p):
    """(s, m) with p*s - b*m == 1 and 0 <= m < p."""
    for m in range(p):
        if (1 + b * m) % p == 0:
            return (1 + b * m) // p, m
    raise AssertionError("break divisible by p")


class Tower:
    """L/K as a chain of Artin-Schreier steps; immutable once built."""

    def __init__(self, field, steps=(), name=""):
        self.field = field
        self.p = field.p
        self.steps = tuple(steps)
        self.n = len(self.steps)
        self.degree = self.p ** self.n
        self.name = name
        self._zeros = [LaurentPoly.zero(field)]
        for _ in range(self.n):
            self._zeros.append((self._zeros[-1],) * self.p)
        self._delta_cache = {}
        self._cache = {}

    @classmethod
    def from_spec(cls, spec: TowerSpec):
        tower = cls(spec.field, name=spec.name)
        for u in spec.rhs:
            tower = tower.extend(u)
        return tower

    @classmethod
    def from_rhs(cls, p, rhs, f=1, name=""):
        return cls.from_spec(TowerSpec.from_dict({"p": p, "f": f, "rhs": rhs}, name))

    @property
    def spec(self):
        return TowerSpec(self.field, tuple(s.rhs for s in self.steps), self.name)

    def __eq__(self, other):
        return isinstance(other, Tower) and self.field == other.field and self.spec.rhs == other.spec.rhs

    def __hash__(self):
        return hash((self.field, self.spec.rhs))

    def __repr__(self):
        rhs = ", ".join(str(s.rhs) for s in self.steps)
        return f"Tower(p={self.p}, f={self.field.f}, rhs=[{rhs}])"

    @property
    def step_breaks(self):
        return [s.step_break for s in self.steps]

    @property
    def upper_step_breaks(self):
        return [s.upper_break for s in self.steps]

    # -- construction ---------------------------------------------------

    def extend(self, u):
        """Adjoin a root of ``x^p - x = u`` (u in K) on top of this tower."""
        if not isinstance(u, LaurentPoly):
            u = LaurentPoly.monomial(self.field, 0, u) if isinstance(u, (int, FqElem)) else u
        if not u:
            raise ZeroRhs("right-hand side is 0")
        k = self.n
        base = Tower(self.field)
        _, _, upper = base._reduce(0, u)
        if self.steps and upper <= max(s.upper_break for s in self.steps):
            raise NonIncreasingUpperBreak(
                f"break {upper} of {u} does not exceed previous breaks {self.upper_step_breaks}"
            )
        r, w, b = self._reduce(k, self._embed(k, 0, u))
        s, m = _bezout(b, self.p)
        step = TowerStep(u, r, w, b, upper, s, m)
        return Tower(self.field, self.steps + (step,), self.name)

    def _reduce(self, k, u):
        """Artin-Schreier reduction of a level-k raw value; returns (r, w, b)."""
        p = self.p
        if self._is_zero(k, u):
            raise ZeroRhs("right-hand side is 0")
        r, w = u, self._zeros[k]
        while True:
            if self._is_zero(k, r):
                raise NotFullyRamified("right-hand side reduces to 0")
            v, code = self._leading(k, r)
            if v >= 0:
                raise NotFullyRamified(f"reduced right-hand side has valuation {v} >= 0")
            if v % p:
                break
            mu = self._monomial(k, v // p)
            mup = self._pow(k, mu, p)
            _, lc = self._leading(k, mup)
            c = (self.field.from_code(code) / self.field.from_code(lc)).pth_root()
            term = self._scale(k, mu, c)
            w = self._add(k, w, term)
            r = self._add(k, self._sub(k, r, self._scale(k, mup, c ** p)), term)
        check = self._sub(k, self._sub(k, u, r), self._sub(k, self._pow(k, w, p), w))
        assert self._is_zero(k, check), "Artin-Schreier reduction identity failed"
        return r, w, -v

    # -- raw arithmetic -------------------------------------------------

    def _is_zero(self, k, a):
        if k == 0:
            return not a
        return all(self._is_zero(k - 1, x) for x in a)

    def _add(self, k, a, b):
        if k == 0:
            return a + b
        return tuple(self._add(k - 1, x, y) for x, y in zip(a, b))

    def _sub(self, k, a, b):
        if k == 0:
            return a - b
        return tuple(self._sub(k - 1, x, y) for x, y in zip(a, b))

    def _neg(self, k, a):
        if k == 0:
            return -a
        return tuple(self._neg(k - 1, x) for x in a)

    def _scale(self, k, a, c):
        """Multiply by a K-element (LaurentPoly) or a constant."""
        if k == 0:
            return a * c if isinstance(c, LaurentPoly) else a.scale(c)
        return tuple(self._scale(k - 1, x, c) for x in a)

    def _mul(self, k, a, b):
        if k == 0:
            return a * b
        p = self.p
        j = k - 1
        zero = self._zeros[j]
        nza = [(i, x) for i, x in enumerate(a) if not self._is_zero(j, x)]
        nzb = [(i, x) for i, x in enumerate(b) if not self._is_zero(j, x)]
        if not nza or not nzb:
            return self._zeros[k]
        c = [zero] * (2 * p - 1)
        for i, x in nza:
            for l, y in nzb:
                c[i + l] = self._add(j, c[i + l], self._mul(j, x, y))
        r = self.steps[j].reduced_rhs
        for m in range(2 * p - 2, p - 1, -1):
            if not self._is_zero(j, c[m]):
                c[m - p + 1] = self._add(j, c[m - p + 1], c[m])
                c[m - p] = self._add(j, c[m - p], self._mul(j, c[m], r))
        return tuple(c[:p])

    def _pow(self, k, a, e):
        result = self._one(k)
        base = a
        while e:
            if e & 1:
                result = self._mul(k, result, base)
            e >>= 1
            if e:
                base = self._mul(k, base, base)
        return result

    def _one(self, k):
        return self._embed(k, 0, LaurentPoly.one(self.field))

    def _embed(self, k, j, a):
        """Embed a level-j raw value into level k >= j."""
        for level in range(j + 1, k + 1):
            a = (a,) + (self._zeros[level - 1],) * (self.p - 1)
        return a

    def _val(self, k, a):
        if k == 0:
            return a.valuation()
        p, b = self.p, self.steps[k - 1].step_break
        best = INFINITY
        for i, x in enumerate(a):
            v = self._val(k - 1, x)
            if v != INFINITY:
                v = p * v - i * b
                if v < best:
                    best = v
        return best

    def _leading(self, k, a):
        """(valuation, coefficient code) of the lowest monomial term."""
        if k == 0:
            e = a.valuation()
            return e, a._c[e]
        p, b = self.p, self.steps[k - 1].step_break
        best, arg = INFINITY, None
        for i, x in enumerate(a):
            v = self._val(k - 1, x)
            if v != INFINITY and p * v - i * b < best:
                best, arg = p * v - i * b, i
        if arg is None:
            raise ZeroElement("leading term of 0")
        _, code = self._leading(k - 1, a[arg])
        return best, code

    def _monomial(self, k, v):
        """The monomial t^e y^J (coefficient 1) of level-k valuation v."""
        if k == 0:
            return LaurentPoly.monomial(self.field, v)
        p, b = self.p, self.steps[k - 1].step_break
        i = (-v * pow(b, -1, p)) % p
        coords = list(self._zeros[k - 1] for _ in range(p))
        coords[i] = self._monomial(k - 1, (v + i * b) // p)
        return tuple(coords)

    def _galois(self, k, c, a):
        if k == 0 or not any(c[:k]):
            return a
        p, j = self.p, k - 1
        dpow = self._delta_powers(tuple(c[:k]))
        sa = [self._galois(j, c, x) for x in a]
        out = []
        for col in range(p):
            acc = self._zeros[j]
            for i in range(col, p):
                if self._is_zero(j, sa[i]):
                    continue
                coef = comb(i, col) % p
                if not coef:
                    continue
                term = sa[i] if i == col else self._mul(j, dpow[i - col], sa[i])
                if coef != 1:
                    term = self._scale(j, term, coef)
                acc = self._add(j, acc, term)
            out.append(acc)
        return tuple(out)

    def _delta_powers(self, c):
        """Powers of delta_k = c_k + w_k - sigma(w_k), where sigma(y_k) = y_k + delta_k."""
        if c not in self._delta_cache:
            k = len(c)
            j = k - 1
            w = self.steps[j].shift
            delta = self._sub(j, w, self._galois(j, c, w))
            delta = self._add(j, delta, self._embed(j, 0, LaurentPoly.monomial(self.field, 0, c[-1])))
            pows = [self._one(j)]
            for _ in range(self.p - 1):
                pows.append(self._mul(j, pows[-1], delta))
            self._delta_cache[c] = pows
        return self._delta_cache[c]

    def _to_K(self, k, a):
        for level in range(k, 0, -1):
            if not all(self._is_zero(level - 1, x) for x in a[1:]):
                raise GaloisStabilityViolated("result is not fixed by the Galois group")
            a = a[0]
        return a

    def _flat(self, k, a):
        if k == 0:
            return [a]
        out = []
        for x in a:
            out.extend(self._flat(k - 1, x))
        return out

    def _from_flat(self, k, coords):
        if k == 0:
            return coords[0]
        size = self.p ** (k - 1)
        return tuple(self._from_flat(k - 1, coords[i * size:(i + 1) * size]) for i in range(self.p))

    def _to_x(self, k, a):
        """Coordinates of a level-k raw in the basis x_1^j_1 ... x_k^j_k."""
        if k == 0:
            return {(): a} if a else {}
        p, j = self.p, k - 1
        negw = self._neg(j, self.steps[j].shift)
        pw = [self._one(j)]
        for _ in range(p - 1):
            pw.append(self._mul(j, pw[-1], negw))
        out = {}
        for col in range(p):
            acc = self._zeros[j]
            for i in range(col, p):
                coef = comb(i, col) % p
                if coef and not self._is_zero(j, a[i]):
                    acc = self._add(j, acc, self._scale(j, self._mul(j, pw[i - col], a[i]), coef))
            for J, c in self._to_x(j, acc).items():
                out[J + (col,)] = c
        return out

    # -- public element helpers ------------------------------------------

    def element(self, value=0, level=None):
        """Coerce an int, FqElem, LaurentPoly or LElem into the top level."""
        level = self.n if level is None else level
        if isinstance(value, LElem):
            if value.tower is not self and value.tower != self:
                raise TowerMismatch("element belongs to a different tower")
            if value.level > level:
                raise TowerMismatch("cannot lower the level of an element")
            return LElem(self, level, self._embed(level, value.level, value.raw))
        if isinstance(value, (int, FqElem)):
            value = LaurentPoly.monomial(self.field, 0, value)
        if isinstance(value, LaurentPoly):
            if value.field != self.field:
                raise TowerMismatch("coefficient field differs from the tower's")
            return LElem(self, level, self._embed(level, 0, value))
        raise TypeError(f"cannot coerce {type(value).__name__} into the tower")

    def t(self):
        return self.element(LaurentPoly.monomial(self.field, 1))

    def y(self, k):
        """The reduced Artin-Schreier root y_k (k is 1-based), at the top level."""
        coords = [self._zeros[k - 1]] * self.p
        coords[1] = self._one(k - 1)
        return LElem(self, self.n, self._embed(self.n, k, tuple(coords)))

    def x(self, k):
        """The original root x_k = y_k + w_k."""
        return self.y(k) + self.shift(k)

    def shift(self, k):
        """w_k as an element of level k - 1."""
        return LElem(self, k - 1, self.steps[k - 1].shift)

    def reduced_rhs(self, k):
        """r_k as an element of level k - 1."""
        return LElem(self, k - 1, self.steps[k - 1].reduced_rhs)

    def from_flat(self, coords):
        if len(coords) != self.degree:
            raise ValueError(f"expected {self.degree} coordinates")
        return LElem(self, self.n, self._from_flat(self.n, list(coords)))

    def basis_index(self, J):
        return sum(j * self.p ** i for i, j in enumerate(J))

    def basis_exponents(self):
        """Multi-indices J = (j_1, ..., j_n) in flat-coordinate order."""
        return [tuple(reversed(J)) for J in itertools.product(range(self.p), repeat=self.n)]

    def basis_valuation(self, J):
        """v_L(y_1^j_1 ... y_n^j_n)."""
        return sum(-j * s.step_break * self.p ** (self.n - i - 1) for i, (j, s) in enumerate(zip(J, self.steps)))

    def basis_element(self, J, exponent=0, coeff=1):
        coords = [LaurentPoly.zero(self.field)] * self.degree
        coords[self.basis_index(J)] = LaurentPoly.monomial(self.field, exponent, coeff)
        return self.from_flat(coords)

    def monomial_of_valuation(self, v):
        """The basis monomial t^e y^J (coefficient 1) with v_L equal to v."""
        return LElem(self, self.n, self._monomial(self.n, v))

    def galois_group(self):
        return [GaloisElem(tuple(reversed(c)), self.p) for c in itertools.product(range(self.p), repeat=self.n)]

    def identity(self):
        return GaloisElem((0,) * self.n, self.p)

    def galois_elem(self, c):
        c = tuple(int(x) % self.p for x in c)
        if len(c) != self.n:
            raise TowerMismatch(f"expected {self.n} components, got {len(c)}")
        return GaloisElem(c, self.p)


class LElem:
    """An element of a level of a :class:`Tower`."""

    __slots__ = ("tower", "level", "raw")

    def __init__(self, tower, level, raw):
        self.tower = tower
        self.level = level
        self.raw = raw

    def _pair(self, other):
        tower = self.tower
        if isinstance(other, LElem):
            if other.tower is not tower and other.tower != tower:
                raise TowerMismatch("elements belong to different towers")
            level = max(self.level, other.level)
            return (level, tower._embed(level, self.level, self.raw), tower._embed(level, other.level, other.raw))
        if isinstance(other, (int, FqElem, LaurentPoly)):
            other = tower.element(other, self.level)
            return self.level, self.raw, other.raw
        return None

    def __add__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        k, a, b = pr
        return LElem(self.tower, k, self.tower._add(k, a, b))

    __radd__ = __add__

    def __sub__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        k, a, b = pr
        return LElem(self.tower, k, self.tower._sub(k, a, b))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return LElem(self.tower, self.level, self.tower._neg(self.level, self.raw))

    def __mul__(self, other):
        if isinstance(other, (int, FqElem, LaurentPoly)):
            return LElem(self.tower, self.level, self.tower._scale(self.level, self.raw, other))
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        k, a, b = pr
        return LElem(self.tower, k, self.tower._mul(k, a, b))

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            return invert(self) ** (-e)
        return LElem(self.tower, self.level, self.tower._pow(self.level, self.raw, e))

    def __truediv__(self, other):
        if isinstance(other, LaurentPoly) and other.is_monomial():
            return self * other.inverse()
        if isinstance(other, (int, FqElem)):
            return self * self.tower.field(other).inverse()
        if not isinstance(other, LElem):
            other = self.tower.element(other)
        return self * invert(other)

    def __bool__(self):
        return not self.tower._is_zero(self.level, self.raw)

    def __eq__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        k, a, b = pr
        return self.tower._is_zero(k, self.tower._sub(k, a, b))

    def __hash__(self):
        top = self.tower.element(self)
        return hash(tuple(top.flat_coords()))

    @property
    def coords(self):
        if self.level == 0:
            return self.raw
        return tuple(LElem(self.tower, self.level - 1, x) for x in self.raw)

    def flat_coords(self):
        """K-coordinates in the monomial basis y^J, in flat order."""
        return self.tower._flat(self.level, self.raw)

    def x_coords(self):
        """K-coordinates in the basis of original roots x^J."""
        return self.tower._to_x(self.level, self.raw)

    def valuation(self):
        """v_L in the normalization of this element's level."""
        return self.tower._val(self.level, self.raw)

    def leading(self):
        v, code = self.tower._leading(self.level, self.raw)
        return v, self.tower.field.from_code(code)

    def top(self):
        return self.tower.element(self)

    def galois(self, sigma):
        return galois_apply(sigma, self)

    def trace(self):
        return trace(self)

    def norm(self):
        return norm(self)

    def inverse(self):
        return invert(self)

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"LElem({self})"


def format_element(alpha):
    """Render an element as a polynomial in t and the original roots x_k."""
    parts = []
    for J, c in sorted(alpha.x_coords().items()):
        xs = [f"x{i + 1}" if j == 1 else f"x{i + 1}^{j}" for i, j in enumerate(J) if j]
        for e, coeff in c.terms.items():
            factors = []
            text = format_term(coeff, e)
            if xs:
                if text == "1":
                    text = ""
                factors = [text] if text else []
                factors += xs
                parts.append("*".join(factors))
            else:
                parts.append(text)
    return "+".join(parts) if parts else "0"


# -- operations on elements -----------------------------------------------


def reduce_artin_schreier(u):
    """Artin-Schreier normal form of ``x^p - x = u`` over u's level.

    Returns ``(r, w, b)`` with ``u = r + w^p - w`` and ``v(r) = -b``,
    ``b > 0`` prime to p.  ``u`` is an LElem, or a LaurentPoly for level 0.
    """
    if isinstance(u, LaurentPoly):
        tower = Tower(u.field)
        r, w, b = tower._reduce(0, u)
        return r, w, b
    r, w, b = u.tower._reduce(u.level, u.raw)
    return LElem(u.tower, u.level, r), LElem(u.tower, u.level, w), b


def extend(tower, u):
    return tower.extend(u)


def valuation_L(alpha):
    return alpha.tower._val(alpha.tower.n, alpha.top().raw)


def galois_apply(sigma, alpha):
    tower = alpha.tower
    c = sigma.c if isinstance(sigma, GaloisElem) else tuple(sigma)
    if len(c) != tower.n:
        raise TowerMismatch(f"Galois element {c} does not match a tower with {tower.n} steps")
    return LElem(tower, alpha.level, tower._galois(alpha.level, c, alpha.raw))


def conjugates(alpha):
    """[sigma(alpha) for sigma in G], identity first, at the top level."""
    tower = alpha.tower
    top = alpha.top()
    return [galois_apply(s, top) for s in tower.galois_group()]


def trace(alpha):
    tower = alpha.tower
    n = tower.n
    acc = tower._zeros[n]
    for conj in conjugates(alpha):
        acc = tower._add(n, acc, conj.raw)
    return tower._to_K(n, acc)


def norm(alpha):
    tower = alpha.tower
    n = tower.n
    acc = tower._one(n)
    for conj in conjugates(alpha):
        acc = tower._mul(n, acc, conj.raw)
    return tower._to_K(n, acc)


def inverse_parts(alpha):
    """(numerator, D) with alpha^-1 = numerator / D.

    D is norm(alpha) stripped of its monomial part, so it is a polynomial with
    constant term 1; D == 1 exactly when the inverse has Laurent coordinates.
    """
    tower = alpha.tower
    if not alpha:
        raise ZeroElement("inverse of 0")
    n = tower.n
    conj = conjugates(alpha)
    numer = tower._one(n)
    for c in conj[1:]:
        numer = tower._mul(n, numer, c.raw)
    nrm = tower._to_K(n, tower._mul(n, numer, conj[0].raw))
    e, lc = nrm.leading()
    unit = LaurentPoly.monomial(tower.field, e, lc)
    denom = nrm.divexact(unit)
    numer = tower._scale(n, numer, unit.inverse())
    return LElem(tower, n, numer), denom


def invert(alpha):
    """alpha^-1 = (product of nontrivial conjugates) / norm(alpha)."""
    tower = alpha.tower
    numer, denom = inverse_parts(alpha)
    if denom == 1:
        result = numer
    else:
        try:
            result = tower.from_flat([x.divexact(denom) for x in numer.flat_coords()])
        except InexactDivision:
            raise NonRepresentableInverse(
                f"inverse of {alpha} has coordinates outside F_q[t, 1/t] (norm has factor {denom})"
            ) from None
    assert result * alpha == 1, "inverse check failed"
    return result


# -- tower-level invariants -------------------------------------------------


def prime_element(tower):
    """pi_k = pi_{k-1}^s_k * y_k^m_k, a uniformizer of the top level."""
    if "pi" not in tower._cache:
        if tower.n < 1:
            raise ValueError("tower has no steps")
        pi = tower.element(LaurentPoly.monomial(tower.field, 1), 0)
        for k, step in enumerate(tower.steps, start=1):
            yk = LElem(tower, k, _y_at(tower, k))
            pi = tower.element(pi, k) ** step.s * yk ** step.m
        assert pi.valuation() == 1, "prime element does not have valuation 1"
        tower._cache["pi"] = pi
    return tower._cache["pi"]


def _y_at(tower, k):
    coords = [tower._zeros[k - 1]] * tower.p
    coords[1] = tower._one(k - 1)
    return tuple(coords)


def different_element(tower, pi=None):
    """p'(pi) as the product of (pi - sigma(pi)) over sigma != 1."""
    pi = prime_element(tower) if pi is None else pi
    key = ("dprime", tuple(pi.flat_coords()))
    if key not in tower._cache:
        conj = conjugates(pi)
        prod = tower.element(1)
        for c in conj[1:]:
            prod = prod * (pi - c)
        tower._cache[key] = prod
    return tower._cache[key]


def i_function(tower, pi=None):
    """{sigma: v_L(sigma(pi) - pi)} over the nontrivial sigma."""
    pi = prime_element(tower) if pi is None else pi
    return {s: valuation_L(galois_apply(s, pi) - pi) for s in tower.galois_group()[1:]}


def different_via_derivative(tower, pi=None):
    """d = v_L(p'(pi)), summed over conjugate differences and checked on the product."""
    d = sum(i_function(tower, pi).values())
    assert valuation_L(different_element(tower, pi)) == d, "v_L(p'(pi)) disagrees with the conjugate sum"
    return d


def min_poly(tower, pi=None):
    """Coefficients (constant term first) of the minimal polynomial of pi over K."""
    pi = prime_element(tower) if pi is None else pi
    n = tower.n
    poly = [tower.element(1)]
    for c in conjugates(pi):
        shifted = [tower.element(0)] + poly
        for i, a in enumerate(poly):
            shifted[i] = shifted[i] - c * a
        poly = shifted
    coeffs = [tower._to_K(n, a.raw) for a in poly]
    value = tower.element(0)
    for a in reversed(coeffs):
        value = value * pi + a
    assert not value, "p(pi) != 0"
    deriv = tower.element(0)
    for i in range(len(coeffs) - 1, 0, -1):
        deriv = deriv * pi + coeffs[i] * i
    assert deriv == different_element(tower, pi), "p'(pi) differs from the conjugate product"
    return coeffs
