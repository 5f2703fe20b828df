"""Small finite fields F_{p^f} with fixed built-in moduli.

Elements are coefficient vectors over F_p in the power basis of the
generator ``g`` (a root of the field's modulus).  Every element also has an
integer *code* ``sum(c_i * p**i)``; the Laurent-polynomial layer stores codes
and uses the field's lookup tables, which are built lazily from the plain
vector arithmetic below.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .errors import BadParameters, DivisionByZero, FieldMismatch

# Conway polynomials, coefficients listed from the constant term up.
MODULI = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (5, 4): (2, 4, 4, 0, 1),
}


def _poly_rem(a, m, p):
    """Remainder of a modulo the monic polynomial m over F_p."""
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return [c % p for c in a[:dm]]


def is_irreducible(modulus, p):
    """Brute-force irreducibility test by trial division by monic factors."""
    deg = len(modulus) - 1
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not any(_poly_rem(modulus, low + (1,), p)):
                return False
    return True


class FqField:
    """The field F_{p^f}; use :func:`GF` to get the shared instance."""

    def __init__(self, p, f=1):
        if (p, f) not in MODULI:
            raise BadParameters(f"no built-in modulus for p={p}, f={f}")
        self.p = p
        self.f = f
        self.q = p ** f
        self.modulus = MODULI[p, f]
        if not is_irreducible(self.modulus, p):
            raise BadParameters(f"modulus for F_{p}^{f} is reducible")
        self._tables = None

    def __repr__(self):
        return f"GF({self.p}, {self.f})"

    def __eq__(self, other):
        return isinstance(other, FqField) and (self.p, self.f) == (other.p, other.f)

    def __hash__(self):
        return hash((self.p, self.f))

    def __reduce__(self):
        return GF, (self.p, self.f)

    # -- element construction -------------------------------------------

    def __call__(self, value):
        if isinstance(value, FqElem):
            if value.field != self:
                raise FieldMismatch(f"{value!r} is not in {self!r}")
            return value
        if isinstance(value, int):
            return FqElem(self, (value % self.p,) + (0,) * (self.f - 1))
        coeffs = tuple(c % self.p for c in value)
        if len(coeffs) != self.f:
            raise BadParameters(f"expected {self.f} coefficients, got {len(coeffs)}")
        return FqElem(self, coeffs)

    def from_code(self, code):
        coeffs = []
        for _ in range(self.f):
            code, c = divmod(code, self.p)
            coeffs.append(c)
        return FqElem(self, tuple(coeffs))

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    @property
    def gen(self):
        """The generator g, a root of the modulus."""
        if self.f == 1:
            return self(-self.modulus[0])
        return self((0, 1) + (0,) * (self.f - 2))

    def elements(self):
        return [self.from_code(c) for c in range(self.q)]

    def parse(self, text):
        from .expr import parse_scalar

        return parse_scalar(text, self)

    # -- code-level kernels for the Laurent layer -----------------------

    @property
    def tables(self):
        if self._tables is None:
            self._tables = _CodeTables(self)
        return self._tables


class _CodeTables:
    """Flat lookup tables on integer codes: ``add[a*q+b]``, ``mul[a*q+b]``."""

    def __init__(self, field):
        q = field.q
        elems = field.elements()
        self.q = q
        self.add = [(x + y).code for x in elems for y in elems]
        self.mul = [(x * y).code for x in elems for y in elems]
        self.neg = [(-x).code for x in elems]
        self.inv = [0] + [x.inverse().code for x in elems[1:]]
        self.proot = [x.pth_root().code for x in elems]
        self.frob = [(x ** field.p).code for x in elems]


class FqElem:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    @property
    def code(self):
        c = 0
        for a in reversed(self.coeffs):
            c = c * self.field.p + a
        return c

    def _coerce(self, other):
        if isinstance(other, FqElem):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other
        if isinstance(other, int):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.field.p
        return FqElem(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FqElem(self.field, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p, f = self.field.p, self.field.f
        prod = [0] * (2 * f - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        if f == 1:
            return FqElem(self.field, (prod[0] % p,))
        return FqElem(self.field, tuple(_poly_rem(prod, self.field.modulus, p)))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.field.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self):
        if not self:
            raise DivisionByZero("inverse of 0 in " + repr(self.field))
        return self ** (self.field.q - 2)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.field(other) * self.inverse()

    def pth_root(self):
        """The unique r with r**p == self (Frobenius is bijective)."""
        return self ** (self.field.p ** (self.field.f - 1))

    def frobenius(self):
        return self ** self.field.p

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field(other)
        if not isinstance(other, FqElem):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.p, self.field.f, self.coeffs))

    def __str__(self):
        return format_coeff(self.coeffs)

    def __repr__(self):
        return f"FqElem({self.field!r}, {self})"


def format_coeff(coeffs):
    """Render a coefficient vector as a polynomial in ``g``, e.g. ``2*g^2+1``."""
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            mono = "g" if i == 1 else f"g^{i}"
            parts.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(parts) if parts else "0"


@lru_cache(maxsize=None)
def GF(p, f=1):
    """Shared field instance for F_{p^f}."""
    return FqField(p, f)
