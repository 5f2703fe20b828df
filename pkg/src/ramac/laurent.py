"""Exact Laurent polynomials over F_q: the computable part of F_q((t)).

Terms are stored as ``{exponent: code}`` with codes from :mod:`ramac.ff`,
sorted by exponent and with no zero coefficients, so equality is equality of
the term maps.  Division is only offered where it is exact: ``/`` accepts
monomial divisors, :meth:`LaurentPoly.divexact` accepts anything that
actually divides.
"""

from __future__ import annotations

import math

from .errors import FieldMismatch, InexactDivision, NonMonomialDivisor, ZeroElement
from .ff import FqElem, FqField, format_coeff

INFINITY = math.inf


class LaurentPoly:
    __slots__ = ("field", "_c", "var")

    def __init__(self, field: FqField, terms=None, var="t"):
        self.field = field
        self.var = var
        c = {}
        if terms:
            for e, v in terms.items():
                code = field(v).code
                if code:
                    c[int(e)] = code
        self._c = dict(sorted(c.items()))

    @classmethod
    def _make(cls, field, c, var="t"):
        obj = object.__new__(cls)
        obj.field = field
        obj._c = c
        obj.var = var
        return obj

    @classmethod
    def zero(cls, field, var="t"):
        return cls._make(field, {}, var)

    @classmethod
    def one(cls, field, var="t"):
        return cls._make(field, {0: 1}, var)

    @classmethod
    def monomial(cls, field, exponent, coeff=1, var="t"):
        code = field(coeff).code
        return cls._make(field, {exponent: code} if code else {}, var)

    @classmethod
    def parse(cls, text, field):
        from .expr import parse_laurent

        return parse_laurent(text, field)

    # -- inspection -----------------------------------------------------

    @property
    def terms(self):
        """Ordered ``{exponent: FqElem}`` view of the nonzero terms."""
        return {e: self.field.from_code(c) for e, c in self._c.items()}

    def coeff(self, exponent):
        return self.field.from_code(self._c.get(exponent, 0))

    def valuation(self):
        if not self._c:
            return INFINITY
        return next(iter(self._c))

    def degree(self):
        if not self._c:
            return -INFINITY
        return next(reversed(self._c))

    def leading(self):
        """``(exponent, coefficient)`` of the lowest-order term."""
        if not self._c:
            raise ZeroElement("leading term of 0")
        e, c = next(iter(self._c.items()))
        return e, self.field.from_code(c)

    def is_monomial(self):
        return len(self._c) == 1

    def is_constant(self):
        return not self._c or (len(self._c) == 1 and 0 in self._c)

    def __bool__(self):
        return bool(self._c)

    def __len__(self):
        return len(self._c)

    def __eq__(self, other):
        if isinstance(other, (int, FqElem)):
            other = LaurentPoly.monomial(self.field, 0, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.field == other.field and self._c == other._c

    def __hash__(self):
        return hash(tuple(self._c.items()))

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other
        if isinstance(other, (int, FqElem)):
            return LaurentPoly.monomial(self.field, 0, other, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._c:
            return self
        if not self._c:
            return other
        f = self.field
        c = dict(self._c)
        if f.f == 1:
            p = f.p
            for e, v in other._c.items():
                s = (c.get(e, 0) + v) % p
                if s:
                    c[e] = s
                else:
                    c.pop(e, None)
        else:
            add, q = f.tables.add, f.q
            for e, v in other._c.items():
                s = add[c.get(e, 0) * q + v]
                if s:
                    c[e] = s
                else:
                    c.pop(e, None)
        return LaurentPoly._make(f, dict(sorted(c.items())), self.var)

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        if f.f == 1:
            p = f.p
            c = {e: p - v for e, v in self._c.items()}
        else:
            neg = f.tables.neg
            c = {e: neg[v] for e, v in self._c.items()}
        return LaurentPoly._make(f, c, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        f = self.field
        if not a or not b:
            return LaurentPoly._make(f, {}, self.var)
        if len(a) < len(b):
            a, b = b, a
        acc = {}
        if f.f == 1:
            p = f.p
            for e2, c2 in b.items():
                for e1, c1 in a.items():
                    e = e1 + e2
                    acc[e] = acc.get(e, 0) + c1 * c2
            c = {e: v % p for e, v in sorted(acc.items()) if v % p}
        else:
            add, mul, q = f.tables.add, f.tables.mul, f.q
            for e2, c2 in b.items():
                for e1, c1 in a.items():
                    e = e1 + e2
                    acc[e] = add[acc.get(e, 0) * q + mul[c1 * q + c2]]
            c = {e: v for e, v in sorted(acc.items()) if v}
        return LaurentPoly._make(f, c, self.var)

    __rmul__ = __mul__

    def scale(self, coeff):
        """Multiply every coefficient by a field element."""
        code = self.field(coeff).code
        if not code:
            return LaurentPoly._make(self.field, {}, self.var)
        f = self.field
        if f.f == 1:
            c = {e: v * code % f.p for e, v in self._c.items()}
        else:
            mul, q = f.tables.mul, f.q
            c = {e: mul[v * q + code] for e, v in self._c.items()}
        return LaurentPoly._make(f, c, self.var)

    def shift(self, k):
        """Multiply by t^k."""
        return LaurentPoly._make(self.field, {e + k: v for e, v in self._c.items()}, self.var)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = LaurentPoly.one(self.field, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def inverse(self):
        if not self._c:
            raise ZeroElement("inverse of 0")
        if len(self._c) != 1:
            raise NonMonomialDivisor(f"{self} is not a unit of F_q[t, 1/t]")
        (e, v), = self._c.items()
        return LaurentPoly.monomial(self.field, -e, self.field.from_code(v).inverse(), self.var)

    def __truediv__(self, other):
        if isinstance(other, (int, FqElem)):
            return self.scale(self.field(other).inverse())
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def frobenius(self):
        """The p-th power, computed termwise: (sum a t^e)^p = sum a^p t^(pe)."""
        f = self.field
        frob = f.tables.frob
        return LaurentPoly._make(f, {f.p * e: frob[v] for e, v in self._c.items()}, self.var)

    def divexact(self, other):
        """Quotient in F_q[t, 1/t]; raises InexactDivision when there is none."""
        other = self._coerce(other)
        if not other._c:
            raise ZeroElement("division by 0")
        if not self._c:
            return self
        f = self.field
        p, q = f.p, f.q
        va, vb = self.valuation(), other.valuation()
        a = _dense(self._c, va, self.degree())
        b = _dense(other._c, vb, other.degree())
        db = len(b) - 1
        if len(a) < len(b):
            raise InexactDivision(f"{other} does not divide {self}")
        quot = [0] * (len(a) - db)
        if f.f == 1:
            lead_inv = pow(b[-1], p - 2, p)
            for i in range(len(a) - 1, db - 1, -1):
                c = a[i] % p
                if c:
                    m = c * lead_inv % p
                    quot[i - db] = m
                    for j in range(db + 1):
                        a[i - db + j] -= m * b[j]
            if any(x % p for x in a[:db]):
                raise InexactDivision(f"{other} does not divide {self}")
        else:
            tab = f.tables
            add, mul, neg = tab.add, tab.mul, tab.neg
            lead_inv = tab.inv[b[-1]]
            for i in range(len(a) - 1, db - 1, -1):
                c = a[i]
                if c:
                    m = mul[c * q + lead_inv]
                    quot[i - db] = m
                    for j in range(db + 1):
                        k = i - db + j
                        a[k] = add[a[k] * q + neg[mul[m * q + b[j]]]]
            if any(a[:db]):
                raise InexactDivision(f"{other} does not divide {self}")
        c = {va - vb + i: v for i, v in enumerate(quot) if v}
        return LaurentPoly._make(f, c, self.var)

    # -- text -----------------------------------------------------------

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e, v in self._c.items():
            coeff = self.field.from_code(v)
            parts.append(format_term(coeff, e, self.var))
        return "+".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self.field!r}, {self})"


def _dense(c, lo, hi):
    out = [0] * (hi - lo + 1)
    for e, v in c.items():
        out[e - lo] = v
    return out


def format_term(coeff, exponent, var="t"):
    """``coeff * var^exponent`` in the parser's grammar."""
    text = format_coeff(coeff.coeffs)
    if exponent == 0:
        return text
    mono = var if exponent == 1 else f"{var}^{exponent}"
    if text == "1":
        return mono
    if "+" in text:
        text = f"({text})"
    return f"{text}*{mono}"


def valuation_K(a: LaurentPoly):
    return a.valuation()


def leading(a: LaurentPoly):
    return a.leading()
