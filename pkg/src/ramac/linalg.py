"""Exact determinants and ranks for matrices over F_q[t, 1/t]."""

from __future__ import annotations

import numpy as np

from .errors import InexactDivision
from .laurent import LaurentPoly


def clear_rows(matrix):
    """Multiply each row by t^-(min exponent) so every entry is a polynomial.

    Returns the new rows and the total shift, so that
    ``det(matrix) = det(cleared) * t^shift``.
    """
    rows, shift = [], 0
    for row in matrix:
        vals = [a.valuation() for a in row if a]
        lo = min(vals) if vals else 0
        rows.append([a.shift(-lo) for a in row])
        shift += lo
    return rows, shift


def bareiss_det(matrix):
    """Determinant by fraction-free elimination; every division is exact."""
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    field = matrix[0][0].field
    rows, shift = clear_rows(matrix)
    if field.f == 1:
        det = _bareiss_dense(rows, field.p)
        return LaurentPoly(field, {e: int(c) for e, c in enumerate(det) if c}).shift(shift)
    return _bareiss_laurent(rows, field).shift(shift)


def _bareiss_laurent(rows, field):
    """Bareiss on polynomial entries held as LaurentPoly; works over any F_q."""
    n = len(rows)
    a = [row[:] for row in rows]
    sign = 1
    prev = LaurentPoly.one(field)
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly.zero(field)
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                num = row_i[j] * pivot
                if aik and row_k[j]:
                    num = num - aik * row_k[j]
                row_i[j] = num.divexact(prev) if num else num
            row_i[k] = LaurentPoly.zero(field)
        prev = pivot
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


def naive_rank(matrix):
    """Rank by Gaussian elimination over F_q(t), entries kept as (num, den) pairs.

    Fractions are never reduced; this is an independent cross-check for small
    matrices, not a production routine.
    """
    rows = [[(a, LaurentPoly.one(a.field)) for a in row] for row in matrix]
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if rows[r][col][0]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pn, pd = rows[rank][col]
        for r in range(rank + 1, n_rows):
            fn, fd = rows[r][col]
            if not fn:
                continue
            # row_r <- row_r - (f / piv) * row_rank, with f/piv = (fn*pd)/(fd*pn)
            mn, md = fn * pd, fd * pn
            new = []
            for (an, ad), (bn, bd) in zip(rows[r], rows[rank]):
                if not bn:
                    new.append((an, ad))
                    continue
                num = an * md * bd - mn * bn * ad
                new.append((num, ad * md * bd))
            rows[r] = new
        rank += 1
    return rank


# -- dense kernel for prime fields: polynomials as int64 arrays, constant term first.
# Same elimination as above; it exists because dict-based products dominate
# the run time on the degree-9 towers.


def _to_dense(a):
    if not a:
        return np.zeros(1, dtype=np.int64)
    out = np.zeros(a.degree() + 1, dtype=np.int64)
    for e, c in a._c.items():
        out[e] = c
    return out


def _trim(a):
    nz = np.flatnonzero(a)
    return a[: nz[-1] + 1] if len(nz) else a[:1] * 0


def _divexact_dense(a, b, p):
    a = a.copy()
    db = len(b) - 1
    if len(a) <= db:
        if a.any():
            raise InexactDivision("dense division leaves a remainder")
        return np.zeros(1, dtype=np.int64)
    inv = pow(int(b[-1]), p - 2, p)
    quot = np.zeros(len(a) - db, dtype=np.int64)
    for i in range(len(a) - 1, db - 1, -1):
        c = int(a[i]) % p
        if c:
            m = c * inv % p
            quot[i - db] = m
            a[i - db:i + 1] -= m * b
    if (a[:db] % p).any():
        raise InexactDivision("dense division leaves a remainder")
    return quot


def _bareiss_dense(rows, p):
    n = len(rows)
    a = [[_to_dense(x) for x in row] for row in rows]
    zero = np.zeros(1, dtype=np.int64)
    sign = 1
    prev = np.ones(1, dtype=np.int64)
    for k in range(n - 1):
        if not a[k][k].any():
            for i in range(k + 1, n):
                if a[i][k].any():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                num = np.convolve(row_i[j], pivot)
                if aik.any() and row_k[j].any():
                    sub = np.convolve(aik, row_k[j])
                    if len(sub) > len(num):
                        num, sub = np.concatenate([num, np.zeros(len(sub) - len(num), np.int64)]), sub
                    num[: len(sub)] -= sub
                num = _trim(num % p)
                row_i[j] = _divexact_dense(num, prev, p) if num.any() else zero
            row_i[k] = zero
        prev = pivot
    det = a[n - 1][n - 1] % p
    return det if sign == 1 else (-det) % p
