"""Dense univariate polynomials over a :class:`~eaqmds.gf.Field`.

Coefficients are stored ascending as integer field encodings.  When the field
has exp/log tables the inner loops are numpy vector operations, otherwise
plain scalar arithmetic is used.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from eaqmds.errors import DivisionByZeroPolynomial, FieldMismatch
from eaqmds.gf import Field, FieldElement


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Polynomial:
    field: Field
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def one(cls, field: Field) -> Polynomial:
        return cls(field, (1,))

    @classmethod
    def zero(cls, field: Field) -> Polynomial:
        return cls(field, ())

    @classmethod
    def monomial(cls, field: Field, k: int, c: int = 1) -> Polynomial:
        return cls(field, (0,) * k + (c,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def elements(self) -> list[FieldElement]:
        return [FieldElement(self.field, c) for c in self.coeffs]

    def __call__(self, x: int) -> int:
        return _horner(self.field, self.coeffs, x)

    def __add__(self, other: Polynomial) -> Polynomial:
        _same(self, other)
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Polynomial(f, tuple(f.add(x, y) for x, y in zip(a, b)))

    def __neg__(self) -> Polynomial:
        return Polynomial(self.field, tuple(self.field.neg(c) for c in self.coeffs))

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other: Polynomial) -> Polynomial:
        return poly_mul(self, other)

    def __divmod__(self, other: Polynomial):
        return poly_divmod(self, other)

    def __repr__(self) -> str:
        return f"Polynomial({self.field}, {list(self.coeffs)})"


def _same(a: Polynomial, b: Polynomial) -> None:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")


def _horner(field: Field, coeffs: tuple[int, ...], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = field.add(field.mul(acc, x), c)
    return acc


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    _same(a, b)
    f = a.field
    if a.is_zero() or b.is_zero():
        return Polynomial.zero(f)
    if f.has_tables:
        if len(a.coeffs) < len(b.coeffs):
            a, b = b, a
        bv = np.asarray(b.coeffs, dtype=np.int64)
        av = np.asarray(a.coeffs, dtype=np.int64)
        out = np.zeros(len(av) + len(bv) - 1, dtype=np.int64)
        for i, c in enumerate(bv.tolist()):
            if c:
                out[i : i + len(av)] = f.vadd(out[i : i + len(av)], f.vmul(c, av))
        return Polynomial(f, tuple(out.tolist()))
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                if y:
                    out[i + j] = f.add(out[i + j], f.mul(x, y))
    return Polynomial(f, tuple(out))


def poly_divmod(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Return (quotient, remainder) with a = b*quotient + remainder."""
    _same(a, b)
    if b.is_zero():
        raise DivisionByZeroPolynomial("division by the zero polynomial")
    f = a.field
    db = b.degree
    if a.degree < db:
        return Polynomial.zero(f), a
    inv_lead = f.inv(b.coeffs[-1])
    nq = a.degree - db + 1
    if f.has_tables:
        rem = np.asarray(a.coeffs, dtype=np.int64).copy()
        bv = np.asarray(b.coeffs, dtype=np.int64)
        quot = np.zeros(nq, dtype=np.int64)
        for i in range(nq - 1, -1, -1):
            top = int(rem[i + db])
            if top == 0:
                continue
            c = f.mul(top, inv_lead)
            quot[i] = c
            rem[i : i + db + 1] = f.vsub(rem[i : i + db + 1], f.vmul(c, bv))
        return Polynomial(f, tuple(quot.tolist())), Polynomial(f, tuple(rem[:db].tolist()))
    rem = list(a.coeffs)
    quot = [0] * nq
    for i in range(nq - 1, -1, -1):
        top = rem[i + db]
        if top == 0:
            continue
        c = f.mul(top, inv_lead)
        quot[i] = c
        for j, y in enumerate(b.coeffs):
            if y:
                rem[i + j] = f.sub(rem[i + j], f.mul(c, y))
    return Polynomial(f, tuple(quot)), Polynomial(f, tuple(rem[:db]))


def poly_from_roots(roots: list[FieldElement], field: Field | None = None) -> Polynomial:
    """Monic polynomial prod (x - r).  ``field`` is needed only when roots is empty."""
    if not roots:
        if field is None:
            raise ValueError("field is required for an empty root list")
        return Polynomial.one(field)
    f = roots[0].field
    if field is not None and field != f:
        raise FieldMismatch(f"{field} vs {f}")
    for r in roots:
        if r.field != f:
            raise FieldMismatch(f"{r.field} vs {f}")
    return Polynomial(f, tuple(poly_coeffs_from_roots(f, [r.value for r in roots])))


def poly_coeffs_from_roots(f: Field, roots: list[int]) -> list[int]:
    """Integer-level worker behind :func:`poly_from_roots`."""
    acc = [1]
    for r in roots:
        nr = f.neg(r)
        nxt = [0] * (len(acc) + 1)
        for i, c in enumerate(acc):
            nxt[i + 1] = f.add(nxt[i + 1], c)
            nxt[i] = f.add(nxt[i], f.mul(c, nr))
        acc = nxt
    return acc


def poly_eval(a: Polynomial, x: FieldElement) -> FieldElement:
    if x.field != a.field:
        raise FieldMismatch(f"{x.field} vs {a.field}")
    return FieldElement(a.field, a(x.value))


def poly_eval_many(a: Polynomial, xs) -> np.ndarray:
    """Evaluate at every entry of an integer array (table-backed fields only)."""
    f = a.field
    xs = np.asarray(xs, dtype=np.int64)
    acc = np.zeros_like(xs)
    for c in reversed(a.coeffs):
        acc = f.vadd(f.vmul(acc, xs), c)
    return acc
