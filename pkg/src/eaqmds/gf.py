"""Finite field arithmetic for GF(p^t) and towers of such fields.

Elements are stored as plain integers: the coefficient vector
``(c_0, ..., c_{t-1})`` of the polynomial representative is read as the
base-p number ``sum(c_i * p**i)``.  Scalar routines work on those integers;
the ``v*`` routines work elementwise on numpy integer arrays and are what
the matrix code uses.

Fields of order up to ``TABLE_LIMIT`` lazily build exp/log tables over the
canonical primitive element.  Larger fields fall back to direct polynomial
multiplication, which is slower but gives identical results.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Literal

import numpy as np
import sympy

from eaqmds.errors import (
    CoefficientOutsideSubfield,
    DivisionByZero,
    FieldMismatch,
    MagnitudeExceeded,
    NoEmbedding,
    NonPrimeCharacteristic,
    NotAQuadraticExtension,
    OrderDoesNotDivide,
)

MAX_ORDER = 2**63
TABLE_LIMIT = 2**20


# ---------------------------------------------------------------------------
# polynomials over the prime field, used only to pick and test moduli


def _gfp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _gfp_mod(a: list[int], f: list[int], p: int) -> list[int]:
    a = _gfp_trim([x % p for x in a])
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fi) % p
        _gfp_trim(a)
    return a


def _gfp_mulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _gfp_mod(out, f, p)


def _gfp_powmod(a: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = _gfp_mod(list(a), f, p)
    while e:
        if e & 1:
            result = _gfp_mulmod(result, base, f, p)
        base = _gfp_mulmod(base, base, f, p)
        e >>= 1
    return result


def _gfp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a = _gfp_trim([x % p for x in a])
    b = _gfp_trim([x % p for x in b])
    while b:
        a, b = b, _gfp_mod(a, b, p)
    return a


def is_irreducible(p: int, coeffs: tuple[int, ...] | list[int]) -> bool:
    """Rabin's test for a monic polynomial over GF(p), coefficients ascending."""
    f = _gfp_trim([c % p for c in coeffs])
    t = len(f) - 1
    if t < 1 or f[-1] != 1:
        return False
    if t == 1:
        return True
    x = [0, 1]

    def frob(k: int) -> list[int]:
        # x^(p^k) mod f by k successive p-th powers
        r = x
        for _ in range(k):
            r = _gfp_powmod(r, p, f, p)
        return r

    xt = frob(t)
    if _gfp_mod([a - b for a, b in _zip_pad(xt, x)], f, p):
        return False
    for ell in sympy.primefactors(t):
        h = [a - b for a, b in _zip_pad(frob(t // ell), x)]
        g = _gfp_gcd(f, h, p)
        if len(g) > 1:
            return False
    return True


def _zip_pad(a: list[int], b: list[int]):
    n = max(len(a), len(b))
    return zip(a + [0] * (n - len(a)), b + [0] * (n - len(b)))


def smallest_irreducible(p: int, t: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree t, lower coefficients read as a base-p number."""
    for v in range(p**t):
        low = [(v // p**i) % p for i in range(t)]
        if t > 1 and low[0] == 0:
            continue
        cand = low + [1]
        if is_irreducible(p, cand):
            return tuple(cand)
    raise AssertionError(f"no irreducible polynomial of degree {t} over GF({p})")  # pragma: no cover


# ---------------------------------------------------------------------------
# the field itself


class Field:
    """GF(p^t) as GF(p)[x]/(modulus); immutable once built.

    Use :func:`make_field` rather than constructing this directly so that equal
    fields are shared and their tables are built once per process.
    """

    def __init__(self, p: int, t: int, modulus: tuple[int, ...]):
        self.characteristic = p
        self.degree = t
        self.modulus = tuple(modulus)
        self.order = p**t
        self._pows = tuple(p**i for i in range(t))
        self._modint = sum(c * p**i for i, c in enumerate(self.modulus))

    # short aliases used throughout the package
    @property
    def p(self) -> int:
        return self.characteristic

    @property
    def t(self) -> int:
        return self.degree

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.t})" if self.t > 1 else f"GF({self.p})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Field)
            and self.p == other.p
            and self.t == other.t
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.t, self.modulus))

    # -- representation -----------------------------------------------------

    def digits(self, a: int) -> tuple[int, ...]:
        return tuple((a // pw) % self.p for pw in self._pows)

    def from_digits(self, coeffs) -> int:
        if len(coeffs) > self.t:
            raise ValueError(f"too many coefficients for {self}")
        return sum((int(c) % self.p) * pw for c, pw in zip(coeffs, self._pows))

    def element(self, value: int) -> FieldElement:
        if not 0 <= value < self.order:
            raise ValueError(f"{value} is not an element encoding of {self}")
        return FieldElement(self, int(value))

    @property
    def has_tables(self) -> bool:
        return self.order <= TABLE_LIMIT

    # -- scalar arithmetic --------------------------------------------------

    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        if self.t == 1:
            return (a + b) % p
        return sum((((a // pw) + (b // pw)) % p) * pw for pw in self._pows)

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2:
            return a
        if self.t == 1:
            return (-a) % p
        return sum(((-(a // pw)) % p) * pw for pw in self._pows)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.has_tables:
            exp, log = self._table_lists
            return exp[log[a] + log[b]]
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"zero has no inverse in {self}")
        if self.has_tables:
            exp, log = self._table_lists
            return exp[(self.order - 1 - log[a]) % (self.order - 1)]
        return self._pow_raw(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if e == 0:
            return 1
        if a == 0:
            return 0
        if self.has_tables:
            exp, log = self._table_lists
            return exp[(log[a] * e) % (self.order - 1)]
        return self._pow_raw(a, e)

    def _mul_raw(self, a: int, b: int) -> int:
        p, t = self.p, self.t
        if t == 1:
            return a * b % p
        if p == 2:
            r = 0
            while b:
                if b & 1:
                    r ^= a
                a <<= 1
                b >>= 1
            m = self._modint
            while r.bit_length() > t:
                r ^= m << (r.bit_length() - 1 - t)
            return r
        da, db = self.digits(a), self.digits(b)
        out = [0] * (2 * t - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    out[i + j] += x * y
        mod = self.modulus
        for top in range(2 * t - 2, t - 1, -1):
            c = out[top] % p
            if c:
                for i in range(t + 1):
                    out[top - t + i] -= c * mod[i]
        return sum((out[i] % p) * self._pows[i] for i in range(t))

    def _pow_raw(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._mul_raw(result, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return result

    @functools.cached_property
    def order_factors(self) -> tuple[int, ...]:
        """Distinct primes dividing order - 1."""
        return tuple(sorted(sympy.factorint(self.order - 1)))

    @functools.cached_property
    def primitive_element(self) -> int:
        """Smallest element (by integer encoding) that generates the multiplicative group."""
        if self.order == 2:
            return 1
        n1 = self.order - 1
        for g in range(2, self.order):
            if all(self._pow_raw(g, n1 // ell) != 1 for ell in self.order_factors):
                return g
        raise AssertionError("no primitive element")  # pragma: no cover

    @functools.cached_property
    def _tables(self) -> tuple[np.ndarray, np.ndarray]:
        if not self.has_tables:
            raise MagnitudeExceeded(f"{self} is too large for exp/log tables")
        n1 = self.order - 1
        g = self.primitive_element
        exp = np.zeros(2 * n1 + 1, dtype=np.int64)
        log = np.zeros(self.order, dtype=np.int64)
        if self.p == 2 or self.t == 1:
            x = 1
            exp_list = [0] * n1
            for i in range(n1):
                exp_list[i] = x
                x = self._mul_raw(x, g)
        else:
            exp_list = self._powers_by_doubling(g, n1)
        exp[:n1] = exp_list
        exp[n1 : 2 * n1] = exp_list
        exp[2 * n1] = 1
        log[exp[:n1]] = np.arange(n1)
        return exp, log

    def _powers_by_doubling(self, g: int, count: int) -> np.ndarray:
        # digit arithmetic is slow per element for odd p, so extend the list
        # g^0..g^(L-1) to length 2L with one vectorised multiply by g^L
        p, t = self.p, self.t
        mod_low = np.asarray(self.modulus[:t], dtype=np.int64)
        cur = np.zeros((1, t), dtype=np.int64)
        cur[0, 0] = 1
        while len(cur) < count:
            size = len(cur)
            take = min(size, count - size)
            b = np.asarray(self.digits(self._pow_raw(g, size)), dtype=np.int64)
            parts = []
            for lo in range(0, take, 1 << 16):
                A = cur[lo : min(take, lo + (1 << 16))]
                conv = np.zeros((len(A), 2 * t - 1), dtype=np.int64)
                for j in np.flatnonzero(b):
                    conv[:, j : j + t] += A * b[j]
                conv %= p
                for top in range(2 * t - 2, t - 1, -1):
                    c = conv[:, top]
                    conv[:, top - t : top] = (conv[:, top - t : top] - c[:, None] * mod_low[None, :]) % p
                parts.append(conv[:, :t])
            cur = np.vstack([cur, *parts])
        return cur @ np.asarray(self._pows, dtype=np.int64)

    @functools.cached_property
    def _table_lists(self) -> tuple[list[int], list[int]]:
        exp, log = self._tables
        return exp.tolist(), log.tolist()

    # -- vectorised arithmetic on numpy arrays --------------------------------

    def vadd(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        p = self.p
        if p == 2:
            return a ^ b
        if self.t == 1:
            return (a + b) % p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for pw in self._pows:
            out += (((a // pw) + (b // pw)) % p) * pw
        return out

    def vneg(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        p = self.p
        if p == 2:
            return a.copy()
        if self.t == 1:
            return (-a) % p
        out = np.zeros_like(a)
        for pw in self._pows:
            out += ((-(a // pw)) % p) * pw
        return out

    def vsub(self, a, b) -> np.ndarray:
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        exp, log = self._tables
        return np.where((a == 0) | (b == 0), 0, exp[log[a] + log[b]])

    def vinv(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero(f"zero has no inverse in {self}")
        exp, log = self._tables
        return exp[(self.order - 1) - log[a]]

    def vdiv(self, a, b) -> np.ndarray:
        return self.vmul(a, self.vinv(b))

    def vpow(self, a, e: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones_like(a)
        exp, log = self._tables
        return np.where(a == 0, 0, exp[(log[a] * e) % (self.order - 1)])

    def vsum(self, a, axis: int = 0) -> np.ndarray:
        """Field sum along an axis."""
        a = np.asarray(a, dtype=np.int64)
        p = self.p
        if p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        if self.t == 1:
            return a.sum(axis=axis) % p
        out = 0
        for pw in self._pows:
            out = out + (((a // pw) % p).sum(axis=axis) % p) * pw
        return np.asarray(out, dtype=np.int64)

    def vdigits(self, a) -> np.ndarray:
        """Digit decomposition, new trailing axis of length t."""
        a = np.asarray(a, dtype=np.int64)
        return np.stack([(a // pw) % self.p for pw in self._pows], axis=-1)


@dataclass(frozen=True)
class FieldElement:
    """An element of a specific field; thin wrapper over the integer encoding."""

    field: Field
    value: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.digits(self.value)

    def _check(self, other: FieldElement) -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.field, self.field.add(self.value, other.value))

    def __sub__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.field, self.field.sub(self.value, other.value))

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.field, self.field.mul(self.value, other.value))

    def __truediv__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.field, self.field.div(self.value, other.value))

    def __neg__(self) -> FieldElement:
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int) -> FieldElement:
        return FieldElement(self.field, self.field.pow(self.value, e))

    def is_zero(self) -> bool:
        return self.value == 0

    def __repr__(self) -> str:
        return f"{self.field}{list(self.coeffs)}"


@functools.lru_cache(maxsize=None)
def make_field(p: int, t: int) -> Field:
    """Build GF(p^t) with the smallest monic irreducible modulus of degree t."""
    if not sympy.isprime(p):
        raise NonPrimeCharacteristic(f"{p} is not prime")
    if t < 1:
        raise ValueError("extension degree must be >= 1")
    if p**t > MAX_ORDER:
        raise MagnitudeExceeded(f"GF({p}^{t}) exceeds the 2^63 order cap")
    return Field(p, t, smallest_irreducible(p, t))


def field_arith(
    a: FieldElement, b: FieldElement, kind: Literal["add", "sub", "mul", "div"]
) -> FieldElement:
    ops = {
        "add": FieldElement.__add__,
        "sub": FieldElement.__sub__,
        "mul": FieldElement.__mul__,
        "div": FieldElement.__truediv__,
    }
    if kind not in ops:
        raise ValueError(f"unknown operation {kind!r}")
    return ops[kind](a, b)


def field_pow(a: FieldElement, e: int) -> FieldElement:
    if e < 0:
        raise ValueError("exponent must be non-negative")
    return a**e


def conjugate(a: FieldElement, q: int) -> FieldElement:
    """The involution x -> x^q of GF(q^2)."""
    if a.field.order != q * q:
        raise NotAQuadraticExtension(f"{a.field} is not GF({q}^2)")
    return a**q


def element_of_order(field: Field, t: int) -> FieldElement:
    """Deterministic element of multiplicative order exactly t."""
    if t < 1 or (field.order - 1) % t:
        raise OrderDoesNotDivide(f"{t} does not divide |{field}*| = {field.order - 1}")
    xi = field.pow(field.primitive_element, (field.order - 1) // t)
    if field.pow(xi, t) != 1 or any(field.pow(xi, t // ell) == 1 for ell in sympy.primefactors(t)):
        raise AssertionError("element order check failed")  # pragma: no cover
    return FieldElement(field, xi)


def multiplicative_order(field: Field, a: int) -> int:
    if a == 0:
        raise DivisionByZero("zero has no multiplicative order")
    o = field.order - 1
    for ell, e in sympy.factorint(o).items():
        for _ in range(e):
            if field.pow(a, o // ell) == 1:
                o //= ell
            else:
                break
    return o


# ---------------------------------------------------------------------------
# subfield embeddings


def _gfp_solve_basis(cols: list[tuple[int, ...]], p: int) -> tuple[list[int], list[list[int]]]:
    """For a full column rank t_sup x t_sub matrix over GF(p) return (pivot rows, inverse of that square block)."""
    t_sub = len(cols)
    t_sup = len(cols[0])
    rows = [[cols[j][i] % p for j in range(t_sub)] for i in range(t_sup)]
    chosen: list[int] = []
    work: list[list[int]] = []
    for i, row in enumerate(rows):
        cand = [row + [1 if k == len(chosen) else 0 for k in range(t_sub)]]
        # keep row i if it is independent of those already chosen
        test = [r[:] for r in work] + [row[:]]
        if _gfp_rank(test, p) > len(work):
            work.append(row[:])
            chosen.append(i)
        if len(chosen) == t_sub:
            break
        del cand
    if len(chosen) < t_sub:
        raise AssertionError("embedding basis is rank deficient")  # pragma: no cover
    block = [rows[i] for i in chosen]
    return chosen, _gfp_inverse(block, p)


def _gfp_rank(m: list[list[int]], p: int) -> int:
    m = [r[:] for r in m]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] % p), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], -1, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][c]:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def _gfp_inverse(m: list[list[int]], p: int) -> list[list[int]]:
    n = len(m)
    aug = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(m)]
    for c in range(n):
        piv = next(i for i in range(c, n) if aug[i][c] % p)
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = pow(aug[c][c], -1, p)
        aug[c] = [x * inv % p for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [(x - f * y) % p for x, y in zip(aug[i], aug[c])]
    return [r[n:] for r in aug]


def _eval_gfp_poly(field: Field, coeffs: tuple[int, ...], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = field.add(field.mul(acc, x), c % field.p)
    return acc


class TowerEmbedding:
    """Field homomorphism sub -> sup fixed by the image of sub's generator x."""

    def __init__(self, sub: Field, sup: Field, image: int):
        self.sub = sub
        self.sup = sup
        self.image_of_sub_generator = FieldElement(sup, image)
        # images of the power basis 1, w, w^2, ... as sup elements
        basis = [1]
        for _ in range(1, sub.t):
            basis.append(sup.mul(basis[-1], image))
        self._basis = basis
        self._basis_digits = [sup.digits(b) for b in basis]
        self._pivots, self._inverse = _gfp_solve_basis(self._basis_digits, sup.p)

    def __repr__(self) -> str:
        return f"TowerEmbedding({self.sub} -> {self.sup})"

    def apply(self, a: int) -> int:
        sup = self.sup
        acc = 0
        for c, b in zip(self.sub.digits(a), self._basis):
            if c:
                acc = sup.add(acc, sup.mul(c, b))
        return acc

    def __call__(self, a: FieldElement) -> FieldElement:
        if a.field != self.sub:
            raise FieldMismatch(f"{a.field} is not {self.sub}")
        return FieldElement(self.sup, self.apply(a.value))

    def contains(self, c: int) -> bool:
        """Subfield membership via c^{|sub|} == c."""
        return self.sup.pow(c, self.sub.order) == c

    def preimage(self, c: int) -> int:
        if not self.contains(c):
            raise CoefficientOutsideSubfield(f"{c} is not in the image of {self.sub}")
        p = self.sup.p
        d = self.sup.digits(c)
        rhs = [d[i] for i in self._pivots]
        coeffs = [sum(row[j] * rhs[j] for j in range(len(rhs))) % p for row in self._inverse]
        a = self.sub.from_digits(coeffs)
        if self.apply(a) != c:  # pragma: no cover - guarded by contains()
            raise CoefficientOutsideSubfield(f"{c} is not in the image of {self.sub}")
        return a


def _find_root_exhaustive(sup: Field, coeffs: tuple[int, ...]) -> int:
    xs = np.arange(sup.order, dtype=np.int64)
    acc = np.zeros_like(xs)
    for c in reversed(coeffs):
        acc = sup.vadd(sup.vmul(acc, xs), c % sup.p)
    roots = np.flatnonzero(acc == 0)
    if roots.size == 0:
        raise NoEmbedding("modulus has no root in the larger field")  # pragma: no cover
    return int(roots[0])


def _find_root_via_subfield(sub: Field, sup: Field) -> int:
    # beta generates the copy of sub* inside sup; match it to a primitive root
    # y0 of sub with the same minimal polynomial, then transport x = y0^L.
    beta = sup.pow(sup.primitive_element, (sup.order - 1) // (sub.order - 1))
    conj = [beta]
    for _ in range(1, sub.t):
        conj.append(sup.pow(conj[-1], sup.p))
    minpoly = [1]
    for root in conj:
        nr = sup.neg(root)
        nxt = [0] * (len(minpoly) + 1)
        for i, c in enumerate(minpoly):
            nxt[i + 1] = sup.add(nxt[i + 1], c)
            nxt[i] = sup.add(nxt[i], sup.mul(c, nr))
        minpoly = nxt
    if any(c >= sup.p for c in minpoly):  # pragma: no cover
        raise AssertionError("minimal polynomial not over the prime field")
    ys = np.arange(sub.order, dtype=np.int64)
    acc = np.zeros_like(ys)
    for c in reversed(minpoly):
        acc = sub.vadd(sub.vmul(acc, ys), c)
    y0 = int(np.flatnonzero(acc == 0)[0])
    _, log = sub._table_lists
    n1 = sub.order - 1
    gen = sub.p  # the element x
    ell = log[gen] * pow(log[y0], -1, n1) % n1
    return sup.pow(beta, ell)


def build_embedding(sub: Field, sup: Field) -> TowerEmbedding:
    """Embed sub into sup, sending sub's generator x to a root of sub's modulus."""
    if sub.p != sup.p or sup.t % sub.t:
        raise NoEmbedding(f"{sub} does not embed in {sup}")
    if sub == sup:
        return TowerEmbedding(sub, sup, sub.p if sub.t > 1 else 1)
    if sub.t == 1:
        return TowerEmbedding(sub, sup, 1)
    if sup.has_tables:
        image = _find_root_exhaustive(sup, sub.modulus)
    elif sub.has_tables:
        image = _find_root_via_subfield(sub, sup)
    else:
        raise MagnitudeExceeded(f"cannot search for an embedding {sub} -> {sup}")
    if _eval_gfp_poly(sup, sub.modulus, image) != 0:  # pragma: no cover
        raise AssertionError("embedding image is not a root of the modulus")
    return TowerEmbedding(sub, sup, image)


@functools.lru_cache(maxsize=None)
def cached_embedding(sub: Field, sup: Field) -> TowerEmbedding:
    return build_embedding(sub, sup)


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, e) with q = p^e, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    f = sympy.factorint(q)
    if len(f) != 1:
        raise ValueError(f"{q} is not a prime power")
    ((p, e),) = f.items()
    return p, e


def is_prime_power(q: int) -> bool:
    try:
        prime_power(q)
    except ValueError:
        return False
    return True


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)
