"""Constacyclic codes over GF(q^2) built from a defining set.

The roots delta^z live in GF(q^{2m}) with m = ord_rn(q^2).  Each coset's
minimal polynomial is formed there, checked to have coefficients in the
embedded copy of GF(q^2), pulled back, and the factors are multiplied in
GF(q^2).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from eaqmds.cosets import (
    CosetSpace,
    DefiningSet,
    bch_designed_distance,
    coset_of,
    dual_defining_set,
)
from eaqmds.errors import CoefficientOutsideSubfield, FullCode, ZeroDimensional
from eaqmds.gf import (
    Field,
    FieldElement,
    TowerEmbedding,
    cached_embedding,
    element_of_order,
    make_field,
    prime_power,
)
from eaqmds.poly import Polynomial, poly_coeffs_from_roots, poly_divmod, poly_eval_many


@dataclass(frozen=True)
class CodeFields:
    """GF(q^2), the splitting field GF(q^{2m}), the embedding and canonical delta."""

    base: Field
    ext: Field
    embedding: TowerEmbedding
    delta: int
    alpha: int

    def describe_delta(self) -> str:
        e = self.ext
        return f"delta in {e} modulus {list(e.modulus)} digits {list(e.digits(self.delta))}"


@lru_cache(maxsize=None)
def code_fields(space: CosetSpace) -> CodeFields:
    p, e = prime_power(space.q)
    base = make_field(p, 2 * e)
    ext = make_field(p, 2 * e * space.m)
    emb = cached_embedding(base, ext)
    delta = element_of_order(ext, space.rn).value
    alpha = emb.preimage(ext.pow(delta, space.n))
    return CodeFields(base, ext, emb, delta, alpha)


@dataclass(frozen=True, eq=False)
class ConstacyclicCode:
    space: CosetSpace
    defining_set: DefiningSet
    fields: CodeFields
    generator: Polynomial
    designed_distance: int

    @property
    def n(self) -> int:
        return self.space.n

    @property
    def field(self) -> Field:
        return self.fields.base

    @property
    def alpha(self) -> FieldElement:
        return FieldElement(self.fields.base, self.fields.alpha)

    @property
    def delta(self) -> FieldElement:
        return FieldElement(self.fields.ext, self.fields.delta)

    @property
    def k_classical(self) -> int:
        return self.n - self.generator.degree

    @cached_property
    def check_polynomial(self) -> Polynomial:
        h, rem = poly_divmod(modulus_polynomial(self), self.generator)
        if not rem.is_zero():
            raise ArithmeticError("generator does not divide x^n - alpha")
        return h

    def __repr__(self) -> str:
        return f"ConstacyclicCode([{self.n},{self.k_classical}] over {self.field}, |Z|={len(self.defining_set)})"


def modulus_polynomial(code: ConstacyclicCode) -> Polynomial:
    """x^n - alpha over GF(q^2)."""
    f = code.field
    return Polynomial(f, (f.neg(code.fields.alpha),) + (0,) * (code.n - 1) + (1,))


def _group_into_cosets(space: CosetSpace, Z: DefiningSet) -> list[tuple[int, ...]]:
    left = set(Z.residues)
    groups = []
    for z in Z.residues:
        if z in left:
            c = coset_of(space, z).elements
            left.difference_update(c)
            groups.append(c)
    return groups


def build_code(space: CosetSpace, Z: DefiningSet) -> ConstacyclicCode:
    if Z.space != space:
        raise ValueError("defining set belongs to another space")
    cf = code_fields(space)
    base, ext, emb = cf.base, cf.ext, cf.embedding
    g = Polynomial.one(base)
    for coset in _group_into_cosets(space, Z):
        roots = [ext.pow(cf.delta, z) for z in coset]
        coeffs = poly_coeffs_from_roots(ext, roots)
        down = []
        for c in coeffs:
            if not emb.contains(c):
                raise CoefficientOutsideSubfield(f"minimal polynomial of coset {coset} leaves GF(q^2)")
            down.append(emb.preimage(c))
        g = g * Polynomial(base, tuple(down))
    return ConstacyclicCode(space, Z, cf, g, bch_designed_distance(space, Z))


def check_divides(code: ConstacyclicCode, generator: Polynomial | None = None) -> bool:
    g = code.generator if generator is None else generator
    _, rem = poly_divmod(modulus_polynomial(code), g)
    return rem.is_zero()


def evaluate_generator(code: ConstacyclicCode, exponents) -> np.ndarray:
    """g(delta^z) in GF(q^{2m}) for each z."""
    cf = code.fields
    ext = cf.ext
    lifted = Polynomial(ext, tuple(cf.embedding.apply(c) for c in code.generator.coeffs))
    points = [ext.pow(cf.delta, int(z)) for z in exponents]
    if ext.has_tables:
        return poly_eval_many(lifted, points)
    return np.array([lifted(x) for x in points], dtype=np.int64)


def generator_matrix(code: ConstacyclicCode) -> np.ndarray:
    """Rows x^i g(x), i < k.  No reduction is needed since deg < n."""
    k, n = code.k_classical, code.n
    if k < 1:
        raise ZeroDimensional("code has dimension 0")
    g = np.asarray(code.generator.coeffs, dtype=np.int64)
    G = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        G[i, i : i + len(g)] = g
    return G


def parity_check_matrix(code: ConstacyclicCode) -> np.ndarray:
    """Basis of the Euclidean null space of G.

    With h = (x^n - alpha)/g, the rows are shifts of the reversed coefficients
    of h; row b dotted with x^a g(x) reads off a middle coefficient of x^n - alpha,
    which vanishes.
    """
    k, n = code.k_classical, code.n
    r = n - k
    if r < 1:
        raise FullCode("empty defining set gives the whole space")
    h_rev = np.asarray(code.check_polynomial.coeffs[::-1], dtype=np.int64)
    H = np.zeros((r, n), dtype=np.int64)
    for i in range(r):
        H[i, i : i + len(h_rev)] = h_rev
    return H


def hermitian_dual(code: ConstacyclicCode) -> ConstacyclicCode:
    """The Hermitian dual.  Its shift constant alpha^{-q} equals alpha since alpha has order q+1."""
    space = code.space
    return build_code(space, dual_defining_set(space, code.defining_set))


def generator_digits(code: ConstacyclicCode) -> list[list[int]]:
    """g(x) coefficients ascending, each as base-p digits (JSON friendly)."""
    f = code.field
    return [list(f.digits(c)) for c in code.generator.coeffs]
