from __future__ import annotations

import itertools
import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eaqmds.errors import (
    DivisionByZero,
    FieldMismatch,
    MagnitudeExceeded,
    NoEmbedding,
    NonPrimeCharacteristic,
    NotAQuadraticExtension,
    OrderDoesNotDivide,
)
from eaqmds.gf import (
    FieldElement,
    build_embedding,
    conjugate,
    element_of_order,
    field_arith,
    field_pow,
    is_irreducible,
    make_field,
    multiplicative_order,
)

SMALL_FIELDS = [(2, 1), (3, 1), (3, 2), (2, 6), (13, 2), (5, 3), (2, 12)]


def _has_root(p, coeffs):
    return any(sum(c * x**i for i, c in enumerate(coeffs)) % p == 0 for x in range(p))


def test_prime_field_modulus_is_x():
    F = make_field(3, 1)
    assert F.modulus == (0, 1)
    assert F.order == 3


def test_gf9_modulus_has_no_root():
    F = make_field(3, 2)
    assert len(F.modulus) == 3 and F.modulus[-1] == 1
    assert not _has_root(3, F.modulus)


def test_modulus_is_smallest_irreducible():
    # brute force over all monic quadratics/cubics ordered by base-p value of the low coefficients
    for p, t in [(3, 2), (2, 4), (5, 2), (2, 6)]:
        F = make_field(p, t)
        for v in range(p**t):
            low = [(v // p**i) % p for i in range(t)]
            cand = tuple(low + [1])
            if is_irreducible(p, cand):
                assert cand == F.modulus
                break


def test_known_moduli():
    assert make_field(2, 6).modulus == (1, 1, 0, 0, 0, 0, 1)
    assert make_field(13, 2).modulus == (2, 0, 1)


def test_irreducibility_against_factor_count():
    # x^4 + x + 1 irreducible, x^4 + x^2 + 1 = (x^2+x+1)^2 not
    assert is_irreducible(2, (1, 1, 0, 0, 1))
    assert not is_irreducible(2, (1, 0, 1, 0, 1))


def test_gf4096_has_117th_roots():
    F = make_field(2, 12)
    assert (F.order - 1) % 117 == 0


def test_errors():
    with pytest.raises(NonPrimeCharacteristic):
        make_field(4, 1)
    with pytest.raises(MagnitudeExceeded):
        make_field(2, 64)
    F9, F4 = make_field(3, 2), make_field(2, 2)
    with pytest.raises(FieldMismatch):
        field_arith(F9.element(1), F4.element(1), "add")
    with pytest.raises(DivisionByZero):
        field_arith(F9.element(1), F9.element(0), "div")
    with pytest.raises(NotAQuadraticExtension):
        conjugate(make_field(2, 6).element(3), 4)
    with pytest.raises(OrderDoesNotDivide):
        element_of_order(F9, 5)
    with pytest.raises(NoEmbedding):
        build_embedding(make_field(2, 4), make_field(2, 6))


def test_gf3_arithmetic():
    F = make_field(3, 1)
    two = F.element(2)
    assert (two * two).value == 1
    assert F.inv(2) == 2


@pytest.mark.parametrize("p,t", SMALL_FIELDS)
def test_field_axioms_sampled(p, t):
    F = make_field(p, t)
    rng = random.Random(p * 100 + t)
    for _ in range(100):
        a, b, c = (F.element(rng.randrange(F.order)) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) * c == a * c + b * c
        assert a * F.element(1) == a
        assert a - a == F.element(0)
        if b.value:
            assert (a / b) * b == a


@pytest.mark.parametrize("p,t", [(3, 2), (2, 6), (13, 2), (5, 2)])
def test_roots_of_unity_count(p, t):
    F = make_field(p, t)
    xs = np.arange(1, F.order)
    for d in [2, 3, 4, 5, 7, 8, 13, 21]:
        count = int(np.count_nonzero(F.vpow(xs, d) == 1))
        assert count == math.gcd(d, F.order - 1)


def test_pow_and_frobenius():
    F64, F169 = make_field(2, 6), make_field(13, 2)
    rng = random.Random(1)
    for _ in range(50):
        a = F64.element(rng.randrange(1, 64))
        assert field_pow(a, 63).value == 1
        assert field_pow(a, 0).value == 1
        b = F169.element(rng.randrange(169))
        assert field_pow(b, 169) == b
    assert field_pow(F64.element(0), 0).value == 1


def test_conjugate_involution_and_fixed_points():
    F = make_field(13, 2)
    for v in range(F.order):
        a = F.element(v)
        assert conjugate(conjugate(a, 13), 13) == a
    assert conjugate(F.element(1), 13).value == 1
    F64 = make_field(2, 6)
    fixed = [v for v in range(64) if conjugate(F64.element(v), 8).value == v]
    assert len(fixed) == 8
    F256 = make_field(2, 16)
    assert int(np.count_nonzero(F256.vpow(np.arange(F256.order), 256) == np.arange(F256.order))) == 256


def test_element_of_order():
    F9 = make_field(3, 2)
    g = element_of_order(F9, 8)
    powers = {field_pow(g, i).value for i in range(8)}
    assert len(powers) == 8
    assert element_of_order(F9, 1).value == 1
    F = make_field(2, 12)
    d = element_of_order(F, 117)
    assert field_pow(d, 117).value == 1
    assert field_pow(d, 39).value != 1 and field_pow(d, 9).value != 1
    assert multiplicative_order(F, d.value) == 117


def test_primitive_element_is_smallest():
    F = make_field(3, 2)
    g = F.primitive_element
    for v in range(2, g):
        assert multiplicative_order(F, v) < 8
    assert multiplicative_order(F, g) == 8


def test_tables_agree_with_raw_multiplication():
    for p, t in [(2, 6), (13, 2), (3, 3)]:
        F = make_field(p, t)
        rng = random.Random(7)
        for _ in range(200):
            a, b = rng.randrange(F.order), rng.randrange(F.order)
            assert F.mul(a, b) == F._mul_raw(a, b)


def test_vector_ops_match_scalar():
    F = make_field(13, 2)
    rng = np.random.default_rng(3)
    a = rng.integers(0, F.order, 300)
    b = rng.integers(1, F.order, 300)
    assert F.vadd(a, b).tolist() == [F.add(int(x), int(y)) for x, y in zip(a, b)]
    assert F.vmul(a, b).tolist() == [F.mul(int(x), int(y)) for x, y in zip(a, b)]
    assert F.vdiv(a, b).tolist() == [F.div(int(x), int(y)) for x, y in zip(a, b)]
    assert F.vsub(a, b).tolist() == [F.sub(int(x), int(y)) for x, y in zip(a, b)]
    M = np.stack([a, b])
    assert F.vsum(M, axis=0).tolist() == [F.add(int(x), int(y)) for x, y in zip(a, b)]


def _check_hom(sub, sup, emb):
    basis = [sub.p**i for i in range(sub.t)] + [1, 0]
    for a, b in itertools.product(basis, repeat=2):
        assert emb.apply(sub.mul(a, b)) == sup.mul(emb.apply(a), emb.apply(b))
        assert emb.apply(sub.add(a, b)) == sup.add(emb.apply(a), emb.apply(b))
    rng = random.Random(11)
    for _ in range(100):
        a, b = rng.randrange(sub.order), rng.randrange(sub.order)
        assert emb.apply(sub.mul(a, b)) == sup.mul(emb.apply(a), emb.apply(b))
        assert emb.preimage(emb.apply(a)) == a


@pytest.mark.parametrize("sub,sup", [((2, 6), (2, 12)), ((13, 2), (13, 4)), ((2, 1), (2, 6)), ((3, 2), (3, 2))])
def test_embedding_homomorphism(sub, sup):
    A, B = make_field(*sub), make_field(*sup)
    emb = build_embedding(A, B)
    _check_hom(A, B, emb)
    if A == B:
        assert all(emb.apply(v) == v for v in range(A.order))
    if A.t == 1:
        assert all(emb.apply(v) == v for v in range(A.order))


def test_embedding_image_is_root_found_by_search():
    A, B = make_field(2, 6), make_field(2, 12)
    emb = build_embedding(A, B)
    w = emb.image_of_sub_generator.value
    acc = 0
    for c in reversed(A.modulus):
        acc = B.add(B.mul(acc, w), c)
    assert acc == 0


def test_embedding_into_untabled_field():
    A, B = make_field(2, 10), make_field(2, 40)
    emb = build_embedding(A, B)
    _check_hom(A, B, emb)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 168), st.integers(0, 168), st.integers(0, 168))
def test_distributivity_gf169(a, b, c):
    F = make_field(13, 2)
    x, y, z = FieldElement(F, a), FieldElement(F, b), FieldElement(F, c)
    assert (x + y) * z == x * z + y * z
