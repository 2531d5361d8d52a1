from __future__ import annotations

import numpy as np
import pytest

from eaqmds.codes import (
    build_code,
    check_divides,
    evaluate_generator,
    generator_digits,
    generator_matrix,
    hermitian_dual,
    parity_check_matrix,
)
from eaqmds.cosets import DefiningSet, empty_set, full_set, make_space, s_minus_rj_union
from eaqmds.errors import FullCode, ZeroDimensional
from eaqmds.linalg import mat_mul, nullspace, rank
from eaqmds.poly import Polynomial

S8 = make_space(8, 13, "even")
S13 = make_space(13, 17, "odd")


@pytest.fixture(scope="module")
def code8():
    return build_code(S8, DefiningSet(S8, (28, 37, 19, 46, 10, 55)))


def test_q8_code(code8):
    g = code8.generator
    assert g.degree == 6 and g.is_monic()
    assert code8.k_classical == 7 and code8.designed_distance == 7
    assert check_divides(code8)
    vals = evaluate_generator(code8, S8.ambient())
    roots = [z for z, v in zip(S8.ambient(), vals) if v == 0]
    assert roots == [10, 19, 28, 37, 46, 55]


def test_q8_generator_is_frozen(code8):
    # canonical moduli and delta make the output reproducible
    assert code8.generator.coeffs == (59, 17, 63, 35, 51, 37, 1)
    assert generator_digits(code8)[-1] == [1, 0, 0, 0, 0, 0]


def test_alpha_has_order_q_plus_one(code8):
    F = code8.field
    a = code8.alpha.value
    assert F.pow(a, 9) == 1 and F.pow(a, 3) != 1
    E = code8.fields.ext
    assert E.pow(code8.fields.delta, 13) == code8.fields.embedding.apply(a)


def test_singleton_coset_code():
    c = build_code(S13, DefiningSet(S13, (85,)))
    assert c.generator.degree == 1 and c.k_classical == 16
    E, emb = c.fields.ext, c.fields.embedding
    root = E.pow(c.fields.delta, 85)
    assert emb.contains(root)
    assert c.generator.coeffs[0] == c.field.neg(emb.preimage(root))


def test_empty_defining_set():
    c = build_code(S8, empty_set(S8))
    assert c.generator == Polynomial.one(c.field) and c.k_classical == 13
    assert check_divides(c)
    with pytest.raises(FullCode):
        parity_check_matrix(c)
    G = generator_matrix(c)
    assert (G == np.eye(13, dtype=np.int64)).all()


def test_negative_control(code8):
    g = list(code8.generator.coeffs)
    g[2] = code8.field.add(g[2], 1)
    assert not check_divides(code8, Polynomial(code8.field, tuple(g)))


def test_matrices(code8):
    F = code8.field
    G, H = generator_matrix(code8), parity_check_matrix(code8)
    assert G.shape == (7, 13) and H.shape == (6, 13)
    assert rank(F, G) == 7 and rank(F, H) == 6
    assert not mat_mul(F, G, H.T).any()
    # rows are codewords: every row vanishes at delta^z, z in Z
    E, emb, delta = code8.fields.ext, code8.fields.embedding, code8.fields.delta
    for row in G:
        for z in code8.defining_set:
            x = E.pow(delta, z)
            acc = 0
            for c in reversed(row.tolist()):
                acc = E.add(E.mul(acc, x), emb.apply(c))
            assert acc == 0


def test_parity_check_spans_generic_nullspace(code8):
    F = code8.field
    G, H = generator_matrix(code8), parity_check_matrix(code8)
    N = nullspace(F, G)
    assert rank(F, np.vstack([H, N])) == rank(F, N) == 6


def test_family3_parity_check():
    c = build_code(S13, s_minus_rj_union(S13, 0, 4))
    H = parity_check_matrix(c)
    assert H.shape == (9, 17) and rank(c.field, H) == 9


def test_zero_dimensional():
    c = build_code(S8, full_set(S8))
    assert c.k_classical == 0
    with pytest.raises(ZeroDimensional):
        generator_matrix(c)


def test_hermitian_dual():
    Z = s_minus_rj_union(S13, 1, 3)
    c = build_code(S13, Z)
    d = hermitian_dual(c)
    assert d.k_classical == len(Z)
    assert hermitian_dual(d).defining_set == Z
    # dual-containing: dual's defining set contains Z's complement... i.e. Z is inside it
    assert set(Z.residues) <= set(d.defining_set.residues)
    F, q = c.field, 13
    U, V = generator_matrix(d), generator_matrix(c)
    herm = mat_mul(F, U, F.vpow(V, q).T)
    assert not herm.any()
    assert hermitian_dual(build_code(S8, empty_set(S8))).defining_set == full_set(S8)
