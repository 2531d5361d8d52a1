from __future__ import annotations

import pytest

from eaqmds.cosets import s_minus_rj_union
from eaqmds.eaqec import is_eaqmds
from eaqmds.errors import LambdaOutOfRange, NonpositiveLogicalDimension, NotAdmissible
from eaqmds.families import (
    PUBLISHED_ROWS,
    admissible,
    admissible_qs,
    build_instance,
    check_coset_images,
    check_lemma_ranges,
    enumerate_family,
    get_family,
    list_families,
    regenerate_table,
    verify_instance,
)


def test_eight_families():
    fams = list_families()
    assert [f.id for f in fams] == list(range(1, 9))
    assert [f.D for f in fams] == [10, 10, 10, 10, 5, 5, 13, 17]
    assert [f.expected_c for f in fams] == [5, 9, 5, 9, 4, 4, 4, 4]


def test_spec_examples():
    f3, f6, f8 = get_family(3), get_family(6), get_family(8)
    assert f3.n_of(13) == 17 and f3.lambda_max(13) == 1
    assert f6.lambda_max(8) == 2
    assert f8.n_of(64) == 241 and f8.lambda_max(64) == 4


def test_admissible():
    assert admissible(1, 17)
    assert not admissible(1, 7)  # k degenerates to 0
    assert admissible(6, 8)
    assert admissible(7, 512)
    assert not admissible(3, 15)
    assert not admissible(5, 2)
    assert admissible(1, 27)  # prime powers count
    assert admissible_qs(8, 512) == [64]
    assert admissible_qs(6, 512) == [8, 128]


def test_build_instance_examples():
    inst = build_instance(3, 13, 1)
    assert inst.defining_set == s_minus_rj_union(inst.space, 0, 4)
    assert inst.expected.as_tuple() == (17, 4, 10, 5)
    assert build_instance(6, 8, 2).expected.as_tuple() == (13, 1, 9, 4)
    inst = build_instance(4, 13, 1)
    assert inst.defining_set == s_minus_rj_union(inst.space, 0, 5)
    assert inst.expected.as_tuple() == (17, 4, 12, 9)
    assert inst.computed.c == 9


def test_build_errors():
    with pytest.raises(NotAdmissible):
        build_instance(1, 7, 1)
    with pytest.raises(LambdaOutOfRange):
        build_instance(3, 13, 2)
    with pytest.raises(NonpositiveLogicalDimension):
        build_instance(2, 17, 2)


def test_verify_examples():
    inst = build_instance(6, 8, 1)
    rep = verify_instance(inst, "exhaustive")
    assert set(rep.values()) == {"pass"} and len(rep) == 7
    rep = verify_instance(build_instance(3, 13, 1), "mds")
    assert set(rep.values()) == {"pass"}


def test_verify_large_q_without_oracle():
    inst = build_instance(7, 512, 1)
    rep = verify_instance(inst, "none")
    assert rep == {"params": "pass", "singleton": "pass", "bch": "pass", "divides": "pass"}
    assert inst.computed.as_tuple() == (20165, 19553, 309, 4)


def test_budget_skips_instead_of_failing():
    inst = build_instance(7, 512, 1)
    rep = verify_instance(inst, "rank")
    assert rep["rank"] == "skipped"


def test_enumerate_examples():
    got = [i.expected.as_tuple() for i in enumerate_family(3, 23, None)]
    assert got == [(17, 4, 10, 5), (53, 28, 16, 5), (53, 24, 18, 5)]
    five = enumerate_family(5, 32, None)
    assert len(five) == 7 and five[0].expected.as_tuple() == (205, 169, 21, 4)
    eight = enumerate_family(8, 64, None)
    assert [i.expected.as_tuple() for i in eight] == [(241, 157 - 4 * j, 42 + 2 * j, 4) for j in range(4)]


def test_formula_monotonicity():
    for fam in list_families():
        for q in admissible_qs(fam, 200):
            n = int(fam.n_of(q))
            for lam in range(1, int(fam.lambda_max(q))):
                assert fam.expected_d(q, lam + 1) - fam.expected_d(q, lam) == 2
                assert fam.expected_k(q, n, lam) - fam.expected_k(q, n, lam + 1) == 4


def test_ea_singleton_identity_of_formulas():
    # holds for families 1-7; family 8's closed forms miss it by 6 (see ledger)
    for fam in list_families():
        for q in admissible_qs(fam, 1024):
            n = int(fam.n_of(q))
            for lam in range(1, int(fam.lambda_max(q)) + 1):
                k, d, c = fam.expected_k(q, n, lam), fam.expected_d(q, lam), fam.expected_c
                gap = n + c - k - 2 * (d - 1)
                assert gap == (6 if fam.id == 8 else 0)


def test_lemma_examples():
    assert check_lemma_ranges(3, 13).passed
    rep = check_lemma_ranges(6, 8)
    assert rep.passed and [name for name, _ in rep.checks][:2] == ["Z lambda=0", "Z lambda=1"]
    rep = check_lemma_ranges(1, 17)
    assert rep.passed and sum(name.startswith("Z lambda") for name, _ in rep.checks) == 4


def test_coset_image_examples():
    rep = check_coset_images(3, 13)
    assert rep.passed and len(rep.checks) == 3
    assert {(-13 * z) % 238 for z in (71, 99)} == {29, 141}
    assert {(-13 * z) % 238 for z in (43, 127)} == {15, 155}


# -- frozen defects (values from an independent pure-python set computation) --


def test_family7_entanglement_grows_past_lambda_24():
    assert build_instance(7, 512, 24).computed.c == 4
    assert build_instance(7, 512, 25).computed.c == 8
    assert build_instance(7, 512, 63).computed.c == 8
    assert build_instance(7, 512, 64).computed.c == 12
    rep = check_lemma_ranges(7, 512)
    assert rep.failures[0] == "Z lambda=98"


def test_family8_stated_range_is_off():
    inst = build_instance(8, 64, 1)
    assert len(inst.defining_set) == 44
    assert inst.computed.as_tuple() == (241, 161, 45, 8)
    assert build_instance(8, 64, 4).computed.as_tuple() == (241, 153, 51, 12)
    rep = check_lemma_ranges(8, 64)
    assert rep.failures[0] == "Z lambda=9"


def test_family2_top_lambda_needs_more_entanglement():
    assert build_instance(2, 37, 3).computed.c == 9
    assert build_instance(2, 37, 4).computed.as_tuple() == (137, 72, 40, 13)
    assert build_instance(2, 47, 5).computed.c == 13


def test_small_rows_exceed_distance_bound():
    for fid, q, lam in [(2, 17, 1), (3, 13, 1), (4, 13, 1), (6, 8, 2)]:
        inst = build_instance(fid, q, lam)
        assert inst.computed == inst.expected
        assert inst.computed.singleton_defect == 0
        assert not is_eaqmds(inst.computed)


def test_family1_table_typo():
    rows = regenerate_table(1)
    assert rows[0].printed == (17, 4, 12, 5)
    assert rows[0].formula == (29, 12, 12, 5) and rows[0].status == "discrepancy"
    assert all(r.status == "match" for r in rows[1:])


def test_tables_all_other_rows_match():
    for fid in PUBLISHED_ROWS:
        for row in regenerate_table(fid):
            if (fid, row.q, row.lam) != (1, 17, 1):
                assert row.status == "match", row
