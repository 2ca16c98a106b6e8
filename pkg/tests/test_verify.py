import random

import pytest

import idealcover as ic
from idealcover import (INFINITY, Fingerprint, fingerprint, fingerprint_scan,
                        make_field, records_to_csv, verify_covering_formula,
                        verify_null_family)
from idealcover.verify import CSV_HEADER, change_basis, random_algebra
from idealcover.linalg import invert_matrix


# ---------------------------------------------------------------------------
# verification records
# ---------------------------------------------------------------------------

def test_formula_record_n1_q2():
    rec = verify_covering_formula(1, make_field(2, 1))
    assert rec.passed, rec.detail
    assert rec.computed_eta == rec.formula_eta == 3
    assert rec.forced_count == rec.maximal_count == 3
    assert rec.elementary_flag


def test_formula_record_n2_q2():
    rec = verify_covering_formula(2, make_field(2, 1))
    assert rec.passed, rec.detail
    assert rec.computed_eta == 7


def test_formula_record_n1_gf4():
    rec = verify_covering_formula(1, make_field(2, 2))
    assert rec.passed, rec.detail
    assert rec.computed_eta == 5


@pytest.mark.parametrize("p,expected", [(2, 3), (3, 4), (5, 6)])
def test_null_family_records(p, expected):
    rec = verify_null_family(p)
    assert rec.passed, rec.detail
    assert rec.computed_eta == expected
    assert rec.elementary_flag


def test_csv_output_shape_and_determinism():
    recs = [verify_covering_formula(1, make_field(2, 1)),
            verify_null_family(2)]
    text = records_to_csv(recs)
    lines = text.strip().split("\n")
    assert lines[0] == CSV_HEADER
    assert len(lines) == 3
    assert all(line.endswith(",0") for line in lines[1:])  # timings zeroed
    assert text == records_to_csv(recs)
    timed = records_to_csv(recs, timings=True)
    assert timed.split("\n")[0] == CSV_HEADER


# ---------------------------------------------------------------------------
# fingerprints
# ---------------------------------------------------------------------------

def test_fingerprint_of_null_plane():
    fp = fingerprint(ic.build_null_ring(2, 2))
    assert fp == Fingerprint(
        order=4, characteristic=2, radical_order=4,
        has_identity=False, has_left_identity=False,
        has_right_identity=False, left_ideal_count=5,
        two_sided_ideal_count=5, eta_left=3, eta_right=3, eta_two_sided=3)


def test_fingerprint_of_R12():
    from conftest import ring_R12
    fp = fingerprint(ring_R12())
    assert fp.radical_order == 2
    assert fp.has_left_identity and not fp.has_right_identity
    assert fp.eta_left == 3
    assert fp.eta_right is INFINITY
    assert fp.eta_two_sided is INFINITY


def test_fingerprint_is_basis_invariant():
    rng = random.Random(99)
    from conftest import ring_R12
    for R in (ring_R12(), ic.build_null_ring(3, 2)):
        base = fingerprint(R)
        for _ in range(5):
            P = None
            while P is None or invert_matrix(R.p, P) is None:
                P = tuple(tuple(rng.randrange(R.p) for _ in range(R.d))
                          for _ in range(R.d))
            assert fingerprint(change_basis(R, P)) == base


# ---------------------------------------------------------------------------
# classification scans
# ---------------------------------------------------------------------------

def test_scan_dimension_one_has_no_elementary_rings():
    result = fingerprint_scan(2, 1)
    assert result.elementary == 0
    assert result.groups == ()


@pytest.mark.parametrize("p", [2, 3])
def test_scan_dimension_two_finds_exactly_the_two_families(p):
    result = fingerprint_scan(p, 2)
    assert result.candidates == p ** 8
    got = {fp for fp, _rep in result.groups}
    from conftest import ring_R12
    null_fp = fingerprint(ic.build_null_ring(p, 2))
    family_fp = fingerprint(
        ic.build_augmented_ring(1, make_field(p, 1)).ring)
    assert got == {null_fp, family_fp}


def test_scan_survivors_have_nonzero_radical_and_prime_characteristic():
    result = fingerprint_scan(3, 2)
    for fp, rep in result.groups:
        assert fp.radical_order > 1
        assert fp.characteristic == 3
        assert ic.gf.is_prime(fp.characteristic)


def test_scan_budget_guard():
    with pytest.raises(ic.GuardExceeded):
        fingerprint_scan(2, 3)  # 2^27 tables: needs a sample size
    result = fingerprint_scan(2, 3, sample=2000, seed=1)
    assert result.candidates == 2000


# ---------------------------------------------------------------------------
# random algebra generator
# ---------------------------------------------------------------------------

def test_random_algebras_are_valid_and_varied():
    rng = random.Random(0)
    radical_dims = set()
    for _ in range(40):
        R = random_algebra(2, 4, rng)
        assert 1 <= R.d <= 4
        radical_dims.add(ic.jacobson_radical(R).dim)
    assert len(radical_dims) >= 3
