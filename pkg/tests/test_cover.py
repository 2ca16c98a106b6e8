import random

import pytest

from conftest import naive_covering_number, ring_R12, trivial_field_ring

import idealcover as ic
from idealcover import (INFINITY, UncoverableError, covering_number,
                        forced_ideals, is_eta_elementary, make_field,
                        minimal_cover, opposite)
from idealcover.verify import random_algebra


# ---------------------------------------------------------------------------
# the infinity marker
# ---------------------------------------------------------------------------

def test_infinity_is_a_strict_top():
    assert INFINITY > 10 ** 9
    assert not INFINITY < 10 ** 9
    assert 3 < INFINITY
    assert INFINITY == INFINITY
    assert INFINITY <= INFINITY
    assert not INFINITY > INFINITY
    assert not isinstance(INFINITY, int)


# ---------------------------------------------------------------------------
# covering numbers
# ---------------------------------------------------------------------------

def test_R12_left_covering_number_is_three():
    res = covering_number(ring_R12(), "left")
    assert res.eta == 3
    assert len(res.cover) == 3
    assert all(M.order == 2 for M in res.cover)


def test_unital_rings_are_uncoverable():
    res = covering_number(trivial_field_ring(), "left")
    assert res.eta is INFINITY
    assert res.certificate == "uncoverable-proof"
    assert res.cover == ()


def test_null_C3xC3_two_sided_covering_number():
    res = covering_number(ic.build_null_ring(3, 2), "two-sided")
    assert res.eta == 4


def test_certificates():
    auto = covering_number(ring_R12(), "left", mode="auto")
    assert auto.certificate == "forced-equals-upper"
    searched = covering_number(ring_R12(), "left", mode="search")
    assert searched.certificate == "exhaustive-branch-and-bound"
    assert searched.eta == auto.eta == 3


def test_rank3_null_ring_needs_real_search():
    # no maximal subgroup of C_2^3 is cyclic, so nothing is forced and the
    # branch and bound must find a 3-hyperplane cover on its own
    N = ic.build_null_ring(2, 3)
    assert forced_ideals(N, "two-sided") == []
    res = covering_number(N, "two-sided")
    assert res.eta == 3
    assert res.certificate == "exhaustive-branch-and-bound"
    assert res.node_count > 0


# ---------------------------------------------------------------------------
# witness covers
# ---------------------------------------------------------------------------

def test_R12_minimal_cover_is_the_three_lines():
    res = minimal_cover(ring_R12(), "left")
    assert {I.basis for I in res.cover} == {((1, 0),), ((0, 1),), ((1, 1),)}


def test_null_C2xC2_cover_is_the_three_lines():
    res = minimal_cover(ic.build_null_ring(2, 2), "two-sided")
    assert {I.basis for I in res.cover} == {((1, 0),), ((0, 1),), ((1, 1),)}


def test_R22_cover_matches_canonical_cover():
    ctx = ic.build_augmented_ring(2, make_field(2, 1))
    res = minimal_cover(ctx.ring, "left")
    assert res.eta == 7
    assert ({I.basis for I in res.cover}
            == {I.basis for I in ic.canonical_cover(ctx)})


def test_minimal_cover_raises_when_uncoverable():
    with pytest.raises(UncoverableError):
        minimal_cover(ic.matrix_algebra(2, make_field(2, 1)), "left")


def cover_is_valid(R, res):
    universe = (1 << R.order) - 1
    union = 0
    for M in res.cover:
        assert not M.is_full()
        union |= M.element_mask()
    if union != universe:
        return False
    for skip in range(len(res.cover)):
        rest = 0
        for i, M in enumerate(res.cover):
            if i != skip:
                rest |= M.element_mask()
        if rest == universe:
            return False  # redundant member
    return True


def test_every_returned_cover_is_exact_and_irredundant():
    cases = [
        (ring_R12(), "left"),
        (ic.build_null_ring(2, 2), "two-sided"),
        (ic.build_null_ring(3, 2), "left"),
        (ic.build_null_ring(2, 3), "two-sided"),
        (ic.build_augmented_ring(2, make_field(2, 1)).ring, "left"),
        (opposite(ring_R12()), "right"),
    ]
    for R, side in cases:
        res = minimal_cover(R, side)
        assert cover_is_valid(R, res), (side, res.eta)
        assert res.eta >= 3


# ---------------------------------------------------------------------------
# forced ideals
# ---------------------------------------------------------------------------

def test_forced_ideals_of_R22():
    R = ic.build_augmented_ring(2, make_field(2, 1)).ring
    assert len(forced_ideals(R, "left")) == 7


def test_forced_ideals_of_null_plane():
    assert len(forced_ideals(ic.build_null_ring(2, 2), "two-sided")) == 3


def test_forced_set_only_binds_when_coverable():
    # all three maximal left ideals of M_2(F_2) are cyclic, yet the ring
    # has no cover at all
    M = ic.matrix_algebra(2, make_field(2, 1))
    assert len(forced_ideals(M, "left")) == 3
    assert covering_number(M, "left").eta is INFINITY


def test_forced_ideals_appear_in_every_minimal_cover():
    cases = [
        (ring_R12(), "left"),
        (ic.build_null_ring(3, 2), "two-sided"),
        (ic.build_augmented_ring(1, make_field(3, 1)).ring, "left"),
    ]
    for R, side in cases:
        res = minimal_cover(R, side, mode="search")
        bases = {I.basis for I in res.cover}
        for F in forced_ideals(R, side):
            assert F.basis in bases


# ---------------------------------------------------------------------------
# elementary verdicts
# ---------------------------------------------------------------------------

def test_R12_is_left_elementary():
    report = is_eta_elementary(ring_R12(), "left")
    assert report
    assert report.eta == 3
    # both nonzero two-sided ideals produce uncoverable quotients
    assert all(eta is INFINITY for _, eta in report.quotients)


def test_null_plane_is_two_sided_elementary():
    assert is_eta_elementary(ic.build_null_ring(2, 2), "two-sided")


def test_square_product_is_not_elementary():
    R = ic.direct_product([ring_R12(), ring_R12()])
    report = is_eta_elementary(R, "left")
    assert not report
    assert report.eta == 3
    # quotient by one factor reproduces eta = 3, violating strictness
    assert any(eta == 3 for _, eta in report.quotients)


def test_uncoverable_ring_is_not_elementary():
    report = is_eta_elementary(trivial_field_ring(), "left")
    assert not report
    assert report.eta is INFINITY


# ---------------------------------------------------------------------------
# structural relations
# ---------------------------------------------------------------------------

def corpus():
    rng = random.Random(13)
    rings = [
        ring_R12(),
        opposite(ring_R12()),
        ic.build_null_ring(2, 2),
        ic.build_null_ring(2, 3),
        ic.build_null_ring(3, 2),
        trivial_field_ring(),
        ic.matrix_algebra(2, make_field(2, 1)),
        ic.build_augmented_ring(1, make_field(3, 1)).ring,
        ic.direct_product([ring_R12(), ic.build_null_ring(2, 1)]),
        ic.ring.dorroh(ic.build_null_ring(2, 2)),
    ]
    rings += [random_algebra(2, 3, rng) for _ in range(6)]
    rings += [random_algebra(3, 3, rng) for _ in range(4)]
    return rings


def test_one_sided_numbers_bound_two_sided():
    for R in corpus():
        eta_l = covering_number(R, "left").eta
        eta_r = covering_number(R, "right").eta
        eta = covering_number(R, "two-sided").eta
        assert eta_l <= eta
        assert eta_r <= eta


def test_right_covering_is_left_covering_of_opposite():
    for R in corpus():
        assert (covering_number(R, "right").eta
                == covering_number(opposite(R), "left").eta)


def test_left_identity_forces_right_and_two_sided_uncoverable():
    for q, n in [(2, 1), (2, 2), (3, 1)]:
        R = ic.build_augmented_ring(n, make_field(q, 1)).ring
        assert covering_number(R, "right").eta is INFINITY
        assert covering_number(R, "two-sided").eta is INFINITY


def test_branch_and_bound_matches_naive_enumeration():
    for R in corpus():
        for side in ("left", "right", "two-sided"):
            if len(ic.maximal_ideals(R, side)) > 12:
                continue
            assert (covering_number(R, side, mode="search").eta
                    == naive_covering_number(R, side)), (R.sc, side)


def test_product_covering_number_is_minimum_over_factors():
    # holds whenever ideals respect the product decomposition, which a
    # one-sided identity in a factor or a zero-product factor pair ensures
    R12 = ring_R12()
    R13 = ic.build_augmented_ring(1, make_field(3, 1)).ring
    cases = [
        ([R12, R12], "left"),
        ([R12, ic.build_null_ring(2, 2)], "left"),
        ([R12, trivial_field_ring()], "left"),
        ([R13, ic.build_null_ring(3, 2)], "left"),
        ([ic.build_null_ring(2, 2), trivial_field_ring()], "two-sided"),
    ]
    for factors, side in cases:
        got = covering_number(ic.direct_product(factors), side).eta
        best = INFINITY
        for F in factors:
            eta = covering_number(F, side).eta
            if eta < best:
                best = eta
        assert got == best


def test_results_deterministic_across_modes_and_repeats():
    R = ic.build_null_ring(2, 3)
    a = covering_number(R, "two-sided")
    b = covering_number(R, "two-sided")
    assert a.eta == b.eta
    assert [I.basis for I in a.cover] == [I.basis for I in b.cover]
