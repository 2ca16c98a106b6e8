import random

import pytest

from conftest import naive_ideal_sets, ring_R12, span_of

import idealcover as ic
from idealcover import (enumerate_ideals, ideal_closure, ideal_membership,
                        make_field, maximal_ideals)
from idealcover.ideals import cyclic_generator, ideal_from_rows
from idealcover.verify import random_algebra


# ---------------------------------------------------------------------------
# closure
# ---------------------------------------------------------------------------

def test_cyclic_closure_of_unit_vector_pair():
    # in R(1,q) the generator (1 | v) produces the graph ideal of size q
    for q in (2, 3):
        ctx = ic.build_augmented_ring(1, make_field(q, 1))
        for vidx in range(q):
            v = ctx.field.element_from_index(vidx)
            gen = ctx.embed([[ctx.field.one]], [v])
            I = ideal_closure(ctx.ring, [gen], "left")
            assert I.order == q


def test_empty_generators_give_zero_ideal():
    I = ideal_closure(ring_R12(), [], "left")
    assert I.basis == () and I.order == 1


def test_annihilator_ideals_are_cyclic():
    ctx = ic.build_augmented_ring(2, make_field(2, 1))
    from idealcover.families import line_annihilator_ideal, line_directions
    for u in line_directions(ctx.field, 2):
        N = line_annihilator_ideal(ctx, u)
        gen = cyclic_generator(N)
        assert gen is not None
        assert ideal_closure(ctx.ring, [gen], "left").basis == N.basis


# ---------------------------------------------------------------------------
# enumeration against the brute-force oracle
# ---------------------------------------------------------------------------

def test_R12_left_ideal_lattice():
    R = ring_R12()
    lattice = enumerate_ideals(R, "left")
    assert len(lattice) == 5
    bases = {I.basis for I in lattice}
    assert bases == {(), ((1, 0),), ((0, 1),), ((1, 1),),
                     ((1, 0), (0, 1))}


def test_R12_two_sided_lattice():
    R = ring_R12()
    lattice = enumerate_ideals(R, "two-sided")
    assert [I.basis for I in lattice] == [(), ((0, 1),), ((1, 0), (0, 1))]


def test_null_ring_ideals_are_all_subspaces():
    N = ic.build_null_ring(2, 2)
    for side in ("left", "right", "two-sided"):
        assert len(enumerate_ideals(N, side)) == 5


@pytest.mark.parametrize("builder", [
    lambda: ring_R12(),
    lambda: ic.build_null_ring(2, 2),
    lambda: ic.build_augmented_ring(1, make_field(3, 1)).ring,
    lambda: ic.matrix_algebra(1, make_field(2, 2)),
])
def test_enumeration_matches_subspace_filter(builder):
    R = builder()
    for side in ("left", "right", "two-sided"):
        got = {frozenset(span_of(R.p, list(I.basis)) if I.basis
                         else {R.zero})
               for I in enumerate_ideals(R, side)}
        assert got == naive_ideal_sets(R, side)


def test_enumeration_matches_subspace_filter_random():
    rng = random.Random(42)
    for _ in range(12):
        p = rng.choice([2, 3])
        R = random_algebra(p, 3, rng)
        for side in ("left", "right", "two-sided"):
            got = {frozenset(span_of(R.p, list(I.basis)) if I.basis
                             else {R.zero})
                   for I in enumerate_ideals(R, side)}
            assert got == naive_ideal_sets(R, side)


def test_null_rank4_lattice_is_the_full_subspace_lattice():
    # 67 subspaces of F_2^4, every one an ideal since all products vanish
    N = ic.build_null_ring(2, 4)
    lattice = enumerate_ideals(N, "left")
    assert len(lattice) == 67
    got = {frozenset(span_of(2, list(I.basis)) if I.basis else {N.zero})
           for I in lattice}
    from conftest import all_subspaces
    assert got == all_subspaces(2, 4)


def test_guard_reports_partial_count():
    N = ic.build_null_ring(3, 4)  # 81 elements, 5-layer subspace lattice
    with pytest.raises(ic.GuardExceeded):
        enumerate_ideals(N, "left", guards=ic.Guards(max_ideals=5))


# ---------------------------------------------------------------------------
# maximal ideals
# ---------------------------------------------------------------------------

def test_R12_maximal_left_ideals():
    R = ring_R12()
    maximal = maximal_ideals(R, "left")
    assert len(maximal) == 3
    assert all(M.order == 2 for M in maximal)


def test_R22_maximal_left_ideals():
    R = ic.build_augmented_ring(2, make_field(2, 1)).ring
    maximal = maximal_ideals(R, "left")
    assert len(maximal) == 7
    assert all(M.order == 16 for M in maximal)


def test_field_has_only_zero_ideal_maximal():
    F = ic.matrix_algebra(1, make_field(2, 1))
    maximal = maximal_ideals(F, "left")
    assert [M.basis for M in maximal] == [()]


@pytest.mark.parametrize("q,n", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_maximal_count_matches_projective_point_count(q, n):
    ctx = ic.build_augmented_ring(n, make_field(q, 1))
    maximal = maximal_ideals(ctx.ring, "left")
    assert len(maximal) == ic.covering_number_formula(n, q)


# ---------------------------------------------------------------------------
# membership
# ---------------------------------------------------------------------------

def test_zero_in_every_ideal():
    R = ring_R12()
    for I in enumerate_ideals(R, "left"):
        assert ideal_membership(I, R.zero)


def test_invertible_block_lies_in_its_graph_ideal():
    # (A | v) with A invertible belongs to the graph ideal of w = A^(-1) v
    ctx = ic.build_augmented_ring(2, make_field(2, 1))
    f = ctx.field
    A = [[f.one, f.one], [f.zero, f.one]]  # invertible over F_2
    Ainv = [[f.one, f.one], [f.zero, f.one]]  # self-inverse
    v = [f.one, f.zero]
    w = tuple(
        (sum(Ainv[i][j][0] * v[j][0] for j in range(2)) % 2,)
        for i in range(2))
    x = ctx.embed(A, v)
    L = ic.vector_graph_ideal(ctx, w)
    assert ideal_membership(L, x)


def test_membership_false_outside_span():
    R = ring_R12()
    J = ideal_from_rows(R, ((0, 1),), "left")
    assert not ideal_membership(J, (1, 0))


def test_membership_rejects_wrong_length():
    R = ring_R12()
    J = ideal_from_rows(R, ((0, 1),), "left")
    with pytest.raises(ValueError):
        ideal_membership(J, (1, 0, 0))


# ---------------------------------------------------------------------------
# canonical forms and module structure
# ---------------------------------------------------------------------------

def test_equality_is_echelon_identity():
    R = ring_R12()
    a = ideal_from_rows(R, ((0, 1),), "left")
    b = ideal_from_rows(R, ((0, 1),), "two-sided")
    c = ideal_from_rows(R, ((1, 0),), "left")
    assert a == b
    assert a != c
    assert len({a, b, c}) == 2


def test_left_ideals_are_stable_under_matrix_block():
    # left ideals of the augmented ring are modules over its matrix corner
    ctx = ic.build_augmented_ring(2, make_field(2, 1))
    R = ctx.ring
    f = ctx.field
    s_basis = []
    for a in range(2):
        for b in range(2):
            A = [[f.zero] * 2 for _ in range(2)]
            A[a][b] = f.one
            s_basis.append(ctx.embed(A, [f.zero, f.zero]))
    for I in enumerate_ideals(R, "left"):
        for s in s_basis:
            for row in I.basis:
                assert ideal_membership(I, R.mul(s, row))


def test_ideal_ordering_is_by_dimension_then_matrix():
    R = ring_R12()
    lattice = enumerate_ideals(R, "left")
    keys = [I.sort_key() for I in lattice]
    assert keys == sorted(keys)
