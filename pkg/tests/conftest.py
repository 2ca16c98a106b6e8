"""Shared builders and independent oracles for the test suite.

The oracles here deliberately avoid the engine's enumeration and search
code paths: subspaces come from brute-force span generation, ideal checks
multiply out every element pair, and covering numbers come from plain
subset enumeration.
"""

from itertools import combinations, product

import idealcover as ic


# ---------------------------------------------------------------------------
# common rings
# ---------------------------------------------------------------------------

def ring_R12():
    """The 2-dim algebra with e0*e0=e0, e0*e1=e1, e1*e0=e1*e1=0."""
    z = (0, 0)
    return ic.make_ring(2, 2, (((1, 0), (0, 1)), (z, z)))


def trivial_field_ring(p=2):
    """F_p as a 1-dimensional algebra."""
    return ic.make_ring(p, 1, (((1,),),))


# ---------------------------------------------------------------------------
# brute-force linear algebra over F_p
# ---------------------------------------------------------------------------

def all_vectors(p, d):
    return [tuple(v) for v in product(range(p), repeat=d)]

def span_of(p, rows):
    """Set of all F_p-combinations of the rows, by brute force."""
    d = len(rows[0]) if rows else 0
    out = set()
    for coeffs in product(range(p), repeat=len(rows)):
        vec = [0] * d
        for c, row in zip(coeffs, rows):
            for t in range(d):
                vec[t] = (vec[t] + c * row[t]) % p
        out.add(tuple(vec))
    if not rows:
        out.add(())
    return out

def all_subspaces(p, d):
    """Every subspace of F_p^d as a frozenset of vectors (brute force)."""
    vectors = all_vectors(p, d)
    seen = set()
    for r in range(d + 1):
        for rows in combinations(vectors[1:], r):
            seen.add(frozenset(span_of(p, list(rows)) if rows else {(0,) * d}))
    return seen


def is_side_ideal(R, members, side):
    """Element-by-element ideal check on a set of vectors."""
    members = set(members)
    for x in members:
        for y in members:
            if R.add(x, y) not in members:
                return False
    for r in all_vectors(R.p, R.d):
        for x in members:
            if side in ("left", "two-sided") and R.mul(r, x) not in members:
                return False
            if side in ("right", "two-sided") and R.mul(x, r) not in members:
                return False
    return True


def naive_ideal_sets(R, side):
    """All side-ideals of R as frozensets, by filtering every subspace."""
    return {s for s in all_subspaces(R.p, R.d) if is_side_ideal(R, s, side)}


# ---------------------------------------------------------------------------
# brute-force covering numbers
# ---------------------------------------------------------------------------

def naive_covering_number(R, side):
    """Exact covering number by subset enumeration over maximal ideals."""
    maximal = ic.maximal_ideals(R, side)
    masks = [M.element_mask() for M in maximal]
    universe = (1 << R.order) - 1
    whole = 0
    for m in masks:
        whole |= m
    if whole != universe:
        return ic.INFINITY
    for r in range(1, len(masks) + 1):
        for chosen in combinations(range(len(masks)), r):
            got = 0
            for i in chosen:
                got |= masks[i]
            if got == universe:
                return r
    return ic.INFINITY
