"""Quasi-regularity, the Jacobson radical, and semisimple complements.

The radical is computed in two independent ways:

  * jacobson_radical: the definitional membership test in R itself, via
    quasi-regularity of R*a (and of a, which is implied but checked),
  * radical_dorroh_oracle: the intersection of the maximal left ideals
    of the unital extension F_p x R, projected back into R.

The two must agree on every ring; a disagreement is reported as a defect
rather than resolved silently.
"""

from . import kernels as K
from .errors import DEFAULT_GUARDS, DecompositionError, EngineError, GuardExceeded
from .ideals import IdealBasis, ideal_from_rows, maximal_ideals
from .linalg import intersect_rowspaces, nullspace
from .ring import dorroh


def circle(R, a, b):
    """Monoid operation a + b - a*b; 0 is its identity element."""
    p = R.p
    ab = R.mul(a, b)
    return tuple((x + y - z) % p for x, y, z in zip(a, b, ab))


def left_quasi_inverse(R, a):
    """A witness b with circle(b, a) = 0, or None."""
    return K.lqr_witness(R.p, R.d, R._flat, a)


def left_quasi_regular(R, a):
    """True iff a has a left inverse in the circle monoid."""
    return left_quasi_inverse(R, a) is not None


def jacobson_radical(R, guards=DEFAULT_GUARDS):
    """The radical {a : a and all of R*a are left quasi-regular}, as a
    verified two-sided ideal in canonical form."""
    if R.order > guards.max_elements:
        raise GuardExceeded(
            f"radical membership scan of {R.order} elements exceeds cap "
            f"{guards.max_elements}")
    members = K.radical_members(R.p, R.d, R._flat)
    basis = K.rref(R.p, R.d, members)
    if len(members) != R.p ** len(basis):
        raise EngineError(
            "defect: radical membership set is not an F_p-subspace")
    return ideal_from_rows(R, basis, "two-sided")


def radical_dorroh_oracle(R, guards=DEFAULT_GUARDS):
    """Radical of R via maximal left ideals of the unital extension.

    Builds F_p x R, intersects all of its maximal left ideals, checks the
    intersection lies in {0} x R, and returns the projection to R.
    """
    E = dorroh(R)
    if E.order > guards.max_elements:
        raise GuardExceeded(
            f"unital extension has {E.order} elements, exceeding cap "
            f"{guards.max_elements}")
    maximal = maximal_ideals(E, "left", guards=guards)
    rows = tuple(E.basis_vector(i) for i in range(E.d))
    for M in maximal:
        rows = intersect_rowspaces(E.p, E.d, rows, M.basis)
    if any(row[0] for row in rows):
        raise EngineError(
            "defect: radical of the unital extension is not inside {0} x R")
    basis = K.rref(R.p, R.d, [row[1:] for row in rows])
    return ideal_from_rows(R, basis, "two-sided")


class Decomposition:
    """Splitting R = S (+) J with S multiplicatively closed and J the radical.

    When the radical annihilates the ring from the left, the split refines
    to J = SJ (+) K with K = {x in J : Rx = 0}; sj_basis and k_basis stay
    None for rings where that identity fails.
    """

    __slots__ = ("ring", "s_basis", "j_basis", "sj_basis", "k_basis")

    def __init__(self, ring, s_basis, j_basis, sj_basis=None, k_basis=None):
        self.ring = ring
        self.s_basis = s_basis
        self.j_basis = j_basis
        self.sj_basis = sj_basis
        self.k_basis = k_basis

    def __repr__(self):
        return (f"Decomposition(dim S={len(self.s_basis)}, "
                f"dim J={len(self.j_basis)})")


def wedderburn_complement(R, guards=DEFAULT_GUARDS):
    """Find a multiplicatively closed subspace S with R = S (+) J.

    Lifts a basis of R/J back into R, adjusting each lift by radical
    elements in lexicographic order and backtracking whenever a product
    of chosen lifts leaves the partial span.  Existence is guaranteed in
    prime characteristic, so the search only fails by exceeding guards.
    """
    from .ring import quotient

    J = jacobson_radical(R, guards=guards)
    j_rows = J.basis
    if len(j_rows) == R.d:
        return _with_split(R, Decomposition(R, (), j_rows))

    Q, project = quotient(R, J)
    m = Q.d
    pivots = [next(t for t in range(R.d) if row[t]) for row in j_rows]
    free = [t for t in range(R.d) if t not in pivots]

    def lift0(y):
        vec = [0] * R.d
        for c, t in zip(y, free):
            vec[t] = c
        return tuple(vec)

    # Lexicographically ordered radical elements used to adjust each lift.
    j_elems = []
    mask = IdealBasis(R, j_rows, "two-sided").element_mask()
    while mask:
        low = mask & -mask
        mask ^= low
        j_elems.append(R.element_from_index(low.bit_length() - 1))
    j_elems.sort()

    base = [lift0(Q.basis_vector(i)) for i in range(m)]
    chosen = [None] * m
    budget = [guards.max_search_nodes]

    def products_ok(t):
        # Check every product of chosen lifts that became decidable at step
        # t: both factors and the whole quotient expansion lie in [0..t],
        # and at least one of them is t (so each pair is checked once).
        for i in range(t + 1):
            for j in range(t + 1):
                coeffs = Q.sc[i][j]
                supmax = -1
                for u in range(m):
                    if coeffs[u]:
                        supmax = u
                if supmax > t:
                    continue
                if i != t and j != t and supmax != t:
                    continue
                want = [0] * R.d
                for u in range(t + 1):
                    c = coeffs[u]
                    if c:
                        for w in range(R.d):
                            want[w] = (want[w] + c * chosen[u][w]) % R.p
                if R.mul(chosen[i], chosen[j]) != tuple(want):
                    return False
        return True

    def search(t):
        if t == m:
            return True
        for adj in j_elems:
            budget[0] -= 1
            if budget[0] < 0:
                raise GuardExceeded(
                    "complement search exceeded the node cap",
                    partial=guards.max_search_nodes)
            chosen[t] = R.add(base[t], adj)
            if products_ok(t) and search(t + 1):
                return True
        chosen[t] = None
        return False

    if not search(0):
        raise DecompositionError(
            "no multiplicatively closed complement found; the presentation "
            "is defective")
    s_rows = K.rref(R.p, R.d, chosen)
    return _with_split(R, Decomposition(R, s_rows, j_rows))


def _with_split(R, dec):
    # The SJ/K split only exists when the radical annihilates the ring
    # from the left; leave the fields unset for rings outside that case.
    try:
        dec.sj_basis, dec.k_basis = sj_and_k(R, dec)
    except DecompositionError:
        pass
    return dec


def sj_and_k(R, dec):
    """The pieces SJ = span{s*x} and K = {x in J : R*x = 0} of the radical.

    Verifies J = SJ (+) K and raises DecompositionError otherwise; the
    identity holds whenever the radical annihilates the ring from the
    left, and in particular on every elementary test family.
    """
    p, d = R.p, R.d
    sj_rows = K.rref(p, d, [R.mul(s, x)
                            for s in dec.s_basis for x in dec.j_basis])
    # K: solutions x in J of e_i * x = 0 for all i; solve over J coordinates.
    jdim = len(dec.j_basis)
    if jdim == 0:
        k_rows = ()
    else:
        cols = []
        for r in range(jdim):
            stacked = []
            for i in range(d):
                stacked.extend(K.mul(p, d, R._flat, R.basis_vector(i),
                                     dec.j_basis[r]))
            cols.append(stacked)
        # rows of the system are indexed by (i, coordinate); unknowns by r
        mat = [tuple(cols[r][row] for r in range(jdim))
               for row in range(d * d)]
        combos = nullspace(p, jdim, mat)
        k_vecs = []
        for combo in combos:
            vec = [0] * d
            for c, jrow in zip(combo, dec.j_basis):
                if c:
                    for w in range(d):
                        vec[w] = (vec[w] + c * jrow[w]) % p
            k_vecs.append(tuple(vec))
        k_rows = K.rref(p, d, k_vecs)
    merged = K.rref(p, d, sj_rows + k_rows)
    if len(merged) != len(sj_rows) + len(k_rows) or len(merged) != jdim:
        raise DecompositionError(
            "J = SJ (+) K fails for this ring: the radical does not "
            "annihilate the ring from the left")
    return sj_rows, k_rows
