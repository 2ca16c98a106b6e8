"""Left, right, and two-sided ideals as canonical echelon subspaces.

Every ideal is stored as the unique reduced-row-echelon basis of its
underlying F_p-subspace, so two IdealBasis values are equal exactly when
their echelon matrices coincide.  Enumeration builds the full lattice as
the join-closure of the cyclic ideals, which scales with the lattice size
rather than with the number of subspaces.
"""

from . import kernels as K
from .errors import DEFAULT_GUARDS, GuardExceeded

SIDES = ("left", "right", "two-sided")
_SIDE_CODE = {"left": 0, "right": 1, "two-sided": 2}


def side_code(side):
    try:
        return _SIDE_CODE[side]
    except KeyError:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}") from None


class IdealBasis:
    """A verified side-ideal of a ring, in canonical echelon form."""

    __slots__ = ("side", "basis", "ring", "_mask")

    def __init__(self, ring, basis, side):
        self.ring = ring
        self.basis = basis
        self.side = side
        self._mask = None

    @property
    def dim(self):
        return len(self.basis)

    @property
    def order(self):
        return self.ring.p ** len(self.basis)

    def is_zero(self):
        return not self.basis

    def is_full(self):
        return len(self.basis) == self.ring.d

    def contains(self, x):
        if not self.basis:
            return not any(x)
        return not any(K.reduce_vector(self.ring.p, self.ring.d, self.basis, x))

    def element_mask(self):
        """Integer bitmask over element indexes of every span member."""
        if self._mask is None:
            packed = K.span_bitpack(self.ring.p, self.ring.d, self.basis)
            self._mask = int.from_bytes(packed, "little")
        return self._mask

    def elements(self):
        """All members of the ideal, in mask order."""
        R = self.ring
        mask = self.element_mask()
        out = []
        while mask:
            low = mask & -mask
            idx = low.bit_length() - 1
            out.append(R.element_from_index(idx))
            mask ^= low
        return out

    def sort_key(self):
        return (len(self.basis), self.basis)

    def __eq__(self, other):
        return isinstance(other, IdealBasis) and self.basis == other.basis

    def __hash__(self):
        return hash(self.basis)

    def __repr__(self):
        return f"IdealBasis(side={self.side!r}, dim={self.dim}, basis={self.basis!r})"


def ideal_from_rows(R, rows, side):
    """Canonicalize `rows` and verify side-closure; the checked constructor."""
    from .errors import SideError

    code = side_code(side)
    basis = K.rref(R.p, R.d, rows)
    if not K.closed_under(R.p, R.d, R._flat, basis, code):
        raise SideError(f"subspace is not a {side} ideal")
    return IdealBasis(R, basis, side)


def ideal_closure(R, gens, side):
    """Smallest side-ideal of R containing the generators."""
    code = side_code(side)
    basis = K.closure_rows(R.p, R.d, R._flat, tuple(gens), code)
    return IdealBasis(R, basis, side)


def zero_ideal(R, side):
    side_code(side)
    return IdealBasis(R, (), side)


def full_ideal(R, side):
    side_code(side)
    basis = tuple(R.basis_vector(i) for i in range(R.d))
    return IdealBasis(R, basis, side)


def enumerate_ideals(R, side, guards=DEFAULT_GUARDS):
    """The complete lattice of side-ideals, sorted by (dimension, basis).

    Computed as the join-closure of the cyclic ideals of all ring elements
    plus the zero ideal.  Every ideal is a sum of the cyclic ideals of its
    own elements, so the closure reaches the whole lattice.  Raises
    GuardExceeded (with the partial count) past guards.max_ideals.
    """
    code = side_code(side)
    p, d, flat = R.p, R.d, R._flat
    if R.order > guards.max_elements:
        raise GuardExceeded(
            f"cyclic-ideal scan of {R.order} elements exceeds cap "
            f"{guards.max_elements}")
    seen = {(): IdealBasis(R, (), side)}
    coords = [0] * d
    for _ in range(R.order):
        basis = K.closure_rows(p, d, flat, (tuple(coords),), code)
        if basis not in seen:
            seen[basis] = IdealBasis(R, basis, side)
        t = d - 1
        while t >= 0 and coords[t] == p - 1:
            coords[t] = 0
            t -= 1
        if t < 0:
            break
        coords[t] += 1
    frontier = list(seen.keys())
    while frontier:
        fresh = []
        for a in frontier:
            for b in list(seen.keys()):
                joined = K.rref(p, d, a + b)
                if joined not in seen:
                    seen[joined] = IdealBasis(R, joined, side)
                    fresh.append(joined)
                    if len(seen) > guards.max_ideals:
                        raise GuardExceeded(
                            f"ideal lattice exceeds cap {guards.max_ideals}",
                            partial=len(seen))
        frontier = fresh
    return sorted(seen.values(), key=IdealBasis.sort_key)


def maximal_ideals(R, side, guards=DEFAULT_GUARDS, lattice=None):
    """Proper ideals with nothing properly between them and R."""
    if lattice is None:
        lattice = enumerate_ideals(R, side, guards=guards)
    proper = [I for I in lattice if not I.is_full()]
    proper.sort(key=lambda I: (-I.dim, I.basis))
    maximal = []
    for I in proper:
        mask = I.element_mask()
        if not any(mask | M.element_mask() == M.element_mask() for M in maximal):
            maximal.append(I)
    maximal.sort(key=IdealBasis.sort_key)
    return maximal


def ideal_membership(I, x):
    """True iff x reduces to zero against the ideal's echelon basis."""
    if len(x) != I.ring.d:
        raise ValueError("element has the wrong length for this ring")
    return I.contains(x)


def cyclic_generator(I, guards=DEFAULT_GUARDS):
    """An element generating I as a side-ideal, or None if I is not cyclic.

    Scans the members of I in mask order; the first whose cyclic closure
    has full dimension wins, so the result is deterministic.
    """
    R = I.ring
    code = side_code(I.side)
    if I.is_zero():
        return R.zero
    mask = I.element_mask()
    while mask:
        low = mask & -mask
        mask ^= low
        idx = low.bit_length() - 1
        x = R.element_from_index(idx)
        closed = K.closure_rows(R.p, R.d, R._flat, (x,), code)
        if len(closed) == I.dim:
            return x
    return None
