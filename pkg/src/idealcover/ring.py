"""Finite F_p-algebras presented by structure constants.

A ring here is an associative, not necessarily unital, algebra over the
prime field F_p with a distinguished basis e_0 .. e_{d-1}.  Its additive
group is F_p^d, so the characteristic is exactly p and the order is p^d.
Elements are coordinate tuples of length d.

Presentations are validated at construction (associativity over all basis
triples, with a witness on failure) and are immutable afterwards, so every
operation in this package is a pure function and safe under concurrency.
"""

from array import array
from dataclasses import dataclass, field

from . import kernels as K
from .errors import DEFAULT_GUARDS, AssociativityError, GuardExceeded
from .gf import is_prime


@dataclass(frozen=True)
class RingPresentation:
    p: int
    d: int
    sc: tuple  # sc[i][j] = coordinate tuple of e_i * e_j
    _flat: array = field(default=None, repr=False, compare=False)
    _flags: tuple = field(default=None, repr=False, compare=False)

    @property
    def order(self):
        return self.p ** self.d

    @property
    def zero(self):
        return (0,) * self.d

    def mul(self, a, b):
        return K.mul(self.p, self.d, self._flat, a, b)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def basis_vector(self, i):
        return tuple(1 if t == i else 0 for t in range(self.d))

    def element_index(self, x):
        """Rank of x in lexicographic coordinate order."""
        idx = 0
        for c in x:
            idx = idx * self.p + c
        return idx

    def element_from_index(self, idx):
        coords = [0] * self.d
        for i in range(self.d - 1, -1, -1):
            coords[i] = idx % self.p
            idx //= self.p
        return tuple(coords)

    def elements(self, guards=DEFAULT_GUARDS):
        """All p^d elements in lexicographic order (guarded)."""
        if self.order > guards.max_elements:
            raise GuardExceeded(
                f"element scan of {self.order} elements exceeds cap "
                f"{guards.max_elements}")
        return [self.element_from_index(i) for i in range(self.order)]

    def is_element(self, x):
        return len(x) == self.d and all(0 <= c < self.p for c in x)


def _flatten(sc, d):
    flat = array("i")
    for i in range(d):
        for j in range(d):
            flat.extend(sc[i][j])
    return flat


def make_ring(p, d, sc, guards=DEFAULT_GUARDS):
    """Validated presentation from a d x d table of length-d coefficient rows.

    Raises AssociativityError (with a witness triple) if the table is not
    associative, ValueError on malformed input.  Identity flags are found
    by scanning all p^d elements when the order is within the element cap;
    otherwise they are left unknown and identity_flags() raises.
    """
    if not is_prime(p):
        raise ValueError(f"characteristic must be prime, got {p}")
    if d < 0:
        raise ValueError("dimension must be nonnegative")
    table = []
    if len(sc) != d:
        raise ValueError("structure table must have d rows")
    for i in range(d):
        if len(sc[i]) != d:
            raise ValueError("structure table must be d x d")
        row = []
        for j in range(d):
            entry = tuple(int(c) for c in sc[i][j])
            if len(entry) != d or any(not 0 <= c < p for c in entry):
                raise ValueError(
                    f"entry ({i},{j}) must be a length-{d} vector over F_{p}")
            row.append(entry)
        table.append(tuple(row))
    table = tuple(table)
    flat = _flatten(table, d)
    witness = K.associativity_witness(p, d, flat)
    if witness is not None:
        raise AssociativityError(witness)
    ring = RingPresentation(p, d, table)
    object.__setattr__(ring, "_flat", flat)
    if p ** d <= guards.max_elements:
        lefts, rights = K.identity_scan(p, d, flat)
        both = sorted(set(lefts) & set(rights))
        flags = (len(both) > 0, tuple(lefts), tuple(rights))
        object.__setattr__(ring, "_flags", flags)
    return ring


def ring_mul(R, a, b):
    """Bilinear extension of the structure table to arbitrary elements."""
    return R.mul(a, b)


def identity_flags(R):
    """(has_identity, left_identities, right_identities) from the element scan."""
    if R._flags is None:
        raise GuardExceeded(
            f"identity scan of {R.order} elements was skipped at construction")
    return R._flags


def opposite(R):
    """The opposite ring: products reversed, sc'[i][j] = sc[j][i]."""
    sc = tuple(tuple(R.sc[j][i] for j in range(R.d)) for i in range(R.d))
    return make_ring(R.p, R.d, sc)


def direct_product(rings, guards=DEFAULT_GUARDS):
    """Componentwise product; block-diagonal structure constants."""
    if not rings:
        raise ValueError("need at least one factor")
    p = rings[0].p
    if any(r.p != p for r in rings):
        raise ValueError("factors must share the same characteristic")
    d = sum(r.d for r in rings)
    offsets = []
    at = 0
    for r in rings:
        offsets.append(at)
        at += r.d
    zero = (0,) * d
    sc = [[zero] * d for _ in range(d)]
    for r, off in zip(rings, offsets):
        for i in range(r.d):
            for j in range(r.d):
                entry = r.sc[i][j]
                vec = [0] * d
                vec[off:off + r.d] = entry
                sc[off + i][off + j] = tuple(vec)
    return make_ring(p, d, sc, guards=guards)


def dorroh(R):
    """Unital extension F_p x R with (m, r)(n, s) = (mn, ms + nr + rs).

    Basis 0 is the adjoined unit; basis i+1 carries e_i of R.  The element
    (1, 0) is a two-sided identity and {0} x R is a two-sided ideal.
    """
    d = R.d + 1
    zero = (0,) * d
    sc = [[zero] * d for _ in range(d)]
    sc[0][0] = (1,) + (0,) * R.d
    for i in range(R.d):
        unit = tuple(1 if t == i + 1 else 0 for t in range(d))
        sc[0][i + 1] = unit
        sc[i + 1][0] = unit
        for j in range(R.d):
            sc[i + 1][j + 1] = (0,) + R.sc[i][j]
    return make_ring(R.p, d, sc)


def quotient(R, ideal):
    """Quotient ring R / I for a two-sided ideal, with the projection map.

    The complement basis extends the echelon basis of I by the standard
    basis vectors at its non-pivot positions, taken in index order, so
    coset representatives are canonical.  Returns (ring, project) where
    project maps an element of R to its coordinates in the quotient.

    Raises SideError if the span of I is not closed on both sides.
    """
    from .errors import SideError

    rows = ideal.basis if hasattr(ideal, "basis") else tuple(ideal)
    if not K.closed_under(R.p, R.d, R._flat, rows, 2):
        raise SideError(
            "quotient requires a two-sided ideal; the given subspace is "
            "not closed under multiplication on both sides")
    pivots = [next(t for t in range(R.d) if row[t]) for row in rows]
    free = [t for t in range(R.d) if t not in pivots]
    m = len(free)

    def project(x):
        residue = K.reduce_vector(R.p, R.d, rows, x)
        return tuple(residue[t] for t in free)

    def lift(y):
        vec = [0] * R.d
        for c, t in zip(y, free):
            vec[t] = c
        return tuple(vec)

    sc = []
    for i in range(m):
        row = []
        for j in range(m):
            prod = R.mul(lift(tuple(1 if t == i else 0 for t in range(m))),
                         lift(tuple(1 if t == j else 0 for t in range(m))))
            row.append(project(prod))
        sc.append(tuple(row))
    Q = make_ring(R.p, m, tuple(sc))
    return Q, project


def matrix_algebra(n, f):
    """M_n(F_q) as an F_p-algebra of dimension k * n^2.

    Basis order: (a, b, t) for the elementary matrix E_ab scaled by the
    t-th power of the field generator, with t fastest.
    """
    if n < 1:
        raise ValueError("matrix size must be at least 1")
    p, k = f.p, f.k
    d = k * n * n

    def bidx(a, b, t):
        return (a * n + b) * k + t

    zero = (0,) * d
    sc = [[zero] * d for _ in range(d)]
    # theta^s * theta^t expanded over the power basis
    powprod = [[None] * k for _ in range(k)]
    for s in range(k):
        es = tuple(1 if t == s else 0 for t in range(k))
        for t in range(k):
            et = tuple(1 if u == t else 0 for u in range(k))
            powprod[s][t] = f.mul(es, et)
    # E_ab theta^s * E_ce theta^t = delta_bc E_ae theta^(s+t)
    for a in range(n):
        for b in range(n):
            for s in range(k):
                for e in range(n):
                    for t in range(k):
                        coeffs = powprod[s][t]
                        vec = [0] * d
                        for u in range(k):
                            vec[bidx(a, e, u)] = coeffs[u]
                        sc[bidx(a, b, s)][bidx(b, e, t)] = tuple(vec)
    return make_ring(p, d, tuple(sc))
