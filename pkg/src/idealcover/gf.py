"""Arithmetic in small finite fields F_{p^k}.

Elements are little-endian coefficient tuples of length k over F_p,
representing residues of polynomials modulo a canonical irreducible
modulus.  Fields of order at most 256 carry full multiplication and
inverse tables, which is plenty for every construction in this package.
"""

from dataclasses import dataclass, field
from itertools import product


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _poly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(p, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_divmod(p, a, b):
    """Quotient and remainder of a by b over F_p (b nonzero, little-endian)."""
    a = _poly_trim(a)
    b = _poly_trim(b)
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * max(0, len(a) - len(b) + 1)
    r = list(a)
    while len(r) >= len(b):
        shift = len(r) - len(b)
        c = (r[-1] * inv_lead) % p
        q[shift] = c
        for i, bi in enumerate(b):
            r[shift + i] = (r[shift + i] - c * bi) % p
        r = _poly_trim(r)
    return q, r


def _is_irreducible(p, poly):
    """Exhaustive divisor check: no monic factor of degree 1..deg/2."""
    poly = _poly_trim(poly)
    deg = len(poly) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    for fdeg in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=fdeg):
            divisor = list(low) + [1]
            _, rem = _poly_divmod(p, poly, divisor)
            if not rem:
                return False
    return True


def canonical_modulus(p, k):
    """Lexicographically smallest monic irreducible of degree k over F_p.

    Coefficient tuples are compared little-endian, so the search order is
    itertools.product over the low coefficients.
    """
    for low in product(range(p), repeat=k):
        candidate = list(low) + [1]
        if _is_irreducible(p, candidate):
            return tuple(candidate)
    raise ValueError(f"no irreducible of degree {k} over F_{p}")  # unreachable


@dataclass(frozen=True)
class FieldSpec:
    """A concrete presentation of F_{p^k}."""

    p: int
    k: int
    modulus: tuple
    _mul_table: list = field(default=None, repr=False, compare=False)
    _inv_table: list = field(default=None, repr=False, compare=False)

    @property
    def q(self):
        return self.p ** self.k

    @property
    def zero(self):
        return (0,) * self.k

    @property
    def one(self):
        return (1,) + (0,) * (self.k - 1)

    def element_index(self, a):
        """Rank of a in the little-endian base-p enumeration."""
        idx = 0
        for i in range(self.k - 1, -1, -1):
            idx = idx * self.p + a[i]
        return idx

    def element_from_index(self, idx):
        coeffs = []
        for _ in range(self.k):
            coeffs.append(idx % self.p)
            idx //= self.p
        return tuple(coeffs)

    def elements(self):
        """All q field elements, in index order."""
        return [self.element_from_index(i) for i in range(self.q)]

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def scale(self, c, a):
        p = self.p
        return tuple((c * x) % p for x in a)

    def mul(self, a, b):
        if self._mul_table is not None:
            return self._mul_table[self.element_index(a)][self.element_index(b)]
        return self._mul_raw(a, b)

    def _mul_raw(self, a, b):
        prod = _poly_mul(self.p, a, b)
        _, rem = _poly_divmod(self.p, prod, self.modulus) if prod else ([], [])
        rem = rem + [0] * (self.k - len(rem))
        return tuple(rem)

    def inv(self, a):
        if all(x == 0 for x in a):
            raise ZeroDivisionError("0 has no multiplicative inverse")
        if self._inv_table is not None:
            return self._inv_table[self.element_index(a)]
        return self.pow(a, self.q - 2)

    def pow(self, a, e):
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self._mul_raw(result, base)
            base = self._mul_raw(base, base)
            e >>= 1
        return result


def make_field(p, k):
    """Field F_{p^k} with the canonical modulus; deterministic in (p, k)."""
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    spec = FieldSpec(p, k, canonical_modulus(p, k))
    if spec.q <= 256:
        elems = spec.elements()
        mul_table = [[spec._mul_raw(a, b) for b in elems] for a in elems]
        inv_table = [None] * spec.q
        for i, a in enumerate(elems[1:], start=1):
            inv_table[i] = spec.pow(a, spec.q - 2)
        object.__setattr__(spec, "_mul_table", mul_table)
        object.__setattr__(spec, "_inv_table", inv_table)
    return spec


def field_mul(f, a, b):
    """Product of two field elements of f."""
    return f.mul(a, b)


def field_inv(f, a):
    """Multiplicative inverse; raises ZeroDivisionError on 0."""
    return f.inv(a)
