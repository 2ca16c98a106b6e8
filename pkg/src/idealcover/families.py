"""Built-in ring families and their canonical covers.

The central family is the augmented matrix ring: all (n+1) x (n+1)
matrices over F_q whose last row is zero, written as pairs (A | v) with
A an n x n block and v a column vector, multiplying by

    (A | v)(B | w) = (AB | Aw).

It has a left identity (I | 0) but no right identity, its radical is the
set of pure columns (0 | v), and its maximal left ideals come in two
cyclic families: the graph ideals {(A | Av)} of a fixed vector v, and the
annihilator ideals {(A | w) : A u = 0} of a fixed line direction u.
Together those form its unique minimal cover by left ideals.

Null rings (all products zero) complete the picture on the two-sided
side: their ideals are exactly their additive subgroups.
"""

from .gf import is_prime
from .ideals import ideal_from_rows
from .kernels import rref
from .ring import make_ring


class AugmentedMatrixRing:
    """The ring of pairs (A | v) over F_q with its coordinate layout.

    F_p-basis order: matrix block entries (a, b, t) with the field-power
    index t fastest, then vector block entries (i, t).  Dimension is
    k * (n^2 + n) over F_p where q = p^k.
    """

    __slots__ = ("n", "field", "ring")

    def __init__(self, n, field, ring):
        self.n = n
        self.field = field
        self.ring = ring

    @property
    def matrix_dim(self):
        return self.field.k * self.n * self.n

    def mat_index(self, a, b, t):
        return (a * self.n + b) * self.field.k + t

    def vec_index(self, i, t):
        return self.matrix_dim + i * self.field.k + t

    def embed(self, A, v):
        """Coordinates of (A | v); A is an n x n array of field elements,
        v a length-n list of field elements."""
        coords = [0] * self.ring.d
        for a in range(self.n):
            for b in range(self.n):
                for t in range(self.field.k):
                    coords[self.mat_index(a, b, t)] = A[a][b][t]
        for i in range(self.n):
            for t in range(self.field.k):
                coords[self.vec_index(i, t)] = v[i][t]
        return tuple(coords)

    def left_identity(self):
        f = self.field
        A = [[f.one if a == b else f.zero for b in range(self.n)]
             for a in range(self.n)]
        return self.embed(A, [f.zero] * self.n)


def build_augmented_ring(n, f):
    """The augmented matrix ring over the field f, with context."""
    if n < 1:
        raise ValueError("block size must be at least 1")
    p, k = f.p, f.k
    nn = n * n
    d = k * (nn + n)

    def mat_index(a, b, t):
        return (a * n + b) * k + t

    def vec_index(i, t):
        return k * nn + i * k + t

    powprod = [[None] * k for _ in range(k)]
    for s in range(k):
        es = tuple(1 if t == s else 0 for t in range(k))
        for t in range(k):
            et = tuple(1 if u == t else 0 for u in range(k))
            powprod[s][t] = f.mul(es, et)

    zero = (0,) * d
    sc = [[zero] * d for _ in range(d)]
    # matrix * matrix: E_ab theta^s  *  E_ce theta^t = delta_bc E_ae theta^(s+t)
    for a in range(n):
        for b in range(n):
            for s in range(k):
                row_i = mat_index(a, b, s)
                for e in range(n):
                    for t in range(k):
                        coeffs = powprod[s][t]
                        vec = [0] * d
                        for u in range(k):
                            vec[mat_index(a, e, u)] = coeffs[u]
                        sc[row_i][mat_index(b, e, t)] = tuple(vec)
                # matrix * vector: E_ab theta^s * (0 | e_c theta^t)
                for t in range(k):
                    coeffs = powprod[s][t]
                    vec = [0] * d
                    for u in range(k):
                        vec[vec_index(a, u)] = coeffs[u]
                    sc[row_i][vec_index(b, t)] = tuple(vec)
    # vector * anything = 0 (already zero)
    ring = make_ring(p, d, tuple(sc))
    return AugmentedMatrixRing(n, f, ring)


def vector_graph_ideal(ctx, v):
    """The left ideal {(A | Av)} of a fixed vector v; maximal and cyclic,
    generated by (I | v)."""
    f = ctx.field
    if len(v) != ctx.n:
        raise ValueError("vector length must match the block size")
    rows = []
    for a in range(ctx.n):
        for b in range(ctx.n):
            for t in range(f.k):
                # image of the basis matrix E_ab theta^t: (A | Av) with
                # A = E_ab theta^t, so the vector part is e_a (theta^t v_b)
                A = [[f.zero] * ctx.n for _ in range(ctx.n)]
                theta_t = tuple(1 if u == t else 0 for u in range(f.k))
                A[a][b] = theta_t
                w = [f.zero] * ctx.n
                w[a] = f.mul(theta_t, v[b])
                rows.append(ctx.embed(A, w))
    basis = rref(ctx.ring.p, ctx.ring.d, rows)
    return ideal_from_rows(ctx.ring, basis, "left")


def line_annihilator_ideal(ctx, direction):
    """The left ideal {(A | w) : A u = 0, w arbitrary} of the line through u.

    The direction u must be nonzero; the matrix part is the solution space
    of A u = 0, which is F_p-linear in the entries of A.
    """
    f = ctx.field
    n = ctx.n
    if len(direction) != n:
        raise ValueError("direction length must match the block size")
    if all(all(c == 0 for c in x) for x in direction):
        raise ValueError("direction vector must be nonzero")
    # Solve A u = 0 row by row: each matrix row r gives sum_b A[r][b] u_b = 0,
    # an F_p-linear condition on the k*n unknown coordinates of that row.
    k = f.k
    unknowns = n * k  # coordinates of one matrix row
    eqs = []
    for t_out in range(k):
        eq = []
        for b in range(n):
            for t in range(k):
                theta_t = tuple(1 if u == t else 0 for u in range(k))
                prod = f.mul(theta_t, direction[b])
                eq.append(prod[t_out])
        eqs.append(tuple(eq))
    from .linalg import nullspace
    row_solutions = nullspace(f.p, unknowns, eqs)
    rows = []
    for r in range(n):
        for sol in row_solutions:
            A = [[f.zero] * n for _ in range(n)]
            for b in range(n):
                A[r][b] = tuple(sol[b * k:(b + 1) * k])
            rows.append(ctx.embed(A, [f.zero] * n))
    for i in range(n):
        for t in range(k):
            w = [f.zero] * n
            w[i] = tuple(1 if u == t else 0 for u in range(k))
            A = [[f.zero] * n for _ in range(n)]
            rows.append(ctx.embed(A, w))
    basis = rref(ctx.ring.p, ctx.ring.d, rows)
    return ideal_from_rows(ctx.ring, basis, "left")


def line_directions(f, n):
    """One canonical direction per line of F_q^n: first nonzero entry is 1,
    enumerated in index order."""
    q = f.q
    seen = set()
    out = []
    for idx in range(1, q ** n):
        rem = idx
        vec = []
        for _ in range(n):
            vec.append(f.element_from_index(rem % q))
            rem //= q
        vec = tuple(vec)
        # normalize by the inverse of the first nonzero coordinate
        lead = next(x for x in vec if any(x))
        inv = f.inv(lead)
        norm = tuple(f.mul(inv, x) for x in vec)
        if norm not in seen:
            seen.add(norm)
            out.append(norm)
    return out


def canonical_cover(ctx):
    """The q^n graph ideals plus the (q^n - 1)/(q - 1) line annihilators.

    This is the unique minimal cover of the augmented matrix ring by left
    ideals; every member is maximal and cyclic.
    """
    f = ctx.field
    n = ctx.n
    cover = []
    for idx in range(f.q ** n):
        rem = idx
        v = []
        for _ in range(n):
            v.append(f.element_from_index(rem % f.q))
            rem //= f.q
        cover.append(vector_graph_ideal(ctx, tuple(v)))
    for u in line_directions(f, n):
        cover.append(line_annihilator_ideal(ctx, u))
    return cover


def covering_number_formula(n, q):
    """(q^(n+1) - 1)/(q - 1): the target left covering number."""
    _check_prime_power(q)
    if n < 1:
        raise ValueError("n must be at least 1")
    return (q ** (n + 1) - 1) // (q - 1)


def line_count(n, q):
    """(q^n - 1)/(q - 1): the number of lines through 0 in F_q^n."""
    _check_prime_power(q)
    if n < 1:
        raise ValueError("n must be at least 1")
    return (q ** n - 1) // (q - 1)


def _check_prime_power(q):
    base = factor_prime_power(q)
    if base is None:
        raise ValueError(f"{q} is not a prime power")


def factor_prime_power(q):
    """(p, k) with q = p^k, or None if q is not a prime power."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if not is_prime(p):
            continue
        if q % p:
            continue
        k = 0
        m = q
        while m % p == 0:
            m //= p
            k += 1
        return (p, k) if m == 1 else None
    return None


def build_null_ring(p, r):
    """The null ring of dimension r over F_p: every product is zero, so
    its ideals on every side are exactly its additive subgroups."""
    if not is_prime(p):
        raise ValueError(f"characteristic must be prime, got {p}")
    if r < 1:
        raise ValueError("rank must be at least 1")
    zero = (0,) * r
    sc = tuple(tuple(zero for _ in range(r)) for _ in range(r))
    return make_ring(p, r, sc)
