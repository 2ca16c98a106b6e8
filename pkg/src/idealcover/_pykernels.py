"""Pure-Python kernels for F_p vector arithmetic over structure-constant tables.

This module is the reference backend.  `idealcover._ckernels` is a compiled
twin with the same signatures and bit-identical results; `idealcover.kernels`
picks one at import time.

Conventions shared by both backends:

  * a ring is (p, d, sc) with sc a flat int sequence of length d*d*d;
    sc[(i*d + j)*d + k] is the e_k coefficient of the product e_i * e_j
  * vectors are tuples of ints in [0, p), length d
  * a subspace basis is a tuple of vectors in reduced row echelon form,
    ordered by pivot column; this form is unique per subspace
  * element index = the rank of a coordinate vector in lexicographic
    order, i.e. the base-p value of the vector read left to right
  * bit tables (span_bitpack, lqr_table) are little-endian packed bits
    over element indexes
  * sides are encoded 0 = left, 1 = right, 2 = two-sided
"""

_INV_CACHE = {}


def _inverses(p):
    """Table of multiplicative inverses mod p (index 0 unused)."""
    table = _INV_CACHE.get(p)
    if table is None:
        table = [0] * p
        for a in range(1, p):
            table[a] = pow(a, p - 2, p)
        _INV_CACHE[p] = table
    return table


def mul(p, d, sc, a, b):
    """Bilinear product of coordinate vectors a, b under the table sc."""
    out = [0] * d
    for i in range(d):
        ai = a[i]
        if ai == 0:
            continue
        base_i = i * d
        for j in range(d):
            bj = b[j]
            if bj == 0:
                continue
            c = (ai * bj) % p
            row = (base_i + j) * d
            for k in range(d):
                s = sc[row + k]
                if s:
                    out[k] = (out[k] + c * s) % p
    return tuple(out)


def _basis_product_left(p, d, sc, i, g):
    """e_i * g for a coordinate vector g."""
    out = [0] * d
    base = i * d
    for j in range(d):
        gj = g[j]
        if gj == 0:
            continue
        row = (base + j) * d
        for k in range(d):
            s = sc[row + k]
            if s:
                out[k] = (out[k] + gj * s) % p
    return out


def _basis_product_right(p, d, sc, g, j):
    """g * e_j for a coordinate vector g."""
    out = [0] * d
    for i in range(d):
        gi = g[i]
        if gi == 0:
            continue
        row = (i * d + j) * d
        for k in range(d):
            s = sc[row + k]
            if s:
                out[k] = (out[k] + gi * s) % p
    return out


class _Echelon:
    """Incremental reduced-row-echelon accumulator over F_p."""

    __slots__ = ("p", "width", "rows", "pivots", "inv")

    def __init__(self, p, width):
        self.p = p
        self.width = width
        self.rows = []
        self.pivots = []
        self.inv = _inverses(p)

    def reduce(self, v):
        """Residue of v modulo the current row span (does not insert)."""
        p = self.p
        w = list(v)
        for row, piv in zip(self.rows, self.pivots):
            c = w[piv]
            if c:
                for t in range(piv, self.width):
                    w[t] = (w[t] - c * row[t]) % p
        return w

    def insert(self, v):
        """Add v to the span. Returns True if the rank grew."""
        p = self.p
        w = self.reduce(v)
        piv = -1
        for t in range(self.width):
            if w[t]:
                piv = t
                break
        if piv < 0:
            return False
        c = self.inv[w[piv]]
        if c != 1:
            for t in range(piv, self.width):
                w[t] = (w[t] * c) % p
        for row in self.rows:
            c = row[piv]
            if c:
                for t in range(piv, self.width):
                    row[t] = (row[t] - c * w[t]) % p
        at = 0
        while at < len(self.pivots) and self.pivots[at] < piv:
            at += 1
        self.rows.insert(at, w)
        self.pivots.insert(at, piv)
        return True

    def snapshot(self):
        return tuple(tuple(row) for row in self.rows)


def rref(p, width, rows):
    """Canonical reduced row echelon basis for the span of `rows`."""
    ech = _Echelon(p, width)
    for v in rows:
        ech.insert(v)
    return ech.snapshot()


def reduce_vector(p, width, rows, v):
    """Residue of v modulo the span of `rows` (rows must be in RREF)."""
    ech = _Echelon(p, width)
    ech.rows = [list(r) for r in rows]
    ech.pivots = [next(t for t in range(width) if r[t]) for r in rows]
    return tuple(ech.reduce(v))


def closure_rows(p, d, sc, gens, side):
    """Basis of the smallest side-ideal containing `gens`.

    One round of basis products suffices: for a left ideal the span of
    {g} u {e_i g} is already left-stable because e_j(e_i g) = (e_j e_i)g
    re-expands over the same products, and symmetrically on the right.
    """
    ech = _Echelon(p, d)
    for g in gens:
        ech.insert(g)
        if side == 0 or side == 2:
            for i in range(d):
                ech.insert(_basis_product_left(p, d, sc, i, g))
        if side == 1 or side == 2:
            for j in range(d):
                ech.insert(_basis_product_right(p, d, sc, g, j))
        if side == 2:
            for i in range(d):
                gi = _basis_product_left(p, d, sc, i, g)
                if any(gi):
                    for j in range(d):
                        ech.insert(_basis_product_right(p, d, sc, gi, j))
    return ech.snapshot()


def closed_under(p, d, sc, rows, side):
    """True iff the span of `rows` (RREF) absorbs ring products on `side`."""
    ech = _Echelon(p, d)
    ech.rows = [list(r) for r in rows]
    ech.pivots = [next(t for t in range(d) if r[t]) for r in rows]
    for b in rows:
        for i in range(d):
            if side == 0 or side == 2:
                if any(ech.reduce(_basis_product_left(p, d, sc, i, b))):
                    return False
            if side == 1 or side == 2:
                if any(ech.reduce(_basis_product_right(p, d, sc, b, i))):
                    return False
    return True


def associativity_witness(p, d, sc):
    """First basis triple (i, j, k) violating associativity, or None."""
    for i in range(d):
        for j in range(d):
            u = [sc[(i * d + j) * d + t] for t in range(d)]
            for k in range(d):
                lhs = _basis_product_right(p, d, sc, u, k)
                v = [sc[(j * d + k) * d + t] for t in range(d)]
                rhs = _basis_product_left(p, d, sc, i, v)
                if lhs != rhs:
                    return (i, j, k)
    return None


def identity_scan(p, d, sc):
    """All left and right identities, found by scanning every element.

    Elements are visited in lexicographic coordinate order; each candidate
    check exits on the first basis vector it fails to fix.
    """
    lefts = []
    rights = []
    coords = [0] * d
    total = p ** d
    for _ in range(total):
        is_left = True
        for j in range(d):
            ej = [0] * d
            for i in range(d):
                ci = coords[i]
                if ci == 0:
                    continue
                row = (i * d + j) * d
                for k in range(d):
                    s = sc[row + k]
                    if s:
                        ej[k] = (ej[k] + ci * s) % p
            if any(ej[k] != (1 if k == j else 0) for k in range(d)):
                is_left = False
                break
        if is_left:
            lefts.append(tuple(coords))
        is_right = True
        for j in range(d):
            ej = [0] * d
            for i in range(d):
                ci = coords[i]
                if ci == 0:
                    continue
                row = (j * d + i) * d
                for k in range(d):
                    s = sc[row + k]
                    if s:
                        ej[k] = (ej[k] + ci * s) % p
            if any(ej[k] != (1 if k == j else 0) for k in range(d)):
                is_right = False
                break
        if is_right:
            rights.append(tuple(coords))
        t = d - 1
        while t >= 0 and coords[t] == p - 1:
            coords[t] = 0
            t -= 1
        if t < 0:
            break
        coords[t] += 1
    return tuple(lefts), tuple(rights)


def _solve(p, n, matrix, rhs):
    """Solve an n x n system over F_p in place; free variables are set to 0.

    Returns a solution list or None if the system is inconsistent.
    """
    inv = _inverses(p)
    aug = [list(matrix[r]) + [rhs[r]] for r in range(n)]
    pivot_cols = []
    r = 0
    for col in range(n):
        sel = -1
        for rr in range(r, n):
            if aug[rr][col]:
                sel = rr
                break
        if sel < 0:
            continue
        aug[r], aug[sel] = aug[sel], aug[r]
        c = inv[aug[r][col]]
        if c != 1:
            for t in range(col, n + 1):
                aug[r][t] = (aug[r][t] * c) % p
        for rr in range(n):
            if rr != r and aug[rr][col]:
                c = aug[rr][col]
                for t in range(col, n + 1):
                    aug[rr][t] = (aug[rr][t] - c * aug[r][t]) % p
        pivot_cols.append(col)
        r += 1
        if r == n:
            break
    for rr in range(r, n):
        if aug[rr][n]:
            return None
    x = [0] * n
    for rr, col in enumerate(pivot_cols):
        x[col] = aug[rr][n]
    return x


def lqr_witness(p, d, sc, a):
    """A vector b with b + a - b*a = 0, or None if a is not left quasi-regular."""
    # b - b*a = -a is linear in b: with u_i = e_i * a, coordinate j reads
    # b_j - sum_i b_i u_i[j] = -a_j.
    u = [_basis_product_left(p, d, sc, i, a) for i in range(d)]
    matrix = [[((1 if i == j else 0) - u[i][j]) % p for i in range(d)]
              for j in range(d)]
    rhs = [(-a[j]) % p for j in range(d)]
    x = _solve(p, d, matrix, rhs)
    return None if x is None else tuple(x)


def span_bitpack(p, d, rows):
    """Packed bit table over element indexes marking the span of `rows`."""
    total = p ** d
    buf = bytearray((total + 7) >> 3)
    powers = [p ** (d - 1 - i) for i in range(d)]
    r = len(rows)
    cur = [0] * d
    digits = [0] * r
    while True:
        idx = 0
        for i in range(d):
            c = cur[i]
            if c:
                idx += c * powers[i]
        buf[idx >> 3] |= 1 << (idx & 7)
        t = r - 1
        while t >= 0 and digits[t] == p - 1:
            digits[t] = 0
            row = rows[t]
            for i in range(d):
                cur[i] = (cur[i] + row[i]) % p
            t -= 1
        if t < 0:
            break
        digits[t] += 1
        row = rows[t]
        for i in range(d):
            cur[i] = (cur[i] + row[i]) % p
    return bytes(buf)


def lqr_table(p, d, sc):
    """Packed bit table marking the left quasi-regular elements."""
    total = p ** d
    buf = bytearray((total + 7) >> 3)
    coords = [0] * d
    for idx in range(total):
        if lqr_witness(p, d, sc, coords) is not None:
            buf[idx >> 3] |= 1 << (idx & 7)
        t = d - 1
        while t >= 0 and coords[t] == p - 1:
            coords[t] = 0
            t -= 1
        if t < 0:
            break
        coords[t] += 1
    return bytes(buf)


def radical_members(p, d, sc):
    """Elements a such that a and every product t*a are left quasi-regular.

    Membership is decided against the definitional test: R*a is the span of
    the basis products e_i * a, and every element of that span must be left
    quasi-regular, as must a itself.
    """
    lqr = lqr_table(p, d, sc)
    powers = [p ** (d - 1 - i) for i in range(d)]
    members = []
    coords = [0] * d
    total = p ** d
    for idx in range(total):
        if lqr[idx >> 3] & (1 << (idx & 7)):
            rows = rref(p, d, [_basis_product_left(p, d, sc, i, coords)
                               for i in range(d)])
            r = len(rows)
            cur = [0] * d
            digits = [0] * r
            ok = True
            while True:
                j = 0
                for i in range(d):
                    c = cur[i]
                    if c:
                        j += c * powers[i]
                if not (lqr[j >> 3] & (1 << (j & 7))):
                    ok = False
                    break
                t = r - 1
                while t >= 0 and digits[t] == p - 1:
                    digits[t] = 0
                    row = rows[t]
                    for i in range(d):
                        cur[i] = (cur[i] + row[i]) % p
                    t -= 1
                if t < 0:
                    break
                digits[t] += 1
                row = rows[t]
                for i in range(d):
                    cur[i] = (cur[i] + row[i]) % p
            if ok:
                members.append(tuple(coords))
        t = d - 1
        while t >= 0 and coords[t] == p - 1:
            coords[t] = 0
            t -= 1
        if t < 0:
            break
        coords[t] += 1
    return tuple(members)
