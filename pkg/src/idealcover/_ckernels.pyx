# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: a bit-identical twin of idealcover._pykernels.

Same signatures, same outputs, same orderings.  Inputs outside the
compiled limits (d > 64 or p > 251) are delegated to the pure backend.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memmove, memset

from . import _pykernels

cdef enum:
    MAXD = 64


cdef inline int md(long x, int p) noexcept:
    x %= p
    if x < 0:
        x += p
    return <int>x


cdef void fill_inv(int p, int* inv) noexcept:
    cdef int a, e
    cdef long acc, base
    inv[0] = 0
    for a in range(1, p):
        acc = 1
        base = a
        e = p - 2
        while e:
            if e & 1:
                acc = (acc * base) % p
            base = (base * base) % p
            e >>= 1
        inv[a] = <int>acc


cdef bint in_limits(int p, int d) noexcept:
    return p <= 251 and 0 <= d <= MAXD


cdef tuple arr_tuple(const int* arr, int n):
    out = []
    cdef int t
    for t in range(n):
        out.append(arr[t])
    return tuple(out)


# ---------------------------------------------------------------------------
# products
# ---------------------------------------------------------------------------

cdef void c_mul(int p, int d, const int* sc, const int* a, const int* b,
                int* out) noexcept:
    cdef int i, j, k, c
    cdef const int* row
    memset(out, 0, d * sizeof(int))
    for i in range(d):
        if a[i] == 0:
            continue
        for j in range(d):
            if b[j] == 0:
                continue
            c = md(<long>a[i] * b[j], p)
            row = sc + (i * d + j) * d
            for k in range(d):
                if row[k]:
                    out[k] = md(out[k] + <long>c * row[k], p)


cdef void c_left_basis(int p, int d, const int* sc, int i, const int* g,
                       int* out) noexcept:
    cdef int j, k
    cdef const int* row
    memset(out, 0, d * sizeof(int))
    for j in range(d):
        if g[j] == 0:
            continue
        row = sc + (i * d + j) * d
        for k in range(d):
            if row[k]:
                out[k] = md(out[k] + <long>g[j] * row[k], p)


cdef void c_right_basis(int p, int d, const int* sc, const int* g, int j,
                        int* out) noexcept:
    cdef int i, k
    cdef const int* row
    memset(out, 0, d * sizeof(int))
    for i in range(d):
        if g[i] == 0:
            continue
        row = sc + (i * d + j) * d
        for k in range(d):
            if row[k]:
                out[k] = md(out[k] + <long>g[i] * row[k], p)


# ---------------------------------------------------------------------------
# echelon state: rows is an nrows x width C matrix kept in RREF with
# ascending pivots; piv[r] is the pivot column of row r
# ---------------------------------------------------------------------------

cdef void ech_reduce(int p, int width, const int* rows, const int* piv,
                     int nrows, int* v) noexcept:
    cdef int r, t, c
    cdef const int* row
    for r in range(nrows):
        c = v[piv[r]]
        if c:
            row = rows + r * width
            for t in range(piv[r], width):
                if row[t]:
                    v[t] = md(v[t] - <long>c * row[t], p)


cdef int ech_insert(int p, int width, int* rows, int* piv, int nrows,
                    int* v, const int* inv) noexcept:
    """Insert v into the RREF state; returns the new row count."""
    cdef int r, t, c, pv, at
    ech_reduce(p, width, rows, piv, nrows, v)
    pv = -1
    for t in range(width):
        if v[t]:
            pv = t
            break
    if pv < 0:
        return nrows
    c = inv[v[pv]]
    if c != 1:
        for t in range(pv, width):
            if v[t]:
                v[t] = md(<long>v[t] * c, p)
    for r in range(nrows):
        c = rows[r * width + pv]
        if c:
            for t in range(pv, width):
                if v[t]:
                    rows[r * width + t] = md(
                        rows[r * width + t] - <long>c * v[t], p)
    at = 0
    while at < nrows and piv[at] < pv:
        at += 1
    if at < nrows:
        memmove(rows + (at + 1) * width, rows + at * width,
                (nrows - at) * width * sizeof(int))
        memmove(piv + at + 1, piv + at, (nrows - at) * sizeof(int))
    for t in range(width):
        rows[at * width + t] = v[t]
    piv[at] = pv
    return nrows + 1


cdef tuple ech_snapshot(int width, const int* rows, int nrows):
    out = []
    cdef int r
    for r in range(nrows):
        out.append(arr_tuple(rows + r * width, width))
    return tuple(out)


cdef int load_rows(int width, object rows_obj, int* rows, int* piv,
                   const int* inv, int p) except -1:
    """Load a row list (assumed independent or not) into the C RREF state."""
    cdef int nrows = 0, t
    cdef int v[2 * MAXD]
    for row in rows_obj:
        for t in range(width):
            v[t] = row[t]
        nrows = ech_insert(p, width, rows, piv, nrows, v, inv)
    return nrows


# ---------------------------------------------------------------------------
# public kernels
# ---------------------------------------------------------------------------

def mul(p, d, sc, a, b):
    cdef int cp = p, cd = d, t
    if not in_limits(cp, cd):
        return _pykernels.mul(p, d, sc, a, b)
    cdef const int[::1] scv = sc
    cdef const int* scp = NULL
    if cd:
        scp = &scv[0]
    cdef int av[MAXD]
    cdef int bv[MAXD]
    cdef int out[MAXD]
    for t in range(cd):
        av[t] = a[t]
        bv[t] = b[t]
    c_mul(cp, cd, scp, av, bv, out)
    return arr_tuple(out, cd)


def rref(p, width, rows):
    cdef int cp = p, cw = width, t, nrows = 0
    if not in_limits(cp, cw):
        return _pykernels.rref(p, width, rows)
    cdef int inv[256]
    fill_inv(cp, inv)
    cdef int* mat = <int*>malloc((cw * cw + 1) * sizeof(int))
    cdef int piv[MAXD]
    cdef int v[MAXD]
    try:
        for row in rows:
            for t in range(cw):
                v[t] = row[t]
            nrows = ech_insert(cp, cw, mat, piv, nrows, v, inv)
        return ech_snapshot(cw, mat, nrows)
    finally:
        free(mat)


def reduce_vector(p, width, rows, vec):
    cdef int cp = p, cw = width, t, nrows = 0
    if not in_limits(cp, cw):
        return _pykernels.reduce_vector(p, width, rows, vec)
    cdef int inv[256]
    fill_inv(cp, inv)
    cdef int* mat = <int*>malloc((cw * cw + 1) * sizeof(int))
    cdef int piv[MAXD]
    cdef int v[MAXD]
    try:
        nrows = load_rows(cw, rows, mat, piv, inv, cp)
        for t in range(cw):
            v[t] = vec[t]
        ech_reduce(cp, cw, mat, piv, nrows, v)
        return arr_tuple(v, cw)
    finally:
        free(mat)


def closure_rows(p, d, sc, gens, side):
    cdef int cp = p, cd = d, cside = side, t, i, j, nrows = 0
    if not in_limits(cp, cd):
        return _pykernels.closure_rows(p, d, sc, gens, side)
    cdef const int[::1] scv = sc
    cdef const int* scp = NULL
    if cd:
        scp = &scv[0]
    cdef int inv[256]
    fill_inv(cp, inv)
    cdef int* mat = <int*>malloc((cd * cd + 1) * sizeof(int))
    cdef int piv[MAXD]
    cdef int g[MAXD]
    cdef int w[MAXD]
    cdef int w2[MAXD]
    cdef int v[MAXD]
    cdef bint any_w
    try:
        for gen in gens:
            for t in range(cd):
                g[t] = gen[t]
                v[t] = g[t]
            nrows = ech_insert(cp, cd, mat, piv, nrows, v, inv)
            if cside == 0 or cside == 2:
                for i in range(cd):
                    c_left_basis(cp, cd, scp, i, g, w)
                    for t in range(cd):
                        v[t] = w[t]
                    nrows = ech_insert(cp, cd, mat, piv, nrows, v, inv)
            if cside == 1 or cside == 2:
                for j in range(cd):
                    c_right_basis(cp, cd, scp, g, j, w)
                    for t in range(cd):
                        v[t] = w[t]
                    nrows = ech_insert(cp, cd, mat, piv, nrows, v, inv)
            if cside == 2:
                for i in range(cd):
                    c_left_basis(cp, cd, scp, i, g, w)
                    any_w = False
                    for t in range(cd):
                        if w[t]:
                            any_w = True
                            break
                    if not any_w:
                        continue
                    for j in range(cd):
                        c_right_basis(cp, cd, scp, w, j, w2)
                        for t in range(cd):
                            v[t] = w2[t]
                        nrows = ech_insert(cp, cd, mat, piv, nrows, v, inv)
        return ech_snapshot(cd, mat, nrows)
    finally:
        free(mat)


def closed_under(p, d, sc, rows, side):
    cdef int cp = p, cd = d, cside = side, t, i, nrows = 0
    if not in_limits(cp, cd):
        return _pykernels.closed_under(p, d, sc, rows, side)
    cdef const int[::1] scv = sc
    cdef const int* scp = NULL
    if cd:
        scp = &scv[0]
    cdef int inv[256]
    fill_inv(cp, inv)
    cdef int* mat = <int*>malloc((cd * cd + 1) * sizeof(int))
    cdef int piv[MAXD]
    cdef int b[MAXD]
    cdef int w[MAXD]
    cdef bint bad
    try:
        nrows = load_rows(cd, rows, mat, piv, inv, cp)
        for row in rows:
            for t in range(cd):
                b[t] = row[t]
            for i in range(cd):
                if cside == 0 or cside == 2:
                    c_left_basis(cp, cd, scp, i, b, w)
                    ech_reduce(cp, cd, mat, piv, nrows, w)
                    bad = False
                    for t in range(cd):
                        if w[t]:
                            bad = True
                            break
                    if bad:
                        return False
                if cside == 1 or cside == 2:
                    c_right_basis(cp, cd, scp, b, i, w)
                    ech_reduce(cp, cd, mat, piv, nrows, w)
                    bad = False
                    for t in range(cd):
                        if w[t]:
                            bad = True
                            break
                    if bad:
                        return False
        return True
    finally:
        free(mat)


def associativity_witness(p, d, sc):
    cdef int cp = p, cd = d, i, j, k, t
    if not in_limits(cp, cd):
        return _pykernels.associativity_witness(p, d, sc)
    cdef const int[::1] scv = sc
    cdef const int* scp = NULL
    if cd:
        scp = &scv[0]
    cdef int u[MAXD]
    cdef int v[MAXD]
    cdef int lhs[MAXD]
    cdef int rhs[MAXD]
    cdef bint diff
    for i in range(cd):
        for j in range(cd):
            for t in range(cd):
                u[t] = scp[(i * cd + j) * cd + t]
            for k in range(cd):
                c_right_basis(cp, cd, scp, u, k, lhs)
                for t in range(cd):
                    v[t] = scp[(j * cd + k) * cd + t]
                c_left_basis(cp, cd, scp, i, v, rhs)
                diff = False
                for t in range(cd):
                    if lhs[t] != rhs[t]:
                        diff = True
                        break
                if diff:
                    return (i, j, k)
    return None


def identity_scan(p, d, sc):
    cdef int cp = p, cd = d, i, j, k, t, ci
    if not in_limits(cp, cd):
        return _pykernels.identity_scan(p, d, sc)
    cdef const int[::1] scv = sc
    cdef const int* scp = NULL
    if cd:
        scp = &scv[0]
    cdef int coords[MAXD]
    cdef int ej[MAXD]
    cdef const int* row
    cdef bint is_left, is_right, ok
    cdef long total = 1, step
    memset(coords, 0, cd * sizeof(int))
    for t in range(cd):
        total *= cp
    lefts = []
    rights = []
    for step in range(total):
        is_left = True
        for j in range(cd):
            memset(ej, 0, cd * sizeof(int))
            for i in range(cd):
                ci = coords[i]
                if ci == 0:
                    continue
                row = scp + (i * cd + j) * cd
                for k in range(cd):
                    if row[k]:
                        ej[k] = md(ej[k] + <long>ci * row[k], cp)
            ok = True
            for k in range(cd):
                if ej[k] != (1 if k == j else 0):
                    ok = False
                    break
            if not ok:
                is_left = False
                break
        if is_left:
            lefts.append(arr_tuple(coords, cd))
        is_right = True
        for j in range(cd):
            memset(ej, 0, cd * sizeof(int))
            for i in range(cd):
                ci = coords[i]
                if ci == 0:
                    continue
                row = scp + (j * cd + i) * cd
                for k in range(cd):
                    if row[k]:
                        ej[k] = md(ej[k] + <long>ci * row[k], cp)
            ok = True
            for k in range(cd):
                if ej[k] != (1 if k == j else 0):
                    ok = False
                    break
            if not ok:
                is_right = False
                break
        if is_right:
            rights.append(arr_tuple(coords, cd))
        t = cd - 1
        while t >= 0 and coords[t] == cp - 1:
            coords[t] = 0
            t -= 1
        if t < 0:
            break
        coords[t] += 1
    return tuple(lefts), tuple(rights)


cdef bint c_lqr(int p, int d, const int* sc, const int* a, int* aug,
                int* x) noexcept:
    """Solve b - b*a = -a; writes a witness into x, returns success.

    aug must hold d * (d + 1) ints of scratch.
    """
    cdef int i, j, t, r, col, sel, c, e, width = d + 1
    cdef int u[MAXD]
    cdef int pivcol[MAXD]
    cdef long inv_acc, inv_base
    # aug[j][i] = delta_ij - (e_i * a)[j]; aug[j][d] = -a[j]
    for i in range(d):
        c_left_basis(p, d, sc, i, a, u)
        for j in range(d):
            aug[j * width + i] = md((1 if i == j else 0) - u[j], p)
    for j in range(d):
        aug[j * width + d] = md(-a[j], p)
    r = 0
    for col in range(d):
        sel = -1
        for t in range(r, d):
            if aug[t * width + col]:
                sel = t
                break
        if sel < 0:
            continue
        if sel != r:
            for t in range(width):
                c = aug[r * width + t]
                aug[r * width + t] = aug[sel * width + t]
                aug[sel * width + t] = c
        c = aug[r * width + col]
        if c != 1:
            inv_acc = 1
            inv_base = c
            e = p - 2
            while e:
                if e & 1:
                    inv_acc = (inv_acc * inv_base) % p
                inv_base = (inv_base * inv_base) % p
                e >>= 1
            for t in range(col, width):
                aug[r * width + t] = md(aug[r * width + t] * inv_acc, p)
        for t in range(d):
            if t != r and aug[t * width + col]:
                c = aug[t * width + col]
                for j in range(col, width):
                    aug[t * width + j] = md(
                        aug[t * width + j] - <long>c * aug[r * width + j], p)
        pivcol[r] = col
        r += 1
        if r == d:
            break
    for t in range(r, d):
        if aug[t * width + d]:
            return False
    memset(x, 0, d * sizeof(int))
    for t in range(r):
        x[pivcol[t]] = aug[t * width + d]
    return True


def lqr_witness(p, d, sc, a):
    cdef int cp = p, cd = d, t
    if not in_limits(cp, cd):
        return _pykernels.lqr_witness(p, d, sc, a)
    cdef const int[::1] scv = sc
    cdef const int* scp = NULL
    if cd:
        scp = &scv[0]
    cdef int av[MAXD]
    cdef int x[MAXD]
    cdef int aug[MAXD * (MAXD + 1)]
    for t in range(cd):
        av[t] = a[t]
    if c_lqr(cp, cd, scp, av, aug, x):
        return arr_tuple(x, cd)
    return None


def span_bitpack(p, d, rows):
    cdef int cp = p, cd = d, t, i, r, nrows
    if not in_limits(cp, cd):
        return _pykernels.span_bitpack(p, d, rows)
    cdef long total = 1, idx
    for t in range(cd):
        total *= cp
    buf = bytearray((total + 7) >> 3)
    cdef unsigned char[::1] bv = buf
    cdef long powers[MAXD]
    cdef long acc = 1
    for i in range(cd - 1, -1, -1):
        powers[i] = acc
        acc *= cp
    rowlist = list(rows)
    nrows = len(rowlist)
    cdef int* mat = <int*>malloc((nrows * cd + 1) * sizeof(int))
    cdef int cur[MAXD]
    cdef int digits[MAXD]
    try:
        for r in range(nrows):
            for t in range(cd):
                mat[r * cd + t] = rowlist[r][t]
        memset(cur, 0, cd * sizeof(int))
        for r in range(nrows):
            digits[r] = 0
        while True:
            idx = 0
            for i in range(cd):
                if cur[i]:
                    idx += cur[i] * powers[i]
            bv[idx >> 3] |= 1 << (idx & 7)
            t = nrows - 1
            while t >= 0 and digits[t] == cp - 1:
                digits[t] = 0
                for i in range(cd):
                    cur[i] = md(cur[i] + mat[t * cd + i], cp)
                t -= 1
            if t < 0:
                break
            digits[t] += 1
            for i in range(cd):
                cur[i] = md(cur[i] + mat[t * cd + i], cp)
        return bytes(buf)
    finally:
        free(mat)


def lqr_table(p, d, sc):
    cdef int cp = p, cd = d, t
    if not in_limits(cp, cd):
        return _pykernels.lqr_table(p, d, sc)
    cdef const int[::1] scv = sc
    cdef const int* scp = NULL
    if cd:
        scp = &scv[0]
    cdef long total = 1, idx
    for t in range(cd):
        total *= cp
    buf = bytearray((total + 7) >> 3)
    cdef unsigned char[::1] bv = buf
    cdef int coords[MAXD]
    cdef int x[MAXD]
    cdef int aug[MAXD * (MAXD + 1)]
    memset(coords, 0, cd * sizeof(int))
    for idx in range(total):
        if c_lqr(cp, cd, scp, coords, aug, x):
            bv[idx >> 3] |= 1 << (idx & 7)
        t = cd - 1
        while t >= 0 and coords[t] == cp - 1:
            coords[t] = 0
            t -= 1
        if t < 0:
            break
        coords[t] += 1
    return bytes(buf)


def radical_members(p, d, sc):
    cdef int cp = p, cd = d, t, i, r, nrows
    if not in_limits(cp, cd):
        return _pykernels.radical_members(p, d, sc)
    cdef const int[::1] scv = sc
    cdef const int* scp = NULL
    if cd:
        scp = &scv[0]
    lqr = lqr_table(p, d, sc)
    cdef const unsigned char[::1] lv = lqr
    cdef long total = 1, idx, j
    for t in range(cd):
        total *= cp
    cdef long powers[MAXD]
    cdef long acc = 1
    for i in range(cd - 1, -1, -1):
        powers[i] = acc
        acc *= cp
    cdef int inv[256]
    fill_inv(cp, inv)
    cdef int* mat = <int*>malloc((cd * cd + 1) * sizeof(int))
    cdef int piv[MAXD]
    cdef int coords[MAXD]
    cdef int w[MAXD]
    cdef int v[MAXD]
    cdef int cur[MAXD]
    cdef int digits[MAXD]
    cdef bint ok
    members = []
    memset(coords, 0, cd * sizeof(int))
    try:
        for idx in range(total):
            if lv[idx >> 3] & (1 << (idx & 7)):
                nrows = 0
                for i in range(cd):
                    c_left_basis(cp, cd, scp, i, coords, w)
                    for t in range(cd):
                        v[t] = w[t]
                    nrows = ech_insert(cp, cd, mat, piv, nrows, v, inv)
                memset(cur, 0, cd * sizeof(int))
                for r in range(nrows):
                    digits[r] = 0
                ok = True
                while True:
                    j = 0
                    for i in range(cd):
                        if cur[i]:
                            j += cur[i] * powers[i]
                    if not (lv[j >> 3] & (1 << (j & 7))):
                        ok = False
                        break
                    t = nrows - 1
                    while t >= 0 and digits[t] == cp - 1:
                        digits[t] = 0
                        for i in range(cd):
                            cur[i] = md(cur[i] + mat[t * cd + i], cp)
                        t -= 1
                    if t < 0:
                        break
                    digits[t] += 1
                    for i in range(cd):
                        cur[i] = md(cur[i] + mat[t * cd + i], cp)
                if ok:
                    members.append(arr_tuple(coords, cd))
            t = cd - 1
            while t >= 0 and coords[t] == cp - 1:
                coords[t] = 0
                t -= 1
            if t < 0:
                break
            coords[t] += 1
        return tuple(members)
    finally:
        free(mat)
