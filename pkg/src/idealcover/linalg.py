"""Small F_p linear-algebra helpers that sit outside the hot kernels."""

from . import kernels as K


def nullspace(p, ncols, rows):
    """Basis of {x : M x = 0} for the matrix with the given rows over F_p.

    Returns tuples of length ncols; standard free-variable construction
    from the reduced echelon form of M.
    """
    ech = K.rref(p, ncols, [tuple(r) for r in rows if any(r)])
    pivots = [next(t for t in range(ncols) if row[t]) for row in ech]
    free = [t for t in range(ncols) if t not in pivots]
    basis = []
    for f in free:
        vec = [0] * ncols
        vec[f] = 1
        for row, piv in zip(ech, pivots):
            vec[piv] = (-row[f]) % p
        basis.append(tuple(vec))
    return tuple(basis)


def invert_matrix(p, rows):
    """Inverse of a square matrix over F_p, or None if singular."""
    n = len(rows)
    aug = [tuple(rows[i]) + tuple(1 if j == i else 0 for j in range(n))
           for i in range(n)]
    ech = K.rref(p, 2 * n, aug)
    if len(ech) != n:
        return None
    for i, row in enumerate(ech):
        if row[i] != 1 or any(row[t] for t in range(n) if t != i):
            return None
    return tuple(row[n:] for row in ech)


def intersect_rowspaces(p, width, rows_a, rows_b):
    """Canonical basis of span(rows_a) & span(rows_b), by Zassenhaus.

    Reduce the block matrix [A|A ; B|0]; rows whose left half vanished
    have right halves spanning the intersection.
    """
    stacked = [tuple(r) + tuple(r) for r in rows_a]
    stacked += [tuple(r) + (0,) * width for r in rows_b]
    ech = K.rref(p, 2 * width, stacked)
    inter = [row[width:] for row in ech if not any(row[:width])]
    return K.rref(p, width, inter)
