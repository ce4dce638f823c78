"""Exact linear algebra over the integers.

Everything here works on plain Python ints (arbitrary precision), with
matrices as sequences of row sequences.  Sizes in this package never
exceed a few hundred rows, so the algorithms are the classical
gcd-based ones with no attempt at asymptotic cleverness.
"""

from __future__ import annotations


def xgcd(a, b):
    """Extended gcd: return (g, x, y) with g = a*x + b*y and g >= 0.

    >>> xgcd(12, 18)
    (6, -1, 1)
    >>> xgcd(0, 0)
    (0, 0, 0)
    """
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(mat):
    return tuple(tuple(row[i] for row in mat) for i in range(len(mat[0])))


def mat_mul(a, b):
    bt = transpose(b)
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_vec(mat, vec):
    return tuple(sum(x * y for x, y in zip(row, vec)) for row in mat)


def mat_eq(a, b):
    return tuple(map(tuple, a)) == tuple(map(tuple, b))


def det(mat):
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(mat)
    if n == 0:
        return 1
    a = [list(row) for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def is_unimodular(mat):
    return len(mat) == len(mat[0]) and det(mat) in (1, -1)


def hnf_rows(rows):
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Returns the unique basis with strictly increasing pivot columns,
    positive pivots, entries above each pivot reduced into [0, pivot),
    and zero rows dropped.  The output is canonical: two generating
    sets of the same row lattice give identical results.
    """
    work = [list(r) for r in rows]
    if not work:
        return ()
    ncols = len(work[0])
    nrows = len(work)
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if work[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        for i in range(r + 1, nrows):
            if work[i][c] == 0:
                continue
            g, x, y = xgcd(work[r][c], work[i][c])
            a, b = work[r][c] // g, work[i][c] // g
            row_r, row_i = work[r], work[i]
            work[r] = [x * u + y * v for u, v in zip(row_r, row_i)]
            work[i] = [-b * u + a * v for u, v in zip(row_r, row_i)]
        if work[r][c] < 0:
            work[r] = [-u for u in work[r]]
        for i in range(r):
            q = work[i][c] // work[r][c]
            if q:
                work[i] = [u - q * v for u, v in zip(work[i], work[r])]
        r += 1
        if r == nrows:
            break
    return tuple(tuple(row) for row in work[:r] if any(row))


def kernel_basis(mat, ncols=None):
    """Basis (HNF-canonical rows) of {x in Z^n : mat @ x = 0}.

    The integer kernel of an integer matrix is automatically a
    saturated sublattice, so no separate saturation step is needed.

    >>> kernel_basis([[1, 2, 3]])
    ((1, 1, -1), (0, 3, -2))
    """
    if ncols is None:
        ncols = len(mat[0]) if mat else 0
    nrows = len(mat)
    # Rows of [A^T | I]: unimodular row reduction keeps track, in the
    # right block, of the integer combinations producing each row.
    aug = [
        [mat[j][i] for j in range(nrows)] + [1 if k == i else 0 for k in range(ncols)]
        for i in range(ncols)
    ]
    reduced = hnf_rows(aug)
    kern = [row[nrows:] for row in reduced if not any(row[:nrows])]
    return hnf_rows(kern)


def solve_left(hnf_basis, target):
    """Integer coordinates of ``target`` in an HNF row basis, or None.

    ``hnf_basis`` must be the output of :func:`hnf_rows`.  Returns the
    unique tuple x with sum(x[i] * basis[i]) == target when target lies
    in the row lattice.
    """
    residual = list(target)
    coords = []
    for row in hnf_basis:
        piv = next(i for i, v in enumerate(row) if v != 0)
        q, rem = divmod(residual[piv], row[piv])
        if rem != 0:
            return None
        coords.append(q)
        if q:
            residual = [u - q * v for u, v in zip(residual, row)]
    if any(residual):
        return None
    return tuple(coords)


def solve_mod(mat, m, ncols=None):
    """Generators of {x mod m : mat @ x = 0 (mod m)} as tuples in Z^n.

    Computed from the integer kernel of [mat | m*I]; the returned
    tuples generate the solution group additively modulo m.
    """
    if ncols is None:
        ncols = len(mat[0]) if mat else 0
    nrows = len(mat)
    wide = [list(mat[i]) + [m if j == i else 0 for j in range(nrows)] for i in range(nrows)]
    gens = []
    for row in kernel_basis(wide, ncols + nrows):
        x = tuple(v % m for v in row[:ncols])
        if any(x):
            gens.append(x)
    return gens
