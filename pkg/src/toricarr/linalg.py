"""Exact integer and rational linear algebra on small dense matrices.

Matrices are plain lists of lists (rows) of Python ints or Fractions, so
everything is arbitrary precision.  The routines here are the foundation for
the lattice-theoretic layer computations: Hermite and Smith normal forms with
unimodular transforms, integer kernels, and lattice saturation.

All normal forms are canonical: HNF has positive pivots with entries above
each pivot reduced into [0, pivot), and SNF has a nonnegative divisibility
chain.  Canonicity is what lets higher layers compare lattices by comparing
basis matrices directly.
"""

from fractions import Fraction

IntMatrix = list  # list[list[int]]
RatMatrix = list  # list[list[Fraction]]


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    if not a:
        return []
    assert not b or len(a[0]) == len(b), "dimension mismatch"
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(cols)]
            for i in range(len(a))]


def mat_vec(a, v):
    return [sum(row[k] * v[k] for k in range(len(v))) for row in a]


def transpose(m):
    if not m:
        return []
    return [list(col) for col in zip(*m)]


def determinant(m):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(m)
    assert all(len(row) == n for row in m), "determinant needs a square matrix"
    if n == 0:
        return 1
    a = [list(row) for row in m]
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


def hermite_normal_form(m):
    """Row-style Hermite normal form.

    Returns (h, u) with u unimodular and h == u * m.  h is in row echelon
    form with positive pivots and entries above each pivot reduced into
    [0, pivot).  Zero rows, if any, are collected at the bottom of h.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    h = [list(row) for row in m]
    u = identity_matrix(rows)
    r = 0
    for j in range(cols):
        # gcd elimination below row r in column j
        while True:
            nz = [i for i in range(r, rows) if h[i][j] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(h[i][j]))
            if piv != r:
                h[r], h[piv] = h[piv], h[r]
                u[r], u[piv] = u[piv], u[r]
            done = True
            for i in range(r + 1, rows):
                if h[i][j] != 0:
                    q = h[i][j] // h[r][j]
                    for k in range(cols):
                        h[i][k] -= q * h[r][k]
                    for k in range(len(u[i])):
                        u[i][k] -= q * u[r][k]
                    if h[i][j] != 0:
                        done = False
            if done:
                break
        if r < rows and h[r][j] != 0:
            if h[r][j] < 0:
                h[r] = [-x for x in h[r]]
                u[r] = [-x for x in u[r]]
            for i in range(r):
                q = h[i][j] // h[r][j]
                if q:
                    for k in range(cols):
                        h[i][k] -= q * h[r][k]
                    for k in range(len(u[i])):
                        u[i][k] -= q * u[r][k]
            r += 1
            if r == rows:
                break
    return h, u


def hnf_basis(m):
    """Nonzero rows of the HNF of m: a canonical basis of the row lattice."""
    h, _ = hermite_normal_form(m)
    return [row for row in h if any(row)]


def smith_normal_form(m):
    """Smith normal form.  Returns (d, u, v) with d == u * m * v diagonal,
    u, v unimodular, and nonnegative diagonal entries d1 | d2 | ... ."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    d = [list(row) for row in m]
    u = identity_matrix(rows)
    v = identity_matrix(cols)
    t = 0
    while t < min(rows, cols):
        # move a nonzero entry of minimal magnitude to the pivot position
        entries = [(abs(d[i][j]), i, j) for i in range(t, rows)
                   for j in range(t, cols) if d[i][j] != 0]
        if not entries:
            break
        _, pi, pj = min(entries)
        if pi != t:
            d[t], d[pi] = d[pi], d[t]
            u[t], u[pi] = u[pi], u[t]
        if pj != t:
            for row in d:
                row[t], row[pj] = row[pj], row[t]
            for row in v:
                row[t], row[pj] = row[pj], row[t]
        # clear row and column t
        dirty = False
        for i in range(t + 1, rows):
            if d[i][t] != 0:
                q = d[i][t] // d[t][t]
                for k in range(cols):
                    d[i][k] -= q * d[t][k]
                for k in range(rows):
                    u[i][k] -= q * u[t][k]
                if d[i][t] != 0:
                    dirty = True
        for j in range(t + 1, cols):
            if d[t][j] != 0:
                q = d[t][j] // d[t][t]
                for row in d:
                    row[j] -= q * row[t]
                for row in v:
                    row[j] -= q * row[t]
                if d[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        # enforce divisibility d[t][t] | d[i][j] for the lower-right block
        bad = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if d[i][j] % d[t][t] != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            for k in range(cols):
                d[t][k] += d[bad][k]
            for k in range(rows):
                u[t][k] += u[bad][k]
            continue
        if d[t][t] < 0:
            for k in range(cols):
                d[t][k] = -d[t][k]
            for k in range(rows):
                u[t][k] = -u[t][k]
        t += 1
    return d, u, v


def elementary_divisors(m):
    d, _, _ = smith_normal_form(m)
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0)) if d[i][i] != 0]


def integer_kernel(m):
    """Canonical (HNF) basis of {v in Z^cols : m v = 0}, as matrix rows."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if rows == 0:
        return identity_matrix(cols)
    h, u = hermite_normal_form(transpose(m))
    ker = [u[i] for i in range(cols) if not any(h[i])]
    return hnf_basis(ker) if ker else []


def rank(m):
    return len(hnf_basis(m))


def saturate(m):
    """Saturation of the row lattice of m inside Z^cols.

    Returns (basis, index): basis is the canonical HNF basis of the smallest
    saturated sublattice containing the rows of m, and index is the (finite)
    index of the row lattice inside it.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if not any(any(row) for row in m):
        return [], 1
    ann = integer_kernel(m)
    if ann:
        basis = integer_kernel(ann)
    else:
        basis = identity_matrix(cols)
    index = 1
    for d in elementary_divisors(m):
        index *= d
    return basis, index


def solve_in_lattice(basis, vec):
    """Integer coordinates of vec in the given row-echelon lattice basis.

    basis must be in HNF (as produced by hnf_basis).  Returns the coefficient
    list, or None when vec is not in the lattice.
    """
    coords = []
    residue = list(vec)
    for row in basis:
        j = next((k for k, x in enumerate(row) if x), None)
        assert j is not None, "basis rows must be nonzero"
        if residue[j] % row[j] != 0:
            return None
        q = residue[j] // row[j]
        coords.append(q)
        for k in range(len(residue)):
            residue[k] -= q * row[k]
    if any(residue):
        return None
    return coords


def rational_row_reduce(rows_in):
    """Reduced row echelon form over Q.  Returns (rref_rows, pivot_columns)."""
    rows = [[Fraction(x) for x in row] for row in rows_in]
    pivots = []
    r = 0
    cols = len(rows[0]) if rows else 0
    for j in range(cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][j] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][j]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][j] != 0:
                f = rows[i][j]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(j)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots
