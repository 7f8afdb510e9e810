"""Exact linear algebra over the rationals.

Matrices are tuples of row tuples of :class:`fractions.Fraction`.  Everything
here is exact; nothing is ever rounded.
"""

from fractions import Fraction

from ..errors import SingularMatrix


def as_matrix(rows):
    """Coerce nested sequences of numbers (or "p/q" strings) to an exact matrix."""
    m = tuple(tuple(Fraction(x) for x in row) for row in rows)
    if m and any(len(row) != len(m[0]) for row in m):
        raise ValueError("matrix rows have different lengths")
    return m


def identity(n):
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def transpose(m):
    return tuple(zip(*m))


def matmul(a, b):
    bt = transpose(b)
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt)
                 for row in a)


def matvec(a, v):
    return tuple(sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a)


def dot(u, v):
    return sum((x * y for x, y in zip(u, v)), Fraction(0))


def reduced_echelon(m, ncols=None):
    """Return ``(rref, rank)`` of ``m``.

    The zero rows are kept at the bottom so the shape is preserved.  ``ncols``
    is only needed for matrices with no rows.
    """
    rows = [list(map(Fraction, row)) for row in m]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else (ncols or 0)
    pivot_row = 0
    for col in range(ncols):
        if pivot_row == nrows:
            break
        pick = next((r for r in range(pivot_row, nrows) if rows[r][col] != 0), None)
        if pick is None:
            continue
        rows[pivot_row], rows[pick] = rows[pick], rows[pivot_row]
        piv = rows[pivot_row][col]
        if piv != 1:
            rows[pivot_row] = [x / piv for x in rows[pivot_row]]
        prow = rows[pivot_row]
        for r in range(nrows):
            if r != pivot_row and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], prow)]
        pivot_row += 1
    return tuple(tuple(row) for row in rows), pivot_row


def rank(m):
    return reduced_echelon(m)[1]


def row_space_basis(m, ncols=None):
    """Nonzero rows of the reduced echelon form: a canonical basis of the row span."""
    rref, r = reduced_echelon(m, ncols)
    return rref[:r]


def pivots(rref):
    out = []
    for row in rref:
        col = next((j for j, x in enumerate(row) if x != 0), None)
        if col is None:
            break
        out.append(col)
    return out


def nullspace(m, ncols=None):
    """Basis of {x : m x = 0}, one vector per free column."""
    rref, r = reduced_echelon(m, ncols)
    ncols = len(rref[0]) if rref else (ncols or 0)
    piv = pivots(rref[:r])
    free = [j for j in range(ncols) if j not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(piv):
            v[p] = -rref[i][f]
        basis.append(tuple(v))
    return basis


def solve(a, b):
    """Solve the square system ``a x = b`` exactly; raise SingularMatrix otherwise."""
    n = len(a)
    aug = [list(row) + [Fraction(bi)] for row, bi in zip(a, b)]
    rref, r = reduced_echelon(aug)
    if pivots(rref[:r]) != list(range(n)):
        raise SingularMatrix("system matrix is singular")
    return tuple(rref[i][n] for i in range(n))


def inverse(a):
    n = len(a)
    eye = identity(n)
    aug = [list(row) + list(e) for row, e in zip(a, eye)]
    rref, r = reduced_echelon(aug)
    if r < n or pivots(rref[:n]) != list(range(n)):
        raise SingularMatrix("matrix is not invertible")
    return tuple(tuple(row[n:]) for row in rref[:n])


def determinant(a):
    """Determinant by fraction-exact elimination."""
    rows = [list(map(Fraction, row)) for row in a]
    n = len(rows)
    det = Fraction(1)
    for col in range(n):
        pick = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pick is None:
            return Fraction(0)
        if pick != col:
            rows[col], rows[pick] = rows[pick], rows[col]
            det = -det
        piv = rows[col][col]
        det *= piv
        for r in range(col + 1, n):
            if rows[r][col] != 0:
                f = rows[r][col] / piv
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return det
