"""Independent cross-check routes used by ``--check`` and by the test suite.

None of these touch Groebner bases or Wolfe's algorithm: they work degree
by degree with plain linear algebra over explicit monomial bases.
"""

from fractions import Fraction
from math import comb

from .algebra import linalg
from .algebra.polynomial import monomials_of_degree
from .opsub import centered


def degree_span(ideal, k, _cache=None):
    """Reduced echelon basis of I_k, built as span(x_i * I_{k-1}) + generators of degree k."""
    monos = monomials_of_degree(ideal.nvars, k)
    col = {m: i for i, m in enumerate(monos)}
    rows = []
    if k > 0:
        prev, prev_monos = degree_span(ideal, k - 1)
        for row in prev:
            for i in range(ideal.nvars):
                new = [Fraction(0)] * len(monos)
                for j, c in enumerate(row):
                    if c:
                        m = list(prev_monos[j])
                        m[i] += 1
                        new[col[tuple(m)]] = c
                rows.append(new)
    for g in ideal.generators:
        if g.degree() == k:
            new = [Fraction(0)] * len(monos)
            for e, c in g.items():
                new[col[e]] = c
            rows.append(new)
    return linalg.row_space_basis(rows, len(monos)), monos


def initial_span(ideal, weights, k):
    """Basis of the degree-k part of the t -> 0 limit, as (rows, monomials).

    Columns are ordered by increasing weight; in the echelon form each row's
    pivot has the row's minimal weight, and the minimal-weight parts of the
    rows span the limit subspace.
    """
    basis, monos = degree_span(ideal, k)
    wt = [sum(a * x for a, x in zip(weights, m)) for m in monos]
    perm = sorted(range(len(monos)), key=lambda j: (wt[j], j))
    permuted = [[row[j] for j in perm] for row in basis]
    rref, r = linalg.reduced_echelon(permuted, len(monos))
    out = []
    for row in rref[:r]:
        piv = next(i for i, x in enumerate(row) if x)
        w0 = wt[perm[piv]]
        out.append(tuple(x if wt[perm[i]] == w0 else Fraction(0) for i, x in enumerate(row)))
    return out, [monos[j] for j in perm]


def hilbert_and_weight(ideal, weights, k):
    """(dim (R/J)_k, total action weight on (R/J)_k) for the limit J, by linear algebra."""
    rows, monos = initial_span(ideal, weights, k)
    ac = centered(weights)
    weight_of = [sum(x * y for x, y in zip(ac, m)) for m in monos]
    by_weight = {}
    for j, w in enumerate(weight_of):
        by_weight.setdefault(w, []).append(j)
    total_dim, total_weight = 0, Fraction(0)
    for w, cols in by_weight.items():
        sub = [[row[j] for j in cols] for row in rows if any(row[j] for j in cols)]
        quotient = len(cols) - linalg.rank(sub) if sub else len(cols)
        total_dim += quotient
        total_weight += quotient * w
    return total_dim, total_weight


def _newton_to_power(k0, values):
    """Power-basis coefficients of the polynomial through (k0 + i, values[i])."""
    diffs = list(values)
    forward = []
    while diffs:
        forward.append(diffs[0])
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    coeffs = [Fraction(0)] * len(values)
    # binomial(k - k0, j) = prod_{i<j} (k - k0 - i) / j!
    for j, d in enumerate(forward):
        if not d:
            continue
        poly = [Fraction(1)]
        for i in range(j):
            root = k0 + i
            nxt = [Fraction(0)] * (len(poly) + 1)
            for p, c in enumerate(poly):
                nxt[p + 1] += c
                nxt[p] -= root * c
            poly = nxt
        fact = Fraction(1, 1)
        for i in range(2, j + 1):
            fact /= i
        for p, c in enumerate(poly):
            coeffs[p] += d * c * fact
    return coeffs


def df_oracle(ideal, weights, dim, k0=None, extra=2):
    """DF from linear-algebra Hilbert and weight counts of the limit, Newton interpolation."""
    if k0 is None:
        k0 = max((g.degree() for g in ideal.generators), default=1)
    npts = dim + 3
    pairs = [hilbert_and_weight(ideal, weights, k) for k in range(k0, k0 + npts + extra)]
    h = _newton_to_power(k0, [Fraction(p[0]) for p in pairs[:npts]])
    w = _newton_to_power(k0, [p[1] for p in pairs[:npts]])
    ev = lambda c, k: sum(ci * k ** i for i, ci in enumerate(c))
    for i in range(npts, npts + extra):
        k = k0 + i
        if ev(h, k) != pairs[i][0] or ev(w, k) != pairs[i][1]:
            raise AssertionError("oracle window too early: values not yet polynomial")
    a0, a1 = h[dim], (h[dim - 1] if dim >= 1 else Fraction(0))
    b0, b1 = w[dim + 1], w[dim]
    return 2 * (a1 * b0 - a0 * b1) / a0


def hilbert_function_oracle(ideal, k):
    basis, monos = degree_span(ideal, k)
    return len(monos) - len(basis)


def count_monomials(nvars, k):
    return comb(k + nvars - 1, nvars - 1)
