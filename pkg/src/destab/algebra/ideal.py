"""Homogeneous ideals: Groebner data, initial ideals, Hilbert functions, emptiness."""

import threading
from fractions import Fraction
from functools import lru_cache

from ..errors import EmptyScheme, InputError, NotStabilized
from . import linalg
from .groebner import groebner_basis, normal_form
from .polynomial import (MonomialOrder, Polynomial, default_names, divides, mono_lcm,
                         monomials_of_degree, parse_polynomial)
from .univariate import interpolate

GREVLEX = MonomialOrder.grevlex()


def _minimalize(monos):
    monos = sorted(set(monos), key=lambda m: (sum(m), m))
    out = []
    for m in monos:
        if not any(divides(o, m) for o in out):
            out.append(m)
    return tuple(sorted(out))


@lru_cache(maxsize=200_000)
def standard_stats(monos, nvars, k):
    """Count and exponent sums of degree-k monomials outside the monomial ideal ``monos``.

    Returns ``(count, sums)`` where ``sums[i]`` is the total exponent of
    variable i over all standard monomials.  Recursion splits off the last
    variable: x^b z^e is standard iff x^b avoids the colon ideal (M : z^e).
    """
    zeros = (0,) * nvars
    if k < 0:
        return 0, zeros
    if any(sum(m) == 0 for m in monos):
        return 0, zeros
    if nvars == 1:
        if any(m[0] <= k for m in monos):
            return 0, zeros
        return 1, (k,)
    count = 0
    sums = [0] * nvars
    for e in range(k + 1):
        sub = _minimalize(m[:-1] for m in monos if m[-1] <= e)
        c, s = standard_stats(sub, nvars - 1, k - e)
        count += c
        for i in range(nvars - 1):
            sums[i] += s[i]
        sums[-1] += e * c
    return count, tuple(sums)


class HomogeneousIdeal:
    """An ideal of k[X_0..X_N] given by homogeneous generators.

    Groebner bases are cached per monomial order.  The cache is filled under a
    lock, so concurrent readers see either no entry or a finished basis.
    """

    def __init__(self, generators, variables):
        self.variables = tuple(variables)
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = parse_polynomial(g, self.variables)
            if g.variables != self.variables:
                g = g.rename(self.variables) if g.nvars == len(self.variables) else None
                if g is None:
                    raise InputError("generator ring does not match the ideal", field="generators")
            if not g.is_homogeneous():
                raise InputError(f"generator {g} is not homogeneous", field="generators")
            if not g.is_zero():
                gens.append(g)
        self.generators = tuple(gens)
        self._cache = {}
        self._lock = threading.Lock()

    @classmethod
    def from_strings(cls, variables, generators):
        return cls([parse_polynomial(g, variables) for g in generators], variables)

    @classmethod
    def zero(cls, nvars, variables=None):
        return cls([], variables or default_names(nvars))

    @property
    def nvars(self):
        return len(self.variables)

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"HomogeneousIdeal([{gens}] in {','.join(self.variables)})"

    # Groebner data
    def groebner(self, order=GREVLEX):
        basis = self._cache.get(order.name)
        if basis is None:
            computed = tuple(groebner_basis(self.generators, order))
            with self._lock:
                basis = self._cache.setdefault(order.name, computed)
        return basis

    def lead_monomials(self, order=GREVLEX):
        return _minimalize(g.leading_monomial(order) for g in self.groebner(order))

    def is_unit(self):
        return any(g.degree() == 0 for g in self.groebner())

    def reduce(self, p):
        return normal_form(p, self.groebner(), GREVLEX)

    def contains(self, p):
        return self.reduce(p).is_zero()

    def __eq__(self, other):
        if not isinstance(other, HomogeneousIdeal):
            return NotImplemented
        return self.variables == other.variables and self.groebner() == other.groebner()

    def __hash__(self):
        return hash((self.variables, self.groebner()))

    def __add__(self, other):
        extra = other.generators if isinstance(other, HomogeneousIdeal) else tuple(other)
        return HomogeneousIdeal(self.generators + tuple(extra), self.variables)

    # graded pieces
    def degree_piece(self, d):
        """Reduced echelon basis of I_d as coefficient rows over ``monomials_of_degree``.

        Each non-standard monomial m gives m - NF(m) in I_d; these have distinct
        leading monomials, hence form a basis.
        """
        monos = monomials_of_degree(self.nvars, d)
        col = {m: i for i, m in enumerate(monos)}
        lead = self.lead_monomials()
        rows = []
        for m in monos:
            if any(divides(l, m) for l in lead):
                p = Polynomial.monomial(m, self.variables) - self.reduce(
                    Polynomial.monomial(m, self.variables))
                row = [Fraction(0)] * len(monos)
                for e, c in p.items():
                    row[col[e]] = c
                rows.append(row)
        return linalg.row_space_basis(rows, len(monos)), monos

    def hilbert_function(self, k):
        if k < 0:
            return 0
        return standard_stats(self.lead_monomials(), self.nvars, k)[0]

    def stabilization_start(self):
        """First degree from which the Hilbert function is certainly polynomial.

        max of the configured default (sum of generator degrees + number of
        variables) and the degree of the lcm of all leading monomials, which
        bounds the numerator degree of the Hilbert series.
        """
        lead = self.lead_monomials()
        default = sum(g.degree() for g in self.generators) + self.nvars
        lcm_deg = sum(_lcm_all(lead, self.nvars))
        return max(default, lcm_deg)

    def hilbert_polynomial(self, start=None, retries=3):
        if self.is_unit():
            raise EmptyScheme("the unit ideal defines the empty scheme")
        k0 = self.stabilization_start() if start is None else start
        npts = self.nvars + 1
        for _ in range(retries + 1):
            ks = list(range(k0, k0 + npts))
            poly = interpolate(ks, [self.hilbert_function(k) for k in ks])
            extra = [k0 + npts, k0 + npts + 1]
            if all(poly(k) == self.hilbert_function(k) for k in extra):
                return poly
            k0 += npts + 2
        raise NotStabilized(f"Hilbert function did not stabilize by degree {k0}")

    def dimension(self):
        """Projective dimension of V(I); -1 when V(I) is empty."""
        return self.hilbert_polynomial().degree

    def is_empty_projective(self):
        if self.is_unit():
            raise EmptyScheme("the unit ideal defines the empty scheme")
        return has_pure_powers(self.lead_monomials(), self.nvars)

    def initial_ideal(self, weights):
        return initial_ideal(self, weights)


def _lcm_all(monos, nvars):
    out = (0,) * nvars
    for m in monos:
        out = mono_lcm(out, m)
    return out


def has_pure_powers(lead, nvars):
    seen = set()
    for m in lead:
        nz = [i for i, x in enumerate(m) if x]
        if len(nz) == 1:
            seen.add(nz[0])
    return len(seen) == nvars


def groebner(ideal, order=GREVLEX):
    return list(ideal.groebner(order))


def initial_ideal(ideal, weights):
    """Ideal of minimal-weight initial forms (the t -> 0 flat limit).

    Computed from a Groebner basis for the weight order refined by grevlex; the
    initial forms keep every minimal-weight term, so the result need not be
    monomial.
    """
    weights = tuple(int(w) for w in weights)
    if len(weights) != ideal.nvars:
        raise InputError(f"weight vector has length {len(weights)}, expected {ideal.nvars}",
                         field="weights")
    basis = ideal.groebner(MonomialOrder.weighted(weights))
    return HomogeneousIdeal([g.initial_form(weights) for g in basis], ideal.variables)


def hilbert_function(ideal, k):
    return ideal.hilbert_function(k)


def hilbert_polynomial(ideal):
    return ideal.hilbert_polynomial()


def is_empty_projective(ideal):
    return ideal.is_empty_projective()


def coordinate_ideal(ideal, indices):
    """I + (X_j : j in indices)."""
    return ideal + [Polynomial.variable(j, ideal.variables) for j in indices]


def reembed(ideal, coords, variables=None, max_degree=2, check_degrees=4):
    """Ideal of the image of V(I) under the map y_j -> x^coords[j].

    All coordinates must share one degree r.  Relations are collected degree
    by degree as the kernel of k[y]_e -> (R/I)_{re}; generation is certified
    by matching Hilbert functions up to ``check_degrees`` and Hilbert
    polynomials, raising the generator degree when needed.
    """
    coords = [tuple(c) for c in coords]
    r = sum(coords[0])
    if any(sum(c) != r for c in coords):
        raise InputError("re-embedding coordinates must have a common degree")
    m = len(coords)
    variables = tuple(variables) if variables else tuple(f"y{i}" for i in range(m))
    gens = []
    nf_cache = {}

    def nf_vector(exp):
        if exp not in nf_cache:
            nf_cache[exp] = ideal.reduce(Polynomial.monomial(exp, ideal.variables))
        return nf_cache[exp]

    degree = 0
    while True:
        for e in range(degree + 1, max_degree + 1):
            ymonos = monomials_of_degree(m, e)
            images = []
            for beta in ymonos:
                exp = [0] * ideal.nvars
                for j, b in enumerate(beta):
                    for i, x in enumerate(coords[j]):
                        exp[i] += b * x
                images.append(nf_vector(tuple(exp)))
            support = sorted({s for p in images for s in p.terms})
            row = {s: i for i, s in enumerate(support)}
            mat = [[Fraction(0)] * len(ymonos) for _ in support]
            for j, p in enumerate(images):
                for s, c in p.items():
                    mat[row[s]][j] = c
            for vec in linalg.nullspace(mat, len(ymonos)):
                gens.append(Polynomial({ymonos[j]: c for j, c in enumerate(vec) if c}, variables))
        degree = max_degree
        out = HomogeneousIdeal(gens, variables)
        ok = all(out.hilbert_function(e) == ideal.hilbert_function(r * e)
                 for e in range(check_degrees + 1))
        if ok:
            hp = ideal.hilbert_polynomial()
            target = interpolate(list(range(m + 1)), [hp(r * e) for e in range(m + 1)])
            ok = out.hilbert_polynomial() == target
        if ok:
            return out
        if max_degree >= 6:
            raise NotStabilized("re-embedded ideal not generated in degree <= 6")
        max_degree += 1


def standard_monomials(ideal, degree, order=GREVLEX):
    lead = ideal.lead_monomials(order)
    return [m for m in monomials_of_degree(ideal.nvars, degree)
            if not any(divides(l, m) for l in lead)]


