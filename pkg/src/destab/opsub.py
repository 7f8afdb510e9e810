"""Diagonal one-parameter subgroups as integer weight vectors.

A weight vector ``a`` stands for lambda(t) X_i = t^{a_i} X_i.  Two vectors give
the same point of the apartment when they differ by a positive multiple and
a central shift; :func:`canonicalize` picks the representative with minimum
entry 0 and coprime entries.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce, total_ordering
from itertools import combinations_with_replacement
from math import gcd

from .algebra.polynomial import monomials_of_degree
from .errors import CentralSubgroup, InputError


def _as_weights(a):
    out = []
    for x in a:
        if isinstance(x, bool) or not isinstance(x, (int, Fraction)) or Fraction(x).denominator != 1:
            raise InputError(f"weights must be integers, got {list(a)!r}", field="weights")
        out.append(int(x))
    out = tuple(out)
    if len(out) < 2:
        raise InputError("a weight vector needs at least two entries", field="weights")
    return out


@dataclass(frozen=True)
class ApartmentPoint:
    canonical: tuple
    basis: str = "std"

    def __post_init__(self):
        if not any(self.canonical):
            raise CentralSubgroup("the zero vector is not an apartment point")


def canonicalize(a, basis="std"):
    a = _as_weights(a)
    lo = min(a)
    shifted = [x - lo for x in a]
    g = reduce(gcd, shifted)
    if g == 0:
        raise CentralSubgroup(f"constant weight vector {a} lies in the centre")
    return ApartmentPoint(tuple(x // g for x in shifted), basis)


def are_T_equivalent(a, b):
    if len(a) != len(b):
        raise InputError("weight vectors have different lengths", field="weights")
    return canonicalize(a).canonical == canonicalize(b).canonical


def centered(a):
    """Projection of ``a`` onto the trace-zero hyperplane (exact)."""
    mean = Fraction(sum(a), len(a))
    return tuple(Fraction(x) - mean for x in a)


def sl_norm_squared(a):
    n = len(a)
    s = sum(a)
    # |a - mean|^2 = sum a_i^2 - (sum a_i)^2 / n
    return Fraction(n * sum(Fraction(x) * x for x in a) - Fraction(s) * s, n)


@total_ordering
class NormalizedValue:
    """The real number numerator / sqrt(normsq), kept exact.

    Comparison uses the sign first and then numerator^2 / normsq, so no
    square root is ever taken.
    """

    __slots__ = ("numerator", "normsq")

    def __init__(self, numerator, normsq):
        normsq = Fraction(normsq)
        if normsq <= 0:
            raise ValueError("normsq must be positive")
        self.numerator = Fraction(numerator)
        self.normsq = normsq

    @property
    def sign(self):
        return (self.numerator > 0) - (self.numerator < 0)

    @property
    def squared(self):
        """nu^2 with the sign of nu reattached."""
        return self.sign * self.numerator * self.numerator / self.normsq

    def __eq__(self, other):
        if not isinstance(other, NormalizedValue):
            return NotImplemented
        return self.squared == other.squared

    def __lt__(self, other):
        return self.squared < other.squared

    def __hash__(self):
        return hash(self.squared)

    def __float__(self):
        return float(self.numerator) / float(self.normsq) ** 0.5

    def __repr__(self):
        return f"NormalizedValue({self.numerator}/sqrt({self.normsq}))"


def lift_exponent(a, l, ring, r=1):
    """Weights on degree-(r*l) monomial coordinates induced by multiplication.

    ``a`` is indexed by the degree-r monomials of the ambient ring (by the
    variables when r = 1), in the order of ``monomials_of_degree``.  Each
    degree-rl monomial receives the minimum, over its factorizations into l
    degree-r monomials, of the summed weights.  ``ring`` is an ideal or a
    variable count.
    """
    nvars = ring if isinstance(ring, int) else ring.nvars
    if l < 1:
        raise InputError("lift power must be a positive integer", field="power")
    a = _as_weights(a)
    source = monomials_of_degree(nvars, r)
    if len(a) != len(source):
        raise InputError(f"expected {len(source)} weights for degree-{r} coordinates",
                         field="weights")
    best = {}
    for combo in combinations_with_replacement(range(len(source)), l):
        exp = [0] * nvars
        total = 0
        for idx in combo:
            total += a[idx]
            for i, x in enumerate(source[idx]):
                exp[i] += x
        exp = tuple(exp)
        if exp not in best or total < best[exp]:
            best[exp] = total
    return tuple(best[m] for m in monomials_of_degree(nvars, r * l))
