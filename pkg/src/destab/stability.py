"""Hilbert-Mumford weights of torus states.

For a state S (a finite set of characters chi) and a diagonal one-parameter
subgroup a, the weight is mu(S, a) = max{-<a, chi> : chi in S}: a maximum of
finitely many linear functions of a.  The normalized weight nu divides by
the norm of a after projecting a to the trace-zero hyperplane; nu < 0 means
a destabilizes.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

from .algebra import linalg
from .algebra.ideal import coordinate_ideal
from .algebra.polynomial import parse_polynomial
from .errors import (DegenerateDegree, EmptyScheme, InputError, TooLarge, ZeroPolynomial,
                     ZeroVector, cell_limit)
from .opsub import NormalizedValue, sl_norm_squared


@dataclass(frozen=True)
class StateSet:
    characters: tuple
    labels: tuple = field(default=None, compare=False)

    def __post_init__(self):
        chars = tuple(tuple(int(x) for x in c) for c in self.characters)
        if not chars:
            raise InputError("a state set must be nonempty", field="characters")
        if len(set(chars)) != len(chars):
            raise InputError("state set has duplicate characters", field="characters")
        if len({len(c) for c in chars}) != 1:
            raise InputError("characters have different lengths", field="characters")
        order = sorted(range(len(chars)), key=lambda i: chars[i], reverse=True)
        object.__setattr__(self, "characters", tuple(chars[i] for i in order))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels[i] for i in order))

    @classmethod
    def of(cls, characters, labels=None):
        """Build a state from possibly repeated characters (duplicates merged)."""
        seen = {}
        for i, c in enumerate(characters):
            seen.setdefault(tuple(c), None if labels is None else labels[i])
        lab = None if labels is None else tuple(seen.values())
        return cls(tuple(seen), lab)

    @property
    def dim(self):
        return len(self.characters[0])

    def degrees(self):
        return {sum(c) for c in self.characters}

    def to_dict(self):
        out = {"characters": [list(c) for c in self.characters]}
        if self.labels is not None:
            out["labels"] = list(self.labels)
        return out


@dataclass(frozen=True)
class WeightReport:
    mu: Fraction
    nu: object  # NormalizedValue, or None for a central subgroup
    argmax: tuple


def state_of_point(v):
    v = [Fraction(x) for x in v]
    if not any(v):
        raise ZeroVector("the zero vector is not a point of projective space")
    n = len(v)
    chars = [tuple(int(i == j) for j in range(n)) for i, x in enumerate(v) if x]
    return StateSet(tuple(chars))


def state_of_hypersurface(f):
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial defines no hypersurface")
    if not f.is_homogeneous():
        raise InputError("hypersurface equation must be homogeneous")
    support = f.support()
    return StateSet(tuple(support), tuple(_label(e, f.variables) for e in support))


def _label(exp, names):
    return "*".join(n if x == 1 else f"{n}^{x}" for n, x in zip(names, exp) if x) or "1"


def state_of_hilbert_point(ideal, d):
    """Characters of the nonzero Pluecker coordinates of I_d inside R_d."""
    basis, monos = ideal.degree_piece(d)
    m = len(basis)
    if m == 0 or m == len(monos):
        raise DegenerateDegree(f"I_{d} is {'zero' if m == 0 else 'everything'}")
    cols = [j for j in range(len(monos)) if any(row[j] for row in basis)]
    if comb(len(cols), m) > cell_limit(10**6):
        raise TooLarge(f"{comb(len(cols), m)} minors exceed the guard")
    chars = set()
    for subset in combinations(cols, m):
        minor = [[row[j] for j in subset] for row in basis]
        if linalg.determinant(minor) != 0:
            chars.add(tuple(sum(monos[j][i] for j in subset) for i in range(ideal.nvars)))
    return StateSet(tuple(chars))


def _centered_numerators(state, a):
    """n * <a_c, chi> for every character, as integers (n = number of coordinates)."""
    n = len(a)
    sa = sum(a)
    return [n * sum(x * y for x, y in zip(a, c)) - sa * sum(c) for c in state.characters]


def mu(state, a):
    a = tuple(int(x) for x in a)
    if len(a) != state.dim:
        raise InputError(f"weights have length {len(a)}, state has {state.dim}", field="weights")
    vals = [-sum(x * y for x, y in zip(a, c)) for c in state.characters]
    top = max(vals)
    argmax = tuple(c for c, v in zip(state.characters, vals) if v == top)
    normsq = sl_norm_squared(a)
    nu = None
    if normsq:
        nu = NormalizedValue(Fraction(-min(_centered_numerators(state, a)), len(a)), normsq)
    return WeightReport(Fraction(top), nu, argmax)


def nu(state, a):
    return mu(state, a).nu


def minimal_coordinates(a):
    lo = min(a)
    return [j for j, x in enumerate(a) if x == lo]


def s_prime_membership(ideal, a):
    """Whether V(X_j : a_j minimal) misses V(I)."""
    if len(a) != ideal.nvars:
        raise InputError("weight vector length does not match the ideal", field="weights")
    if ideal.is_unit():
        raise EmptyScheme("the unit ideal defines the empty scheme")
    return coordinate_ideal(ideal, minimal_coordinates(a)).is_empty_projective()


def _parse_family_entry(entry):
    if isinstance(entry, str):
        p = parse_polynomial(entry, ("s",))
        top = max((e[0] for e in p.terms), default=-1)
        return [p.coefficient((i,)) for i in range(top + 1)]
    return [Fraction(c) for c in entry]


def support_semicontinuity_check(family):
    """support(family at s = 0) is contained in the generic support.

    Entries are polynomials in s, given as strings or ascending coefficient lists.
    """
    coeffs = [_parse_family_entry(e) for e in family]
    at_zero = {i for i, c in enumerate(coeffs) if c and c[0] != 0}
    generic = {i for i, c in enumerate(coeffs) if any(c)}
    if not at_zero:
        raise ZeroVector("the family vanishes at s = 0")
    return at_zero <= generic


def is_nondegenerate(ideal):
    return ideal.hilbert_function(1) == ideal.nvars

