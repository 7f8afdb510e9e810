"""Maximally destabilizing directions via minimum-norm points.

For a state S of degree d in n coordinates, center every character by
(d/n)*1.  The origin lies in the convex hull of the centered characters iff
no direction has negative normalized weight.  Otherwise the nearest point q
of the hull is, up to positive scaling, the unique direction minimizing nu,
and the minimum equals -|q|.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations, product
from math import gcd, lcm

from .algebra import linalg
from .errors import InputError, SingularMatrix, TooLarge
from .opsub import NormalizedValue, canonicalize
from .serialize import approx, q as qstr, qvec
from .stability import mu

APARTMENT_SCOPE = ("uniqueness is certified within the standard apartment "
                   "(and user-supplied frames), not across all maximal tori")


@dataclass(frozen=True)
class MinNormResult:
    q: tuple
    normsq: Fraction
    support: tuple  # characters (uncentered) carrying the combination
    combination: tuple

    def to_dict(self):
        return {
            "q": qvec(self.q),
            "normsq": qstr(self.normsq),
            "support": [list(c) for c in self.support],
            "combination": qvec(self.combination),
        }


@dataclass(frozen=True)
class DestabilizerReport:
    status: str
    direction: object  # ApartmentPoint or None
    nu_min: object  # NormalizedValue or None
    certificate: MinNormResult
    scope: str = APARTMENT_SCOPE

    def to_dict(self, with_approx=False):
        out = {
            "status": self.status,
            "direction": None if self.direction is None else list(self.direction.canonical),
            "nu_min": None if self.nu_min is None else {
                "numerator": qstr(self.nu_min.numerator),
                "normsq": qstr(self.nu_min.normsq),
                "signed_square": qstr(self.nu_min.squared),
            },
            "certificate": self.certificate.to_dict(),
            "scope": self.scope,
        }
        if with_approx and self.nu_min is not None:
            out["nu_min"]["approx_non_authoritative"] = approx(float(self.nu_min))
        return out


def centered_characters(state, degree):
    n = state.dim
    shift = Fraction(degree, n)
    return [tuple(Fraction(x) - shift for x in c) for c in state.characters]


def _affine_minimizer(points):
    """Barycentric coordinates of the point of aff(points) nearest the origin.

    Solves the KKT system [G 1; 1^T 0] (alpha, m) = (0, 1); raises
    SingularMatrix when the points are affinely dependent.
    """
    k = len(points)
    system = [[linalg.dot(points[i], points[j]) for j in range(k)] + [Fraction(1)]
              for i in range(k)]
    system.append([Fraction(1)] * k + [Fraction(0)])
    sol = linalg.solve(system, [Fraction(0)] * k + [Fraction(1)])
    return sol[:k]


def _combine(points, coeffs):
    dim = len(points[0])
    return tuple(sum((c * p[i] for c, p in zip(coeffs, points)), Fraction(0)) for i in range(dim))


def _wolfe(points):
    """Wolfe's minimum-norm-point algorithm in exact arithmetic.

    Returns (q, active indices, barycentric weights).  In a minor cycle only
    the lowest-index blocking point is deleted per step.
    """
    norms = [linalg.dot(p, p) for p in points]
    start = min(range(len(points)), key=lambda i: (norms[i], i))
    active, lam = [start], [Fraction(1)]
    x = points[start]
    while True:
        xx = linalg.dot(x, x)
        vals = [linalg.dot(x, p) for p in points]
        j = min(range(len(points)), key=lambda i: (vals[i], i))
        if vals[j] >= xx:
            break
        if j in active:
            raise AssertionError("Wolfe re-selected an active point")
        active.append(j)
        lam.append(Fraction(0))
        while True:
            alpha = _affine_minimizer([points[i] for i in active])
            if all(a >= 0 for a in alpha):
                # zero weights mean the minimizer already lies in a smaller face
                keep = [k for k in range(len(active)) if alpha[k] > 0]
                active = [active[k] for k in keep]
                lam = [alpha[k] for k in keep]
                x = _combine([points[i] for i in active], lam)
                break
            theta = min(lam[k] / (lam[k] - alpha[k]) for k in range(len(active)) if alpha[k] < 0)
            lam = [theta * a + (1 - theta) * l for a, l in zip(alpha, lam)]
            drop = min((k for k in range(len(active)) if lam[k] == 0), key=lambda k: active[k])
            del active[drop]
            del lam[drop]
            x = _combine([points[i] for i in active], lam)
    order = sorted(range(len(active)), key=lambda k: active[k])
    return x, [active[k] for k in order], [lam[k] for k in order]


def min_norm_point(state, degree):
    pts = centered_characters(state, degree)
    q, idx, lam = _wolfe(pts)
    _certify(q, pts)
    return MinNormResult(q, linalg.dot(q, q), tuple(state.characters[i] for i in idx), tuple(lam))


def _certify(q, pts):
    qq = linalg.dot(q, q)
    if any(linalg.dot(q, p) < qq for p in pts):
        raise AssertionError("minimum-norm point failed its optimality certificate")


def min_norm_point_oracle(state, degree):
    """Brute force: project the origin onto every affinely independent subset.

    Only projections in the relative interior of their simplex that satisfy
    the global optimality inequality are kept.
    """
    if len(state.characters) > 12 or state.dim > 8:
        raise TooLarge("the face-enumeration oracle is capped at 12 characters, dimension 8")
    pts = centered_characters(state, degree)
    best = None
    for size in range(1, min(len(pts), state.dim + 1) + 1):
        for subset in combinations(range(len(pts)), size):
            sub = [pts[i] for i in subset]
            try:
                alpha = _affine_minimizer(sub)
            except SingularMatrix:
                continue
            if not all(a > 0 for a in alpha):
                continue
            y = _combine(sub, alpha)
            yy = linalg.dot(y, y)
            if any(linalg.dot(y, p) < yy for p in pts):
                continue
            if best is None or yy < best[1]:
                best = (y, yy, subset, alpha)
            elif yy == best[1] and y != best[0]:
                raise AssertionError("two distinct certified nearest points")
    if best is None:
        raise AssertionError("no certified nearest point found")
    y, yy, subset, alpha = best
    return MinNormResult(y, yy, tuple(state.characters[i] for i in subset), tuple(alpha))


def primitive_integer(v):
    den = reduce(lcm, (Fraction(x).denominator for x in v), 1)
    ints = [int(Fraction(x) * den) for x in v]
    g = reduce(gcd, ints, 0)
    return tuple(x // g for x in ints) if g else tuple(ints)


def optimal_destabilizer(state, degree):
    if state.degrees() != {degree}:
        raise InputError(f"all characters must have degree {degree}", field="degree")
    cert = min_norm_point(state, degree)
    if cert.normsq == 0:
        return DestabilizerReport("Stable", None, None, cert)
    direction = canonicalize(primitive_integer(cert.q))
    nu_min = NormalizedValue(-cert.normsq, cert.normsq)
    achieved = mu(state, direction.canonical).nu
    if achieved != nu_min:
        raise AssertionError("destabilizing direction does not attain the reported minimum")
    return DestabilizerReport("Unstable", direction, nu_min, cert)


@dataclass(frozen=True)
class GridCheck:
    bound: int
    no_better: bool
    minimizers: tuple  # canonical points attaining the grid minimum
    grid_min: object
    attained: bool  # some grid direction attains nu_min


def grid_search(state, bound):
    """Exhaustive minimum of nu over canonical directions with entries in [0, bound]."""
    n = state.dim
    best, arg = None, []
    seen = set()
    for a in product(range(bound + 1), repeat=n):
        if min(a) != 0 or max(a) == 0:
            continue
        c = canonicalize(a).canonical
        if c in seen:
            continue
        seen.add(c)
        val = mu(state, a).nu
        if best is None or val < best:
            best, arg = val, [c]
        elif val == best:
            arg.append(c)
    return best, tuple(arg)


def verify_uniqueness(state, report, bound):
    """Check that no grid direction beats nu_min and every grid minimizer is the reported one."""
    best, arg = grid_search(state, bound)
    if report.status == "Stable":
        return GridCheck(bound, best is None or best.sign >= 0, arg, best, True)
    no_better = best is None or not (best < report.nu_min)
    attained = best is not None and best == report.nu_min
    if attained and any(c != report.direction.canonical for c in arg):
        no_better = False
    return GridCheck(bound, no_better, arg, best, attained)

