"""Test degenerations from weight vectors: flat limits, almost-triviality screens, DF.

Convention used throughout: lambda(t) X_i = t^{a_i} X_i and the central fibre
is the t -> 0 limit, i.e. the ideal of minimal-weight initial forms.  On the
central fibre the standard monomial x^alpha of degree k carries the action
weight <a_c, alpha>, where a_c is a projected to the trace-zero hyperplane.
With this sign the conic's degenerations have positive DF.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .algebra.ideal import (coordinate_ideal, reembed, standard_monomials,
                            standard_stats, _lcm_all)
from .algebra.groebner import groebner_basis
from .algebra.polynomial import MonomialOrder, parse_polynomial
from .algebra.univariate import interpolate
from .errors import (CentralSubgroup, Degenerate, DegenerateDegree, EmptyScheme,
                     FlatnessViolation, InputError, NotStabilized, TooLarge, cell_limit)
from .kempf import optimal_destabilizer
from .opsub import _as_weights, canonicalize, centered
from .serialize import q as qstr
from .stability import is_nondegenerate, minimal_coordinates, state_of_hilbert_point

FLATNESS_DEGREE = 8


class TestDegeneration:
    """The weight-vector degeneration of V(I) at a given exponent."""

    __test__ = False  # not a pytest class

    def __init__(self, ideal, weights, exponent=1):
        self.ideal = ideal
        self.weights = _as_weights(weights)
        if len(self.weights) != ideal.nvars:
            raise InputError(f"weight vector has length {len(self.weights)}, "
                             f"expected {ideal.nvars}", field="weights")
        self.exponent = exponent
        self._central = None

    @property
    def is_product(self):
        return len(set(self.weights)) == 1

    @property
    def point(self):
        return None if self.is_product else canonicalize(self.weights)

    @property
    def central_fiber(self):
        if self._central is None:
            if self.is_product:
                self._central = self.ideal
            else:
                self._central = self.ideal.initial_ideal(self.point.canonical)
        return self._central


def flat_limit(td, check_degree=FLATNESS_DEGREE):
    limit = td.central_fiber
    for k in range(check_degree + 1):
        if td.ideal.hilbert_function(k) != limit.hilbert_function(k):
            raise FlatnessViolation(f"Hilbert functions differ in degree {k}")
    return limit


@dataclass(frozen=True)
class AlmostTrivialCheck:
    c: int
    meets: bool
    dim: int
    verdict: str  # "Fails" or "Possible"

    def to_dict(self):
        return {"c": self.c, "meets": self.meets, "dim": self.dim, "verdict": self.verdict}


def almost_trivial_necessary(ideal, a):
    """Necessary condition for almost-triviality on diagonal weights.

    With the minimal weight attained on X_0..X_c, an almost trivial
    degeneration needs c > dim X and V(X_0..X_c) disjoint from X.  "Possible"
    never proves almost-triviality.
    """
    a = _as_weights(a)
    if len(set(a)) == 1:
        raise CentralSubgroup("central weights give the product degeneration")
    if ideal.is_unit():
        raise EmptyScheme("the unit ideal defines the empty scheme")
    if not is_nondegenerate(ideal):
        raise Degenerate("the ideal contains a linear form")
    mins = minimal_coordinates(a)
    c = len(mins) - 1
    meets = not coordinate_ideal(ideal, mins).is_empty_projective()
    dim = ideal.dimension()
    verdict = "Fails" if (c <= dim or meets) else "Possible"
    return AlmostTrivialCheck(c, meets, dim, verdict)


def is_t_power_flag_ideal(generators, variables):
    """Whether the ideal is (t^N); ``variables`` lists the space variables then t.

    Returns ``(True, N)`` or ``(False, None)``.
    """
    variables = tuple(variables)
    polys = [parse_polynomial(g, variables) if isinstance(g, str) else g for g in generators]
    basis = groebner_basis(polys, MonomialOrder.deglex())
    if len(basis) == 1 and len(basis[0].terms) == 1:
        exp = next(iter(basis[0].terms))
        if not any(exp[:-1]) and exp[-1] >= 1:
            return True, exp[-1]
    return False, None


@dataclass(frozen=True)
class DFReport:
    a0: Fraction
    a1: Fraction
    b0: Fraction
    b1: Fraction
    df: Fraction
    dim: int
    hilbert: object = field(compare=False)
    weight: object = field(compare=False)

    def to_dict(self):
        return {
            "a0": qstr(self.a0), "a1": qstr(self.a1),
            "b0": qstr(self.b0), "b1": qstr(self.b1),
            "df": qstr(self.df), "dim": self.dim,
            "hilbert_polynomial": str(self.hilbert), "weight_polynomial": str(self.weight),
        }


def df_invariant(td, retries=3):
    ideal = td.ideal
    if ideal.is_unit():
        raise EmptyScheme("the unit ideal defines the empty scheme")
    n = ideal.dimension()
    if n < 0:
        raise EmptyScheme("V(I) is empty")
    order = MonomialOrder.weighted(td.weights)
    lead = ideal.lead_monomials(order)
    ac = centered(td.weights)
    k0 = max(ideal.stabilization_start(), sum(_lcm_all(lead, ideal.nvars)))
    npts = n + 3
    for _ in range(retries + 1):
        ks = list(range(k0, k0 + npts + 2))
        stats = [standard_stats(lead, ideal.nvars, k) for k in ks]
        hs = [Fraction(c) for c, _ in stats]
        ws = [sum((x * s for x, s in zip(ac, sums)), Fraction(0)) for _, sums in stats]
        h = interpolate(ks[:npts], hs[:npts])
        w = interpolate(ks[:npts], ws[:npts])
        if all(h(k) == v for k, v in zip(ks[npts:], hs[npts:])) and \
                all(w(k) == v for k, v in zip(ks[npts:], ws[npts:])):
            break
        k0 += npts + 2
    else:
        raise NotStabilized("weight polynomial did not stabilize")
    if h.degree != n or w.degree > n + 1:
        raise NotStabilized("interpolated polynomials have unexpected degrees")
    a0, a1 = h.coefficient(n), h.coefficient(n - 1)
    b0, b1 = w.coefficient(n + 1), w.coefficient(n)
    df = 2 * (a1 * b0 - a0 * b1) / a0
    return DFReport(a0, a1, b0, b1, df, n, h, w)


def exponent_embedding(ideal, r):
    """Coordinates (standard monomials of degree r) and the ideal of X in them."""
    if r == 1 and is_nondegenerate(ideal):
        return [tuple(int(i == j) for j in range(ideal.nvars)) for i in range(ideal.nvars)], ideal
    coords = standard_monomials(ideal, r)
    names = tuple("y_" + "".join(str(x) for x in c) for c in coords)
    return coords, reembed(ideal, coords, names)


def _hilbert_point_destabilizer(ideal, max_degree=4):
    for d in range(2, max_degree + 1):
        try:
            state = state_of_hilbert_point(ideal, d)
        except DegenerateDegree:
            continue
        except TooLarge as exc:
            return {"degree": d, "skipped": str(exc)}
        report = optimal_destabilizer(state, sum(state.characters[0]))
        return {"degree": d, "report": report.to_dict()}
    return {"degree": None, "skipped": "no nondegenerate Hilbert point in degrees 2..4"}


def k_stability_sweep(ideal, r_max, bound, with_kempf=True):
    """Exhaustive DF sweep over apartment directions with entries in [0, bound].

    Directions are deduplicated by canonical point.  A direction is screened
    (kept in the report, excluded from the minimum) when the almost-trivial
    necessary condition says "Possible" and the flat limit equals the ideal
    itself; a torus-translate of I equal to its own a-initial ideal is I.
    """
    exponents = []
    status_seen = False
    overall_min = None
    for r in range(1, r_max + 1):
        coords, ideal_r = exponent_embedding(ideal, r)
        m = len(coords)
        if (bound + 1) ** m > cell_limit(20_000):
            raise TooLarge(f"{(bound + 1) ** m} grid points at exponent {r} exceed the guard")
        seen = set()
        records = []
        for a in product(range(bound + 1), repeat=m):
            if len(set(a)) == 1:
                continue
            point = canonicalize(a).canonical
            if point in seen:
                continue
            seen.add(point)
            td = TestDegeneration(ideal_r, point, exponent=r)
            limit = flat_limit(td)
            try:
                verdict = almost_trivial_necessary(ideal_r, point).verdict
            except Degenerate:
                verdict = "NotApplicable"
            screened = verdict == "Possible" and limit == ideal_r
            df = None if screened else df_invariant(td).df
            records.append({
                "weights": list(point),
                "canonical_point": list(point),
                "verdict": verdict,
                "screened": screened,
                "df": None if df is None else qstr(df),
                "central_fiber": [str(g) for g in limit.groebner()],
                "_df": df,
            })
        records.sort(key=lambda rec: rec["canonical_point"])
        live = [rec for rec in records if rec["_df"] is not None]
        best = min(live, key=lambda rec: (rec["_df"], rec["canonical_point"]), default=None)
        if best is not None:
            status_seen = True
            if overall_min is None or best["_df"] < overall_min:
                overall_min = best["_df"]
        entry = {
            "exponent": r,
            "coordinates": [list(c) for c in coords],
            "ideal": [str(g) for g in ideal_r.generators],
            "records": [{k: v for k, v in rec.items() if k != "_df"} for rec in records],
            "min_df": None if best is None else best["df"],
            "min_direction": None if best is None else best["canonical_point"],
        }
        if with_kempf:
            entry["kempf"] = _hilbert_point_destabilizer(ideal_r)
        exponents.append(entry)
    if not status_seen:
        status = "Inconclusive"
    elif overall_min < 0:
        status = "Destabilized"
    else:
        status = "NoDestabilizerFound"
    return {"status": status, "bound": bound, "r_max": r_max, "exponents": exponents,
            "min_df": None if overall_min is None else qstr(overall_min)}

