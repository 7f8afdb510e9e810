import random
import threading
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from destab.algebra import (HomogeneousIdeal, MonomialOrder, groebner_basis,
                            initial_ideal, is_empty_projective, monomials_of_degree,
                            parse_polynomial, reduced_echelon, reembed, standard_monomials)
from destab.algebra.ideal import coordinate_ideal
from destab.errors import EmptyScheme, InputError
from destab.oracles import hilbert_function_oracle

from conftest import CATALOG, catalog_ideal

XYZ = ("x", "y", "z")
F = Fraction


def fr(rows):
    return tuple(tuple(F(x) for x in row) for row in rows)


# reduced_echelon

@pytest.mark.parametrize("m, expected, rank", [
    ([[1, 2], [2, 4]], [[1, 2], [0, 0]], 1),
    ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], [[1, 0, 0], [0, 1, 0], [0, 0, 1]], 3),
    ([[0, 1], [1, 0]], [[1, 0], [0, 1]], 2),
])
def test_reduced_echelon_examples(m, expected, rank):
    assert reduced_echelon(m) == (fr(expected), rank)


small_matrices = st.integers(1, 4).flatmap(lambda r: st.integers(1, 4).flatmap(
    lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=r, max_size=r)))


@given(small_matrices)
@settings(max_examples=150, deadline=None)
def test_reduced_echelon_matches_sympy_and_is_idempotent(m):
    rref, rank = reduced_echelon(m)
    sym, piv = sympy.Matrix(m).rref()
    assert rank == len(piv)
    assert [[F(int(x.p), int(x.q)) for x in sym.row(i)] for i in range(sym.rows)] == [list(r) for r in rref]
    assert reduced_echelon(rref) == (rref, rank)


# Groebner bases

def test_groebner_single_linear_generator():
    basis = groebner_basis([parse_polynomial("x - y", XYZ)], MonomialOrder.deglex())
    assert basis == [parse_polynomial("x - y", XYZ)]


def test_groebner_monomial_fixed_point():
    v = ("x", "y")
    basis = groebner_basis([parse_polynomial("x", v), parse_polynomial("y", v)], MonomialOrder.deglex())
    assert sorted(basis) == sorted([parse_polynomial("x", v), parse_polynomial("y", v)])


def _sympy_basis(gens, variables, order):
    syms = sympy.symbols(variables)
    g = sympy.groebner([sympy.sympify(s.replace("^", "**")) for s in gens], *syms, order=order)
    return sorted(parse_polynomial(str(p).replace("**", "^"), variables) for p in g.exprs)


def test_groebner_against_sympy_deglex():
    gens = ["x*z - y^2", "x^2"]
    ours = groebner_basis([parse_polynomial(s, XYZ) for s in gens], MonomialOrder.deglex())
    order = MonomialOrder.deglex()
    monic = sorted(g.monic(order) for g in _sympy_basis(gens, XYZ, "grlex"))
    assert sorted(ours) == monic
    leads = {g.leading_monomial(order) for g in ours}
    assert (0, 4, 0) in leads  # y^4, an x-free element beginning with y^2 * y^2
    for g in gens:
        assert HomogeneousIdeal(ours, XYZ).contains(parse_polynomial(g, XYZ))


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_groebner_against_sympy_grevlex(name):
    variables, gens = CATALOG[name]
    ours = catalog_ideal(name).groebner()
    order = MonomialOrder.grevlex()
    assert sorted(ours) == sorted(g.monic(order) for g in _sympy_basis(gens, variables, "grevlex"))


def test_groebner_deterministic_under_permutation():
    rng = random.Random(5)
    variables, gens = CATALOG["twisted_cubic"]
    polys = [parse_polynomial(g, variables) for g in gens]
    ref = groebner_basis(polys, MonomialOrder.grevlex())
    for _ in range(10):
        rng.shuffle(polys)
        scaled = [p.scale(rng.randint(1, 5)) for p in polys]
        assert groebner_basis(scaled, MonomialOrder.grevlex()) == ref


def test_every_generator_reduces_to_zero(twisted_cubic):
    for a in [(1, 0, 0, 0), (0, 2, 1, 0), (-1, 3, 0, 2)]:
        order = MonomialOrder.weighted(a)
        basis = twisted_cubic.groebner(order)
        from destab.algebra import normal_form
        for g in twisted_cubic.generators:
            assert normal_form(g, basis, order).is_zero()


def test_groebner_cache_is_thread_safe(twisted_cubic):
    results = []
    order = MonomialOrder.weighted((3, 1, 0, 2))

    def work():
        results.append(twisted_cubic.groebner(order))

    threads = [threading.Thread(target=work) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r == results[0] for r in results)


# initial ideals

def _substitution_limit(f, a):
    """lim_{t->0} t^{-min} f(t^{a_0} x, ...), computed with sympy."""
    t = sympy.Symbol("t")
    syms = sympy.symbols(XYZ)
    expr = sympy.sympify(f.replace("^", "**"))
    base = min(a)  # homogeneity: shifting weights only rescales by a power of t
    sub = sympy.expand(expr.subs({s: t ** (w - base) * s for s, w in zip(syms, a)}, simultaneous=True))
    low = min(sympy.Poly(sub, t).monoms(), key=lambda m: m[0])[0] if sub.has(t) else 0
    limit = sympy.expand(sub / t ** low).subs(t, 0)
    return parse_polynomial(str(sympy.expand(limit)).replace("**", "^"), XYZ)


@pytest.mark.parametrize("a, expected", [
    ((0, 0, 0), "x*z - y^2"),
    ((1, 0, 0), "y^2"),
    ((-1, 0, 0), "x*z"),
])
def test_initial_ideal_examples(conic, a, expected):
    limit = initial_ideal(conic, a)
    assert limit == HomogeneousIdeal.from_strings(XYZ, [expected])
    assert limit == HomogeneousIdeal([_substitution_limit("x*z - y^2", a)], XYZ)


@pytest.mark.parametrize("a", [(2, 1, 0), (0, 1, 0), (1, 3, -1), (0, 0, 2)])
def test_initial_ideal_of_hypersurface_is_substitution_limit(a):
    for f in ["x*z - y^2", "y^2*z - x^3 - x*z^2", "x^3 + y^3 + z^3 - 3*x*y*z"]:
        ideal = HomogeneousIdeal.from_strings(XYZ, [f])
        assert initial_ideal(ideal, a) == HomogeneousIdeal([_substitution_limit(f, a)], XYZ)


def test_initial_ideal_can_be_non_monomial(conic):
    limit = initial_ideal(conic, (2, 1, 0))
    assert limit == conic


def test_flatness_small_grid():
    for name in ("conic", "plane_cubic"):
        ideal = catalog_ideal(name)
        for a in [(1, 0, 0), (0, -1, 2), (3, 1, 1), (-2, 2, 0)]:
            limit = initial_ideal(ideal, a)
            assert all(ideal.hilbert_function(k) == limit.hilbert_function(k) for k in range(9))


# Hilbert functions and polynomials

def test_hilbert_function_examples(conic):
    assert HomogeneousIdeal.zero(3).hilbert_function(2) == 6
    assert HomogeneousIdeal.from_strings(XYZ, ["x", "y", "z"]).hilbert_function(1) == 0
    assert [conic.hilbert_function(k) for k in range(1, 9)] == [2 * k + 1 for k in range(1, 9)]


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_hilbert_function_matches_linear_algebra(name):
    ideal = catalog_ideal(name)
    for k in range(7):
        assert ideal.hilbert_function(k) == hilbert_function_oracle(ideal, k)


def test_hilbert_polynomial_examples(conic):
    hp = conic.hilbert_polynomial()
    assert hp.coeffs == (1, 2) and hp.degree == 1
    assert HomogeneousIdeal.zero(2).hilbert_polynomial().coeffs == (1, 1)
    assert HomogeneousIdeal.from_strings(("x0", "x1"), ["x0"]).hilbert_polynomial().coeffs == (1,)
    assert catalog_ideal("twisted_cubic").hilbert_polynomial().coeffs == (1, 3)
    assert catalog_ideal("plane_cubic").hilbert_polynomial().coeffs == (0, 3)


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_hilbert_polynomial_agrees_beyond_window(name):
    ideal = catalog_ideal(name)
    hp = ideal.hilbert_polynomial()
    start = ideal.stabilization_start() + ideal.nvars + 3
    assert all(hp(k) == ideal.hilbert_function(k) for k in range(start, start + 5))


def test_hilbert_polynomial_of_unit_ideal():
    unit = HomogeneousIdeal.from_strings(XYZ, ["1"])
    with pytest.raises(EmptyScheme):
        unit.hilbert_polynomial()
    with pytest.raises(EmptyScheme):
        is_empty_projective(unit)


# projective emptiness

def test_is_empty_projective_examples(conic):
    assert is_empty_projective(HomogeneousIdeal.from_strings(XYZ, ["x", "y", "z"]))
    # [1:0:0] lies on xz - y^2, y, z
    assert not is_empty_projective(coordinate_ideal(conic, [1, 2]))
    # [0:0:1] lies on xz - y^2, x, y
    assert not is_empty_projective(coordinate_ideal(conic, [0, 1]))
    assert is_empty_projective(coordinate_ideal(conic, [0, 1, 2]))


def _has_rational_point_on_small_grid(ideal):
    pts = [p for p in __import__("itertools").product(range(-2, 3), repeat=ideal.nvars) if any(p)]
    return any(all(g.evaluate(p) == 0 for g in ideal.generators) for p in pts)


@pytest.mark.parametrize("subset", [[0], [1], [2], [0, 1], [0, 2], [1, 2], [0, 1, 2]])
def test_emptiness_consistent_with_point_search(conic, subset):
    # coordinate sections of the conic are either empty or have a small integer point
    sub = coordinate_ideal(conic, subset)
    assert is_empty_projective(sub) == (not _has_rational_point_on_small_grid(sub))


# re-embedding

def test_reembed_conic_in_degree_two(conic):
    coords = standard_monomials(conic, 2)
    assert len(coords) == 5
    quartic = reembed(conic, coords)
    assert quartic.hilbert_polynomial().coeffs == (1, 4)
    assert quartic.hilbert_function(1) == 5


# parsing

def test_parser_exact_and_rejects_floats():
    p = parse_polynomial("3/2*x^2 - (x+y)^2 + 2x", XYZ)
    assert p.coefficient((2, 0, 0)) == F(1, 2)
    assert p.coefficient((1, 1, 0)) == -2
    with pytest.raises(InputError):
        parse_polynomial("1.5*x", XYZ)
    with pytest.raises(InputError):
        parse_polynomial("x/y", XYZ)
    with pytest.raises(InputError):
        parse_polynomial("q + x", XYZ)


def test_homogeneity_enforced():
    with pytest.raises(InputError):
        HomogeneousIdeal.from_strings(XYZ, ["x^2 - y"])


def test_monomial_enumeration_order():
    assert monomials_of_degree(3, 2) == [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]
