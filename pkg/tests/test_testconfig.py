import random
from fractions import Fraction

import pytest

from destab.algebra import HomogeneousIdeal
from destab.errors import CentralSubgroup, Degenerate
from destab.oracles import df_oracle
from destab.testconfig import (TestDegeneration, almost_trivial_necessary, df_invariant,
                               flat_limit, is_t_power_flag_ideal, k_stability_sweep)

from conftest import catalog_ideal

F = Fraction
XYZ = ("x", "y", "z")


def ideal(*gens, variables=XYZ):
    return HomogeneousIdeal.from_strings(variables, list(gens))


def test_flat_limit_examples(conic):
    assert flat_limit(TestDegeneration(conic, (-1, 0, 0))) == ideal("x*z")
    assert flat_limit(TestDegeneration(conic, (1, 0, 0))) == ideal("y^2")
    assert flat_limit(TestDegeneration(conic, (4, 4, 4))) == conic


def test_equivalent_weights_share_central_fiber(twisted_cubic):
    rng = random.Random(3)
    for _ in range(40):
        a = [rng.randint(-2, 2) for _ in range(4)]
        if len(set(a)) == 1:
            continue
        m, c = rng.randint(1, 4), rng.randint(-3, 3)
        assert TestDegeneration(twisted_cubic, a).central_fiber == \
            TestDegeneration(twisted_cubic, [m * x + c for x in a]).central_fiber


def test_almost_trivial_examples(conic, twisted_cubic):
    check = almost_trivial_necessary(conic, (1, 0, 0))
    assert (check.c, check.dim, check.verdict) == (1, 1, "Fails")
    with pytest.raises(CentralSubgroup):
        almost_trivial_necessary(conic, (2, 2, 2))
    # the twisted cubic spans P^3, so the dimension comparison applies
    assert almost_trivial_necessary(twisted_cubic, (1, 1, 0, 0)).verdict == "Fails"
    assert almost_trivial_necessary(twisted_cubic, (1, 1, 1, 0)).c == 0


def test_almost_trivial_rejects_degenerate():
    with pytest.raises(Degenerate):
        almost_trivial_necessary(catalog_ideal("line_p3"), (1, 1, 0, 0))


def test_almost_trivial_possible_case():
    p1 = HomogeneousIdeal.zero(2)
    assert almost_trivial_necessary(p1, (1, 0)).verdict == "Fails"
    # the points [0:1:0], [0:0:1], [1:1:1] avoid V(y, z) = {[1:0:0]}
    points = ideal("x*y - x*z", "x^2 - x*y", "y*z - x*z")
    assert points.hilbert_polynomial().coeffs == (3,)
    check = almost_trivial_necessary(points, (1, 0, 0))
    assert check.c == 1 and not check.meets and check.verdict == "Possible"


def test_t_power_examples():
    xt = ("x", "t")
    assert is_t_power_flag_ideal(["t^3"], xt) == (True, 3)
    assert is_t_power_flag_ideal(["t^2", "x*t"], xt) == (False, None)
    assert is_t_power_flag_ideal(["x", "t"], xt) == (False, None)
    assert is_t_power_flag_ideal(["t^2 + x*t", "x*t"], xt) == (False, None)
    assert is_t_power_flag_ideal(["t^2 + x*t", "x*t"], ("x", "t"))[0] is False
    assert is_t_power_flag_ideal(["t^2 - t^2 + t^4", "2*t^4"], xt) == (True, 4)


def test_df_examples(conic):
    assert df_invariant(TestDegeneration(conic, (0, 0, 0))).df == 0
    assert df_invariant(TestDegeneration(HomogeneousIdeal.zero(2), (1, 0))).df == 0
    line_pair = df_invariant(TestDegeneration(conic, (-1, 0, 0)))
    assert line_pair.df == F(1, 2)
    assert (line_pair.a0, line_pair.a1) == (2, 1)


@pytest.mark.parametrize("name, a", [
    ("conic", (-1, 0, 0)), ("conic", (1, 0, 0)), ("conic", (0, 1, 0)), ("conic", (2, 1, 0)),
    ("twisted_cubic", (1, 0, 0, 0)), ("twisted_cubic", (0, 2, 1, 0)), ("plane_cubic", (1, 0, 2)),
    ("line_p3", (1, 0, 2, 0)),
])
def test_df_matches_linear_algebra_oracle(name, a):
    I = catalog_ideal(name)
    report = df_invariant(TestDegeneration(I, a))
    assert report.df == df_oracle(I, a, report.dim)


def test_df_shift_and_scale():
    rng = random.Random(5)
    conic = catalog_ideal("conic")
    for _ in range(15):
        a = [rng.randint(-2, 2) for _ in range(3)]
        c, m = rng.randint(-3, 3), rng.randint(1, 3)
        base = df_invariant(TestDegeneration(conic, a)).df
        assert df_invariant(TestDegeneration(conic, [x + c for x in a])).df == base
        assert df_invariant(TestDegeneration(conic, [m * x for x in a])).df == m * base


def test_conic_df_nonnegative_on_grid(conic):
    from itertools import product
    for a in product(range(-2, 3), repeat=3):
        assert df_invariant(TestDegeneration(conic, a)).df >= 0


def test_sweep_examples(conic):
    report = k_stability_sweep(HomogeneousIdeal.zero(2), 1, 2)
    assert report["min_df"] == "0/1"
    report = k_stability_sweep(conic, 1, 1)
    dfs = {tuple(rec["weights"]): rec["df"] for rec in report["exponents"][0]["records"]}
    assert dfs[(0, 1, 1)] == "1/2"  # the line-pair direction, T-equivalent to (-1,0,0)
    report = k_stability_sweep(conic, 1, 0)
    assert report["status"] == "Inconclusive"
    assert report["exponents"][0]["records"] == []


def test_sweep_screen_never_drops_nontrivial_limits(twisted_cubic):
    report = k_stability_sweep(twisted_cubic, 1, 1, with_kempf=False)
    for rec in report["exponents"][0]["records"]:
        td = TestDegeneration(twisted_cubic, rec["weights"])
        if flat_limit(td) != twisted_cubic:
            assert not rec["screened"] and rec["df"] is not None


def test_sweep_exponent_two(conic):
    report = k_stability_sweep(conic, 2, 1)
    second = report["exponents"][1]
    assert len(second["coordinates"]) == 5
    assert second["kempf"]["degree"] == 2
    assert report["status"] in {"Destabilized", "NoDestabilizerFound"}
