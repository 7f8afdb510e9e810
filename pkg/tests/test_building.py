import random
from fractions import Fraction

import pytest
import sympy

from destab.algebra import linalg
from destab.building import (FramedOnePS, Subspace, building_point_of, enumerate_coordinate_simplices,
                             ordered_partition_count, parabolic_contains, same_building_point,
                             verify_frame_twist)
from destab.errors import CentralSubgroup, NotInParabolic, SingularMatrix, TooLarge

F = Fraction


def e(i, n):
    return [1 if j == i else 0 for j in range(n)]


def test_building_point_examples():
    pt = building_point_of(FramedOnePS((1, 0, 0)))
    assert pt.flag.subspaces == (Subspace.span([e(0, 3)], 3),)
    assert pt.gaps == (1,)
    pt = building_point_of(FramedOnePS((2, 1, 0)))
    assert pt.flag.subspaces == (Subspace.span([e(0, 3)], 3), Subspace.span([e(0, 3), e(1, 3)], 3))
    assert pt.gaps == (F(1, 2), F(1, 2))
    assert building_point_of(FramedOnePS((3, 1, 1))) == building_point_of(FramedOnePS((2, 0, 0)))


def test_building_point_central():
    with pytest.raises(CentralSubgroup):
        building_point_of(FramedOnePS((2, 2)))


def _limit_exists(a, g):
    """Oracle: does lim_{t->0} lambda(t) g lambda(t)^{-1} exist, via sympy."""
    t = sympy.Symbol("t", positive=True)
    n = len(a)
    lam = sympy.diag(*[t ** x for x in a])
    lam_inv = sympy.diag(*[t ** (-x) for x in a])
    m = lam * sympy.Matrix(g) * lam_inv
    return all(sympy.limit(m[i, j], t, 0, "+").is_finite for i in range(n) for j in range(n))


@pytest.mark.parametrize("a, g, expected", [
    ((1, 0), [[1, 1], [0, 1]], True),
    ((1, 0), [[1, 0], [1, 1]], False),
    ((2, 1, 0), [[1, 0, 0], [0, 1, 0], [0, 0, 1]], True),
    ((0, 2, 1), [[1, 0, 0], [3, 1, 2], [1, 0, 1]], True),
])
def test_parabolic_contains_examples(a, g, expected):
    assert parabolic_contains(FramedOnePS(a), g) is expected
    assert _limit_exists(a, g) is expected


def test_parabolic_contains_random_against_limit_oracle():
    rng = random.Random(8)
    for _ in range(25):
        a = [rng.randint(-2, 2) for _ in range(3)]
        g = [[rng.choice([0, 0, 1, -1, 2]) for _ in range(3)] for _ in range(3)]
        if linalg.determinant(g) == 0:
            continue
        assert parabolic_contains(FramedOnePS(a), g) == _limit_exists(a, g)


def test_parabolic_contains_singular():
    with pytest.raises(SingularMatrix):
        parabolic_contains(FramedOnePS((1, 0)), [[1, 1], [1, 1]])


def random_parabolic(a, rng, frame=None):
    """A random invertible element of P(lambda), in standard coordinates."""
    n = len(a)
    while True:
        gp = [[(rng.randint(-3, 3) if a[i] >= a[j] else 0) for j in range(n)] for i in range(n)]
        if linalg.determinant(gp) != 0:
            break
    if frame is None:
        return gp
    return linalg.matmul(linalg.matmul(frame, gp), linalg.inverse(frame))


def random_frame(n, rng):
    while True:
        f = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
        if linalg.determinant(f) != 0:
            return f


def test_frame_twist_examples():
    assert verify_frame_twist(FramedOnePS((1, 0)), [[1, 0], [0, 1]])
    assert verify_frame_twist(FramedOnePS((1, 0)), [[1, 1], [0, 1]])
    rng = random.Random(1)
    p = [[1, rng.randint(-5, 5), rng.randint(-5, 5)], [0, 1, rng.randint(-5, 5)], [0, 0, 1]]
    assert verify_frame_twist(FramedOnePS((2, 1, 0)), p)


def test_frame_twist_requires_parabolic():
    with pytest.raises(NotInParabolic):
        verify_frame_twist(FramedOnePS((1, 0)), [[1, 0], [1, 1]])


def test_same_building_point_examples():
    rng = random.Random(2)
    lam = FramedOnePS((2, 0, 1), random_frame(3, rng))
    p = random_parabolic(lam.weights, rng, lam.frame)
    assert parabolic_contains(lam, p)
    assert same_building_point(lam, lam.conjugate(p))
    assert same_building_point(lam, lam.scaled(2))
    assert not same_building_point(FramedOnePS((1, 0, 0)), FramedOnePS((0, 1, 0)))


def test_invariance_under_all_relations():
    rng = random.Random(4)
    for _ in range(200):
        n = rng.randint(2, 4)
        a = [rng.randint(-3, 3) for _ in range(n)]
        if len(set(a)) == 1:
            continue
        lam = FramedOnePS(a, random_frame(n, rng))
        p = random_parabolic(a, rng, lam.frame)
        moved = lam.scaled(rng.randint(1, 5), rng.randint(-5, 5)).conjugate(p)
        assert building_point_of(moved) == building_point_of(lam)


def test_parabolic_closed_under_products_and_contains_levi():
    rng = random.Random(6)
    for _ in range(100):
        n = rng.randint(2, 4)
        a = [rng.randint(-2, 2) for _ in range(n)]
        lam = FramedOnePS(a, random_frame(n, rng))
        g = random_parabolic(a, rng, lam.frame)
        h = random_parabolic(a, rng, lam.frame)
        assert parabolic_contains(lam, linalg.matmul(g, h))
        # block diagonal in eigen-coordinates commutes with lambda
        while True:
            levi = [[(rng.randint(-2, 2) if a[i] == a[j] else 0) for j in range(n)] for i in range(n)]
            if linalg.determinant(levi) != 0:
                break
        assert parabolic_contains(lam, linalg.matmul(linalg.matmul(lam.frame, levi), lam.frame_inv))


def test_flag_is_preserved_by_parabolic():
    rng = random.Random(9)
    for _ in range(60):
        n = rng.randint(2, 4)
        a = [rng.randint(-2, 2) for _ in range(n)]
        if len(set(a)) == 1:
            continue
        lam = FramedOnePS(a, random_frame(n, rng))
        flag = building_point_of(lam).flag
        samples = [random_parabolic(a, rng, lam.frame) for _ in range(4)]
        assert all(s.is_preserved_by(g) for s in flag.subspaces for g in samples)
        # the flag is exactly the set of preserved subspaces among frame-coordinate spans
        cols = linalg.transpose(lam.frame)
        from itertools import combinations
        for k in range(1, n):
            for idx in combinations(range(n), k):
                sub = Subspace.span([cols[i] for i in idx], n)
                preserved = all(sub.is_preserved_by(g) for g in samples)
                if sub in flag.subspaces:
                    assert preserved
                elif preserved:
                    # a generic parabolic sample only preserves flag members; allow a
                    # coincidence only if a fresh sample breaks it
                    extra = [random_parabolic(a, rng, lam.frame) for _ in range(6)]
                    assert not all(sub.is_preserved_by(g) for g in extra)


def test_coordinate_simplices():
    assert len(enumerate_coordinate_simplices(2)) == 2
    flags = enumerate_coordinate_simplices(3)
    assert len(flags) == 12
    assert sum(len(f.subspaces) == 1 for f in flags) == 6
    assert sum(len(f.subspaces) == 2 for f in flags) == 6
    assert ordered_partition_count(2) == 2
    assert [ordered_partition_count(n) for n in range(2, 6)] == [2, 12, 74, 540]


def test_coordinate_simplices_guard():
    with pytest.raises(TooLarge):
        enumerate_coordinate_simplices(13)


def test_building_point_serialization():
    d = building_point_of(FramedOnePS((2, 1, 0))).to_dict()
    assert d["gaps"] == ["1/2", "1/2"]
    assert d["flag"][0] == [["1/1", "0/1", "0/1"]]
