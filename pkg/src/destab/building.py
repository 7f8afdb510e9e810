"""Rational points of the spherical building of GL(V) as weighted flags.

A framed one-parameter subgroup (weights a, frame F) acts by
F diag(t^{a_i}) F^{-1}.  Its building point is the flag of frame images of
the spans {e_i : a_i >= w} for the distinct weights w (largest weight gives
the smallest subspace), together with the normalized gaps between
consecutive weights.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .algebra import linalg
from .errors import CentralSubgroup, InputError, NotInParabolic, SingularMatrix, TooLarge, cell_limit
from .opsub import _as_weights
from .serialize import q


@dataclass(frozen=True)
class Subspace:
    basis: tuple  # reduced echelon rows
    ambient: int

    @classmethod
    def span(cls, vectors, ambient):
        basis = linalg.row_space_basis(vectors, ambient)
        if not 0 < len(basis) < ambient:
            raise ValueError("a flag subspace must be proper and nonzero")
        return cls(basis, ambient)

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, v):
        return linalg.rank(self.basis + (tuple(v),)) == self.dim

    def is_preserved_by(self, g):
        """Whether the column action v -> g v maps the subspace into itself."""
        return all(self.contains(linalg.matvec(g, row)) for row in self.basis)


@dataclass(frozen=True)
class Flag:
    subspaces: tuple

    def __post_init__(self):
        if not self.subspaces:
            raise ValueError("a flag needs at least one subspace")
        for small, big in zip(self.subspaces, self.subspaces[1:]):
            if not (small.dim < big.dim and linalg.rank(big.basis + small.basis) == big.dim):
                raise ValueError("flag subspaces must be strictly increasing")


@dataclass(frozen=True)
class BuildingPoint:
    flag: Flag
    gaps: tuple

    def to_dict(self):
        return {
            "flag": [[[q(x) for x in row] for row in s.basis] for s in self.flag.subspaces],
            "gaps": [q(g) for g in self.gaps],
        }


class FramedOnePS:
    """lambda_f(t) = frame . diag(t^a) . frame^{-1}; columns of the frame are eigenvectors."""

    def __init__(self, weights, frame=None):
        self.weights = _as_weights(weights)
        n = len(self.weights)
        self.frame = linalg.identity(n) if frame is None else linalg.as_matrix(frame)
        if len(self.frame) != n or any(len(row) != n for row in self.frame):
            raise InputError(f"frame must be {n}x{n}", field="frame")
        self.frame_inv = linalg.inverse(self.frame)

    @property
    def dim(self):
        return len(self.weights)

    def conjugate(self, p):
        """p . lambda . p^{-1}, i.e. the same weights with frame p F."""
        return FramedOnePS(self.weights, linalg.matmul(linalg.as_matrix(p), self.frame))

    def scaled(self, m, c=0):
        return FramedOnePS([m * x + c for x in self.weights], self.frame)

    def eigen_coordinates(self, g):
        return linalg.matmul(linalg.matmul(self.frame_inv, linalg.as_matrix(g)), self.frame)


def building_point_of(lam):
    a = lam.weights
    levels = sorted(set(a), reverse=True)
    if len(levels) < 2:
        raise CentralSubgroup(f"constant weights {a} give a central subgroup")
    cols = linalg.transpose(lam.frame)
    span = lambda w: [cols[i] for i in range(lam.dim) if a[i] >= w]
    subspaces = tuple(Subspace.span(span(w), lam.dim) for w in levels[:-1])
    total = Fraction(levels[0] - levels[-1])
    gaps = tuple(Fraction(hi - lo) / total for hi, lo in zip(levels, levels[1:]))
    return BuildingPoint(Flag(subspaces), gaps)


def same_building_point(lam1, lam2):
    if lam1.dim != lam2.dim:
        raise InputError("one-parameter subgroups act on different spaces")
    return building_point_of(lam1) == building_point_of(lam2)


def parabolic_contains(lam, g):
    g = linalg.as_matrix(g)
    if linalg.determinant(g) == 0:
        raise SingularMatrix("g is not invertible")
    gp = lam.eigen_coordinates(g)
    a = lam.weights
    return all(gp[i][j] == 0
               for i in range(lam.dim) for j in range(lam.dim) if a[i] < a[j])


# Laurent polynomials in (s, t) as {(exp_s, exp_t): Fraction}; matrices are lists of rows.

def _lmul(p, r):
    out = {}
    for (a1, b1), c1 in p.items():
        for (a2, b2), c2 in r.items():
            k = (a1 + a2, b1 + b2)
            out[k] = out.get(k, Fraction(0)) + c1 * c2
    return {k: v for k, v in out.items() if v}


def _ladd(p, r):
    out = dict(p)
    for k, v in r.items():
        out[k] = out.get(k, Fraction(0)) + v
    return {k: v for k, v in out.items() if v}


def _lmatmul(x, y):
    n, m = len(x), len(y[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = {}
            for k in range(len(y)):
                if x[i][k] and y[k][j]:
                    acc = _ladd(acc, _lmul(x[i][k], y[k][j]))
            row.append(acc)
        out.append(row)
    return out


def _const(m):
    return [[({(0, 0): Fraction(x)} if x else {}) for x in row] for row in m]


def _diag(weights, var):
    n = len(weights)
    key = (lambda w: (w, 0)) if var == "s" else (lambda w: (0, w))
    return [[({key(weights[i]): Fraction(1)} if i == j else {}) for j in range(n)]
            for i in range(n)]


def verify_frame_twist(lam, p):
    """Check the frame-change identity lambda_{p(t) o f} = p lambda_f p^{-1} symbolically.

    p(t) scales the block of p (in eigen-coordinates) from V_i to V_j by
    t^{w_j - w_i}.  Verified: p(t) is polynomial in t with invertible value at
    t = 0; the twisted trivialization is still equivariant,
    p(st) diag(s^a) = diag(s^a) p(t); and the one-parameter subgroup read off
    the twisted frame at t = 1 equals p lambda_f p^{-1} entrywise in s.
    """
    p = linalg.as_matrix(p)
    if not parabolic_contains(lam, p):
        raise NotInParabolic("p does not lie in the parabolic subgroup P(lambda)")
    a, n = lam.weights, lam.dim
    pe = lam.eigen_coordinates(p)
    p_t = [[({(0, a[j] - a[i]): pe[j][i]} if pe[j][i] else {}) for i in range(n)]
           for j in range(n)]
    # polynomial in t, invertible at t = 0
    if any(e < 0 for row in p_t for entry in row for (_, e) in entry):
        return False
    p0 = [[entry.get((0, 0), Fraction(0)) for entry in row] for row in p_t]
    if linalg.determinant(p0) == 0:
        return False
    # p(st): every t^e becomes s^e t^e
    p_st = [[{(e, e): c for (_, e), c in entry.items()} for entry in row] for row in p_t]
    d_s = _diag(a, "s")
    if _lmatmul(p_st, d_s) != _lmatmul(d_s, p_t):
        return False
    # twisted frame at t = 1
    p1 = [[sum(entry.values(), Fraction(0)) for entry in row] for row in p_t]
    new_frame = linalg.matmul(lam.frame, p1)
    twisted = _lmatmul(_lmatmul(_const(new_frame), d_s), _const(linalg.inverse(new_frame)))
    conj = _lmatmul(_lmatmul(_const(linalg.matmul(p, lam.frame)), d_s),
                    _const(linalg.matmul(lam.frame_inv, linalg.inverse(p))))
    return twisted == conj


def ordered_partition_count(n):
    """Number of chains of nonempty proper subsets of an n-set: sum_k (k+1)! S(n, k+1)."""
    stirling = [[0] * (n + 1) for _ in range(n + 1)]
    stirling[0][0] = 1
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            stirling[i][j] = j * stirling[i - 1][j] + stirling[i - 1][j - 1]
    return sum(factorial(b) * stirling[n][b] for b in range(2, n + 1))


def enumerate_coordinate_simplices(n):
    """All flags of coordinate subspaces of k^n (the simplices of the standard apartment)."""
    if n < 2:
        raise InputError("ambient dimension must be at least 2")
    if n > 12:
        raise TooLarge(f"ambient dimension {n} exceeds the enumeration guard of 12")
    expected = ordered_partition_count(n)
    if expected > cell_limit(10**6):
        raise TooLarge(f"{expected} simplices exceed DESTAB_MAX_CELLS")
    eye = linalg.identity(n)
    flags = []
    # an ordered partition into >= 2 blocks <-> the chain of its proper prefix unions
    for blocks in _ordered_partitions(tuple(range(n))):
        if len(blocks) < 2:
            continue
        chain, acc = [], []
        for block in blocks[:-1]:
            acc.extend(block)
            chain.append(Subspace.span([eye[i] for i in sorted(acc)], n))
        flags.append(Flag(tuple(chain)))
    if len(flags) != expected:
        raise AssertionError("coordinate simplex count disagrees with the partition formula")
    return flags


def _ordered_partitions(items):
    if not items:
        yield ()
        return
    n = len(items)
    for mask in range(1, 2 ** n):
        block = tuple(x for i, x in enumerate(items) if mask >> i & 1)
        rest = tuple(x for i, x in enumerate(items) if not mask >> i & 1)
        for tail in _ordered_partitions(rest):
            yield (block,) + tail
