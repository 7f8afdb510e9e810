"""Univariate polynomials in k with exact coefficients (Hilbert / weight polynomials)."""

from fractions import Fraction

from .linalg import solve


class UniPoly:
    """Polynomial c_0 + c_1 k + ... stored with ascending, trailing-zero-free coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = [Fraction(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def coefficient(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __call__(self, k):
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * k + c
        return out

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("k" if i == 1 else f"k^{i}")
            mag = abs(c)
            body = mono if mono and mag == 1 else (f"{mag}*{mono}" if mono else str(mag))
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def interpolate(ks, values):
    """Exact Lagrange interpolation through the points (ks[i], values[i])."""
    n = len(ks)
    vander = [[Fraction(k) ** j for j in range(n)] for k in ks]
    return UniPoly(solve(vander, values))
