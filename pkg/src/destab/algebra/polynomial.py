"""Sparse multivariate polynomials with rational coefficients."""

import re
from fractions import Fraction
from functools import total_ordering

from ..errors import InputError


class MonomialOrder:
    """A monomial order given by a sort key on exponent tuples (larger key = larger monomial).

    Only degree-compatible orders are built here, so every order is a well-order
    and Buchberger terminates on arbitrary (not only homogeneous) input.
    """

    def __init__(self, name, key):
        self.name = name
        self.key = key

    def __repr__(self):
        return f"MonomialOrder({self.name})"

    @classmethod
    def grevlex(cls):
        return cls("grevlex", _grevlex_key)

    @classmethod
    def deglex(cls):
        return cls("deglex", _deglex_key)

    @classmethod
    def weighted(cls, weights, tie="grevlex"):
        """Order in which monomials of *smaller* weight <a, alpha> come first.

        Leading terms of a homogeneous polynomial are therefore its
        minimal-weight terms, matching the t -> 0 limit convention.
        """
        weights = tuple(int(w) for w in weights)
        tie_key = _grevlex_key if tie == "grevlex" else _deglex_key

        def key(e):
            return (sum(e), -sum(w * x for w, x in zip(weights, e)), tie_key(e))
        return cls(f"weight{weights}/{tie}", key)


def _grevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


def _deglex_key(e):
    return (sum(e), tuple(e))


def monomials_of_degree(nvars, degree):
    """All exponent tuples of the given degree, in descending lexicographic order.

    This is the single coordinate enumeration used for degree-r monomial
    coordinates (x^2, xy, xz, y^2, yz, z^2 for three variables).
    """
    if nvars == 0:
        return [()] if degree == 0 else []
    out = []
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - first):
            out.append((first,) + rest)
    return out


def divides(m, n):
    return all(x <= y for x, y in zip(m, n))


def mono_lcm(m, n):
    return tuple(max(x, y) for x, y in zip(m, n))


def mono_mul(m, n):
    return tuple(x + y for x, y in zip(m, n))


def mono_div(n, m):
    return tuple(y - x for x, y in zip(m, n))


def default_names(nvars):
    if nvars <= 3:
        return ("x", "y", "z")[:nvars]
    if nvars == 4:
        return ("x", "y", "z", "w")
    return tuple(f"x{i}" for i in range(nvars))


@total_ordering
class Polynomial:
    """Immutable polynomial: a map from exponent tuples to nonzero Fractions."""

    __slots__ = ("_terms", "variables", "_hash")

    def __init__(self, terms, variables):
        self.variables = tuple(variables)
        n = len(self.variables)
        clean = {}
        for exp, c in dict(terms).items():
            exp = tuple(int(x) for x in exp)
            if len(exp) != n:
                raise ValueError(f"exponent {exp} does not match {n} variables")
            c = Fraction(c)
            if c:
                clean[exp] = clean.get(exp, Fraction(0)) + c
                if not clean[exp]:
                    del clean[exp]
        self._terms = clean
        self._hash = None

    # construction helpers
    @classmethod
    def zero(cls, variables):
        return cls({}, variables)

    @classmethod
    def monomial(cls, exp, variables, coeff=1):
        return cls({tuple(exp): coeff}, variables)

    @classmethod
    def variable(cls, index, variables):
        exp = [0] * len(variables)
        exp[index] = 1
        return cls({tuple(exp): 1}, variables)

    @property
    def terms(self):
        return dict(self._terms)

    @property
    def nvars(self):
        return len(self.variables)

    def items(self):
        return self._terms.items()

    def support(self):
        return sorted(self._terms, reverse=True)

    def coefficient(self, exp):
        return self._terms.get(tuple(exp), Fraction(0))

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def degree(self):
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self):
        return len({sum(e) for e in self._terms}) <= 1

    def weight_range(self, weights):
        vals = [sum(w * x for w, x in zip(weights, e)) for e in self._terms]
        return min(vals), max(vals)

    def leading_monomial(self, order):
        return max(self._terms, key=order.key)

    def leading_coefficient(self, order):
        return self._terms[self.leading_monomial(order)]

    def monic(self, order):
        lc = self.leading_coefficient(order)
        return self.scale(1 / lc)

    def initial_form(self, weights):
        """Terms of minimal weight <weights, alpha>."""
        if not self._terms:
            return self
        lo, _ = self.weight_range(weights)
        return Polynomial({e: c for e, c in self._terms.items()
                           if sum(w * x for w, x in zip(weights, e)) == lo}, self.variables)

    def _check(self, other):
        if other.variables != self.variables:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return self + Polynomial.monomial((0,) * self.nvars, self.variables, other)
        self._check(other)
        t = dict(self._terms)
        for e, c in other._terms.items():
            t[e] = t.get(e, Fraction(0)) + c
        return Polynomial(t, self.variables)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({e: -c for e, c in self._terms.items()}, self.variables)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        return Polynomial({e: c * v for e, v in self._terms.items()}, self.variables)

    def mul_monomial(self, exp, coeff=1):
        return Polynomial({mono_mul(e, exp): coeff * c for e, c in self._terms.items()},
                          self.variables)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(Fraction(other))
        self._check(other)
        t = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = mono_mul(e1, e2)
                t[e] = t.get(e, Fraction(0)) + c1 * c2
        return Polynomial(t, self.variables)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = Polynomial.monomial((0,) * self.nvars, self.variables)
        for _ in range(k):
            out = out * self
        return out

    def substitute_scaling(self, scales):
        """Apply X_i -> scales[i] * X_i."""
        out = {}
        for e, c in self._terms.items():
            f = Fraction(c)
            for s, x in zip(scales, e):
                f *= Fraction(s) ** x
            out[e] = f
        return Polynomial(out, self.variables)

    def evaluate(self, point):
        total = Fraction(0)
        for e, c in self._terms.items():
            term = Fraction(c)
            for v, x in zip(point, e):
                term *= Fraction(v) ** x
            total += term
        return total

    def rename(self, variables):
        return Polynomial(self._terms, variables)

    def _sort_key(self):
        return tuple(sorted(self._terms.items(), key=lambda kv: _deglex_key(kv[0]), reverse=True))

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if isinstance(other, (int, Fraction)):
                return self == Polynomial.monomial((0,) * self.nvars, self.variables, other)
            return NotImplemented
        return self.variables == other.variables and self._terms == other._terms

    def __lt__(self, other):
        return self._sort_key() < other._sort_key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), key=lambda kv: _deglex_key(kv[0]), reverse=True):
            mono = "*".join(
                name if x == 1 else f"{name}^{x}"
                for name, x in zip(self.variables, e) if x)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")
_FLOATISH = re.compile(r"\d*\.\d|\d\.|\d[eE][-+]?\d")


def parse_polynomial(text, variables):
    """Parse an exact polynomial such as ``"x*z - y^2"`` or ``"3/2*x^2 - (x+y)^2"``.

    Division is only allowed by integer constants; float literals are rejected.
    """
    variables = tuple(variables)
    if not isinstance(text, str):
        raise InputError(f"polynomial must be a string, got {text!r}")
    if _FLOATISH.search(text):
        raise InputError(f"float literal in polynomial {text!r}; use p/q")
    tokens = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        m = _TOKEN.match(stripped, pos)
        if not m:
            raise InputError(f"cannot parse {text!r} at position {pos}")
        tokens.append(m.group(1) or m.group(2) or m.group(3))
        pos = m.end()
    index = {name: i for i, name in enumerate(variables)}
    one = Polynomial.monomial((0,) * len(variables), variables)
    state = {"i": 0}

    def peek():
        return tokens[state["i"]] if state["i"] < len(tokens) else None

    def take(expected=None):
        tok = peek()
        if tok is None or (expected is not None and tok != expected):
            raise InputError(f"unexpected end or token in {text!r}")
        state["i"] += 1
        return tok

    def expr():
        sign = 1
        while peek() in ("+", "-"):
            sign = -sign if take() == "-" else sign
        out = term().scale(sign)
        while peek() in ("+", "-"):
            op = take()
            t = term()
            out = out + t if op == "+" else out - t
        return out

    def term():
        out = power()
        while peek() in ("*", "/") or (peek() is not None and peek() not in ("+", "-", ")", "^", "**")):
            if peek() == "/":
                take()
                den = power()
                if den.degree() > 0 or den.is_zero():
                    raise InputError(f"division by a non-constant in {text!r}")
                out = out.scale(1 / den.coefficient((0,) * len(variables)))
            else:
                if peek() == "*":
                    take()
                out = out * power()
        return out

    def power():
        base = atom()
        if peek() in ("^", "**"):
            take()
            exp = take()
            if not exp.isdigit():
                raise InputError(f"exponent must be a non-negative integer in {text!r}")
            base = base ** int(exp)
        return base

    def atom():
        tok = take()
        if tok.isdigit():
            return one.scale(int(tok))
        if tok == "(":
            inner = expr()
            take(")")
            return inner
        if tok in ("-", "+"):
            inner = power()
            return inner.scale(-1) if tok == "-" else inner
        if tok in index:
            return Polynomial.variable(index[tok], variables)
        raise InputError(f"unknown variable {tok!r} in {text!r}")

    if not tokens:
        raise InputError("empty polynomial string")
    result = expr()
    if peek() is not None:
        raise InputError(f"trailing input in {text!r}")
    return result
