"""Exact JSON encoding: every rational is written as a "p/q" string."""

import json
from fractions import Fraction

from .errors import InputError


def q(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text, field=None):
    if isinstance(text, bool):
        raise InputError(f"expected a rational, got {text!r}", field=field)
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, str):
        s = text.strip()
        num, _, den = s.partition("/")
        try:
            if not _intlike(num) or (den and not _intlike(den)):
                raise ValueError
            return Fraction(int(num), int(den) if den else 1)
        except (ValueError, ZeroDivisionError):
            pass
    raise InputError(f"expected an integer or a 'p/q' string, got {text!r}", field=field)


def _intlike(s):
    s = s.strip()
    return bool(s) and s.lstrip("+-").isdigit()


def qvec(v):
    return [q(x) for x in v]


def approx(x, digits=12):
    return f"{float(x):.{digits}g}"


def dumps(obj):
    """Deterministic JSON text (sorted keys, fixed separators, trailing newline)."""
    return json.dumps(obj, sort_keys=True, indent=2, separators=(",", ": ")) + "\n"
