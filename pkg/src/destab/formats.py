"""Input documents: ideal files, weight vectors, state sets, frames.

All documents are JSON.  Float literals are rejected anywhere so that every
number entering the library is exact.
"""

import json
from pathlib import Path

from .algebra.ideal import HomogeneousIdeal
from .algebra.polynomial import parse_polynomial
from .errors import InputError
from .serialize import parse_rational
from .stability import StateSet


def _reject_float(text):
    raise InputError(f"float literal {text} is not allowed; use integers or 'p/q' strings")


def loads(text, field=None):
    try:
        return json.loads(text, parse_float=_reject_float)
    except InputError as exc:
        exc.field = field
        raise
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}", field=field)


def load_json_or_path(value, field):
    """Parse ``value`` as inline JSON when it looks like JSON, else read it as a file."""
    stripped = value.strip()
    if stripped[:1] in "[{" or stripped.lstrip("-")[:1].isdigit():
        return loads(stripped, field)
    path = Path(value)
    if not path.is_file():
        raise InputError(f"no such file: {value}", field=field)
    return loads(path.read_text(), field)


def ideal_from_document(doc, field="ideal"):
    if not isinstance(doc, dict):
        raise InputError("ideal document must be an object", field=field)
    variables = doc.get("variables")
    gens = doc.get("generators")
    if not isinstance(variables, list) or not variables or not all(isinstance(v, str) for v in variables):
        raise InputError("'variables' must be a nonempty list of names", field=f"{field}.variables")
    if len(set(variables)) != len(variables):
        raise InputError("duplicate variable names", field=f"{field}.variables")
    if not isinstance(gens, list) or not all(isinstance(g, str) for g in gens):
        raise InputError("'generators' must be a list of polynomial strings", field=f"{field}.generators")
    try:
        polys = [parse_polynomial(g, variables) for g in gens]
        return HomogeneousIdeal(polys, variables)
    except InputError as exc:
        exc.field = f"{field}.generators"
        raise


def load_ideal(value):
    return ideal_from_document(load_json_or_path(value, "ideal"))


def weights_from_document(doc, field="weights"):
    if isinstance(doc, dict):
        doc = doc.get("weights")
    if not isinstance(doc, list) or not doc:
        raise InputError("weights must be a nonempty list of integers", field=field)
    out = []
    for x in doc:
        if isinstance(x, bool) or not isinstance(x, int):
            raise InputError(f"weight entries must be integers, got {x!r}", field=field)
        out.append(x)
    return out


def load_weights(value):
    return weights_from_document(load_json_or_path(value, "weights"))


def state_from_document(doc, field="state"):
    if isinstance(doc, list):
        doc = {"characters": doc}
    if not isinstance(doc, dict) or not isinstance(doc.get("characters"), list):
        raise InputError("state must have a 'characters' list", field=f"{field}.characters")
    chars = doc["characters"]
    for c in chars:
        if not isinstance(c, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in c):
            raise InputError(f"character {c!r} is not a list of integers", field=f"{field}.characters")
    labels = doc.get("labels")
    if labels is not None and (not isinstance(labels, list) or len(labels) != len(chars)):
        raise InputError("'labels' must match 'characters' in length", field=f"{field}.labels")
    state = StateSet(tuple(tuple(c) for c in chars), None if labels is None else tuple(labels))
    degree = doc.get("degree")
    if degree is not None and (isinstance(degree, bool) or not isinstance(degree, int)):
        raise InputError("'degree' must be an integer", field=f"{field}.degree")
    return state, degree


def load_state(value):
    return state_from_document(load_json_or_path(value, "state"))


def load_matrix(value, field="frame"):
    doc = load_json_or_path(value, field)
    if isinstance(doc, dict):
        doc = doc.get(field)
    if not isinstance(doc, list) or not all(isinstance(r, list) for r in doc):
        raise InputError("matrix must be a list of rows", field=field)
    return [[parse_rational(x, field) for x in row] for row in doc]
