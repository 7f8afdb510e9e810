"""Buchberger's algorithm over the rationals.

Polynomials are handled internally as ``{exponent: Fraction}`` dicts so the
inner loop avoids object churn; the public functions take and return
:class:`Polynomial` values.
"""

from fractions import Fraction

from .polynomial import Polynomial, divides, mono_div, mono_lcm, mono_mul


def _lead(p, key):
    return max(p, key=key)


def _reduce(p, basis, key, full=True):
    """Remainder of ``p`` by the list of (lead, poly) pairs in ``basis``."""
    p = dict(p)
    rem = {}
    while p:
        lm = _lead(p, key)
        c = p[lm]
        for glm, g in basis:
            if divides(glm, lm):
                q = mono_div(lm, glm)
                f = c / g[glm]
                for e, gc in g.items():
                    e2 = mono_mul(e, q)
                    v = p.get(e2, Fraction(0)) - f * gc
                    if v:
                        p[e2] = v
                    else:
                        p.pop(e2, None)
                break
        else:
            if not full:
                rem.update(p)
                return rem
            rem[lm] = c
            del p[lm]
    return rem


def _spoly(f, flm, g, glm):
    lcm = mono_lcm(flm, glm)
    qf, qg = mono_div(lcm, flm), mono_div(lcm, glm)
    cf, cg = f[flm], g[glm]
    out = {}
    for e, c in f.items():
        out[mono_mul(e, qf)] = c / cf
    for e, c in g.items():
        e2 = mono_mul(e, qg)
        v = out.get(e2, Fraction(0)) - c / cg
        if v:
            out[e2] = v
        else:
            out.pop(e2, None)
    return out


def _monic(p, key):
    lc = p[_lead(p, key)]
    return {e: c / lc for e, c in p.items()}


def groebner_basis(polys, order):
    """Reduced Groebner basis of the ideal generated by ``polys``.

    The output is sorted by decreasing leading monomial, every element is
    monic, so the result depends only on the ideal and the order.
    """
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        return []
    variables = polys[0].variables
    key = order.key
    basis = []  # list of (lead monomial, dict)
    pairs = []

    def add(p):
        p = _monic(p, key)
        lm = _lead(p, key)
        idx = len(basis)
        basis.append((lm, p))
        for i in range(idx):
            pairs.append((i, idx))

    # Start from the inter-reduced generators, smallest leading monomial first.
    work = sorted((dict(p.items()) for p in polys), key=lambda d: key(_lead(d, key)))
    for p in work:
        r = _reduce(p, basis, key)
        if r:
            if sum(_lead(r, key)) == 0:
                return [Polynomial.monomial((0,) * len(variables), variables)]
            add(r)

    removed = set()
    while pairs:
        pairs.sort(key=lambda ij: key(mono_lcm(basis[ij[0]][0], basis[ij[1]][0])))
        i, j = pairs.pop(0)
        if i in removed or j in removed:
            continue
        ilm, f = basis[i]
        jlm, g = basis[j]
        lcm = mono_lcm(ilm, jlm)
        if mono_mul(ilm, jlm) == lcm:
            continue  # coprime leading monomials
        if _chain_criterion(i, j, lcm, basis, pairs, removed):
            continue
        r = _reduce(_spoly(f, ilm, g, jlm), [b for k, b in enumerate(basis) if k not in removed], key)
        if r:
            add(r)
            if sum(_lead(r, key)) == 0:
                # unit ideal
                return [Polynomial.monomial((0,) * len(variables), variables)]

    live = [basis[k] for k in range(len(basis)) if k not in removed]
    return _reduce_basis(live, key, variables)


def _chain_criterion(i, j, lcm, basis, pairs, removed):
    pending = {(min(a, b), max(a, b)) for a, b in pairs}
    for k, (klm, _) in enumerate(basis):
        if k in (i, j) or k in removed:
            continue
        if divides(klm, lcm):
            a, b = sorted((i, k)), sorted((j, k))
            if tuple(a) not in pending and tuple(b) not in pending:
                return True
    return False


def _reduce_basis(live, key, variables):
    # drop elements whose leading monomial is divisible by another's
    minimal = []
    for idx, (lm, p) in enumerate(live):
        if any(divides(olm, lm) and (olm != lm or o_idx < idx)
               for o_idx, (olm, _) in enumerate(live) if o_idx != idx):
            continue
        minimal.append((lm, p))
    reduced = []
    for idx, (lm, p) in enumerate(minimal):
        others = [b for k, b in enumerate(minimal) if k != idx]
        tail = {e: c for e, c in p.items() if e != lm}
        r = _reduce(tail, others, key)
        r[lm] = Fraction(1)
        reduced.append((lm, r))
    reduced.sort(key=lambda b: key(b[0]), reverse=True)
    return [Polynomial(p, variables) for _, p in reduced]


def normal_form(p, basis, order):
    """Fully reduced remainder of ``p`` modulo a Groebner basis."""
    key = order.key
    pairs = [(g.leading_monomial(order), dict(g.items())) for g in basis if not g.is_zero()]
    return Polynomial(_reduce(dict(p.items()), pairs, key), p.variables)


def leading_monomials(basis, order):
    return [g.leading_monomial(order) for g in basis]
