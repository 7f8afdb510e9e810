"""Command line interface.

Exit status: 0 success, 2 bad input, 3 oracle mismatch under ``--check``,
4 a resource guard tripped.
"""

import argparse
import sys
from fractions import Fraction

from . import kempf, oracles
from .algebra import linalg
from .building import FramedOnePS, building_point_of, parabolic_contains
from .errors import DestabError, FlatnessViolation, InputError, NotStabilized, TooLarge
from .formats import load_ideal, load_matrix, load_state, load_weights
from .opsub import canonicalize, lift_exponent
from .serialize import approx, dumps, q
from .stability import mu as mu_of, s_prime_membership, state_of_hilbert_point
from .testconfig import (TestDegeneration, almost_trivial_necessary, df_invariant, flat_limit,
                         k_stability_sweep)


class CheckFailed(Exception):
    pass


def _expect(cond, what):
    if not cond:
        raise CheckFailed(what)


def _state_input(args):
    if args.state:
        state, degree = load_state(args.state)
    elif args.ideal and args.degree is not None:
        state = state_of_hilbert_point(load_ideal(args.ideal), args.degree)
        degree = sum(state.characters[0])
        return state, degree
    else:
        raise InputError("give --state, or --ideal together with --degree", field="state")
    if args.degree is not None:
        degree = args.degree
    if degree is None:
        degrees = state.degrees()
        if len(degrees) != 1:
            raise InputError("characters have mixed degrees; pass --degree", field="degree")
        degree = degrees.pop()
    return state, degree


def _weight_report(state, a, with_approx):
    rep = mu_of(state, a)
    out = {
        "weights": list(a),
        "mu": q(rep.mu),
        "argmax": [list(c) for c in rep.argmax],
        "nu": None if rep.nu is None else {
            "numerator": q(rep.nu.numerator), "normsq": q(rep.nu.normsq),
            "signed_square": q(rep.nu.squared)},
    }
    if with_approx and rep.nu is not None:
        out["nu"]["approx_non_authoritative"] = approx(float(rep.nu))
    return rep, out


def cmd_mu(args):
    state, _ = _state_input(args)
    a = load_weights(args.weights)
    if len(a) != state.dim:
        raise InputError(f"expected {state.dim} weights", field="weights")
    rep, out = _weight_report(state, a, args.approx)
    check = None
    if args.check:
        mean = Fraction(sum(a), len(a))
        direct = max(-sum(Fraction(x) * y for x, y in zip(a, c)) for c in state.characters)
        cen = max(-sum((Fraction(x) - mean) * y for x, y in zip(a, c)) for c in state.characters)
        _expect(direct == rep.mu, "mu disagrees with direct evaluation")
        if rep.nu is not None:
            normsq = sum((Fraction(x) - mean) ** 2 for x in a)
            _expect(cen == rep.nu.numerator and normsq == rep.nu.normsq,
                    "nu disagrees with direct evaluation")
        check = {"oracle": "direct evaluation", "passed": True}
    return out, check


def cmd_kempf(args):
    state, degree = _state_input(args)
    report = kempf.optimal_destabilizer(state, degree)
    out = {"degree": degree, "state": state.to_dict(), **report.to_dict(args.approx)}
    check = None
    if args.check:
        oracle = kempf.min_norm_point_oracle(state, degree)
        _expect(oracle.q == report.certificate.q and oracle.normsq == report.certificate.normsq,
                "Wolfe and face-enumeration disagree")
        check = {"oracle": "face enumeration", "passed": True}
        if state.dim <= 4:
            grid = kempf.verify_uniqueness(state, report, 6)
            _expect(grid.no_better, "grid search found a better direction")
            check["grid_bound"] = 6
    return out, check


def cmd_flatlimit(args):
    ideal = load_ideal(args.ideal)
    a = load_weights(args.weights)
    td = TestDegeneration(ideal, a)
    limit = flat_limit(td)
    out = {"weights": list(a), "variables": list(ideal.variables),
           "central_fiber": [str(g) for g in limit.groebner()],
           "canonical_point": None if td.point is None else list(td.point.canonical)}
    check = None
    if args.check:
        for k in range(9):
            _expect(oracles.hilbert_function_oracle(ideal, k) == limit.hilbert_function(k),
                    f"flatness fails in degree {k}")
        for g in ideal.generators:
            _expect(limit.contains(g.initial_form(a)), "initial form not in the limit")
        check = {"oracle": "linear-algebra Hilbert function, initial forms", "passed": True}
    return out, check


def cmd_df(args):
    ideal = load_ideal(args.ideal)
    a = load_weights(args.weights)
    rep = df_invariant(TestDegeneration(ideal, a))
    out = {"weights": list(a), **rep.to_dict()}
    if args.approx:
        out["df_approx_non_authoritative"] = approx(rep.df)
    check = None
    if args.check:
        _expect(oracles.df_oracle(ideal, a, rep.dim) == rep.df, "DF disagrees with the oracle")
        check = {"oracle": "weight-space linear algebra", "passed": True}
    return out, check


def cmd_almost_trivial(args):
    ideal = load_ideal(args.ideal)
    a = load_weights(args.weights)
    res = almost_trivial_necessary(ideal, a)
    out = {"weights": list(a), **res.to_dict()}
    check = None
    if args.check:
        from .algebra.ideal import coordinate_ideal
        from .stability import minimal_coordinates
        sub = coordinate_ideal(ideal, minimal_coordinates(a))
        _expect((sub.hilbert_polynomial().degree < 0) == (not res.meets), "emptiness routes disagree")
        check = {"oracle": "Hilbert polynomial emptiness", "passed": True}
    return out, check


def cmd_sprime(args):
    ideal = load_ideal(args.ideal)
    a = load_weights(args.weights)
    member = s_prime_membership(ideal, a)
    out = {"weights": list(a), "member": member}
    check = None
    if args.check:
        from .algebra.ideal import coordinate_ideal
        from .stability import minimal_coordinates
        sub = coordinate_ideal(ideal, minimal_coordinates(a))
        _expect((sub.hilbert_polynomial().degree < 0) == member, "emptiness routes disagree")
        check = {"oracle": "Hilbert polynomial emptiness", "passed": True}
    return out, check


def cmd_building_canonical(args):
    a = load_weights(args.weights)
    frame = load_matrix(args.frame) if args.frame else None
    lam = FramedOnePS(a, frame)
    point = building_point_of(lam)
    out = {"weights": list(a), "canonical_point": list(canonicalize(a).canonical),
           "building_point": point.to_dict()}
    check = None
    if args.check:
        _expect(building_point_of(lam.scaled(2, 3)) == point, "not invariant under scaling/shift")
        n = lam.dim
        p_eig = [[Fraction(1) if i == j or a[i] > a[j] else Fraction(0) for j in range(n)]
                 for i in range(n)]
        p = linalg.matmul(linalg.matmul(lam.frame, p_eig), lam.frame_inv)
        _expect(parabolic_contains(lam, p), "constructed element not parabolic")
        _expect(building_point_of(lam.conjugate(p)) == point, "not invariant under conjugation")
        check = {"oracle": "relations (scaling, shift, parabolic conjugation)", "passed": True}
    return out, check


def cmd_lift(args):
    a = load_weights(args.weights)
    r = args.exponent or 1
    if args.ideal:
        nvars = load_ideal(args.ideal).nvars
    elif args.nvars:
        nvars = args.nvars
    elif r == 1:
        nvars = len(a)
    else:
        raise InputError("pass --ideal or --nvars when --exponent > 1", field="nvars")
    if args.power is None or args.power < 1:
        raise InputError("--power must be a positive integer", field="power")
    lifted = lift_exponent(a, args.power, nvars, r)
    from .algebra.polynomial import monomials_of_degree
    coords = monomials_of_degree(nvars, r * args.power)
    out = {"weights": list(a), "exponent": r, "power": args.power,
           "coordinates": [list(c) for c in coords], "lifted": list(lifted)}
    check = None
    if args.check:
        if r == 1:
            _expect(all(w == sum(x * y for x, y in zip(a, c)) for w, c in zip(lifted, coords)),
                    "lift disagrees with <a, alpha>")
        shifted = lift_exponent([2 * x + 1 for x in a], args.power, nvars, r)
        _expect(list(shifted) == [2 * w + args.power for w in lifted], "lift not affine-covariant")
        check = {"oracle": "closed form / covariance", "passed": True}
    return out, check


def cmd_sweep(args):
    ideal = load_ideal(args.ideal)
    r_max = args.exponent or 1
    bound = 1 if args.denominator_bound is None else args.denominator_bound
    report = k_stability_sweep(ideal, r_max, bound)
    check = None
    if args.check:
        for entry in report["exponents"]:
            dfs = [Fraction(rec["df"]) for rec in entry["records"] if rec["df"] is not None]
            if dfs:
                _expect(q(min(dfs)) == entry["min_df"], "reported minimum is not the minimum")
        check = {"oracle": "recomputed minimum, per-direction flatness", "passed": True}
    return report, check


COMMANDS = {
    "mu": cmd_mu, "nu": cmd_mu, "kempf": cmd_kempf, "flatlimit": cmd_flatlimit, "df": cmd_df,
    "almost-trivial": cmd_almost_trivial, "sprime": cmd_sprime,
    "building canonical": cmd_building_canonical, "lift": cmd_lift, "sweep": cmd_sweep,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ideal", metavar="PATH", help="ideal document (JSON)")
    common.add_argument("--weights", metavar="JSON-or-PATH", help="weight vector")
    common.add_argument("--state", metavar="JSON-or-PATH", help="state set document")
    common.add_argument("--degree", type=int, help="degree of the state / Hilbert point")
    common.add_argument("--exponent", type=int, help="exponent r (sweep: maximal r)")
    common.add_argument("--denominator-bound", type=int, help="grid bound D for sweeps")
    common.add_argument("--check", action="store_true", help="also run the independent oracle")
    common.add_argument("--approx", action="store_true", help="add decimal approximations")
    common.add_argument("--format", choices=("json", "table"), default="json")

    parser = argparse.ArgumentParser(prog="destab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("mu", "nu", "kempf", "flatlimit", "df", "almost-trivial", "sprime", "sweep"):
        sub.add_parser(name, parents=[common])
    lift = sub.add_parser("lift", parents=[common])
    lift.add_argument("--power", type=int, help="multiply the polarization by this power")
    lift.add_argument("--nvars", type=int, help="number of ambient variables")
    building = sub.add_parser("building")
    bsub = building.add_subparsers(dest="building_command", required=True)
    canon = bsub.add_parser("canonical", parents=[common])
    canon.add_argument("--frame", metavar="JSON-or-PATH", help="invertible frame matrix")
    return parser


def _table(obj, prefix=""):
    lines = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            lines.extend(_table(obj[k], f"{prefix}{k}."))
    elif isinstance(obj, list) and obj and any(isinstance(x, (dict, list)) for x in obj):
        for i, x in enumerate(obj):
            lines.extend(_table(x, f"{prefix}{i}."))
    else:
        lines.append(f"{prefix[:-1]:40s} {obj}")
    return lines


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    name = args.command if args.command != "building" else f"building {args.building_command}"
    try:
        result, check = COMMANDS[name](args)
    except CheckFailed as exc:
        print(f"check failed: {exc}", file=stderr)
        return 3
    except FlatnessViolation as exc:
        print(f"check failed: {exc}", file=stderr)
        return 3
    except (TooLarge, NotStabilized) as exc:
        print(f"resource guard: {exc}", file=stderr)
        return 4
    except InputError as exc:
        where = f" (field '{exc.field}')" if exc.field else ""
        print(f"input error{where}: {exc}", file=stderr)
        return 2
    except DestabError as exc:
        print(f"input error: {type(exc).__name__}: {exc}", file=stderr)
        return 2
    report = {"command": name, "result": result}
    if check is not None:
        report["check"] = check
    if args.format == "table":
        stdout.write("\n".join(_table(report)) + "\n")
    else:
        stdout.write(dumps(report))
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
