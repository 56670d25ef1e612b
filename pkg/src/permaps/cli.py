"""Command-line front end.

Every bijection, count, polynomial, and the verification suite is
reachable as a subcommand with plain, JSON, or CSV output (CSV only
where the values are plain integers).  Output is byte-stable across
runs; exit codes are 0 on success, 1 on a domain error (reported as
``error: ...`` on stderr), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .dyck import delta, delta_inverse, format_labeled_path, parse_labeled_path
from .enumpoly import (
    L_family,
    M_family,
    c_count,
    c_count_by_cycles,
    c_poly,
    joint_perm_poly,
    stirling_poly,
    transitive_probability,
)
from .errors import LimitExceeded, PermapsError
from .hypermap import (
    PermPair,
    hypermap_to_json_dict,
    hypermap_to_text,
    make_hypermap,
    phi_bijection,
    psi,
    psi_inverse,
)
from .maps import map_count, map_to_json_dict, psi_prime
from .oracle import FAULTS, verify_suite
from .perm import (
    format_permutation,
    fundamental_transform,
    fundamental_transform_inverse,
    parse_permutation,
)

__all__ = ["dispatch", "main"]

_SIZE_LIMIT = 64  # exact arithmetic stays fast; larger requests are refused


def _check_size(name: str, value: int, bound: int = _SIZE_LIMIT) -> None:
    if value > bound:
        raise LimitExceeded(f"{name} = {value} exceeds the supported bound {bound}")


def _print_json(obj) -> None:
    print(json.dumps(obj))


# --- count -------------------------------------------------------------------


def _cmd_count_indecomposable(args) -> int:
    _check_size("n", args.n)
    value = c_count(args.n)
    if args.format == "plain":
        print(value)
    elif args.format == "json":
        _print_json({"kind": "indecomposable", "params": {"n": args.n}, "value": value})
    else:
        print("n,value")
        print(f"{args.n},{value}")
    return 0


def _cmd_count_hypermaps(args) -> int:
    _check_size("n", args.n)
    if args.n < 1:
        raise ValueError("need n >= 1")
    value = c_count(args.n + 1)
    kind = "hypermaps-rooted"
    if args.labeled:
        value *= math.factorial(args.n - 1)
        kind = "hypermaps-labeled"
    if args.format == "plain":
        print(value)
    elif args.format == "json":
        _print_json(
            {
                "kind": kind,
                "params": {"n": args.n, "labeled": bool(args.labeled)},
                "value": value,
            }
        )
    else:
        print("n,value")
        print(f"{args.n},{value}")
    return 0


def _cmd_count_maps(args) -> int:
    _check_size("m", args.m)
    value = map_count(args.m)
    if args.format == "plain":
        print(value)
    elif args.format == "json":
        _print_json({"kind": "maps", "params": {"m": args.m}, "value": value})
    else:
        print("m,value")
        print(f"{args.m},{value}")
    return 0


def _cmd_count_stirling(args) -> int:
    _check_size("n", args.n)
    value = c_count_by_cycles(args.n, args.k)
    if args.format == "plain":
        print(value)
    elif args.format == "json":
        _print_json(
            {
                "kind": "stirling-indec",
                "params": {"n": args.n, "k": args.k},
                "value": value,
            }
        )
    else:
        print("n,k,value")
        print(f"{args.n},{args.k},{value}")
    return 0


# --- table -------------------------------------------------------------------


def _cmd_table_stirling(args) -> int:
    _check_size("max-n", args.max_n)
    if args.max_n < 2:
        raise ValueError("need max-n >= 2")
    rows = [
        (n, [c_count_by_cycles(n, k) for k in range(1, n)])
        for n in range(2, args.max_n + 1)
    ]
    if args.format == "plain":
        for n, row in rows:
            print(f"{n}: " + " ".join(str(v) for v in row))
    elif args.format == "json":
        _print_json([{"n": n, "row": row} for n, row in rows])
    else:
        print("n,k,value")
        for n, row in rows:
            for k, v in enumerate(row, start=1):
                print(f"{n},{k},{v}")
    return 0


def _cmd_table_joint(args) -> int:
    _check_size("max-n", args.max_n)
    if args.max_n < 1:
        raise ValueError("need max-n >= 1")
    polys = [(n, joint_perm_poly(n)) for n in range(1, args.max_n + 1)]
    if args.format == "plain":
        for n, poly in polys:
            print(f"{n}: {poly.to_string()}")
    elif args.format == "json":
        _print_json([{"n": n, "poly": poly.to_json_obj()} for n, poly in polys])
    else:
        print("n,x,y,c")
        for n, poly in polys:
            for px, py, coeff in poly.terms():
                print(f"{n},{px},{py},{coeff}")
    return 0


# --- bij ---------------------------------------------------------------------


def _cmd_bij_omr(args) -> int:
    h = psi(parse_permutation(args.perm))
    if args.format == "plain":
        print(hypermap_to_text(h))
    else:
        _print_json(hypermap_to_json_dict(h))
    return 0


def _parse_perm_arg(text: str):
    # cycle text starts with a parenthesis; anything else is one-line
    notation = "cycle" if text.lstrip().startswith("(") else "one-line"
    return parse_permutation(text, notation=notation)


def _cmd_bij_omr_inv(args) -> int:
    sigma = _parse_perm_arg(args.sigma)
    alpha = _parse_perm_arg(args.alpha)
    theta = psi_inverse(make_hypermap(PermPair(sigma, alpha)))
    if args.format == "plain":
        print(format_permutation(theta))
    else:
        _print_json({"perm": list(theta.images)})
    return 0


def _perm_to_perm(args, fn) -> int:
    q = fn(parse_permutation(args.perm))
    if args.format == "plain":
        print(format_permutation(q))
    else:
        _print_json({"perm": list(q.images)})
    return 0


def _cmd_bij_fft(args) -> int:
    return _perm_to_perm(args, fundamental_transform)


def _cmd_bij_fft_inv(args) -> int:
    return _perm_to_perm(args, fundamental_transform_inverse)


def _cmd_bij_phi(args) -> int:
    return _perm_to_perm(args, phi_bijection)


def _cmd_bij_delta(args) -> int:
    lp = delta(parse_permutation(args.perm))
    if args.format == "plain":
        print(format_labeled_path(lp))
    else:
        _print_json({"path": list(lp.word)})
    return 0


def _cmd_bij_delta_inv(args) -> int:
    p = delta_inverse(parse_labeled_path(args.path))
    if args.format == "plain":
        print(format_permutation(p))
    else:
        _print_json({"perm": list(p.images)})
    return 0


def _cmd_bij_psi_prime(args) -> int:
    m = psi_prime(parse_permutation(args.perm))
    if args.format == "plain":
        print(hypermap_to_text(m))
    else:
        _print_json(map_to_json_dict(m))
    return 0


# --- poly --------------------------------------------------------------------


def _poly_for(args):
    which = args.which
    if which == "A":
        _check_size("n", args.n)
        return stirling_poly(args.n), {"n": args.n}
    if which == "C":
        _check_size("n", args.n)
        return c_poly(args.n), {"n": args.n}
    if which in ("L", "Lprime"):
        _check_size("n", args.n)
        pair = L_family(args.n)
        return pair[0] if which == "L" else pair[1], {"n": args.n}
    _check_size("m", args.m)
    pair = M_family(args.m)
    return pair[0] if which == "M" else pair[1], {"m": args.m}


def _cmd_poly(args) -> int:
    poly, params = _poly_for(args)
    if args.format == "plain":
        print(poly.to_string())
    elif args.format == "json":
        _print_json({"kind": args.which, **params, "poly": poly.to_json_obj()})
    else:
        print("x,y,c")
        for px, py, coeff in poly.terms():
            print(f"{px},{py},{coeff}")
    return 0


# --- prob / verify -----------------------------------------------------------


def _cmd_prob_transitive(args) -> int:
    _check_size("n", args.n)
    value = transitive_probability(args.n)
    if args.format == "plain":
        print(value)
    else:
        _print_json(
            {"kind": "transitive-probability", "n": args.n, "value": str(value)}
        )
    return 0


def _cmd_verify(args) -> int:
    report = verify_suite(
        max_n=args.max_n,
        pair_max_n=args.pair_max_n,
        fpf_max_size=args.fpf_max_size,
        fault=args.inject_fault,
    )
    if args.format == "plain":
        print(report.to_text())
    else:
        _print_json(report.to_json_obj())
    return 0 if report.passed else 1


# --- parser ------------------------------------------------------------------


def _add_format(p: argparse.ArgumentParser, choices=("plain", "json", "csv")) -> None:
    p.add_argument("--format", choices=choices, default="plain")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permaps",
        description="Exact counts, polynomials, and bijections for "
        "indecomposable permutations, hypermaps, and labeled Dyck paths.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="single exact counts")
    count_sub = count.add_subparsers(dest="what", required=True)
    p = count_sub.add_parser("indecomposable", help="indecomposable permutations of S_n")
    p.add_argument("--n", type=int, required=True)
    _add_format(p)
    p.set_defaults(handler=_cmd_count_indecomposable)
    p = count_sub.add_parser("hypermaps", help="rooted hypermaps on n darts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--labeled", action="store_true", help="count labeled (transitive pairs) instead")
    _add_format(p)
    p.set_defaults(handler=_cmd_count_hypermaps)
    p = count_sub.add_parser("maps", help="rooted maps with m edges")
    p.add_argument("--m", type=int, required=True)
    _add_format(p)
    p.set_defaults(handler=_cmd_count_maps)
    p = count_sub.add_parser("stirling-indec", help="indecomposable permutations of S_n with k cycles")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _add_format(p)
    p.set_defaults(handler=_cmd_count_stirling)

    table = sub.add_parser("table", help="whole tables of counts")
    table_sub = table.add_subparsers(dest="what", required=True)
    p = table_sub.add_parser("stirling-indec", help="triangle rows 2..max-n")
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    _add_format(p)
    p.set_defaults(handler=_cmd_table_stirling)
    p = table_sub.add_parser("joint", help="joint cycle/maxima polynomials 1..max-n")
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    _add_format(p)
    p.set_defaults(handler=_cmd_table_joint)

    bij = sub.add_parser("bij", help="apply a bijection to one object")
    bij_sub = bij.add_subparsers(dest="what", required=True)
    for name, handler, payloads in (
        ("omr", _cmd_bij_omr, ("perm",)),
        ("omr-inv", _cmd_bij_omr_inv, ("sigma", "alpha")),
        ("fft", _cmd_bij_fft, ("perm",)),
        ("fft-inv", _cmd_bij_fft_inv, ("perm",)),
        ("delta", _cmd_bij_delta, ("perm",)),
        ("delta-inv", _cmd_bij_delta_inv, ("path",)),
        ("phi", _cmd_bij_phi, ("perm",)),
        ("psi-prime", _cmd_bij_psi_prime, ("perm",)),
    ):
        p = bij_sub.add_parser(name)
        for payload in payloads:
            p.add_argument(f"--{payload}", required=True)
        _add_format(p, choices=("plain", "json"))
        p.set_defaults(handler=handler)

    poly = sub.add_parser("poly", help="print an exact polynomial")
    poly_sub = poly.add_subparsers(dest="which", required=True)
    for name in ("A", "C", "L", "Lprime"):
        p = poly_sub.add_parser(name)
        p.add_argument("--n", type=int, required=True)
        _add_format(p)
        p.set_defaults(handler=_cmd_poly, which=name)
    for name in ("M", "Mprime"):
        p = poly_sub.add_parser(name)
        p.add_argument("--m", type=int, required=True)
        _add_format(p)
        p.set_defaults(handler=_cmd_poly, which=name)

    prob = sub.add_parser("prob", help="exact probabilities")
    prob_sub = prob.add_subparsers(dest="what", required=True)
    p = prob_sub.add_parser("transitive", help="P(random pair on n darts is transitive)")
    p.add_argument("--n", type=int, required=True)
    _add_format(p, choices=("plain", "json"))
    p.set_defaults(handler=_cmd_prob_transitive)

    p = sub.add_parser("verify", help="run the exhaustive cross-check suite")
    p.add_argument("--max-n", type=int, default=7, dest="max_n")
    p.add_argument("--pair-max-n", type=int, default=5, dest="pair_max_n")
    p.add_argument("--fpf-max-size", type=int, default=10, dest="fpf_max_size")
    p.add_argument("--inject-fault", choices=FAULTS, default=None, dest="inject_fault")
    _add_format(p, choices=("plain", "json"))
    p.set_defaults(handler=_cmd_verify)

    return parser


def dispatch(argv: list[str]) -> int:
    """Parse argv and run one subcommand; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2
    try:
        return args.handler(args)
    except (PermapsError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
