"""Command line front end.

Every computation is exposed as a batch subcommand with deterministic output:
JSON lines by default (integers as decimal strings, since coefficients
outgrow 64 bits quickly), CSV on request for the tabular commands.

Exit codes: 0 success/verified, 1 mathematical disagreement (with location),
2 usage error or violated input guard.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import congruence, frobenius, theorems
from .exactring import ModRing, NotUnitError
from .qseries import (
    ProductSpecError,
    decimal_coefficients,
    euler_cube,
    euler_product,
    first_divergence,
    jacobi_triple,
    parse_product_spec,
    product_from_spec,
)

BUILTIN_SPECS = {
    "phi2m1": theorems.PHI2M1_SPEC_TEXT,
    "cphi2m1": theorems.CPHI2M1_SPEC_TEXT,
}


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _fail_usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_expand(args) -> int:
    spec = parse_product_spec(args.spec)
    ring = ModRing(args.mod) if args.mod is not None else None
    series = (product_from_spec(spec, args.N, ring) if ring
              else product_from_spec(spec, args.N))
    coeffs = decimal_coefficients(series)
    if args.csv:
        print("n,coefficient")
        for n, c in enumerate(coeffs):
            print(f"{n},{c}")
    else:
        out = {"command": "expand", "N": args.N, "spec": spec.render(), "coefficients": coeffs}
        if args.mod is not None:
            out["mod"] = args.mod
        _emit(out)
    return 0


def cmd_enumerate(args) -> int:
    arrays = frobenius.enumerate_arrays(args.variant, args.k, args.alpha, args.n)
    out = {
        "command": "enumerate",
        "variant": args.variant,
        "k": args.k,
        "alpha": args.alpha,
        "n": args.n,
        "count": str(len(arrays)),
    }
    if args.list:
        out["arrays"] = [a.to_json_dict() for a in arrays]
    _emit(out)
    return 0


def cmd_theorem(args) -> int:
    out = {"command": "theorem", "which": args.which, "k": args.k,
           "alpha": args.alpha, "N": args.N}
    if args.which == 1:
        try:
            series = theorems.phi_theta_series(args.k, args.alpha, args.N)
        except theorems.NonIntegralCoefficientError as exc:
            out.update(status="fail", integral=False, index=exc.index, detail=str(exc))
            _emit(out)
            return 1
        out["integral"] = True
    else:
        series = theorems.cphi_theta_series(args.k, args.alpha, args.N)
    out["coefficients"] = decimal_coefficients(series)
    out["status"] = "pass"
    if args.csv:
        print("n,coefficient")
        for n, c in enumerate(out["coefficients"]):
            print(f"{n},{c}")
    else:
        _emit(out)
    return 0


def _series_comparison(name, lhs, rhs):
    d = first_divergence(lhs, rhs)
    if d is None:
        return True, {"identity": name, "status": "pass"}
    return False, {
        "identity": name,
        "status": "fail",
        "first_divergence": d,
        "lhs": str(lhs.coeffs[d]),
        "rhs": str(rhs.coeffs[d]),
    }


def _jacobi_comparison(order):
    product, theta = jacobi_triple(order)
    if product == theta:
        return True, {"identity": "jacobi_triple", "status": "pass"}
    for z in sorted(set(product.rows) | set(theta.rows)):
        d = first_divergence(product.z_slice(z), theta.z_slice(z))
        if d is not None:
            return False, {"identity": "jacobi_triple", "status": "fail",
                           "z": z, "first_divergence": d}
    return True, {"identity": "jacobi_triple", "status": "pass"}


def _mod5_numerator_comparison(order):
    product = theorems.mod5_numerator_product(order)
    theta = theorems.mod5_numerator_theta(order)
    signed = theorems.mod5_numerator_signed(order)
    ok, detail = _series_comparison("mod5_numerator(product,theta)", product, theta)
    if not ok:
        return ok, detail
    return _series_comparison("mod5_numerator(product,signed)", product, signed)


def _congruence_report(label, series, step, offset, modulus):
    claim = congruence.verify_congruence(series, step, offset, modulus)
    ok = claim.status == "verified"
    out = {
        "identity": label,
        "status": "pass" if ok else "fail",
        "report": f"{label}({step}n+{offset}) ≡ 0 mod {modulus}, {claim.witnesses} witnesses",
    }
    if not ok:
        out["first_violation"] = claim.first_violation
    return ok, out


def _run_verify_target(target: str, order: int):
    if target == "thm3":
        return _congruence_report("phi_{2,-1}", theorems.phi2m1_product(order), 5, 4, 5)
    if target == "thm4":
        return _congruence_report("cphi_{2,-1}", theorems.cphi2m1_product(order), 5, 4, 5)
    if target == "cor1":
        return _series_comparison("phi2m1(theta,product)",
                                  theorems.phi_theta_series(2, -1, order),
                                  theorems.phi2m1_product(order))
    if target == "cor2":
        return _series_comparison("cphi2m1(theta,product)",
                                  theorems.cphi_theta_series(2, -1, order),
                                  theorems.cphi2m1_product(order))
    if target == "psi2":
        return _series_comparison("psi2_product",
                                  theorems.psi2_product(order),
                                  theorems.phi2m1_product(order))
    if target == "thm3numerator":
        return _mod5_numerator_comparison(order)
    if target == "jtp":
        return _jacobi_comparison(order)
    raise ValueError(f"unknown verify target {target!r}")


def cmd_verify(args) -> int:
    ok, detail = _run_verify_target(args.target, args.N)
    detail.update(command="verify", target=args.target, N=args.N)
    _emit(detail)
    return 0 if ok else 1


def cmd_scan(args) -> int:
    if args.builtin:
        spec = parse_product_spec(BUILTIN_SPECS[args.builtin])
    else:
        spec = parse_product_spec(args.spec)
    series = product_from_spec(spec, args.N)
    claims = congruence.scan_congruences(
        series, args.maxA, args.maxM,
        min_witnesses=args.min_witnesses,
        primes_only=not args.all_moduli)
    if args.csv:
        print("A,B,M,verified_up_to,status,subsumed")
        for c in claims:
            print(f"{c.step},{c.offset},{c.modulus},{c.verified_up_to},{c.status},{c.subsumed}")
    else:
        for c in claims:
            _emit(c.to_json_dict())
    return 0


def cmd_identities(args) -> int:
    order = args.N
    checks = [
        ("euler_cube", lambda: _series_comparison(
            "euler_cube", euler_cube(order), euler_product(order) ** 3)),
        ("jacobi_triple", lambda: _jacobi_comparison(order)),
        ("mod5_numerator", lambda: _mod5_numerator_comparison(order)),
        ("psi2", lambda: _series_comparison(
            "psi2_product", theorems.psi2_product(order), theorems.phi2m1_product(order))),
        ("phi2m1_theta_vs_product", lambda: _series_comparison(
            "phi2m1(theta,product)",
            theorems.phi_theta_series(2, -1, order), theorems.phi2m1_product(order))),
        ("cphi2m1_theta_vs_product", lambda: _series_comparison(
            "cphi2m1(theta,product)",
            theorems.cphi_theta_series(2, -1, order), theorems.cphi2m1_product(order))),
    ]
    failures = 0
    for name, run in checks:
        ok, detail = run()
        detail.update(command="identities", name=name, N=order)
        _emit(detail)
        if not ok:
            failures += 1
    _emit({"command": "identities", "N": order, "checks": len(checks), "failures": failures})
    return 0 if failures == 0 else 1


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frobq",
        description="Exact q-series expansion, array enumeration, and congruence scanning.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("expand", help="expand a product-DSL spec into coefficients")
    p.add_argument("--spec", required=True, help="factors 'SIGN,PERIOD,RESIDUE,EXP' joined by ';'")
    p.add_argument("--N", type=int, required=True, help="truncation order")
    p.add_argument("--mod", type=int, help="reduce coefficients modulo this")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("enumerate", help="count or list arrays by exhaustive search")
    p.add_argument("--variant", choices=frobenius.VARIANTS, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--n", type=int, required=True, help="weight")
    p.add_argument("--list", action="store_true", help="include the arrays, not just the count")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("theorem", help="closed-form series (1: repetition, 2: colored)")
    p.add_argument("--which", type=int, choices=(1, 2), required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_theorem)

    p = sub.add_parser("verify", help="check one named identity or congruence")
    p.add_argument("--target", required=True,
                   choices=("thm3", "thm4", "cor1", "cor2", "psi2", "thm3numerator", "jtp"))
    p.add_argument("--N", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="search for arithmetic-progression congruences")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--spec", help="product-DSL spec for the series to scan")
    src.add_argument("--builtin", choices=sorted(BUILTIN_SPECS))
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--maxA", type=int, required=True)
    p.add_argument("--maxM", type=int, required=True)
    p.add_argument("--min-witnesses", type=int, default=20, dest="min_witnesses")
    p.add_argument("--all-moduli", action="store_true", dest="all_moduli",
                   help="scan composite moduli too, not just primes")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("identities", help="run the whole identity battery")
    p.add_argument("--N", type=int, required=True)
    p.set_defaults(func=cmd_identities)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ProductSpecError as exc:
        return _fail_usage(f"bad product spec: {exc}")
    except NotUnitError as exc:
        return _fail_usage(f"non-invertible constant term: {exc}")
    except ValueError as exc:
        return _fail_usage(str(exc))


if __name__ == "__main__":
    sys.exit(main())
