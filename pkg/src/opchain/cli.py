"""Command-line front end.

Subcommands expose the closed-form families, the swap-perturbed systems,
the verification suites, and the numeric endpoints (zeros, LU, moments,
convergents).  Everything defaults to the exact backend; only ``zeros``
works in float64.  Output is canonical JSON (sorted keys) or CSV so
identical invocations are byte-identical.

Exit codes: 0 success, 1 verification failure, 2 input validation,
3 numerical breakdown.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import families, perturb, verify
from .chains import (
    GammaSeq,
    chain_at,
    complementary,
    gamma_from_system,
    minimal_parameters,
)
from .errors import (
    AlphaOutOfRange,
    BackendMismatch,
    DegenerateFavard,
    DegreeBeyondFamily,
    Gamma1Zero,
    InvalidGamma1,
    InvalidRationalLiteral,
    LengthMismatch,
    NonPositiveGamma,
    NonPositiveInput,
    NotAChainSequence,
    NotMinimal,
    NonPositiveA2,
    OpchainError,
    ParameterOutOfRange,
    PivotBreakdown,
    PoleAtB,
    PositivityBreak,
    StreamExhausted,
    ZeroDenominator,
)
from .jacobi import lu_factor, truncate, zeros_with_brackets
from .scalars import Rat, format_scalar, parse_rational
from .serialize import gamma_from_json, system_from_json, values_to_json
from .systems import convergent, laurent_expand, moments, monic_sequence

_VALIDATION = (
    InvalidRationalLiteral, BackendMismatch, AlphaOutOfRange, InvalidGamma1,
    Gamma1Zero, DegenerateFavard, DegreeBeyondFamily, NonPositiveGamma,
    NonPositiveInput, NotMinimal, ParameterOutOfRange, StreamExhausted,
    LengthMismatch, ValueError, KeyError,
)
_NUMERICAL = (
    PivotBreakdown, ZeroDenominator, PositivityBreak, NotAChainSequence,
    PoleAtB, NonPositiveA2,
)

FAMILY_NAMES = ("laguerre", "e_family", "laguerre_assoc1", "routh_romanovski")


def _emit(doc, out=None):
    out = out if out is not None else sys.stdout
    out.write(json.dumps(doc, sort_keys=True, indent=2))
    out.write("\n")


def _fmt(values, as_float: bool):
    if as_float:
        return [repr(float(v)) for v in values]
    return values_to_json(values)


def _family_system(args):
    name = args.family
    if name == "routh_romanovski":
        if args.p is None:
            raise ValueError("routh_romanovski requires --p")
        return families.rr_system(families.RRParams(parse_rational(args.p))), \
            {"name": name, "params": {"p": args.p}}
    if args.alpha is None:
        raise ValueError(f"{name} requires --alpha")
    alpha = parse_rational(args.alpha)
    if name == "laguerre":
        return families.laguerre_system(alpha), {"name": name, "params": {"alpha": args.alpha}}
    if name in ("e_family", "laguerre_assoc1"):
        return families.e_family_system(alpha), {"name": name, "params": {"alpha": args.alpha}}
    raise ValueError(f"unknown family {name!r}")


def _resolve_system(args):
    """System from --family flags or an --input JSON document."""
    if getattr(args, "input", None):
        with open(args.input) as fh:
            return system_from_json(json.load(fh))
    if getattr(args, "family", None):
        return _family_system(args)[0]
    raise ValueError("provide --family or --input")


def _resolve_gamma(args, need: int):
    """GammaSeq from --gamma, a gamma JSON document, or a system + --gamma1."""
    if getattr(args, "gamma", None):
        vals = [parse_rational(tok) for tok in args.gamma.split(",")]
        return GammaSeq.from_values(vals)
    if getattr(args, "input", None):
        with open(args.input) as fh:
            doc = json.load(fh)
        if "gamma" in doc:
            return gamma_from_json(doc)
        sys_ = system_from_json(doc)
        g1 = parse_rational(args.gamma1 or "0")
        return gamma_from_system(sys_, g1, need)
    raise ValueError("provide --gamma or --input")


# -- subcommands -----------------------------------------------------------------


def cmd_family(args) -> int:
    sys_, closed = _family_system(args)
    n = args.n
    if n < 1:
        raise ValueError("--n must be >= 1")
    g1 = args.gamma1
    if g1 is None:
        g1 = "1" if args.family == "laguerre_assoc1" else "0"
    gamma1 = parse_rational(g1)
    # recovery to depth N consumes b[1..N+1] and a2[1..N]; finite families
    # (finite streams) therefore cap the emitted gamma window
    depth = n
    if sys_.b.stop is not None:
        depth = min(depth, sys_.b.stop - 1)
    if sys_.a2.stop is not None:
        depth = min(depth, sys_.a2.stop)
    gamma = gamma_from_system(sys_, gamma1, depth)
    gamma_upto = min(2 * n + 1, 2 * depth + 2)
    chain = chain_at(sys_, Rat(0), n - 1)
    m = minimal_parameters(chain, n - 1)
    comp = complementary(m)
    doc = {
        "family": closed,
        "n": n,
        "gamma1": format_scalar(gamma1),
        "b": _fmt(sys_.b.window(1, n), args.float),
        "a2": _fmt(sys_.a2.window(1, n - 1), args.float),
        "gamma": _fmt(gamma.window(1, gamma_upto), args.float),
        "chain_d": _fmt(chain.window(1, n - 1), args.float),
        "minimal_m": _fmt(m.g, args.float),
        "complementary_k": _fmt(comp.parameters.g, args.float),
    }
    _emit(doc)
    return 0


_PERTURB_VARIANTS = {
    "tilde": perturb.tilde_system,
    "hat": perturb.hat_system,
    "tilde_kernel": perturb.tilde_kernel_system,
    "q": perturb.q_system,
    "u": perturb.u_system,
}


def cmd_perturb(args) -> int:
    n = args.n
    gamma = _resolve_gamma(args, n + 2)
    sys_ = _PERTURB_VARIANTS[args.variant](gamma)
    polys = monic_sequence(sys_, n)
    doc = {
        "variant": args.variant,
        "n": n,
        "b": _fmt(sys_.b.window(1, n), args.float),
        "a2": _fmt(sys_.a2.window(1, n - 1), args.float),
        "polys": [p.to_json() for p in polys],
    }
    _emit(doc)
    return 0


def cmd_verify(args) -> int:
    reports = verify.run_suite(args.suite, seed=args.seed, samples=args.samples,
                               n=args.n, corrupt=args.inject_corruption)
    doc = {"reports": [r.to_json() for r in reports]}
    _emit(doc)
    return 0 if all(r.ok for r in reports) else 1


def cmd_zeros(args) -> int:
    sys_ = _resolve_system(args)
    rows = zeros_with_brackets(sys_, args.n, args.tol)
    if args.output == "json":
        _emit({"zeros": [{"index": i + 1, "value": v, "bracket_width": w}
                         for i, (v, w) in enumerate(rows)]})
    else:
        out = sys.stdout
        out.write("index,value,bracket_width\n")
        for i, (v, w) in enumerate(rows):
            out.write(f"{i + 1},{v!r},{w!r}\n")
    return 0


def cmd_lu(args) -> int:
    sys_ = _resolve_system(args)
    gamma1 = parse_rational(args.gamma1 or "0")
    f = lu_factor(truncate(sys_, args.n), gamma1)
    _emit(f.to_json())
    return 0


def cmd_moments(args) -> int:
    sys_ = _resolve_system(args)
    value = moments(sys_, args.k)
    if args.output == "json":
        _emit({"k": args.k, "moment": format_scalar(value)})
    else:
        sys.stdout.write(format_scalar(value) + "\n")
    return 0


def cmd_convergent(args) -> int:
    sys_ = _resolve_system(args)
    num, den = convergent(sys_, args.n)
    order = args.order if args.order is not None else 2 * args.n
    series = laurent_expand(num, den, order)
    _emit({
        "n": args.n,
        "numerator": num.to_json(),
        "denominator": den.to_json(),
        "laurent": values_to_json(series.coeffs),
    })
    return 0


# -- argument parsing -----------------------------------------------------------


def _add_system_source(p, with_gamma1=False):
    p.add_argument("--family", choices=FAMILY_NAMES)
    p.add_argument("--alpha", help="family parameter as a rational string")
    p.add_argument("--p", help="finite-family parameter as a rational string")
    p.add_argument("--input", help="path to a system/gamma JSON document")
    if with_gamma1:
        p.add_argument("--gamma1", help="leading gamma entry (rational string)")


def build_parser() -> argparse.ArgumentParser:
    default_tol = float(os.environ.get("OPCHAIN_PRECISION", "1e-12"))
    ap = argparse.ArgumentParser(prog="opchain")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family", help="emit a closed-form family with its chain data")
    p.add_argument("family", choices=FAMILY_NAMES)
    p.add_argument("--alpha")
    p.add_argument("--p")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--gamma1")
    p.add_argument("--float", action="store_true")
    p.set_defaults(fn=cmd_family)

    p = sub.add_parser("perturb", help="emit a swap-perturbed system and its polynomials")
    p.add_argument("--variant", choices=sorted(_PERTURB_VARIANTS), required=True)
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--gamma", help="comma-separated gamma entries")
    p.add_argument("--input")
    p.add_argument("--gamma1")
    p.add_argument("--float", action="store_true")
    p.set_defaults(fn=cmd_perturb)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=verify.SUITES, default="all")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--inject-corruption", action="store_true",
                   help="negative-control hook: feed inconsistent inputs")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("zeros", help="zeros of P_n by Sturm bisection (CSV)")
    _add_system_source(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tol", type=float, default=default_tol)
    p.add_argument("--output", choices=("csv", "json"), default="csv")
    p.set_defaults(fn=cmd_zeros)

    p = sub.add_parser("lu", help="bidiagonal LU factors of the truncated matrix")
    _add_system_source(p, with_gamma1=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=cmd_lu)

    p = sub.add_parser("moments", help="normalised moment mu_k/mu_0")
    _add_system_source(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--output", choices=("plain", "json"), default="plain")
    p.set_defaults(fn=cmd_moments)

    p = sub.add_parser("convergent", help="continued-fraction convergent and expansion")
    _add_system_source(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--order", type=int, default=None)
    p.set_defaults(fn=cmd_convergent)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except _NUMERICAL as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except _VALIDATION as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OpchainError as exc:  # anything else from the library is a bad input
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
