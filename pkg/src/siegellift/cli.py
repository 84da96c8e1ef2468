"""Command-line front end.

Thin wrappers over the library: every command parses its inputs, calls one
library routine, and renders the result.  Output is byte-deterministic for
fixed inputs (prime-ascending ordering everywhere, sorted JSON keys);
``--jobs`` fans per-prime work out to a thread pool without changing a
single output byte.

Exit codes: 0 success / all checks OK; 1 any verification FAIL or a
non-symplectic factor; 2 invalid input or I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from ._primes import is_prime, primes_upto
from .errors import InputError, NotSymplecticError, SiegelLiftError
from .heckechar import AntiCycChar, ImagQuadField, induced_factor
from .localfactor import Functor, plethysm
from .modform import CurveData, local_factor_gl2, parse_eigenfile, reduction_at
from .predictor import (
    Identity,
    ap_match_report,
    dirichlet_coeffs,
    eval_partial,
    gl2_object,
    identity_report,
    predict_siegel,
    sym3_object,
    tensor_object,
)

_IDENTITY_NAMES = {i.value: i for i in Identity}


def _parse_curve(text: str, conductor: Optional[int]) -> CurveData:
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"--curve is not valid JSON: {exc}") from None
        if conductor is not None:
            data.setdefault("conductor", conductor)
        return CurveData.from_json(data)
    parts = [t.strip() for t in text.split(",")]
    if len(parts) not in (5, 6):
        raise InputError(f"--curve expects 'a1,a2,a3,a4,a6[,N]', got {text!r}")
    try:
        values = [int(t) for t in parts]
    except ValueError:
        raise InputError(f"--curve has a non-integer entry in {text!r}") from None
    n = values[5] if len(values) == 6 else conductor
    return CurveData(*values[:5], conductor=n)


def _load_source(args):
    if getattr(args, "curve", None) and getattr(args, "eigenfile", None):
        raise InputError("give either --curve or --eigenfile, not both")
    if getattr(args, "curve", None):
        return _parse_curve(args.curve, getattr(args, "conductor", None))
    if getattr(args, "eigenfile", None):
        return parse_eigenfile(args.eigenfile)
    raise InputError("a source is required: --curve or --eigenfile")


def _load_char(args, required: bool = True) -> Optional[AntiCycChar]:
    d, m = getattr(args, "D", None), getattr(args, "m", None)
    if d is None and m is None:
        if required:
            raise InputError("a character is required: give --D and --m")
        return None
    if d is None or m is None:
        raise InputError("--D and --m must be given together")
    return AntiCycChar(ImagQuadField(d), m)


def _require_prime(value: int, flag: str) -> int:
    if not is_prime(value):
        raise InputError(f"{flag} must be prime, got {value}")
    return value


def _primes_from(args) -> List[int]:
    if getattr(args, "p", None) is not None:
        return [_require_prime(args.p, "--p")]
    if getattr(args, "pmax", None) is not None:
        return primes_upto(args.pmax)
    raise InputError("give --p or --pmax")


def _emit(args, text: str) -> None:
    data = text if text.endswith("\n") else text + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(data)
    else:
        sys.stdout.write(data)


def _to_json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)


def _factor_rows(args, factors):
    """Render a prime -> LocalFactor table in the requested format."""
    if args.format == "json":
        return _to_json({str(p): f.to_json() for p, f in factors})
    if args.format == "csv":
        lines = ["p,weight,coeffs"]
        for p, f in factors:
            lines.append(f"{p},{f.weight},\"{';'.join(str(c) for c in f.coeffs)}\"")
        return "\n".join(lines)
    return "\n".join(f"p={p}: {f}  (weight {f.weight})" for p, f in factors)


# ---------------------------------------------------------------------------
# subcommands

def _cmd_ap(args) -> int:
    curve = _parse_curve(args.curve, args.conductor)
    rows = [(p, reduction_at(curve, p)) for p in _primes_from(args)]
    if args.format == "json":
        payload = {str(p): {"ap": r.ap, "kind": r.kind.value} for p, r in rows}
        _emit(args, _to_json(payload))
    elif args.format == "csv":
        lines = ["p,ap,kind"] + [f"{p},{r.ap},{r.kind.value}" for p, r in rows]
        _emit(args, "\n".join(lines))
    else:
        _emit(args, "\n".join(f"a_{p} = {r.ap}  ({r.kind.value})" for p, r in rows))
    return 0


def _cmd_factor(args) -> int:
    source = _load_source(args)
    factors = [(p, local_factor_gl2(source, p)) for p in _primes_from(args)]
    _emit(args, _factor_rows(args, factors))
    return 0


def _cmd_sym3(args) -> int:
    source = _load_source(args)
    factors = [
        (p, plethysm(local_factor_gl2(source, p), Functor.SYM3)) for p in _primes_from(args)
    ]
    _emit(args, _factor_rows(args, factors))
    return 0


def _cmd_induce(args) -> int:
    chi = _load_char(args)
    factors = [(p, induced_factor(chi, p)) for p in _primes_from(args)]
    _emit(args, _factor_rows(args, factors))
    return 0


def _cmd_verify(args) -> int:
    name = args.identity
    if name == "ap-match":
        curve = _parse_curve(args.curve, args.conductor) if args.curve else None
        if curve is None or not args.eigenfile:
            raise InputError("ap-match needs both --curve and --eigenfile")
        report = ap_match_report(curve, parse_eigenfile(args.eigenfile), args.pmax)
    else:
        ident = _IDENTITY_NAMES[name]
        source = None
        if args.curve or args.eigenfile:
            source = _load_source(args)
        chi = _load_char(args, required=False)
        if ident in (Identity.SYM3_EXT2, Identity.TENSOR_EXT2, Identity.TENSOR_SQ) and source is None:
            raise InputError(f"{name} needs --curve or --eigenfile")
        if ident in (Identity.SYM2_IND, Identity.TENSOR_EXT2) and chi is None:
            raise InputError(f"{name} needs --D and --m")
        report = identity_report(ident, args.pmax, source=source, chi=chi, jobs=args.jobs)
    _emit(args, _to_json(report.to_json()) if args.format == "json" else report.to_text())
    return 0 if report.ok else 1


def _cmd_predict(args) -> int:
    source = _load_source(args)
    chi = _load_char(args, required=False)
    prediction = predict_siegel(source, chi=chi, pmax=args.pmax, jobs=args.jobs)
    _emit(args, _to_json(prediction.to_json()) if args.format == "json" else prediction.to_text())
    return 0 if prediction.verification.ok else 1


def _build_object(args):
    source = _load_source(args)
    chi = _load_char(args, required=False)
    transfer = args.transfer
    if transfer == "tensor":
        if chi is None:
            raise InputError("--transfer tensor needs --D and --m")
        return tensor_object(source, chi, args.X)
    if transfer == "sym3":
        return sym3_object(source, args.X)
    return gl2_object(source, args.X)


def _cmd_lcoeffs(args) -> int:
    obj = _build_object(args)
    coeffs = dirichlet_coeffs(obj, args.X)
    if args.format == "json":
        _emit(args, _to_json({"label": obj.label, "coeffs": [str(c) for c in coeffs[1:]]}))
    elif args.format == "csv":
        lines = ["n,a_n"] + [f"{n},{coeffs[n]}" for n in range(1, args.X + 1)]
        _emit(args, "\n".join(lines))
    else:
        _emit(args, "\n".join(f"a_{n} = {coeffs[n]}" for n in range(1, args.X + 1)))
    return 0


def _cmd_eval(args) -> int:
    obj = _build_object(args)
    result = eval_partial(obj, args.s, args.X)
    payload = {
        "label": obj.label,
        "s": result.s,
        "terms": result.terms,
        "value": f"{result.value:.12g}",
        "tail_bound": f"{result.tail_bound:.6g}",
    }
    if args.format == "json":
        _emit(args, _to_json(payload))
    else:
        _emit(
            args,
            f"sum of {result.terms} terms at s={result.s:g}: {result.value:.12g}"
            f"  (tail estimate {result.tail_bound:.6g})",
        )
    return 0


# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="siegellift",
        description=(
            "exact local data (Euler factors, levels, archimedean types) of the "
            "genus-2 Siegel modular forms attached to elliptic curves and newforms "
            "by symmetric-cube and twisted-tensor transfers"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", help="write output to this path instead of stdout")
    common.add_argument("--jobs", type=int, default=1, help="per-prime worker threads")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--curve", help="Weierstrass coefficients a1,a2,a3,a4,a6[,N]")
    source.add_argument("--conductor", type=int, help="conductor of the curve")
    source.add_argument("--eigenfile", help="path to a Hecke-eigenvalue file")

    character = argparse.ArgumentParser(add_help=False)
    character.add_argument("--D", type=int, help="imaginary quadratic discriminant")
    character.add_argument("--m", type=int, help="character half-weight (weight is 2m)")

    prange = argparse.ArgumentParser(add_help=False)
    prange.add_argument("--p", type=int, help="a single prime")
    prange.add_argument("--pmax", type=int, help="all primes up to this bound")

    p_ap = sub.add_parser("ap", parents=[common, source, prange], help="Hecke eigenvalues of a curve")
    p_ap.set_defaults(func=_cmd_ap)

    p_factor = sub.add_parser("factor", parents=[common, source, prange], help="degree-2 local factors")
    p_factor.set_defaults(func=_cmd_factor)

    p_sym3 = sub.add_parser("sym3", parents=[common, source, prange], help="symmetric-cube local factors")
    p_sym3.set_defaults(func=_cmd_sym3)

    p_induce = sub.add_parser(
        "induce", parents=[common, character, prange], help="induced character local factors"
    )
    p_induce.set_defaults(func=_cmd_induce)

    p_verify = sub.add_parser(
        "verify", parents=[common, source, character], help="verify exact local identities"
    )
    p_verify.add_argument(
        "--identity",
        required=True,
        choices=sorted(_IDENTITY_NAMES) + ["ap-match"],
    )
    p_verify.add_argument("--pmax", type=int, default=100)
    p_verify.set_defaults(func=_cmd_verify)

    p_predict = sub.add_parser(
        "predict", parents=[common, source, character], help="full Siegel-form prediction bundle"
    )
    p_predict.add_argument("--pmax", type=int, default=50)
    p_predict.set_defaults(func=_cmd_predict)

    transfer = argparse.ArgumentParser(add_help=False)
    transfer.add_argument("--transfer", choices=("none", "sym3", "tensor"), default="none")
    transfer.add_argument("--X", type=int, required=True, help="expansion bound")

    p_lcoeffs = sub.add_parser(
        "lcoeffs", parents=[common, source, character, transfer], help="Dirichlet coefficients"
    )
    p_lcoeffs.set_defaults(func=_cmd_lcoeffs)

    p_eval = sub.add_parser(
        "eval", parents=[common, source, character, transfer], help="partial Dirichlet value"
    )
    p_eval.add_argument("-s", type=float, required=True, help="evaluation point")
    p_eval.set_defaults(func=_cmd_eval)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be >= 1")
    try:
        return args.func(args)
    except NotSymplecticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SiegelLiftError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
