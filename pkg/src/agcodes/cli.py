"""Command line entry point: ``agcodes {curve,code,scan,quantum,simulate}``.

Every command prints JSON (``scan`` prints CSV) and exits 0 on success, 1 on
error with ``{"error": ...}`` on stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from .agcode import (
    ENUMERATION_GUARD,
    GuardExceeded,
    build_code,
    export_generator,
    is_hermitian_self_orthogonal,
    min_distance,
    predicted_dimension,
    scan_self_orthogonality,
    scan_to_csv,
)
from .channel import ChannelSpec, wer_experiment
from .curve import Curve, CurveError
from .galois import FieldError, field_new
from .quantum import NotSelfOrthogonalError, quantum_report


class CommandError(Exception):
    def __init__(self, message: str, **extra):
        super().__init__(message)
        self.payload = {"error": message, **extra}


def _curve(args) -> Curve:
    return Curve(field_new(args.p, args.e), args.s)


def _distance(code, mode: str) -> tuple[int, bool]:
    if mode == "auto":
        mode = "exhaustive" if code.codebook_size <= ENUMERATION_GUARD else "bound"
    if mode == "bound" and code.k == 0:
        return code.n + 1, True
    return min_distance(code, mode)


def cmd_curve(args) -> dict:
    c = _curve(args)
    return {
        "q": c.q,
        "s": c.s,
        "genus": c.genus,
        "affine_points": c.n_affine,
        "total": c.n_affine + 1,
        "maximal": c.is_maximal(),
    }


def cmd_code(args) -> dict:
    c = _curve(args)
    code = build_code(c, args.m)
    d, exact = _distance(code, args.distance)
    pred = predicted_dimension(c, args.m)
    if args.export:
        with open(args.export, "w") as fh:
            fh.write(export_generator(code))
    return {
        "n": code.n,
        "k": code.k,
        "d": d,
        "d_exact": exact,
        "designed_d": code.n - args.m,
        "self_orthogonal": is_hermitian_self_orthogonal(code),
        "paper_case": pred.paper_case,
        "agrees_with_paper": pred.agrees_with_paper,
    }


def cmd_scan(args) -> str:
    return scan_to_csv(scan_self_orthogonality(_curve(args), args.m_max))


def cmd_quantum(args) -> dict:
    code = build_code(_curve(args), args.m)
    try:
        return quantum_report(code)
    except NotSelfOrthogonalError as exc:
        raise CommandError(str(exc), failed_gram_entries=exc.failed_entries) from exc


def cmd_simulate(args) -> dict:
    code = build_code(_curve(args), args.m)
    spec = ChannelSpec(args.kind, args.prob, args.seed)
    report = wer_experiment(code, spec, args.trials)
    d, exact = _distance(code, "auto")
    return {
        "code": {"n": code.n, "k": code.k, "d": d, "exact": exact},
        "channel": spec.to_dict(),
        "trials": report.trials,
        "word_errors": report.word_errors,
        "symbol_errors_injected": report.symbol_errors_injected,
        "decoder": report.decoder,
    }


def _table(payload) -> str:
    width = max(len(k) for k in payload)
    lines = []
    for key, value in payload.items():
        if isinstance(value, dict):
            value = ", ".join(f"{k}={v}" for k, v in value.items())
        lines.append(f"{key:<{width}}  {value}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="agcodes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--p", type=int, required=True, help="characteristic (odd prime)")
        sp.add_argument("--e", type=int, default=1, help="q = p**e")
        sp.add_argument("--s", type=int, required=True, help="x exponent, must divide q+1")
        sp.add_argument("--table", action="store_true", help="human-readable output")
        sp.set_defaults(func=func)
        return sp

    add("curve", cmd_curve, "point count and maximality")
    sp = add("code", cmd_code, "build C_L(D, mP) and report its parameters")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--distance", choices=["auto", "exhaustive", "enumerator", "bound"], default="auto")
    sp.add_argument("--export", metavar="PATH", help="write the generator matrix file")
    sp = add("scan", cmd_scan, "self-orthogonality and dimension audit per m (CSV)")
    sp.add_argument("--m-max", type=int, required=True)
    sp = add("quantum", cmd_quantum, "stabilizer code parameters")
    sp.add_argument("--m", type=int, required=True)
    sp = add("simulate", cmd_simulate, "word error rate experiment")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--kind", choices=["symmetric", "erasure"], default="symmetric")
    sp.add_argument("--prob", type=float, required=True)
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except CommandError as exc:
        payload = exc.payload
    except GuardExceeded as exc:
        payload = {"error": str(exc), "guard": exc.limit}
    except (FieldError, CurveError, ValueError) as exc:
        payload = {"error": str(exc)}
    else:
        if isinstance(result, str):
            sys.stdout.write(result)
        elif args.table:
            print(_table(result))
        else:
            print(json.dumps(result, sort_keys=True))
        return 0
    print(json.dumps(payload, sort_keys=True))
    return 1


if __name__ == "__main__":
    sys.exit(main())
