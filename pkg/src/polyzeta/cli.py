"""Command-line front door.

Subcommands: expand, antipode, hopf-check, encode, decode, zeta-expand,
eval, verify. Word and parameter arguments take inline JSON or @file
references. Exit codes: 0 success, 1 failed check or exceeded residual,
2 usage or parse errors, 3 domain errors (divergence, bad shapes,
diagonal violations).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .errors import PolyzetaError
from .hopf import check_antipode, check_bialgebra, antipode as hopf_antipode
from .numeric import EvalConfig, eval_di, verify_relation, worker_count
from .products import PRODUCTS, star
from .serialize import (ParseError, eval_result_to_json, letter_from_json,
                        lincomb_to_json, params_from_json, params_to_json,
                        polynomial_to_json, report_to_json,
                        verify_report_to_json, word_from_json, word_to_json)
from .zeta import decode, duffle_expand, encode, shuffle_expand

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3


def _load_json(arg: str):
    """Inline JSON, or @path to read a JSON file."""
    if arg.startswith("@"):
        try:
            with open(arg[1:], "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {arg[1:]!r}: {exc}") from exc
    else:
        text = arg
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from exc


def _emit(payload, pretty_text: Optional[str], fmt: str) -> None:
    if fmt == "pretty" and pretty_text is not None:
        print(pretty_text)
    else:
        print(json.dumps(payload, ensure_ascii=False))


def _product(name: str):
    try:
        return PRODUCTS[name]
    except KeyError:
        raise ParseError(f"unknown product {name!r}; "
                         f"choose from {sorted(PRODUCTS)}")


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("json", "pretty"),
                        default="json", help="output format (default json)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyzeta",
        description="Shuffle-family word products, Hopf checks, series "
                    "encodings and numeric verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="product of two words")
    p.add_argument("--product", required=True, choices=sorted(PRODUCTS))
    p.add_argument("--left", required=True, help="word JSON or @file")
    p.add_argument("--right", required=True, help="word JSON or @file")
    _add_format(p)

    p = sub.add_parser("antipode", help="antipode of a word")
    p.add_argument("--product", required=True, choices=sorted(PRODUCTS))
    p.add_argument("--word", required=True, help="word JSON or @file")
    _add_format(p)

    p = sub.add_parser("hopf-check",
                       help="exhaustive bialgebra and antipode axiom checks")
    p.add_argument("--product", required=True, choices=sorted(PRODUCTS))
    p.add_argument("--max-len", type=int, default=4)
    p.add_argument("--alphabet", help="letters JSON or @file (list of letters)")
    _add_format(p)

    p = sub.add_parser("encode", help="parameters -> encoded word")
    p.add_argument("--params", required=True, help="params JSON or @file")
    _add_format(p)

    p = sub.add_parser("decode", help="encoded word -> parameters")
    p.add_argument("--word", required=True, help="word JSON or @file")
    _add_format(p)

    p = sub.add_parser("zeta-expand",
                       help="symbolic expansion of a product of two series")
    p.add_argument("--mode", required=True, choices=("shuffle", "duffle"))
    p.add_argument("--left", required=True, help="params JSON or @file")
    p.add_argument("--right", required=True, help="params JSON or @file")
    _add_format(p)

    p = sub.add_parser("eval", help="numerically evaluate one series")
    p.add_argument("--params", required=True, help="params JSON or @file")
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--nmax", type=int, default=None)
    _add_format(p)

    p = sub.add_parser("verify",
                       help="expand then numerically verify the identity")
    p.add_argument("--mode", required=True, choices=("shuffle", "duffle"))
    p.add_argument("--left", required=True, help="params JSON or @file")
    p.add_argument("--right", required=True, help="params JSON or @file")
    p.add_argument("--tol", type=float, default=None,
                   help="residual threshold (default: propagated budget)")
    p.add_argument("--nmax", type=int, default=None)
    _add_format(p)

    return parser


def _make_config(nmax: Optional[int], eval_tol: Optional[float]) -> EvalConfig:
    kwargs = {}
    if eval_tol is not None:
        kwargs["tolerance"] = eval_tol
    if nmax is not None:
        kwargs["n_max"] = nmax
        kwargs["n_start"] = min(2**10, nmax)
    return EvalConfig(**kwargs)


def _run(args: argparse.Namespace) -> int:
    if args.command == "expand":
        br = _product(args.product)
        left = word_from_json(_load_json(args.left))
        right = word_from_json(_load_json(args.right))
        result = star(br, left, right)
        _emit(polynomial_to_json(result), result.pretty(), args.format)
        return EXIT_OK

    if args.command == "antipode":
        br = _product(args.product)
        w = word_from_json(_load_json(args.word))
        result = hopf_antipode(br, w)
        _emit(polynomial_to_json(result), result.pretty(), args.format)
        return EXIT_OK

    if args.command == "hopf-check":
        br = _product(args.product)
        alphabet = None
        if args.alphabet:
            data = _load_json(args.alphabet)
            if not isinstance(data, list):
                raise ParseError("alphabet must be a list of letters")
            alphabet = tuple(letter_from_json(item) for item in data)
        reports = [check_bialgebra(br, args.max_len, alphabet),
                   check_antipode(br, args.max_len, alphabet)]
        payload = [report_to_json(rep) for rep in reports]
        pretty = "\n".join(
            f"{rep.axiom}: {rep.status} ({rep.checked} cases)"
            for rep in reports)
        _emit(payload, pretty, args.format)
        return EXIT_OK if all(rep.ok for rep in reports) else EXIT_CHECK_FAILED

    if args.command == "encode":
        p = params_from_json(_load_json(args.params))
        w = encode(p)
        _emit(word_to_json(w), w.pretty(), args.format)
        return EXIT_OK

    if args.command == "decode":
        w = word_from_json(_load_json(args.word))
        p = decode(w)
        _emit(params_to_json(p), p.pretty(), args.format)
        return EXIT_OK

    if args.command == "zeta-expand":
        left = params_from_json(_load_json(args.left))
        right = params_from_json(_load_json(args.right))
        expand = shuffle_expand if args.mode == "shuffle" else duffle_expand
        lc = expand(left, right)
        _emit(lincomb_to_json(lc), lc.pretty(), args.format)
        return EXIT_OK

    if args.command == "eval":
        p = params_from_json(_load_json(args.params))
        cfg = _make_config(args.nmax, args.tol)
        res = eval_di(p, cfg)
        pretty = (f"value = {res.value.real:+.12g}{res.value.imag:+.12g}i  "
                  f"error ~ {res.error_estimate:.3g}  n = {res.n_used}  "
                  f"converged = {res.converged}")
        _emit(eval_result_to_json(res), pretty, args.format)
        return EXIT_OK if res.converged else EXIT_CHECK_FAILED

    if args.command == "verify":
        left = params_from_json(_load_json(args.left))
        right = params_from_json(_load_json(args.right))
        expand = shuffle_expand if args.mode == "shuffle" else duffle_expand
        lc = expand(left, right)
        # evaluate noticeably tighter than the residual threshold
        eval_tol = min(1e-10, args.tol / 100) if args.tol is not None else None
        cfg = _make_config(args.nmax, eval_tol)
        rep = verify_relation((left, right), lc, cfg,
                              residual_tolerance=args.tol,
                              max_workers=worker_count())
        pretty = (f"lhs = {rep.lhs_value:.12g}  rhs = {rep.rhs_value:.12g}  "
                  f"residual = {rep.residual:.3g} (tolerance {rep.tolerance:.3g})"
                  f"  -> {'ok' if rep.ok else 'FAILED'}")
        _emit(verify_report_to_json(rep), pretty, args.format)
        return EXIT_OK if rep.ok else EXIT_CHECK_FAILED

    raise AssertionError(f"unhandled command {args.command!r}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_PARSE
    try:
        return _run(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PolyzetaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
