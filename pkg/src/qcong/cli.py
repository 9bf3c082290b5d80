"""Command-line interface.

Exit status: 0 when every requested verification passes, 1 when some
check fails, 2 for argument or eligibility errors (a diagnostic naming
the violated precondition goes to stderr).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import congruence, counting, qfunctions, suite
from .congruence import ClaimError
from .report import VerificationReport, reports_to_json
from .series import EtaQuotient

FAIL_EXIT = 1
USAGE_EXIT = 2

_KIND_ALIASES = {
    "plain": lambda ell: counting.PLAIN_P,
    "overpartition": lambda ell: counting.OVERPARTITION,
    "l-regular": counting.L_REGULAR,
    "overlined-l-regular": counting.OVERLINED_L_REGULAR,
    "nonoverlined-l-regular": counting.NONOVERLINED_L_REGULAR,
    "rstar": counting.NONOVERLINED_L_REGULAR,
    "distinct-two-copies": lambda ell: counting.DISTINCT_TWO_COPIES,
}
_ELL_KINDS = ("l-regular", "overlined-l-regular", "nonoverlined-l-regular",
              "rstar")


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _report_lines(reports: list[VerificationReport]) -> list[str]:
    lines = []
    for r in reports:
        mark = {"pass": "PASS", "fail": "FAIL"}.get(r.status, "SKIP")
        line = f"{mark} {r.describe()} ({r.terms_checked} terms)"
        if r.status == "skipped" and r.reason:
            line += f": {r.reason}"
        lines.append(line)
        for idx, found, expected in r.counterexamples[:3]:
            lines.append(f"     n={idx}: found {found}, expected {expected}")
    return lines


def _finish(reports: list[VerificationReport], args) -> int:
    if args.format == "json":
        _emit(reports_to_json(reports), args.output)
    else:
        _emit("\n".join(_report_lines(reports)), args.output)
    return 0 if all(r.passed for r in reports) else FAIL_EXIT


def _cmd_expand(args) -> int:
    try:
        eq = EtaQuotient.parse(args.eta)
    except ValueError as exc:
        print(f"error: bad --eta value: {exc}", file=sys.stderr)
        return USAGE_EXIT
    if args.order < 1:
        print("error: --order must be >= 1", file=sys.stderr)
        return USAGE_EXIT
    series = qfunctions.eta_quotient(eq, args.order, args.modulus)
    if args.format == "json":
        _emit(series.json_array(), args.output)
    else:
        _emit("\n".join(series.text_lines(sparse=not args.dense)), args.output)
    return 0


def _cmd_count(args) -> int:
    maker = _KIND_ALIASES[args.kind]
    if args.kind in _ELL_KINDS:
        if args.ell is None:
            print(f"error: --kind {args.kind} requires --ell", file=sys.stderr)
            return USAGE_EXIT
        try:
            kind = maker(args.ell)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return USAGE_EXIT
    else:
        kind = maker(args.ell)
    if args.upto < 0:
        print("error: --upto must be >= 0", file=sys.stderr)
        return USAGE_EXIT
    table = counting.count(kind, args.upto)
    if args.format == "json":
        _emit(json.dumps(list(table.values), separators=(",", ":")),
              args.output)
    else:
        _emit("\n".join(f"{n} {v}" for n, v in enumerate(table.values)),
              args.output)
    return 0


def _cmd_verify_lemma(args) -> int:
    try:
        if args.all:
            reports = qfunctions.run_catalog(args.order)
        else:
            if not args.id:
                print("error: give --id TAG or --all", file=sys.stderr)
                return USAGE_EXIT
            params = {}
            if args.p is not None:
                params["p"] = args.p
            if args.n is not None:
                params["n"] = args.n
            reports = [qfunctions.verify_identity(args.id, args.order,
                                                  **params)]
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    return _finish(reports, args)


def _cmd_verify_theorem(args) -> int:
    params = {k: v for k, v in
              (("p", args.p), ("alpha", args.alpha), ("k", args.k),
               ("ell", args.ell)) if v is not None}
    try:
        claims = congruence.instantiate(args.family, **params)
        reports = congruence.verify_many(claims, terms=args.terms,
                                         max_order=args.max_order,
                                         threads=args.threads)
    except ClaimError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    return _finish(reports, args)


def _cmd_verify_all(args) -> int:
    if args.threads is not None:
        # criteria call verify_many without an explicit thread count, so
        # route the request through the environment knob they consult
        os.environ["QCONG_THREADS"] = str(max(1, args.threads))
    results = suite.run_all()
    if args.format == "json":
        payload = json.dumps([res.to_json_dict() for res in results],
                             sort_keys=True, separators=(",", ":"))
        _emit(payload, args.output)
    else:
        _emit("\n".join(suite.format_results(results)), args.output)
    return 0 if all(res.passed for res in results) else FAIL_EXIT


def _cmd_search(args) -> int:
    try:
        found = congruence.search(args.ell, args.max_step, args.max_modulus,
                                  terms=args.terms)
    except (ClaimError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    if args.format == "json":
        payload = json.dumps(
            [{"ell": c.ell, "step": c.step, "offset": c.offset,
              "modulus": c.modulus, "evidence": c.evidence,
              "rediscovers": list(c.rediscovers)} for c in found],
            sort_keys=True, separators=(",", ":"))
        _emit(payload, args.output)
    else:
        lines = [c.describe() for c in found] or ["no candidates"]
        _emit("\n".join(lines), args.output)
    return 0


def _add_output_options(sub) -> None:
    sub.add_argument("--format", choices=("text", "json"), default="text")
    sub.add_argument("--output", metavar="PATH",
                     help="write to a file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcong",
        description="Exact q-series expansion and congruence verification "
                    "for overpartitions with regular non-overlined parts.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("expand", help="expand an eta quotient")
    p.add_argument("--eta", required=True, metavar="SPEC",
                   help='factor list like "2:1,5:1,1:-2" (f2*f5/f1^2)')
    p.add_argument("--order", type=int, default=500,
                   help="number of coefficients (default 500)")
    p.add_argument("--modulus", type=int, default=None,
                   help="reduce coefficients mod this")
    p.add_argument("--dense", action="store_true",
                   help="print zero coefficients too (text format)")
    _add_output_options(p)
    p.set_defaults(func=_cmd_expand)

    p = subs.add_parser("count", help="run a combinatorial counting oracle")
    p.add_argument("--kind", required=True, choices=sorted(_KIND_ALIASES))
    p.add_argument("--ell", type=int, default=None)
    p.add_argument("--upto", type=int, required=True, metavar="N")
    _add_output_options(p)
    p.set_defaults(func=_cmd_count)

    p = subs.add_parser("verify-lemma",
                        help="verify catalog identities (dissections etc.)")
    p.add_argument("--id", metavar="TAG",
                   help="identity tag; see error message for the full list")
    p.add_argument("--all", action="store_true",
                   help="run the whole catalog at default parameters")
    p.add_argument("--p", type=int, default=None, help="prime parameter")
    p.add_argument("--n", type=int, default=None, help="square-dissection n")
    p.add_argument("--order", type=int, default=None,
                   help="override the identity's default order")
    _add_output_options(p)
    p.set_defaults(func=_cmd_verify_lemma)

    p = subs.add_parser("verify-theorem",
                        help="instantiate and verify one congruence family")
    p.add_argument("--family", required=True,
                   choices=list(congruence.FAMILIES))
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--alpha", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--ell", type=int, default=None)
    p.add_argument("--terms", type=int, default=500,
                   help="progression indices to check (default 500)")
    p.add_argument("--max-order", type=int, default=200000,
                   help="refuse claims needing a longer base expansion")
    p.add_argument("--threads", type=int, default=None,
                   help="claim-level parallelism (default QCONG_THREADS or 1)")
    _add_output_options(p)
    p.set_defaults(func=_cmd_verify_theorem)

    p = subs.add_parser("verify-all",
                        help="run the full twelve-criterion suite")
    p.add_argument("--threads", type=int, default=None)
    _add_output_options(p)
    p.set_defaults(func=_cmd_verify_all)

    p = subs.add_parser("search", help="scan progressions for congruences")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--max-step", type=int, default=8)
    p.add_argument("--max-modulus", type=int, default=8)
    p.add_argument("--terms", type=int, default=500)
    _add_output_options(p)
    p.set_defaults(func=_cmd_search)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
