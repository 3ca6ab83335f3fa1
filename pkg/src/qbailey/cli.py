"""Command-line front end: ``list``, ``verify``, ``expand`` and ``positivity``.

Exit status is 0 when everything checked passes, 1 on a coefficient
mismatch or a negative entry, and 2 on usage or precision errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional, Sequence

from . import positivity as pos
from .identities import ParameterError, UnknownIdentityError, build_side, get, list_identities, summarize, verify_grid
from .qtools import partition_table
from .series import SeriesError, VerificationReport

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _parse_window(text: Optional[str]) -> Optional[tuple[int, int]]:
    if text is None:
        return None
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise UsageError(f"--window expects lo:hi, got {text!r}") from None
    if lo >= hi:
        raise UsageError("--window needs lo < hi")
    return lo, hi


def _raw_params(pairs: Sequence[str]) -> dict[str, str]:
    out = {}
    for item in pairs:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise UsageError(f"--param expects key=value, got {item!r}")
        out[key.strip()] = value.strip()
    return out


def _typed_params(identity_id: str, raw: dict[str, str]) -> dict[str, Any]:
    desc = get(identity_id)
    specs = {p.name: p for p in desc.params}
    unknown = set(raw) - set(specs)
    if unknown:
        raise ParameterError(f"{identity_id}: unknown parameter(s) {sorted(unknown)}; schema: {desc.schema()}")
    return {k: specs[k].parse(v) for k, v in raw.items()}


def _resolve_range(order: Optional[int], window: Optional[tuple[int, int]], default: int) -> tuple[Optional[int], int]:
    hi = order if order is not None else (window[1] if window else default)
    if hi < 1:
        raise UsageError("--order must be at least 1")
    if window is None:
        return None, hi
    if window[1] > hi:
        raise UsageError(f"window end {window[1]} exceeds the order {hi}")
    return window[0], window[1]


def _emit(args: argparse.Namespace, payload: Any, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


# -- commands --------------------------------------------------------------------


def cmd_list(args: argparse.Namespace) -> int:
    descs = list_identities()
    if args.json:
        print(
            json.dumps(
                [
                    {
                        "id": d.id,
                        "anchor": d.anchor,
                        "params": [{"name": p.name, "constraint": p.constraint} for p in d.params],
                        "reading": d.reading,
                        "companion": d.companion,
                        "default_order": d.default_order,
                    }
                    for d in descs
                ],
                sort_keys=True,
            )
        )
        return EXIT_PASS
    for d in descs:
        extra = f" [{d.reading}]" if d.reading != "printed" else ""
        print(f"{d.id}{extra}\n    params: {d.schema()}\n    anchor: {d.anchor}")
    return EXIT_PASS


def _report_line(r: VerificationReport) -> str:
    params = ", ".join(f"{k}={v}" for k, v in r.params.items())
    head = f"{r.identity}({params}) [{r.window[0]}, {r.window[1]}) {r.status}"
    if r.first_mismatch:
        e, a, b = r.first_mismatch
        head += f": q^{e} lhs={a} rhs={b}"
    return head


def cmd_verify(args: argparse.Namespace) -> int:
    ids = sorted(d.id for d in list_identities()) if args.ids == ["all"] else sorted(set(args.ids))
    window = _parse_window(args.window)
    raw = _raw_params(args.param)
    summaries, lines = [], []
    for identity_id in ids:
        desc = get(identity_id)
        lo, hi = _resolve_range(args.order, window, desc.default_order)
        reports = verify_grid(identity_id, _typed_params(identity_id, raw), lo, hi)
        lines.extend(_report_line(r) for r in reports)
        s = summarize(reports)
        if len(reports) == 1:
            s = reports[0]
        summaries.append(s)
    failed = [s for s in summaries if not s.passed]
    if args.json:
        payload = [s.to_json() for s in summaries]
        print(json.dumps(payload[0] if len(payload) == 1 else payload, sort_keys=True))
    else:
        print("\n".join(lines))
        print(f"{len(summaries) - len(failed)}/{len(summaries)} identities pass")
    return EXIT_FAIL if failed else EXIT_PASS


def cmd_expand(args: argparse.Namespace) -> int:
    desc = get(args.id)
    params = _typed_params(args.id, _raw_params(args.param))
    missing = [p.name for p in desc.params if p.name not in params]
    if missing:
        raise ParameterError(f"{args.id}: give --param for {missing}; schema: {desc.schema()}")
    window = _parse_window(args.window)
    lo, hi = _resolve_range(args.order, window, desc.default_order)
    s = build_side(args.id, args.side, params, hi)
    if lo is None:
        lo = min(0, s.min_exp) if not s.is_zero() else 0
    pairs = [(e, s[e]) for e in range(lo, hi)]
    _emit(args, [[e, str(c)] for e, c in pairs], "\n".join(f"{e} {c}" for e, c in pairs))
    return EXIT_PASS


def _positivity_values(name: str, params: dict[str, str], max_n: int) -> tuple[list[int], int, dict]:
    """Sequence to scan, the first index the claim covers, and the parameters used."""

    def int_arg(key: str, default: Optional[int] = None) -> int:
        if key not in params:
            if default is None:
                raise UsageError(f"{name} needs --param {key}=...")
            return default
        try:
            return int(params[key])
        except ValueError:
            raise UsageError(f"{key} must be an integer") from None

    if name.startswith("cor"):
        if params:
            raise UsageError(f"{name} takes no parameters")
        return pos.corollary_sums(name[3:], max_n), 0, {}
    if name == "andmer-k":
        k = int_arg("k")
        return pos.truncated_pentagonal_sum(k, max_n), 1, {"k": k}
    if name == "guozeng-k":
        k, first_j = int_arg("k"), int_arg("first_j", 0)
        return pos.overpartition_square_sum(k, max_n, first_j), 1, {"k": k, "first_j": first_j}
    if name == "merca":
        return pos.merca_display_sum(max_n), 1, {}
    if name == "theta-M":
        M = int_arg("M")
        s = pos.theta_quotient_series(M, max_n + 1)
        return [s[n] for n in range(max_n + 1)], 0, {"M": M}
    raise UsageError(f"unknown positivity target {name!r}; choose from {', '.join(POSITIVITY_TARGETS)}")


POSITIVITY_TARGETS = tuple(f"cor{w}" for w in pos.COROLLARIES) + ("andmer-k", "guozeng-k", "merca", "theta-M")


def cmd_positivity(args: argparse.Namespace) -> int:
    if args.max_n < 0:
        raise UsageError("--max-n must be nonnegative")
    partition_table(args.max_n)  # build the shared table once
    values, start, used = _positivity_values(args.id, _raw_params(args.param), args.max_n)
    scanned = values[start:]
    neg = pos.first_negative(values, start)
    if scanned:
        m = min(scanned)
        argmin = start + scanned.index(m)
    else:
        m, argmin = None, None
    payload = {
        "id": args.id,
        "params": {k: str(v) for k, v in used.items()},
        "window": [start, args.max_n + 1],
        "status": "pass" if neg is None else "fail",
        "min": None if m is None else str(m),
        "argmin": argmin,
        "first_negative": neg,
    }
    text = f"{args.id} n in [{start}, {args.max_n}] {payload['status']} min={m} at n={argmin}"
    if neg is not None:
        text += f"; first negative at n={neg} ({values[neg]})"
    _emit(args, payload, text)
    return EXIT_PASS if neg is None else EXIT_FAIL


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qbailey", description="Exact verification of q-series identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--param", action="append", default=[], metavar="KEY=VALUE", help="parameter value (repeatable)")

    p = sub.add_parser("list", help="show the identity catalogue")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("verify", help="compare both sides of identities")
    p.add_argument("ids", nargs="+", metavar="ID", help="identity ids, or 'all'")
    p.add_argument("--order", type=int, help="exclusive exponent bound (default: per identity)")
    p.add_argument("--window", help="exponent window lo:hi")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("expand", help="print coefficients of one side")
    p.add_argument("id")
    p.add_argument("--side", choices=("lhs", "rhs"), required=True)
    p.add_argument("--order", type=int)
    p.add_argument("--window")
    common(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("positivity", help="scan an alternating sum for negative entries")
    p.add_argument("id", help=", ".join(POSITIVITY_TARGETS))
    p.add_argument("--max-n", type=int, default=500)
    common(p)
    p.set_defaults(func=cmd_positivity)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParameterError, SeriesError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnknownIdentityError as exc:
        print(f"error: unknown identity {exc.args[0]!r}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
