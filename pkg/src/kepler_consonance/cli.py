"""
Command-line front end.

Intervals may be given in either orientation (``3/2``, ``3:2``, ``2/3``) or as
a bare integer ``P`` meaning ``P/1``.  Everything is octave-reduced to the
canonical form ``m/n`` with ``1/2 <= m/n < 1``, so ``3/2`` and ``3/4`` name
the same interval.

Exit codes: 0 success, 1 domain error, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Any, Dict, List, Optional, Sequence

from kepler_consonance.consonance import (
    classify_interval,
    enumerate_intervals,
    fermat_consonance,
    verify_seven_theorem,
)
from kepler_consonance.constructibility import classify_polygon
from kepler_consonance.interval import (
    MAX_INT,
    DomainError,
    Interval,
    KeplerSequences,
    canonicalize,
    cents,
    kepler_sequences,
)

__all__ = ["IntervalParseError", "parse_interval", "render", "output_record", "run", "main"]

_INTERVAL_RE = re.compile(r"(\d+)(?:[/:](\d+))?")

RECORD_FIELDS = ("input", "canonical", "cents", "height", "second_sequence", "class")


class IntervalParseError(ValueError):
    def __init__(self, token: str, reason: str) -> None:
        super().__init__(f"invalid interval {token!r}: {reason}")
        self.token = token


def parse_interval(text: str) -> Interval:
    """Parse ``P/Q``, ``P:Q`` or ``P`` into a canonical interval."""
    match = _INTERVAL_RE.fullmatch(text.strip())
    if match is None:
        raise IntervalParseError(text, "expected P/Q, P:Q or P with positive integers")
    p = int(match.group(1))
    q = int(match.group(2)) if match.group(2) is not None else 1
    if p == 0 or q == 0:
        raise IntervalParseError(text, "components must be positive")
    if p > MAX_INT or q > MAX_INT:
        raise IntervalParseError(text, "component exceeds 2**64 - 1")
    try:
        return canonicalize(p, q)
    except OverflowError as exc:
        raise IntervalParseError(text, str(exc)) from None


def render(sigma: Interval) -> str:
    return f"{sigma.m}/{sigma.n}"


def output_record(sigma: Interval, source: Optional[str] = None) -> Dict[str, Any]:
    seqs = kepler_sequences(sigma)
    return {
        "input": render(sigma) if source is None else source,
        "canonical": render(sigma),
        "cents": round(cents(sigma), 3),
        "height": seqs.height,
        "second_sequence": list(seqs.second),
        "class": classify_interval(sigma).value,
    }


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.3f}"
    if isinstance(value, (list, tuple)):
        return ",".join(str(v) for v in value)
    return str(value)


def _emit(records: List[Dict[str, Any]], fmt: str, out) -> None:
    if fmt == "jsonl":
        for rec in records:
            out.write(json.dumps(rec) + "\n")
        return
    if not records:
        return
    headers = list(records[0])
    rows = [[_cell(rec[h]) for h in headers] for rec in records]
    widths = [max(len(h), *(len(r[i]) for r in rows)) for i, h in enumerate(headers)]
    for line in [headers] + rows:
        out.write("  ".join(c.ljust(w) for c, w in zip(line, widths)).rstrip() + "\n")


def _sequence_records(seqs: KeplerSequences) -> List[Dict[str, Any]]:
    return [
        {"step": i, "interval": render(s), "n": n}
        for i, (s, n) in enumerate(zip(seqs.first, seqs.second))
    ]


def _int_arg(text: str) -> int:
    if not text.isdigit():
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}")
    value = int(text)
    if value > MAX_INT:
        raise argparse.ArgumentTypeError(f"integer {text!r} exceeds 2**64 - 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument(
        "--format", choices=("table", "jsonl"), default=argparse.SUPPRESS,
        help="table: aligned columns; jsonl: one JSON object per line",
    )
    parser = argparse.ArgumentParser(
        prog="kepler-consonance",
        description="Kepler-map consonance classification of octave-reduced intervals.",
        parents=[fmt],
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("classify", parents=[fmt], help="classify one interval")
    p.add_argument("interval")
    p = sub.add_parser("seq", parents=[fmt], help="print both Kepler sequences")
    p.add_argument("interval")
    p = sub.add_parser("enumerate", parents=[fmt], help="classify all intervals up to a denominator")
    p.add_argument("--max-n", type=_int_arg, required=True, metavar="N")
    p.add_argument("--only", choices=("consonant",))
    p = sub.add_parser("polygon", parents=[fmt], help="constructibility class of the n-gon")
    p.add_argument("n", type=_int_arg)
    sub.add_parser("verify-theorem", parents=[fmt], help="verify the seven Euclidean consonants")
    p = sub.add_parser("fermat", parents=[fmt], help="Kepler sequences of [(F-1)/F]")
    p.add_argument("F", type=_int_arg)
    return parser


def _dispatch(args: argparse.Namespace, fmt: str, out) -> int:
    cmd = args.command
    if cmd == "classify":
        rec = output_record(parse_interval(args.interval), source=args.interval)
        _emit([rec], fmt, out)
    elif cmd == "seq":
        _emit(_sequence_records(kepler_sequences(parse_interval(args.interval))), fmt, out)
    elif cmd == "fermat":
        _emit(_sequence_records(fermat_consonance(args.F)), fmt, out)
    elif cmd == "enumerate":
        records = []
        for sigma in sorted(enumerate_intervals(args.max_n)):
            rec = output_record(sigma)
            if args.only == "consonant" and rec["class"] == "dissonant":
                continue
            records.append(rec)
        _emit(records, fmt, out)
    elif cmd == "polygon":
        _emit([{"n": args.n, "class": classify_polygon(args.n).value}], fmt, out)
    elif cmd == "verify-theorem":
        report = verify_seven_theorem()
        rows = [
            {
                "candidate": render(c),
                "second_sequence": list(kepler_sequences(c).second),
                "class": v.value,
            }
            for c, v in report.verdict_per_candidate
        ]
        summary = {
            "euclidean_consonants": [render(c) for c in report.euclidean_consonants],
            "ok": report.ok,
        }
        if fmt == "jsonl":
            _emit(rows + [summary], fmt, out)
        else:
            _emit(rows, fmt, out)
            out.write("euclidean consonants: " + ", ".join(summary["euclidean_consonants"]) + "\n")
            out.write(f"ok: {_cell(report.ok)}\n")
        return 0 if report.ok else 1
    return 0


def run(argv: Sequence[str], out=None, err=None) -> int:
    """Run the CLI on ``argv`` and return the exit code."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    fmt = getattr(args, "format", "table")
    try:
        return _dispatch(args, fmt, out)
    except IntervalParseError as exc:
        err.write(parser.format_usage())
        err.write(f"error: {exc}\n")
        return 2
    except (DomainError, OverflowError) as exc:
        err.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))
