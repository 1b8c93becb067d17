"""Command-line front end: analysis, advice, census, oracle, service.

Exit codes: 0 on success, 2 for bad input (hand, knowledge base), 3 for
configuration problems such as a horizon beyond the cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .deficiency import deficiency
from .oracle import bfs_deficiency, pure_census
from .policy import DEFAULT_HORIZON_CAP, HorizonTooLarge, advise, parse_kb
from .reports import (
    advise_payload,
    analyze_payload,
    census_payload,
    oracle_payload,
)
from .tiles import HandError, parse_hand

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CONFIG = 3


def _horizon_cap() -> int:
    return int(os.environ.get("MAHJONG0_HORIZON_CAP", str(DEFAULT_HORIZON_CAP)))


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2))


def cmd_analyze(args) -> int:
    try:
        hand = parse_hand(args.hand)
    except HandError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    result = deficiency(hand)
    payload = analyze_payload(hand, result)
    if args.format == "json":
        _emit_json(payload)
        return EXIT_OK
    print(f"hand: {payload['hand']}")
    if result.value == 0:
        print("deficiency: 0, complete")
    else:
        print(f"deficiency: {result.value}")
    print(f"witness: {result.witness}")
    if payload["witness"]["remainder"]:
        print("remainder: " + "".join(payload["witness"]["remainder"]))
    return EXIT_OK


def cmd_advise(args) -> int:
    cap = _horizon_cap()
    if args.depth > cap:
        print(f"error: depth {args.depth} exceeds the horizon cap of {cap}",
              file=sys.stderr)
        return EXIT_CONFIG
    if args.depth < 1:
        print("error: depth must be at least 1", file=sys.stderr)
        return EXIT_CONFIG
    try:
        hand = parse_hand(args.hand)
        kb = parse_kb(args.kb)
    except (HandError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        report = advise(hand, kb, args.depth, cap=cap)
    except HorizonTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    payload = advise_payload(hand, report)
    if args.format == "json":
        _emit_json(payload)
        return EXIT_OK
    print(f"hand: {payload['hand']}   horizon: {report.k}")
    for i, entry in enumerate(payload["entries"]):
        mark = "  <- discard" if i == report.recommended_index else ""
        frac = f"{entry['value_numerator']}/{entry['value_denominator']}"
        print(f"  [{i:2d}] {entry['tile']}  {frac:>8s}  ({entry['value_decimal']:.4f}){mark}")
    return EXIT_OK


def cmd_census(args) -> int:
    if args.suite != "pure":
        print(f"error: unknown census suite {args.suite!r}", file=sys.stderr)
        return EXIT_INPUT
    report = pure_census()
    if args.format == "json":
        _emit_json(census_payload(report))
        return EXIT_OK
    if args.format == "csv":
        for line in report.lines():
            print(line)
        return EXIT_OK
    print(f"valid pure 14-tiles: {report.total}")
    for d, n in sorted(report.by_deficiency.items()):
        print(f"deficiency {d}: {n}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    try:
        hand = parse_hand(args.hand)
    except HandError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.max_depth < 0:
        print("error: max depth must be non-negative", file=sys.stderr)
        return EXIT_CONFIG
    value = bfs_deficiency(hand, args.max_depth)
    if args.format == "json":
        _emit_json(oracle_payload(hand, args.max_depth, value))
        return EXIT_OK
    if value is None:
        print("unknown")
    else:
        print(f"deficiency: {value}")
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(horizon_cap=_horizon_cap(),
                     cors_origins=args.cors_origin)
    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mahjong0",
        description="Analysis engine for the three-suit Mahjong game",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="deficiency and witness for a hand")
    p.add_argument("hand")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("advise", help="which tile to discard")
    p.add_argument("hand")
    p.add_argument("--kb", required=True,
                   help="27 availability digits, e.g. (000000000)(000000000)(010110001)")
    p.add_argument("--depth", type=int, default=1, help="horizon k (default 1)")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_advise)

    p = sub.add_parser("census", help="count pure 14-tiles by deficiency")
    p.add_argument("--suite", default="pure")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("oracle", help="depth-bounded BFS ground truth")
    p.add_argument("hand")
    p.add_argument("--max-depth", type=int, default=3)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("serve", help="run the HTTP analysis service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--cors-origin", default=os.environ.get("MAHJONG0_CORS_ORIGINS", "*"))
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv=None) -> None:
    args = build_parser().parse_args(argv)
    sys.exit(args.func(args))


if __name__ == "__main__":
    main()
