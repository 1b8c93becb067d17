"""Wire payloads shared by the CLI JSON output and the HTTP service.

Both surfaces must emit field-identical structures, so every response
is built here and nowhere else.  Fractions travel as integer numerator
and denominator plus a convenience decimal.
"""

from __future__ import annotations

from fractions import Fraction

from .decomp import remainder
from .deficiency import DeficiencyResult
from .policy import AdviceReport
from .tiles import Hand14, format_hand

SCHEMA_VERSION = 1


def analyze_payload(hand: Hand14, result: DeficiencyResult) -> dict:
    witness = result.witness
    return {
        "schema_version": SCHEMA_VERSION,
        "hand": format_hand(hand),
        "deficiency": result.value,
        "complete": result.value == 0,
        "witness": {
            "melds": [[str(t) for t in part] for part in witness.melds],
            "eye": [str(t) for t in witness.eye],
            "remainder": [str(t) for t in remainder(hand, witness)],
        },
    }


def advise_payload(hand: Hand14, report: AdviceReport) -> dict:
    entries = []
    for tile, value in report.entries:
        frac = value if isinstance(value, Fraction) else Fraction(value)
        entries.append({
            "tile": str(tile),
            "value_numerator": frac.numerator,
            "value_denominator": frac.denominator,
            "value_decimal": float(frac),
        })
    return {
        "schema_version": SCHEMA_VERSION,
        "hand": format_hand(hand),
        "k": report.k,
        "entries": entries,
        "recommended_index": report.recommended_index,
    }


def census_payload(report) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "total": report.total,
        "by_deficiency": {str(d): n for d, n in sorted(report.by_deficiency.items())},
    }


def oracle_payload(hand: Hand14, max_depth: int, value: int | None) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "hand": format_hand(hand),
        "max_depth": max_depth,
        "deficiency": value,
        "known": value is not None,
    }


def health_payload(version: str, horizon_cap: int) -> dict:
    return {"status": "ok", "version": version, "horizon_cap": horizon_cap}
