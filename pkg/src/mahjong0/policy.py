"""Discard decision-making under a knowledge base of available tiles.

The knowledge base is 27 counts of believed-available copies.  Two
policies are provided: the one-step count of available draws that
strictly lower the hand's deficiency, and the exact probability of
completing the hand within k changes when a given tile is discarded
first.  Probabilities are Fractions end to end; drawn tiles leave the
pool, discarded ones do not return to it.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .decomp import is_complete_counts
from .deficiency import deficiency_of_counts, deficiency_value
from .tiles import HAND_SIZE, MAX_COPIES, NUM_KINDS, Hand14, Tile

DEFAULT_HORIZON_CAP = 3

_CACHE_SIZE = int(os.environ.get("MAHJONG0_CACHE_SIZE", "1000000"))
_value_cache: dict[tuple[bytes, int], Fraction] = {}


class Underflow(ValueError):
    """Observation of a tile the knowledge base says is unavailable."""


class HorizonTooLarge(ValueError):
    """Requested horizon exceeds the configured cap."""


@dataclass(frozen=True)
class KnowledgeBase:
    counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(self.counts))
        if len(self.counts) != NUM_KINDS:
            raise ValueError(f"expected {NUM_KINDS} counts, got {len(self.counts)}")
        for n in self.counts:
            if not 0 <= n <= MAX_COPIES:
                raise ValueError(f"kb entries must lie in 0..4, got {n}")

    @cached_property
    def norm(self) -> int:
        return sum(self.counts)

    def count(self, tile: Tile) -> int:
        return self.counts[tile.kind]


@dataclass(frozen=True)
class AdviceReport:
    """Per-position values plus the recommended discard.

    Values are plain counts for the one-step heuristic and Fractions
    for horizon values; the recommendation is the lowest index
    attaining the maximum.
    """

    entries: tuple[tuple[Tile, Fraction | int], ...]
    recommended_index: int
    k: int


def kb_initial(hand: Hand14) -> KnowledgeBase:
    """Everything not in the hand is believed available."""
    return KnowledgeBase(tuple(MAX_COPIES - n for n in hand.counts))


def kb_observe_discard(kb: KnowledgeBase, tile: Tile) -> KnowledgeBase:
    """One copy of `tile` was seen leaving the game."""
    if kb.counts[tile.kind] == 0:
        raise Underflow(f"no copies of {tile} believed available")
    counts = list(kb.counts)
    counts[tile.kind] -= 1
    return KnowledgeBase(tuple(counts))


def parse_kb(text: str) -> KnowledgeBase:
    """27 digits, suits B then C then D; separators are ignored."""
    digits = [ch for ch in text if ch not in " \t\r\n,()"]
    if len(digits) != NUM_KINDS or not all(ch.isdigit() for ch in digits):
        raise ValueError("knowledge base needs exactly 27 digits")
    return KnowledgeBase(tuple(int(ch) for ch in digits))


def format_kb(kb: KnowledgeBase) -> str:
    groups = []
    for c in range(3):
        groups.append("(" + "".join(str(n) for n in kb.counts[9 * c: 9 * c + 9]) + ")")
    return "".join(groups)


def _argmax_lowest(values) -> int:
    best = 0
    for i, v in enumerate(values):
        if v > values[best]:
            best = i
    return best


def delta(hand: Hand14, kb: KnowledgeBase) -> list[int]:
    """Per-position count of available draws that lower the deficiency."""
    d0 = deficiency_value(hand)
    out = [0] * HAND_SIZE
    for i, tile in enumerate(hand.tiles):
        if i > 0 and hand.tiles[i - 1] == tile:
            out[i] = out[i - 1]
            continue
        total = 0
        for kind in range(NUM_KINDS):
            avail = kb.counts[kind]
            if avail == 0 or kind == tile.kind:
                continue
            counts = list(hand.counts)
            counts[tile.kind] -= 1
            counts[kind] += 1
            if counts[kind] > MAX_COPIES:
                continue
            if deficiency_of_counts(counts) < d0:
                total += avail
        out[i] = total
    return out


def discard1(hand: Hand14, kb: KnowledgeBase) -> AdviceReport:
    """Discard the position with the most deficiency-lowering draws."""
    values = delta(hand, kb)
    entries = tuple(zip(hand.tiles, values))
    return AdviceReport(entries, _argmax_lowest(values), 1)


# ---------------------------------------------------------------------------
# exact horizon values

def _joint_key(counts: tuple[int, ...], kb_counts: tuple[int, ...]) -> bytes:
    best = None
    for perm in itertools.permutations(range(3)):
        b = bytes(
            counts[9 * c + n] for c in perm for n in range(9)
        ) + bytes(kb_counts[9 * c + n] for c in perm for n in range(9))
        if best is None or b < best:
            best = b
    return best


def _val_hand(counts: tuple[int, ...], kb_counts: tuple[int, ...], steps: int) -> Fraction:
    """Chance of reaching a complete hand within `steps` changes."""
    if is_complete_counts(counts):
        return Fraction(1)
    if steps == 0:
        return Fraction(0)
    key = (_joint_key(counts, kb_counts), steps)
    hit = _value_cache.get(key)
    if hit is not None:
        return hit
    best = Fraction(0)
    seen_kind = -1
    for kind in range(NUM_KINDS):
        if counts[kind] == 0:
            continue
        seen_kind = kind
        v = _val_discard(counts, kb_counts, kind, steps)
        if v > best:
            best = v
    assert seen_kind >= 0
    if len(_value_cache) >= _CACHE_SIZE:
        _value_cache.clear()
    _value_cache[key] = best
    return best


def _val_discard(counts, kb_counts, discard_kind: int, steps: int) -> Fraction:
    norm = sum(kb_counts)
    if norm == 0:
        return Fraction(0)
    total = Fraction(0)
    for draw in range(NUM_KINDS):
        avail = kb_counts[draw]
        if avail == 0:
            continue
        new_counts = list(counts)
        new_counts[discard_kind] -= 1
        new_counts[draw] += 1
        if new_counts[draw] > MAX_COPIES:
            continue  # inconsistent knowledge base; such a draw cannot exist
        new_kb = list(kb_counts)
        new_kb[draw] -= 1
        total += Fraction(avail, norm) * _val_hand(tuple(new_counts), tuple(new_kb), steps - 1)
    return total


def val_k(hand: Hand14, kb: KnowledgeBase, i: int, k: int, *,
          cap: int = DEFAULT_HORIZON_CAP) -> Fraction:
    """Exact chance of completing within k changes, discarding tile i first."""
    if k < 1:
        raise ValueError("horizon must be at least 1")
    if k > cap:
        raise HorizonTooLarge(f"horizon {k} exceeds the cap of {cap}")
    if not 0 <= i < HAND_SIZE:
        raise ValueError(f"index must lie in 0..13, got {i}")
    if is_complete_counts(hand.counts):
        return Fraction(1)
    return _val_discard(hand.counts, kb.counts, hand.tiles[i].kind, k)


def advise(hand: Hand14, kb: KnowledgeBase, k: int, *,
           cap: int = DEFAULT_HORIZON_CAP) -> AdviceReport:
    """Advice report used by the CLI and the service.

    Horizon one ranks by the improvement heuristic (count of draws that
    lower the deficiency, scaled to fractions of the pool); on hands one
    change from completion this equals the exact one-step win chance.
    Deeper horizons use the exact recursion.
    """
    if k < 1:
        raise ValueError("horizon must be at least 1")
    if k > cap:
        raise HorizonTooLarge(f"horizon {k} exceeds the cap of {cap}")
    if k == 1:
        if is_complete_counts(hand.counts):
            raise ValueError("hand is already complete")
        if kb.norm == 0:
            raise ValueError("knowledge base has no tiles available")
        values = delta(hand, kb)
        entries = tuple((tile, Fraction(v, kb.norm))
                        for tile, v in zip(hand.tiles, values))
        return AdviceReport(entries, _argmax_lowest(values), 1)
    return discard_k(hand, kb, k, cap=cap)


def discard_k(hand: Hand14, kb: KnowledgeBase, k: int, *,
              cap: int = DEFAULT_HORIZON_CAP) -> AdviceReport:
    """Discard maximizing the chance to complete within k changes."""
    if k < 1:
        raise ValueError("horizon must be at least 1")
    if k > cap:
        raise HorizonTooLarge(f"horizon {k} exceeds the cap of {cap}")
    if is_complete_counts(hand.counts):
        raise ValueError("hand is already complete")
    if kb.norm == 0:
        raise ValueError("knowledge base has no tiles available")
    values = []
    for i in range(HAND_SIZE):
        if i > 0 and hand.tiles[i - 1] == hand.tiles[i]:
            values.append(values[-1])
            continue
        values.append(val_k(hand, kb, i, k, cap=cap))
    entries = tuple(zip(hand.tiles, values))
    return AdviceReport(entries, _argmax_lowest(values), k)
