"""Deficiency: the least number of tile changes that completes a hand.

The value equals the minimum cost over all p-decompositions, found by
branch-and-bound: tiles are processed in sorted order and the lowest
remaining tile either becomes an eye pair, starts a pong block, starts
a chow block, or is discarded.  Slot contents are fixed once created;
when tiles run out, discarded tiles are virtually recycled into still
open slots (one hole apiece, or a whole pair into an open eye), which
is what the minimum-cost refinement lemmas license.

A block takes everything it can reach: a pong block takes two or three
copies, a chow block takes whichever of the three consecutive numbers
are present.  Feasibility is tracked as the count of tiles each kind
contributes to slots plus their completions; five copies of a kind
kill the branch.

Results are memoized on the suit-permutation-canonical count vector,
bounded by the MAHJONG0_CACHE_SIZE environment variable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .decomp import PDecomposition, cost as pd_cost, is_complete_counts
from .melds import is_worst_pure_k_tile, max_disjoint_melds
from .tiles import (
    HAND_SIZE,
    MAX_COPIES,
    NUM_KINDS,
    Hand14,
    PureKTile,
    Tile,
    split_suits,
    suit_order_key,
)

MAX_DEFICIENCY = 6

_CACHE_SIZE = int(os.environ.get("MAHJONG0_CACHE_SIZE", "1000000"))
_value_cache: dict[bytes, int] = {}


@dataclass(frozen=True)
class DeficiencyResult:
    value: int
    witness: PDecomposition


def canonical_count_key(counts) -> bytes:
    """Counts re-ordered so suits are non-increasing (larger suit first,
    ties by the number subsequence); quotient of suit relabelling."""
    suits = sorted(
        (tuple(counts[9 * c + n] for n in range(9)) for c in range(3)),
        key=lambda s: (-sum(s), tuple(-x for x in s)),
    )
    return bytes(x for suit in suits for x in suit)


_place_cache: dict[tuple[int, ...], tuple[int, ...]] = {}


def _suit_place_profile(counts: tuple[int, ...]) -> tuple[int, ...]:
    """Relaxed placement profile for one suit's remaining tiles.

    Entry ``2*m + e`` is the most tiles this suit can park using at most
    m meld slots (each holding a pair, pchow, pong or chow) plus an eye
    pair when e is 1, counting one redeemed hole for every slot left
    unused.  Copy-cap interactions are ignored, so the profile is an
    upper bound on what the exact search can realize.
    """
    hit = _place_cache.get(counts)
    if hit is not None:
        return hit
    v = 0
    while v < 9 and counts[v] == 0:
        v += 1
    if v == 9:
        arr = [m for m in (0, 0, 1, 1, 2, 2, 3, 3, 4, 4)]
    else:
        c = list(counts)
        c[v] = 0
        arr = list(_suit_place_profile(tuple(c)))
        c[v] = counts[v]

        def member(takes: tuple[tuple[int, int], ...], q: int, eye: bool) -> None:
            for idx, dec in takes:
                c[idx] -= dec
            child = _suit_place_profile(tuple(c))
            for idx, dec in takes:
                c[idx] += dec
            if eye:
                for m in range(5):
                    val = child[2 * m] + q
                    if val > arr[2 * m + 1]:
                        arr[2 * m + 1] = val
            else:
                for m in range(1, 5):
                    for e in (0, 1):
                        val = child[2 * (m - 1) + e] + q
                        if val > arr[2 * m + e]:
                            arr[2 * m + e] = val

        if c[v] >= 2:
            member(((v, 2),), 2, True)
            member(((v, 2),), 2, False)
        if c[v] >= 3:
            member(((v, 3),), 3, False)
        if v <= 6 and c[v + 1] and c[v + 2]:
            member(((v, 1), (v + 1, 1), (v + 2, 1)), 3, False)
        if v <= 7 and c[v + 1]:
            member(((v, 1), (v + 1, 1)), 2, False)
        if v <= 6 and c[v + 2]:
            member(((v, 1), (v + 2, 1)), 2, False)
    out = tuple(arr)
    _place_cache[counts] = out
    return out


def _min_cost(counts) -> int:
    """Minimum p-decomposition cost for a 27-entry count vector."""
    hand_counts = tuple(counts)
    s = list(counts)
    need = [0] * NUM_KINDS  # slot tiles plus forced completion tiles
    choice_slots: list[tuple[int, int]] = []  # open two-sided pchow fills
    disc: list[int] = []
    best = MAX_DEFICIENCY

    def resolve(i: int) -> bool:
        if i == len(choice_slots):
            return True
        for k in choice_slots[i]:
            if need[k] < MAX_COPIES:
                need[k] += 1
                if resolve(i + 1):
                    need[k] -= 1
                    return True
                need[k] -= 1
        return False

    def feasible(extra_kind: int = -1) -> bool:
        if extra_kind >= 0:
            if need[extra_kind] + 2 > MAX_COPIES:
                return False
            need[extra_kind] += 2
            ok = resolve(0)
            need[extra_kind] -= 2
            return ok
        return resolve(0)

    def rec(head: int, free: int, eye_open: bool, placed: int) -> None:
        nonlocal best
        if best == 0:
            return
        if free == 0 and not eye_open:
            if resolve(0):
                v = HAND_SIZE - placed
                if v < best:
                    best = v
            return
        while head < NUM_KINDS and s[head] == 0:
            head += 1
        n_open = free + (1 if eye_open else 0)
        if head == NUM_KINDS:
            if not resolve(0):
                return
            base = HAND_SIZE - placed  # == len(disc)
            if not eye_open or len(disc) >= 4:
                cand = base - n_open
            else:
                # Only the eye is open and just 2-3 tiles were discarded.
                cand = base
                kinds = set(disc)
                if len(kinds) < len(disc):
                    pair_kind = next(k for k in kinds if disc.count(k) >= 2)
                    if feasible(pair_kind):
                        cand = base - 2
                if cand == base:
                    for k in kinds:
                        if hand_counts[k] <= 3 and feasible(k):
                            cand = base - 1
                            break
            if cand < best:
                best = cand
            return
        stotal = HAND_SIZE - placed - len(disc)
        capacity = 3 * free + (2 if eye_open else 0)
        lb = len(disc) + max(0, stotal - capacity) - n_open - (1 if eye_open else 0)
        if lb >= best:
            return
        # Sharper admissible bound: per-suit placement profiles give the
        # most tiles the remaining suits can still park in the open slots
        # (plus one redeemed hole per unused slot, two for an unused eye).
        gb = _suit_place_profile(tuple(s[0:9]))
        gc = _suit_place_profile(tuple(s[9:18]))
        gd = _suit_place_profile(tuple(s[18:27]))
        ub = 0
        for mb in range(free + 1):
            b0, b1 = gb[2 * mb], gb[2 * mb + 1]
            for mc in range(free + 1 - mb):
                md = free - mb - mc
                c0, c1 = gc[2 * mc], gc[2 * mc + 1]
                d0, d1 = gd[2 * md], gd[2 * md + 1]
                if eye_open:
                    v = max(b0 + c0 + d0 + 2, b1 + c0 + d0, b0 + c1 + d0, b0 + c0 + d1)
                else:
                    v = b0 + c0 + d0
                if v > ub:
                    ub = v
        if HAND_SIZE - placed - ub >= best:
            return
        k = head
        num = k % 9
        ck = s[k]
        # eye pair
        if eye_open and ck >= 2 and need[k] + 2 <= MAX_COPIES:
            s[k] = ck - 2
            need[k] += 2
            rec(head, free, False, placed + 2)
            need[k] -= 2
            s[k] = ck
        # pong block: two or three copies, always worth three slots
        if free > 0 and ck >= 2 and need[k] + 3 <= MAX_COPIES:
            take = 3 if ck >= 3 else 2
            s[k] = ck - take
            need[k] += 3
            rec(head, free - 1, eye_open, placed + take)
            need[k] -= 3
            s[k] = ck
        # chow block: the full run through num when present, and also the
        # two-tile variants, which can win when the third copy is worth
        # more elsewhere and its kind is at the copies cap
        if free > 0 and num <= 7 and need[k] < MAX_COPIES:
            has1 = s[k + 1] > 0
            has2 = num <= 6 and s[k + 2] > 0
            variants: list[tuple[tuple[int, ...], int, tuple[int, int] | None]] = []
            if has1 and has2:
                variants.append(((k, k + 1, k + 2), -1, None))
            if has1:
                if 1 <= num <= 6:
                    variants.append(((k, k + 1), -1, (k - 1, k + 2)))
                else:
                    variants.append(((k, k + 1), k + 2 if num == 0 else k - 1, None))
            if has2:
                variants.append(((k, k + 2), k + 1, None))
            for taken, forced, choice in variants:
                if any(need[t] >= MAX_COPIES for t in taken[1:]):
                    continue
                if forced >= 0 and need[forced] >= MAX_COPIES:
                    continue
                if choice is not None and need[choice[0]] >= MAX_COPIES \
                        and need[choice[1]] >= MAX_COPIES:
                    continue
                for t in taken:
                    s[t] -= 1
                    need[t] += 1
                if forced >= 0:
                    need[forced] += 1
                if choice is not None:
                    choice_slots.append(choice)
                rec(head, free - 1, eye_open, placed + len(taken))
                if choice is not None:
                    choice_slots.pop()
                if forced >= 0:
                    need[forced] -= 1
                for t in taken:
                    s[t] += 1
                    need[t] -= 1
        # discard
        s[k] = ck - 1
        disc.append(k)
        rec(head, free, eye_open, placed)
        disc.pop()
        s[k] = ck
    rec(0, 4, True, 0)
    return best


def deficiency_of_counts(counts) -> int:
    """Deficiency for a 27-entry count vector summing to 14."""
    key = canonical_count_key(counts)
    hit = _value_cache.get(key)
    if hit is not None:
        return hit
    value = 0 if is_complete_counts(counts) else _min_cost(counts)
    if len(_value_cache) >= _CACHE_SIZE:
        _value_cache.clear()
    _value_cache[key] = value
    return value


def deficiency_value(hand: Hand14) -> int:
    """Deficiency of a hand: 0 when complete, at most 6 always."""
    return deficiency_of_counts(hand.counts)


def deficiency(hand: Hand14) -> DeficiencyResult:
    """Deficiency together with a p-decomposition of exactly that cost."""
    value = deficiency_value(hand)
    witness = _find_witness(hand, value)
    return DeficiencyResult(value, witness)


def _find_witness(hand: Hand14, target: int) -> PDecomposition:
    """Search for a p-decomposition whose cost is exactly `target`.

    Unlike the value search this one also places lone tiles and partial
    blocks explicitly, so the returned slots are real sub-multisets of
    the hand.
    """
    s = list(hand.counts)
    goal = HAND_SIZE - target
    melds: list[tuple[int, ...]] = []
    eye: list[tuple[int, ...]] = []
    found: list[PDecomposition] = []

    def build() -> PDecomposition | None:
        parts = [tuple(Tile.from_kind(k) for k in part) for part in melds]
        while len(parts) < 4:
            parts.append(())
        eye_part = tuple(Tile.from_kind(k) for k in (eye[0] if eye else ()))
        pd = PDecomposition(tuple(parts), eye_part)
        if pd_cost(hand, pd) == target:
            return pd
        return None

    def rec(head: int, placed: int) -> bool:
        if placed == goal:
            pd = build()
            if pd is not None:
                found.append(pd)
                return True
            return False
        while head < NUM_KINDS and s[head] == 0:
            head += 1
        free = 4 - len(melds)
        stotal = sum(s[head:]) if head < NUM_KINDS else 0
        if placed + min(stotal, 3 * free + (2 if not eye else 0)) < goal:
            return False
        if head == NUM_KINDS:
            return False
        k = head
        num = k % 9
        moves: list[tuple[tuple[int, ...], bool]] = []  # (kinds, into_eye)
        if not eye:
            if s[k] >= 2:
                moves.append(((k, k), True))
            moves.append(((k,), True))
        if free > 0:
            if s[k] >= 3:
                moves.append(((k, k, k), False))
            if num <= 6 and s[k + 1] > 0 and s[k + 2] > 0:
                moves.append(((k, k + 1, k + 2), False))
            if s[k] >= 2:
                moves.append(((k, k), False))
            if num <= 7 and s[k + 1] > 0:
                moves.append(((k, k + 1), False))
            if num <= 6 and s[k + 2] > 0:
                moves.append(((k, k + 2), False))
            moves.append(((k,), False))
        # larger placements first so the target is reached sooner
        moves.sort(key=lambda m: -len(m[0]))
        for kinds, into_eye in moves:
            for kk in kinds:
                s[kk] -= 1
            if into_eye:
                eye.append(kinds)
            else:
                melds.append(kinds)
            if rec(head, placed + len(kinds)):
                return True
            if into_eye:
                eye.pop()
            else:
                melds.pop()
            for kk in kinds:
                s[kk] += 1
        # discard the head tile
        s[k] -= 1
        ok = rec(head, placed)
        s[k] += 1
        return ok

    if not rec(0, 0):
        raise AssertionError(f"no p-decomposition of cost {target} found for {hand}")
    return found[0]


# ---------------------------------------------------------------------------
# structural characterizations

def is_deficiency3_pure(seq: PureKTile) -> bool:
    """Pure 14-tiles needing exactly three changes.

    Shape (a): a kong plus five distinct pairs; shape (b): a pong, a
    lone tile and five distinct pairs where some chow through the pong
    and the lone tile exists and removing it leaves the hand chowless.
    Either way the hand must not contain two disjoint melds, otherwise
    two changes suffice.
    """
    if len(seq) != HAND_SIZE:
        raise ValueError("expected a pure 14-tile")
    counts = [0] * 10
    for v in seq:
        counts[v] += 1
    mult = sorted((c for c in counts if c), reverse=True)
    if mult == [4, 2, 2, 2, 2, 2]:
        return max_disjoint_melds(seq)[0] <= 1
    if mult != [3, 2, 2, 2, 2, 2, 1]:
        return False
    if max_disjoint_melds(seq)[0] > 1:
        return False
    p = counts.index(3)
    lone = counts.index(1)

    def has_chow(c: list[int]) -> bool:
        return any(c[v] and c[v + 1] and c[v + 2] for v in range(1, 8))

    for x in range(1, 10):
        if counts[x] == 0 or x in (p, lone):
            continue
        lo, mid, hi = sorted((p, lone, x))
        if mid - lo == 1 and hi - mid == 1:
            rest = counts[:]
            for v in (p, lone, x):
                rest[v] -= 1
            if not has_chow(rest):
                return True
    return False


# Suit-size patterns (largest first) where per-suit family scores can sum
# to exactly three, the signature of a worst hand.  The (7,4,3) shape is
# reachable too: a seven-tile suit of score two, a four-tile suit of
# score one and a scoreless three-tile suit.
_DEFICIENCY6_SHAPES = {(8, 3, 3), (7, 5, 2), (7, 4, 3), (6, 5, 3), (5, 5, 4)}


def is_deficiency6(hand: Hand14) -> bool:
    """Worst hands: the suit-size pattern and every suit maximally bad."""
    split = split_suits(hand)
    ordered = sorted(split.sequences, key=suit_order_key)
    sizes = tuple(len(seq) for seq in ordered)
    if sizes not in _DEFICIENCY6_SHAPES:
        return False
    return all(is_worst_pure_k_tile(seq, len(seq)) for seq in ordered)
