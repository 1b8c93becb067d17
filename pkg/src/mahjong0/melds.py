"""Meld and pseudomeld combinatorics.

A meld is a pong (three identical tiles) or a chow (three consecutive
tiles of one suit); kongs are four identical tiles and play no role in
legal hands.  A pmeld is a pair or a pchow (two same-suit tiles that a
third tile completes into a chow).

Disjoint families are searched exhaustively at the value level: two
members are disjoint when the tile copies suffice for both, except that
two identical pairs never count as disjoint (they compete for the same
completion).  A meld found in the tiles also counts as a pmeld.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache
from typing import Sequence

from .tiles import PureKTile, Tile, validate_pure

DisjointFamily = list[tuple["MeldKind", tuple[int, ...]]]


class MeldKind(Enum):
    CHOW = "chow"
    PONG = "pong"
    KONG = "kong"
    PAIR = "pair"
    PCHOW = "pchow"
    EYE = "eye"
    SINGLE = "single"


def classify(tiles: Sequence[Tile]) -> MeldKind | None:
    """The meld/pmeld kind formed by 2-4 tiles, or None."""
    ts = sorted(tiles)
    if not 2 <= len(ts) <= 4:
        raise ValueError("classify expects 2 to 4 tiles")
    if any(t.colour != ts[0].colour for t in ts):
        return None
    nums = [t.number for t in ts]
    if len(ts) == 2:
        if nums[0] == nums[1]:
            return MeldKind.PAIR
        if nums[1] - nums[0] <= 2:
            return MeldKind.PCHOW
        return None
    if len(ts) == 3:
        if nums[0] == nums[1] == nums[2]:
            return MeldKind.PONG
        if nums[1] == nums[0] + 1 and nums[2] == nums[0] + 2:
            return MeldKind.CHOW
        return None
    if nums[0] == nums[3]:
        return MeldKind.KONG
    return None


def _counts9(seq: PureKTile) -> list[int]:
    counts = [0] * 10  # 1-indexed by tile number
    for v in seq:
        counts[v] += 1
    return counts


def _pareto(profiles: set[tuple[int, int]]) -> frozenset[tuple[int, int]]:
    kept = set()
    for m, p in profiles:
        if not any((m2 >= m and p2 >= p and (m2, p2) != (m, p)) for m2, p2 in profiles):
            kept.add((m, p))
    return frozenset(kept)


@lru_cache(maxsize=None)
def _profiles(counts: tuple[int, ...], v: int, pair_ok: bool) -> frozenset[tuple[int, int]]:
    """Pareto front of (melds, pmelds) over disjoint families in `counts`.

    Members are considered in ascending order of their lowest value, so
    every family is enumerated exactly once.  `pair_ok` is False while a
    pair on the current value has already been taken.
    """
    if v > 9:
        return frozenset({(0, 0)})
    if counts[v] == 0:
        return _profiles(counts, v + 1, True)
    out: set[tuple[int, int]] = set()
    c = list(counts)
    # No further member starts at v: leftover copies stay unused.
    c[v] = 0
    out |= _profiles(tuple(c), v + 1, True)
    c[v] = counts[v]
    if counts[v] >= 3:
        c[v] -= 3
        out |= {(m + 1, p) for m, p in _profiles(tuple(c), v, pair_ok)}
        c[v] += 3
    if v <= 7 and counts[v + 1] > 0 and counts[v + 2] > 0:
        c[v] -= 1
        c[v + 1] -= 1
        c[v + 2] -= 1
        out |= {(m + 1, p) for m, p in _profiles(tuple(c), v, pair_ok)}
        c[v + 1] += 1
        c[v + 2] += 1
        c[v] += 1
    if pair_ok and counts[v] >= 2:
        c[v] -= 2
        out |= {(m, p + 1) for m, p in _profiles(tuple(c), v, False)}
        c[v] += 2
    for step in (1, 2):
        if v + step <= 9 and counts[v + step] > 0:
            c[v] -= 1
            c[v + step] -= 1
            out |= {(m, p + 1) for m, p in _profiles(tuple(c), v, pair_ok)}
            c[v + step] += 1
            c[v] += 1
    return _pareto(out)


def family_profiles(seq: PureKTile) -> frozenset[tuple[int, int]]:
    """Pareto-maximal (meld count, pmeld count) pairs over disjoint families."""
    if not seq:
        return frozenset({(0, 0)})
    return _profiles(tuple(_counts9(seq)), 1, True)


def _assign_indices(seq: PureKTile, members: list[tuple[MeldKind, tuple[int, ...]]]) -> DisjointFamily:
    positions: dict[int, list[int]] = {}
    for i, v in enumerate(seq):
        positions.setdefault(v, []).append(i)
    taken: dict[int, int] = {}
    family: DisjointFamily = []
    for kind, values in members:
        idx = []
        for v in values:
            n = taken.get(v, 0)
            idx.append(positions[v][n])
            taken[v] = n + 1
        family.append((kind, tuple(sorted(idx))))
    return family


def _find_family(counts: list[int], v: int, pair_ok: bool, melds_left: int,
                 pmelds_left: int, acc: list) -> bool:
    """Backtracking witness search for a family with the given member counts."""
    if melds_left == 0 and pmelds_left == 0:
        return True
    while v <= 9 and counts[v] == 0:
        v += 1
        pair_ok = True  # the identical-pair ban only binds within one value
    if v > 9:
        return False
    if melds_left > 0:
        if counts[v] >= 3:
            counts[v] -= 3
            acc.append((MeldKind.PONG, (v, v, v)))
            if _find_family(counts, v, pair_ok, melds_left - 1, pmelds_left, acc):
                counts[v] += 3
                return True
            acc.pop()
            counts[v] += 3
        if v <= 7 and counts[v + 1] > 0 and counts[v + 2] > 0:
            counts[v] -= 1
            counts[v + 1] -= 1
            counts[v + 2] -= 1
            acc.append((MeldKind.CHOW, (v, v + 1, v + 2)))
            if _find_family(counts, v, pair_ok, melds_left - 1, pmelds_left, acc):
                counts[v] += 1
                counts[v + 1] += 1
                counts[v + 2] += 1
                return True
            acc.pop()
            counts[v] += 1
            counts[v + 1] += 1
            counts[v + 2] += 1
    if pmelds_left > 0:
        if pair_ok and counts[v] >= 2:
            counts[v] -= 2
            acc.append((MeldKind.PAIR, (v, v)))
            if _find_family(counts, v, False, melds_left, pmelds_left - 1, acc):
                counts[v] += 2
                return True
            acc.pop()
            counts[v] += 2
        for step in (1, 2):
            if v + step <= 9 and counts[v + step] > 0:
                counts[v] -= 1
                counts[v + step] -= 1
                acc.append((MeldKind.PCHOW, (v, v + step)))
                if _find_family(counts, v, pair_ok, melds_left, pmelds_left - 1, acc):
                    counts[v] += 1
                    counts[v + step] += 1
                    return True
                acc.pop()
                counts[v] += 1
                counts[v + step] += 1
    # No member starting at v after all.
    saved = counts[v]
    counts[v] = 0
    found = _find_family(counts, v + 1, True, melds_left, pmelds_left, acc)
    counts[v] = saved
    return found


def _witness(seq: PureKTile, melds: int, pmelds: int) -> DisjointFamily:
    acc: list = []
    found = _find_family(_counts9(seq), 1, True, melds, pmelds, acc)
    assert found, "profile search and witness search disagree"
    return _assign_indices(seq, acc)


def max_disjoint_melds(seq: PureKTile) -> tuple[int, DisjointFamily]:
    """Largest pairwise-disjoint meld family in a pure sequence, with witness."""
    best = max((m for m, _ in family_profiles(seq)), default=0)
    if best == 0:
        return 0, []
    return best, _witness(seq, best, 0)


def max_disjoint_pmelds(seq: PureKTile) -> tuple[int, DisjointFamily]:
    """Largest disjoint pmeld family; melds count as pmelds."""
    profiles = family_profiles(seq)
    best = max((m + p for m, p in profiles), default=0)
    if best == 0:
        return 0, []
    m, p = max(((m, p) for m, p in profiles if m + p == best), key=lambda mp: mp[1])
    return best, _witness(seq, m, p)


def has_pmeld(seq: PureKTile) -> bool:
    return max((m + p for m, p in family_profiles(seq)), default=0) >= 1


def family_score(seq: PureKTile) -> int:
    """Best disjoint family weighted two per meld and one per pmeld.

    A meld is worth two because it saves two changes over a seeded
    single in its slot; a pmeld saves one.  A hand completes within
    nine minus its total score changes, so the score is what the worst
    k-tile conditions really cap.
    """
    return max((2 * m + p for m, p in family_profiles(seq)), default=0)


_WORST_SCORE_CAP = {1: 0, 2: 0, 3: 0, 4: 1, 5: 1, 6: 2, 7: 2, 8: 3}


def is_worst_pure_k_tile(seq: PureKTile, k: int) -> bool:
    """Whether seq is maximally bad for its size (1 <= k <= 8).

    Maximally bad means the weighted family score is as low as k tiles
    allow: 0 up to three tiles, 1 for four or five, 2 for six or seven,
    3 for eight.  For four or five tiles this reads as no meld and no
    two disjoint pmelds; for larger k any meld must stand alone.
    """
    if not 1 <= k <= 8:
        raise ValueError(f"k must be in 1..8, got {k}")
    if len(seq) != k:
        raise ValueError(f"sequence length {len(seq)} does not match k={k}")
    validate_pure(seq)
    return family_score(seq) <= _WORST_SCORE_CAP[k]
