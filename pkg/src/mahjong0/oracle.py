"""Independent ground truth by exhaustive search.

Everything here avoids the branch-and-bound engine on purpose: suit
decomposability is tabulated bottom-up over base-5 count keys, the pure
14-tile census runs a multi-source reverse BFS from the complete pure
hands, and arbitrary hands get a depth-bounded forward BFS over the
full change graph.  Agreement between these values and the engine is
what the test suite leans on.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .tiles import HAND_SIZE, MAX_COPIES, Hand14, PureKTile

_POW9 = 5 ** np.arange(9, dtype=np.int64)
_POW27 = 5 ** np.arange(27, dtype=np.int64)  # 4 * sum(5**i) fits int64
_SUIT_SPACE = 5 ** 9


@dataclass(frozen=True)
class CensusReport:
    total: int
    by_deficiency: dict[int, int]

    def lines(self) -> list[str]:
        return [f"{d},{self.by_deficiency[d]}" for d in sorted(self.by_deficiency)]


@dataclass(frozen=True)
class _SuitTables:
    melds: np.ndarray      # key -> decomposes into melds only
    melds_eye: np.ndarray  # key -> decomposes into melds plus one pair
    sizes: np.ndarray      # key -> tile count


@lru_cache(maxsize=1)
def _tables() -> _SuitTables:
    """Tabulate per-suit decomposability for every count vector up to 14 tiles."""
    n = _SUIT_SPACE
    keys = np.arange(n, dtype=np.int64)
    digits = np.empty((n, 9), dtype=np.int8)
    for i in range(9):
        digits[:, i] = (keys // _POW9[i]) % 5
    sizes = digits.sum(axis=1, dtype=np.int16)
    melds = np.zeros(n, dtype=bool)
    melds_eye = np.zeros(n, dtype=bool)
    melds[0] = True
    for total in range(1, HAND_SIZE + 1):
        sel = np.nonzero(sizes == total)[0]
        if sel.size == 0:
            continue
        d = digits[sel]
        fnz = np.argmax(d > 0, axis=1)
        rows = np.arange(sel.size)
        here = d[rows, fnz].astype(np.int64)
        base = _POW9[fnz]
        if total % 3 == 0:
            ok = np.zeros(sel.size, dtype=bool)
            m = here >= 3
            ok[m] = melds[sel[m] - 3 * base[m]]
            m = fnz <= 6
            if m.any():
                nxt1 = np.zeros(sel.size, dtype=np.int64)
                nxt2 = np.zeros(sel.size, dtype=np.int64)
                nxt1[m] = d[rows[m], fnz[m] + 1]
                nxt2[m] = d[rows[m], fnz[m] + 2]
                mc = m & (nxt1 > 0) & (nxt2 > 0)
                ok[mc] |= melds[sel[mc] - 31 * base[mc]]  # remove one at fnz, fnz+1, fnz+2
            melds[sel] = ok
        elif total % 3 == 2:
            ok = np.zeros(sel.size, dtype=bool)
            m = here >= 2
            ok[m] = melds[sel[m] - 2 * base[m]]
            m = here >= 3
            ok[m] |= melds_eye[sel[m] - 3 * base[m]]
            m = fnz <= 6
            if m.any():
                nxt1 = np.zeros(sel.size, dtype=np.int64)
                nxt2 = np.zeros(sel.size, dtype=np.int64)
                nxt1[m] = d[rows[m], fnz[m] + 1]
                nxt2[m] = d[rows[m], fnz[m] + 2]
                mc = m & (nxt1 > 0) & (nxt2 > 0)
                ok[mc] |= melds_eye[sel[mc] - 31 * base[mc]]
            melds_eye[sel] = ok
    return _SuitTables(melds, melds_eye, sizes.astype(np.int8))


def _complete_mask(k0, k1, k2) -> np.ndarray:
    """Vectorized completeness over per-suit keys."""
    t = _tables()
    s0, s1, s2 = t.sizes[k0], t.sizes[k1], t.sizes[k2]
    m0, m1, m2 = s0 % 3, s1 % 3, s2 % 3
    out = (m0 == 2) & (m1 == 0) & (m2 == 0) & t.melds_eye[k0] & t.melds[k1] & t.melds[k2]
    out |= (m1 == 2) & (m0 == 0) & (m2 == 0) & t.melds_eye[k1] & t.melds[k0] & t.melds[k2]
    out |= (m2 == 2) & (m0 == 0) & (m1 == 0) & t.melds_eye[k2] & t.melds[k0] & t.melds[k1]
    return out


def _counts_complete(counts) -> bool:
    k = [int(np.dot(counts[9 * c: 9 * c + 9], _POW9)) for c in range(3)]
    return bool(_complete_mask(np.array([k[0]]), np.array([k[1]]), np.array([k[2]]))[0])


# ---------------------------------------------------------------------------
# pure hands

def enumerate_pure_14tiles() -> Iterator[PureKTile]:
    """Every valid pure 14-tile exactly once, lexicographically."""

    def rec(value: int, left: int, acc: list[int]) -> Iterator[PureKTile]:
        if left == 0:
            yield tuple(acc)
            return
        if value > 9 or left > MAX_COPIES * (10 - value):
            return
        for take in range(min(MAX_COPIES, left), -1, -1):
            acc.extend([value] * take)
            yield from rec(value + 1, left - take, acc)
            del acc[len(acc) - take:]

    yield from rec(1, HAND_SIZE, [])


def _pure_key(seq: PureKTile) -> int:
    key = 0
    for v in seq:
        key += 5 ** (v - 1)
    return key


@lru_cache(maxsize=1)
def _pure_distances() -> dict[int, int]:
    """Deficiency of every pure 14-tile by reverse BFS from complete hands.

    Edges stay inside the suit: one tile swapped for another of the same
    colour.  Cross-colour moves cannot shorten a path for a pure hand,
    which the engine-equivalence tests confirm empirically.
    """
    t = _tables()
    pow9 = [5 ** i for i in range(9)]
    dist: dict[int, int] = {}
    frontier: list[int] = []
    for seq in enumerate_pure_14tiles():
        key = _pure_key(seq)
        if t.melds_eye[key]:
            dist[key] = 0
            frontier.append(key)
    depth = 0
    while frontier:
        depth += 1
        nxt = []
        for key in frontier:
            digits = [(key // p) % 5 for p in pow9]
            for i in range(9):
                if digits[i] == 0:
                    continue
                for j in range(9):
                    if j == i or digits[j] >= MAX_COPIES:
                        continue
                    nk = key - pow9[i] + pow9[j]
                    if nk not in dist:
                        dist[nk] = depth
                        nxt.append(nk)
        frontier = nxt
    return dist


def pure_deficiency_map() -> dict[PureKTile, int]:
    """Pure 14-tile -> deficiency, for all 118800 hands."""
    dist = _pure_distances()
    return {seq: dist[_pure_key(seq)] for seq in enumerate_pure_14tiles()}


def pure_census() -> CensusReport:
    """Count pure 14-tiles by deficiency value."""
    dist = _pure_distances()
    by: dict[int, int] = {}
    total = 0
    for seq in enumerate_pure_14tiles():
        total += 1
        d = dist[_pure_key(seq)]
        by[d] = by.get(d, 0) + 1
    return CensusReport(total, dict(sorted(by.items())))


# ---------------------------------------------------------------------------
# arbitrary hands: depth-bounded forward BFS

def _suit_keys_of(rows: np.ndarray) -> np.ndarray:
    out = np.empty((rows.shape[0], 3), dtype=np.int64)
    for c in range(3):
        out[:, c] = rows[:, 9 * c: 9 * c + 9].astype(np.int64) @ _POW9
    return out


def _rows_complete(rows: np.ndarray) -> np.ndarray:
    k = _suit_keys_of(rows)
    return _complete_mask(k[:, 0], k[:, 1], k[:, 2])


def _any_complete_after_one_change(rows: np.ndarray) -> bool:
    keys = _suit_keys_of(rows)
    t = _tables()
    for r in range(27):
        can_remove = rows[:, r] > 0
        if not can_remove.any():
            continue
        cr, pr = r // 9, _POW9[r % 9]
        for a in range(27):
            if a == r:
                continue
            mask = can_remove & (rows[:, a] < MAX_COPIES)
            if not mask.any():
                continue
            ca, pa = a // 9, _POW9[a % 9]
            k = keys[mask].copy()
            k[:, cr] -= pr
            k[:, ca] += pa
            if _complete_mask(k[:, 0], k[:, 1], k[:, 2]).any():
                return True
    return False


def _expand(rows: np.ndarray, seen_keys: set[int]) -> np.ndarray:
    out = []
    for r in range(27):
        can_remove = rows[:, r] > 0
        if not can_remove.any():
            continue
        for a in range(27):
            if a == r:
                continue
            mask = can_remove & (rows[:, a] < MAX_COPIES)
            if not mask.any():
                continue
            block = rows[mask].copy()
            block[:, r] -= 1
            block[:, a] += 1
            out.append(block)
    if not out:
        return np.empty((0, 27), dtype=np.uint8)
    merged = np.concatenate(out, axis=0)
    keys = merged.astype(np.int64) @ _POW27
    _, first = np.unique(keys, return_index=True)
    merged = merged[first]
    keys = keys[first]
    fresh = np.fromiter((k not in seen_keys for k in keys.tolist()), dtype=bool, count=len(keys))
    merged = merged[fresh]
    seen_keys.update(k for k, f in zip(keys.tolist(), fresh) if f)
    return merged


def bfs_deficiency(hand: Hand14, max_depth: int) -> int | None:
    """Exact deficiency when it is at most max_depth, else None.

    Plain shortest-path search in the 14-tile change graph with
    duplicate elimination; depth 3 is the practical ceiling since the
    frontier multiplies by roughly 14 x 26 per level.
    """
    rows = np.array([hand.counts], dtype=np.uint8)
    if _rows_complete(rows)[0]:
        return 0
    if max_depth <= 0:
        return None
    seen = {int(rows[0].astype(np.int64) @ _POW27)}
    for depth in range(1, max_depth + 1):
        if depth == max_depth:
            return depth if _any_complete_after_one_change(rows) else None
        rows = _expand(rows, seen)
        if _rows_complete(rows).any():
            return depth
    return None
