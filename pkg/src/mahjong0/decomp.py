"""Completeness testing and the p-decomposition machinery.

A hand is complete when it splits into four melds and one eye.  A
p-decomposition relaxes that: four meld slots each holding a meld, a
pmeld, a single tile or nothing, plus an eye slot holding a pair, a
single tile or nothing; whatever is left is the remainder.  Its cost is
the number of tiles that must be drawn to finish every slot, provided a
finished hand exists that never uses five copies of a kind; otherwise
the cost is infinite.

The copy constraint binds on slot tiles plus fill tiles only: remainder
tiles are the ones traded away, so they never appear in the finished
hand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .melds import MeldKind, classify
from .tiles import MAX_COPIES, NUM_KINDS, Hand14, Tile

INFINITE = math.inf

MELD_SLOTS = 4
MELD_SIZE = 3
EYE_SIZE = 2


class NotAPartition(ValueError):
    """The p-decomposition's parts are not a sub-multiset of the hand."""


class InvalidPart(ValueError):
    """A slot holds tiles that are not a meld, pmeld, single or empty."""


class Incompletable(ValueError):
    """Operation requires a completable p-decomposition."""


# ---------------------------------------------------------------------------
# per-suit exact decomposition (backtracking over pongs/chows, memoized)

@lru_cache(maxsize=None)
def _suit_melds(counts: tuple[int, ...]) -> bool:
    """Can these suit counts be fully decomposed into melds?"""
    total = sum(counts)
    if total == 0:
        return True
    if total % 3 != 0:
        return False
    i = next(k for k in range(9) if counts[k] > 0)
    c = list(counts)
    if c[i] >= 3:
        c[i] -= 3
        if _suit_melds(tuple(c)):
            return True
        c[i] += 3
    if i <= 6 and c[i + 1] > 0 and c[i + 2] > 0:
        c[i] -= 1
        c[i + 1] -= 1
        c[i + 2] -= 1
        if _suit_melds(tuple(c)):
            return True
    return False


@lru_cache(maxsize=None)
def _suit_melds_eye(counts: tuple[int, ...]) -> bool:
    """Can these suit counts be decomposed into melds plus one pair?"""
    if sum(counts) % 3 != 2:
        return False
    i = next((k for k in range(9) if counts[k] > 0), None)
    if i is None:
        return False
    c = list(counts)
    if c[i] >= 2:
        c[i] -= 2
        if _suit_melds(tuple(c)):
            return True
        c[i] += 2
    if c[i] >= 3:
        c[i] -= 3
        if _suit_melds_eye(tuple(c)):
            return True
        c[i] += 3
    if i <= 6 and c[i + 1] > 0 and c[i + 2] > 0:
        c[i] -= 1
        c[i + 1] -= 1
        c[i + 2] -= 1
        if _suit_melds_eye(tuple(c)):
            return True
    return False


def _suit_counts_of(counts) -> list[tuple[int, ...]]:
    return [tuple(counts[9 * c + n] for n in range(9)) for c in range(3)]


def _suit_counts(hand: Hand14) -> list[tuple[int, ...]]:
    return _suit_counts_of(hand.counts)


def is_complete(hand: Hand14) -> bool:
    """Whether the hand decomposes into four melds and one eye."""
    return is_complete_counts(hand.counts)


def is_complete_counts(counts) -> bool:
    """Completeness for a 27-entry count vector."""
    suits = _suit_counts_of(counts)
    eye_suit = None
    for c in range(3):
        r = sum(suits[c]) % 3
        if r == 1:
            return False
        if r == 2:
            if eye_suit is not None:
                return False
            eye_suit = c
    if eye_suit is None:
        return False
    for c in range(3):
        ok = _suit_melds_eye(suits[c]) if c == eye_suit else _suit_melds(suits[c])
        if not ok:
            return False
    return True


def _suit_parts(counts: tuple[int, ...], with_eye: bool) -> list[tuple[int, ...]] | None:
    """One exact decomposition of suit counts; the pair comes first if any."""
    if sum(counts) == 0:
        return None if with_eye else []
    i = next(k for k in range(9) if counts[k] > 0)
    c = list(counts)
    if with_eye and c[i] >= 2:
        c[i] -= 2
        rest = _suit_parts(tuple(c), False)
        if rest is not None:
            return [(i + 1, i + 1)] + rest
        c[i] += 2
    if c[i] >= 3:
        c[i] -= 3
        rest = _suit_parts(tuple(c), with_eye)
        if rest is not None:
            return [(i + 1, i + 1, i + 1)] + rest
        c[i] += 3
    if i <= 6 and c[i + 1] > 0 and c[i + 2] > 0:
        c[i] -= 1
        c[i + 1] -= 1
        c[i + 2] -= 1
        rest = _suit_parts(tuple(c), with_eye)
        if rest is not None:
            return [(i + 1, i + 2, i + 3)] + rest
    return None


# ---------------------------------------------------------------------------
# decomposition types

def _part_kind(part: tuple[Tile, ...]) -> MeldKind | None:
    if len(part) == 0:
        return None
    if len(part) == 1:
        return MeldKind.SINGLE
    return classify(part)


@dataclass(frozen=True)
class Decomposition:
    """Four melds and one eye covering a complete hand."""

    melds: tuple[tuple[Tile, ...], ...]
    eye: tuple[Tile, ...]

    def __post_init__(self):
        if len(self.melds) != MELD_SLOTS:
            raise InvalidPart("a decomposition needs exactly four melds")
        object.__setattr__(self, "melds", tuple(tuple(sorted(p)) for p in self.melds))
        object.__setattr__(self, "eye", tuple(sorted(self.eye)))
        for part in self.melds:
            if len(part) != MELD_SIZE or classify(part) not in (MeldKind.CHOW, MeldKind.PONG):
                raise InvalidPart(f"not a meld: {''.join(map(str, part))}")
        if len(self.eye) != EYE_SIZE or classify(self.eye) is not MeldKind.PAIR:
            raise InvalidPart("the eye must be a pair")

    def as_pdecomposition(self) -> "PDecomposition":
        return PDecomposition(self.melds, self.eye)


@dataclass(frozen=True)
class PDecomposition:
    """Four meld slots plus an eye slot; slots may be partial or empty."""

    melds: tuple[tuple[Tile, ...], ...]
    eye: tuple[Tile, ...]

    def __post_init__(self):
        if len(self.melds) != MELD_SLOTS:
            raise InvalidPart("a p-decomposition needs exactly four meld slots")
        object.__setattr__(self, "melds", tuple(tuple(sorted(p)) for p in self.melds))
        object.__setattr__(self, "eye", tuple(sorted(self.eye)))
        for part in self.melds:
            if len(part) > MELD_SIZE:
                raise InvalidPart(f"meld slot too big: {''.join(map(str, part))}")
            if len(part) >= 2 and classify(part) not in (
                    MeldKind.PAIR, MeldKind.PCHOW, MeldKind.CHOW, MeldKind.PONG):
                raise InvalidPart(f"bad meld slot: {''.join(map(str, part))}")
        if len(self.eye) > EYE_SIZE:
            raise InvalidPart("the eye holds at most a pair")
        if len(self.eye) == 2 and classify(self.eye) is not MeldKind.PAIR:
            raise InvalidPart(f"bad eye slot: {''.join(map(str, self.eye))}")

    @classmethod
    def empty(cls) -> "PDecomposition":
        return cls(((), (), (), ()), ())

    @classmethod
    def of(cls, *parts) -> "PDecomposition":
        """Build from five token strings/tile tuples, eye last."""
        tile_parts = []
        for part in parts:
            if isinstance(part, str):
                part = tuple(Tile(("B", "C", "D").index(part[i]), int(part[i + 1]))
                             for i in range(0, len(part), 2))
            tile_parts.append(tuple(part))
        if len(tile_parts) != 5:
            raise InvalidPart("expected four meld slots plus an eye")
        return cls(tuple(tile_parts[:4]), tile_parts[4])

    def parts(self) -> Iterator[tuple[Tile, ...]]:
        yield from self.melds
        yield self.eye

    def placed(self) -> int:
        return sum(len(p) for p in self.parts())

    def used_counts(self) -> list[int]:
        counts = [0] * NUM_KINDS
        for part in self.parts():
            for t in part:
                counts[t.kind] += 1
        return counts

    def __str__(self) -> str:
        return "".join("(" + "".join(map(str, p)) + ")" for p in self.parts())


def remainder(hand: Hand14, pd: PDecomposition) -> tuple[Tile, ...]:
    """Tiles of the hand not used by any slot; raises NotAPartition."""
    left = list(hand.counts)
    for part in pd.parts():
        for t in part:
            left[t.kind] -= 1
            if left[t.kind] < 0:
                raise NotAPartition(f"slots use more copies of {t} than the hand holds")
    out = []
    for kind, n in enumerate(left):
        out.extend([Tile.from_kind(kind)] * n)
    return tuple(out)


# ---------------------------------------------------------------------------
# completability and cost

def _chow_completions(number: int) -> list[tuple[int, ...]]:
    opts = []
    for lo in (number - 2, number - 1, number + 1):
        pair = tuple(n for n in (lo, lo + 1) if n != number)
        if len(pair) == 2 and all(1 <= n <= 9 for n in pair):
            opts.append(pair)
    return opts


def _fill_options(part: tuple[Tile, ...], is_eye: bool) -> list[tuple[int, ...]] | None:
    """Kind tuples that finish the slot; None when the slot is already full
    or empty (an empty slot can always be finished with fresh kinds)."""
    kind = _part_kind(part)
    if kind is None:
        return None
    colour = part[0].colour
    base = 9 * colour
    if is_eye:
        if kind is MeldKind.PAIR:
            return []
        return [(base + part[0].number - 1,)]
    if kind in (MeldKind.CHOW, MeldKind.PONG):
        return []
    if kind is MeldKind.PAIR:
        return [(base + part[0].number - 1,)]
    if kind is MeldKind.PCHOW:
        a, b = part[0].number, part[1].number
        if b == a + 2:
            return [(base + a,)]  # the middle tile
        opts = []
        if a >= 2:
            opts.append((base + a - 2,))
        if b <= 8:
            opts.append((base + b,))
        return opts
    # single tile: finish as a pong or as any chow through it
    n = part[0].number
    opts = [(base + n - 1, base + n - 1)]
    for pair in _chow_completions(n):
        opts.append(tuple(base + x - 1 for x in pair))
    return opts


def _feasible(used: list[int], groups: list[list[tuple[int, ...]]]) -> bool:
    """Backtrack over per-slot fill choices under the four-copies cap."""
    if not groups:
        return True
    head, rest = groups[0], groups[1:]
    for option in head:
        ok = True
        for k in option:
            used[k] += 1
            if used[k] > MAX_COPIES:
                ok = False
        if ok and _feasible(used, rest):
            for k in option:
                used[k] -= 1
            return True
        for k in option:
            used[k] -= 1
    return False


def _completable(pd: PDecomposition) -> bool:
    used = pd.used_counts()
    if any(n > MAX_COPIES for n in used):
        return False
    groups = []
    for i, part in enumerate(pd.parts()):
        opts = _fill_options(part, is_eye=(i == MELD_SLOTS))
        if opts is None:
            continue
        if not opts and _part_kind(part) in (MeldKind.CHOW, MeldKind.PONG, MeldKind.PAIR):
            continue  # already finished
        if opts == []:
            return False
        groups.append(opts)
    return _feasible(used, groups)


def cost(hand: Hand14, pd: PDecomposition) -> int | float:
    """Tile changes needed to finish every slot; INFINITE if impossible."""
    remainder(hand, pd)  # partition check
    if not _completable(pd):
        return INFINITE
    holes = sum(MELD_SIZE - len(p) for p in pd.melds) + (EYE_SIZE - len(pd.eye))
    return holes


def complete_decomposition(hand: Hand14) -> Decomposition | None:
    """A witness decomposition of a complete hand, None when incomplete."""
    if not is_complete(hand):
        return None
    suits = _suit_counts(hand)
    eye_suit = next(c for c in range(3) if sum(suits[c]) % 3 == 2)
    melds: list[tuple[Tile, ...]] = []
    eye: tuple[Tile, ...] = ()
    for c in range(3):
        parts = _suit_parts(suits[c], with_eye=(c == eye_suit))
        assert parts is not None
        for numbers in parts:
            tiles = tuple(Tile(c, n) for n in numbers)
            if len(tiles) == 2:
                eye = tiles
            else:
                melds.append(tiles)
    return Decomposition(tuple(melds), eye)


# ---------------------------------------------------------------------------
# saturation

def _single_tile_moves(pd: PDecomposition, tile: Tile) -> Iterator[PDecomposition]:
    """Every p-decomposition reachable by absorbing `tile` into a slot."""
    for i, part in enumerate(pd.melds):
        if len(part) >= MELD_SIZE:
            continue
        new_part = tuple(sorted(part + (tile,)))
        if len(new_part) == 1 or classify(new_part) is not None:
            melds = pd.melds[:i] + (new_part,) + pd.melds[i + 1:]
            yield PDecomposition(melds, pd.eye)
    if len(pd.eye) == 0:
        yield PDecomposition(pd.melds, (tile,))
    elif len(pd.eye) == 1 and pd.eye[0] == tile:
        yield PDecomposition(pd.melds, (tile, tile))


def is_saturated(hand: Hand14, pd: PDecomposition) -> bool:
    """No remainder tile can join a slot while staying completable."""
    rest = remainder(hand, pd)
    if not _completable(pd):
        raise Incompletable("p-decomposition has infinite cost")
    for tile in set(rest):
        for refined in _single_tile_moves(pd, tile):
            if _completable(refined):
                return False
    return True


def saturate(hand: Hand14, pd: PDecomposition) -> PDecomposition:
    """A saturated refinement absorbing as many remainder tiles as possible.

    Each absorbed tile fills one hole, so the cost drops by exactly the
    number of tiles moved; on a complete hand the empty p-decomposition
    refines all the way to a zero-cost decomposition.  Remainder kinds
    are scanned in ascending order, each one either extending a slot,
    seeding a fresh one, or staying behind.
    """
    rest = remainder(hand, pd)
    if not _completable(pd):
        raise Incompletable("p-decomposition has infinite cost")
    s = [0] * NUM_KINDS
    for t in rest:
        s[t.kind] += 1
    slots: list[list[int]] = [[t.kind for t in part] for part in pd.melds]
    eye: list[int] = [t.kind for t in pd.eye]
    start = pd.placed()
    cap0 = sum(MELD_SIZE - len(p) for p in slots) + (EYE_SIZE - len(eye))
    max_possible = start + min(len(rest), cap0)
    best: list = [start, pd]

    def assemble() -> PDecomposition:
        melds = tuple(tuple(Tile.from_kind(k) for k in sorted(p)) for p in slots)
        return PDecomposition(melds, tuple(Tile.from_kind(k) for k in sorted(eye)))

    def extension_ok(part: list[int], k: int) -> bool:
        if not part:
            return True
        if k // 9 != part[0] // 9:
            return False
        nums = sorted(x % 9 for x in part)
        n = k % 9
        if len(part) == 1:
            return abs(n - nums[0]) <= 2
        if nums[0] == nums[1]:
            return n == nums[0]
        if nums[1] - nums[0] == 1:
            return n in (nums[0] - 1, nums[1] + 1)
        return n == nums[0] + 1

    def rec(head: int, placed: int) -> bool:
        while head < NUM_KINDS and s[head] == 0:
            head += 1
        if head == NUM_KINDS:
            if placed > best[0]:
                candidate = assemble()
                if _completable(candidate):
                    best[0] = placed
                    best[1] = candidate
                    return placed == max_possible
            return False
        capacity = sum(MELD_SIZE - len(p) for p in slots) + (EYE_SIZE - len(eye))
        left = sum(s[head:])
        if placed + min(left, capacity) <= best[0]:
            return False
        k = head
        num = k % 9
        # absorb k somewhere, larger seeds first
        moves: list[tuple[str, int, tuple[int, ...]]] = []
        empty_slot = next((i for i, p in enumerate(slots) if not p), None)
        if empty_slot is not None:
            if s[k] >= 3:
                moves.append(("seed", empty_slot, (k, k, k)))
            if num <= 6 and s[k + 1] and s[k + 2]:
                moves.append(("seed", empty_slot, (k, k + 1, k + 2)))
            if s[k] >= 2:
                moves.append(("seed", empty_slot, (k, k)))
            if num <= 7 and s[k + 1]:
                moves.append(("seed", empty_slot, (k, k + 1)))
            if num <= 6 and s[k + 2]:
                moves.append(("seed", empty_slot, (k, k + 2)))
            moves.append(("seed", empty_slot, (k,)))
        if not eye:
            if s[k] >= 2:
                moves.append(("eye", 0, (k, k)))
            moves.append(("eye", 0, (k,)))
        elif len(eye) == 1 and eye[0] == k:
            moves.append(("eye", 0, (k,)))
        for i, part in enumerate(slots):
            if 0 < len(part) < MELD_SIZE and extension_ok(part, k):
                moves.append(("extend", i, (k,)))
        for action, idx, kinds in moves:
            for kk in kinds:
                s[kk] -= 1
            if action == "eye":
                eye.extend(kinds)
            else:
                slots[idx].extend(kinds)
            if rec(head, placed + len(kinds)):
                return True
            if action == "eye":
                del eye[len(eye) - len(kinds):]
            else:
                del slots[idx][len(slots[idx]) - len(kinds):]
            for kk in kinds:
                s[kk] += 1
        # leave one copy of k in the remainder
        s[k] -= 1
        done = rec(head, placed)
        s[k] += 1
        return done

    rec(0, start)
    return best[1]


# ---------------------------------------------------------------------------
# explicit completions (used to relate cost to graph distance)

def a_completion(hand: Hand14, pd: PDecomposition) -> Hand14:
    """One complete hand obtained by filling every hole of `pd`."""
    remainder(hand, pd)
    used = pd.used_counts()
    groups = []
    for i, part in enumerate(pd.parts()):
        opts = _fill_options(part, is_eye=(i == MELD_SLOTS))
        if opts is None or not opts and _part_kind(part) is not None:
            continue
        if opts == []:
            raise Incompletable("p-decomposition has infinite cost")
        groups.append(opts)

    chosen: list[tuple[int, ...]] = []

    def pick(remaining: list[list[tuple[int, ...]]]) -> bool:
        if not remaining:
            return True
        for option in remaining[0]:
            ok = True
            for k in option:
                used[k] += 1
                if used[k] > MAX_COPIES:
                    ok = False
            if ok and pick(remaining[1:]):
                chosen.append(option)
                return True
            for k in option:
                used[k] -= 1
        return False

    if not pick(groups):
        raise Incompletable("p-decomposition has infinite cost")
    tiles = [t for part in pd.parts() for t in part]
    for option in chosen:
        tiles.extend(Tile.from_kind(k) for k in option)
    # Seed untouched slots with fresh kinds, cheapest first.
    for part in pd.melds:
        if part:
            continue
        kind = next(k for k in range(NUM_KINDS) if used[k] == 0)
        used[kind] += 3
        tiles.extend([Tile.from_kind(kind)] * 3)
    if not pd.eye:
        kind = next(k for k in range(NUM_KINDS) if used[k] <= 2)
        used[kind] += 2
        tiles.extend([Tile.from_kind(kind)] * 2)
    completed = Hand14.of(tiles)
    assert is_complete(completed)
    return completed
