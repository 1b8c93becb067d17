"""Tile and hand model for the three-suit Mahjong game M0.

A tile is one of 27 kinds: three suits (Bamboo, Character, Dot) crossed
with numbers 1-9, four copies of each kind, 108 tiles in total.  A hand
is a multiset of exactly 14 tiles kept in standard form: sorted by
(suit, number), never more than four copies of one kind.

Kinds are also addressed by a flat id ``9 * colour + number - 1``
(0..26); hands carry a derived 27-entry count vector so copy lookups
are O(1).  All values here are immutable and all operations are pure
functions, so they are safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple

COLOURS = ("B", "C", "D")
NUM_KINDS = 27
HAND_SIZE = 14
MAX_COPIES = 4

# A pure k-tile: a sorted tuple of numbers 1..9, at most four of each.
PureKTile = tuple[int, ...]


class HandError(ValueError):
    """Base class for malformed hand input."""


class BadToken(HandError):
    """A tile token that does not match the grammar."""


class WrongCount(HandError):
    """A hand with a number of tiles other than 14."""


class FiveIdentical(HandError):
    """A hand containing five or more copies of one tile kind."""


class Tile(NamedTuple):
    colour: int  # 0=Bamboo, 1=Character, 2=Dot
    number: int  # 1..9

    @property
    def kind(self) -> int:
        return 9 * self.colour + self.number - 1

    @classmethod
    def from_kind(cls, kind: int) -> "Tile":
        return cls(kind // 9, kind % 9 + 1)

    def __str__(self) -> str:
        return f"{COLOURS[self.colour]}{self.number}"


@dataclass(frozen=True)
class Hand14:
    """A 14-tile hand in standard form."""

    tiles: tuple[Tile, ...]

    @cached_property
    def counts(self) -> tuple[int, ...]:
        counts = [0] * NUM_KINDS
        for t in self.tiles:
            counts[t.kind] += 1
        return tuple(counts)

    @classmethod
    def of(cls, tiles: Iterable[Tile]) -> "Hand14":
        """Canonicalize and validate an iterable of tiles."""
        ordered = tuple(sorted(tiles))
        if len(ordered) != HAND_SIZE:
            raise WrongCount(f"expected {HAND_SIZE} tiles, got {len(ordered)}")
        for i in range(len(ordered) - MAX_COPIES):
            if ordered[i] == ordered[i + MAX_COPIES]:
                raise FiveIdentical(f"five or more copies of {ordered[i]}")
        return cls(ordered)

    @classmethod
    def from_counts(cls, counts: Iterable[int]) -> "Hand14":
        tiles = []
        for kind, n in enumerate(counts):
            tiles.extend([Tile.from_kind(kind)] * n)
        return cls.of(tiles)

    def count(self, tile: Tile) -> int:
        return self.counts[tile.kind]

    def is_pure(self) -> bool:
        return self.tiles[0].colour == self.tiles[-1].colour

    def __str__(self) -> str:
        return format_hand(self)

    def __iter__(self) -> Iterator[Tile]:
        return iter(self.tiles)


@dataclass(frozen=True)
class SuitSplit:
    """Per-suit tile counts and number subsequences of a hand."""

    n_b: int
    n_c: int
    n_d: int
    h_b: PureKTile
    h_c: PureKTile
    h_d: PureKTile

    @property
    def counts(self) -> tuple[int, int, int]:
        return (self.n_b, self.n_c, self.n_d)

    @property
    def sequences(self) -> tuple[PureKTile, PureKTile, PureKTile]:
        return (self.h_b, self.h_c, self.h_d)


def _tokenize(text: str) -> list[Tile]:
    cleaned = "".join(ch for ch in text if ch not in " \t\r\n,()")
    if cleaned.isdigit():
        # Pure shorthand: a run of digits is a Bamboo pure hand.
        tiles = []
        for ch in cleaned:
            if ch == "0":
                raise BadToken("tile numbers run from 1 to 9, got '0'")
            tiles.append(Tile(0, int(ch)))
        return tiles
    tiles = []
    i = 0
    while i < len(cleaned):
        ch = cleaned[i].upper()
        if ch not in COLOURS:
            raise BadToken(f"expected suit letter B/C/D, got {cleaned[i]!r}")
        if i + 1 >= len(cleaned) or not cleaned[i + 1].isdigit():
            raise BadToken(f"suit letter {cleaned[i]!r} not followed by a digit")
        number = int(cleaned[i + 1])
        if number == 0:
            raise BadToken("tile numbers run from 1 to 9, got '0'")
        tiles.append(Tile(COLOURS.index(ch), number))
        i += 2
    return tiles


def parse_hand(text: str) -> Hand14:
    """Parse 14 tile tokens (any order) into a hand in standard form.

    Tokens are a suit letter B/C/D followed by a digit 1-9; whitespace,
    commas and parentheses are ignored.  A bare run of exactly 14
    digits is read as a pure Bamboo hand.
    """
    tiles = _tokenize(text)
    if len(tiles) != HAND_SIZE:
        raise WrongCount(f"expected {HAND_SIZE} tiles, got {len(tiles)}")
    return Hand14.of(tiles)


def format_hand(hand: Hand14) -> str:
    """Canonical rendering: tokens grouped per suit, empty suits omitted."""
    groups = []
    for colour in range(3):
        toks = [str(t) for t in hand.tiles if t.colour == colour]
        if toks:
            groups.append("(" + "".join(toks) + ")")
    return "".join(groups)


def split_suits(hand: Hand14) -> SuitSplit:
    seqs: list[list[int]] = [[], [], []]
    for t in hand.tiles:
        seqs[t.colour].append(t.number)
    h_b, h_c, h_d = (tuple(s) for s in seqs)
    return SuitSplit(len(h_b), len(h_c), len(h_d), h_b, h_c, h_d)


def suit_order_key(seq: PureKTile) -> tuple:
    """Sort key putting larger suits first, ties broken lexicographically.

    Comparing the number subsequences lexicographically is the same as
    comparing negated count vectors, which keeps the ordering usable on
    either representation.
    """
    return (-len(seq), seq)


def to_bcd_type(hand: Hand14) -> tuple[Hand14, tuple[int, int, int]]:
    """Relabel suits so per-suit counts are non-increasing.

    Returns the permuted hand and the permutation ``perm`` where
    ``perm[new_colour]`` is the original colour now labelled
    ``new_colour``.  Suits of equal size are ordered by their number
    subsequences; fully identical suits keep their original order, so
    the operation is idempotent.
    """
    split = split_suits(hand)
    order = sorted(range(3), key=lambda c: (suit_order_key(split.sequences[c]), c))
    tiles = []
    for new_colour, old_colour in enumerate(order):
        tiles.extend(Tile(new_colour, n) for n in split.sequences[old_colour])
    return Hand14.of(tiles), tuple(order)


def set_sequence(seq: PureKTile) -> PureKTile:
    """First occurrence of each distinct value, in order."""
    out = []
    for v in seq:
        if not out or out[-1] != v:
            out.append(v)
    return tuple(out)


def residual_sequence(seq: PureKTile) -> PureKTile:
    """The sequence with its set sequence removed (multiset difference)."""
    out = []
    prev = None
    for v in seq:
        if v == prev:
            out.append(v)
        prev = v
    return tuple(out)


def validate_pure(seq: PureKTile) -> None:
    """Raise ValueError unless seq is a valid pure k-tile."""
    if not 1 <= len(seq) <= HAND_SIZE:
        raise ValueError(f"pure k-tile length must be 1..14, got {len(seq)}")
    for v in seq:
        if not 1 <= v <= 9:
            raise ValueError(f"tile number out of range: {v}")
    for a, b in zip(seq, seq[1:]):
        if a > b:
            raise ValueError("pure k-tile must be non-decreasing")
    for i in range(len(seq) - MAX_COPIES):
        if seq[i] == seq[i + MAX_COPIES]:
            raise FiveIdentical(f"five or more copies of {seq[i]}")


def pure_hand(seq: PureKTile, colour: int = 0) -> Hand14:
    """Build a pure 14-tile hand from a number sequence."""
    return Hand14.of(Tile(colour, v) for v in seq)


def replace_tile(hand: Hand14, index: int, tile: Tile) -> Hand14:
    """Hand with the tile at `index` swapped for `tile`, re-canonicalized."""
    tiles = list(hand.tiles)
    tiles[index] = tile
    return Hand14.of(tiles)


def neighbours(hand: Hand14) -> set[Hand14]:
    """All valid hands at multiset edit distance exactly 1."""
    out: set[Hand14] = set()
    counts = hand.counts
    present = [k for k in range(NUM_KINDS) if counts[k] > 0]
    for removed in present:
        for added in range(NUM_KINDS):
            if added == removed or counts[added] >= MAX_COPIES:
                continue
            tiles = [t for t in hand.tiles]
            tiles.remove(Tile.from_kind(removed))
            tiles.append(Tile.from_kind(added))
            out.add(Hand14.of(tiles))
    return out


def hand_distance(a: Hand14, b: Hand14) -> int:
    """Shortest-path distance in the 14-tile graph: 14 minus the overlap."""
    overlap = sum(min(x, y) for x, y in zip(a.counts, b.counts))
    return HAND_SIZE - overlap
