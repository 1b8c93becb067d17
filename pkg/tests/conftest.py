import random

import pytest

from mahjong0.tiles import HAND_SIZE, MAX_COPIES, NUM_KINDS, Hand14, Tile, parse_hand

# Worked hands that keep coming up.
EQ1 = "B1B2B2B3B3B4B7B7B7C1C1D4D5D6"          # complete
EQ2 = "11225566888899"                          # pure, deficiency 3
EQ3 = "B1B1B2B5B8C1C2C2C5C8D3D6D8D9"          # worst hand, deficiency 6
EQ4 = "B1B1B2B2B2B2B3B3C1C2C8D2D2D8"          # deficiency 2
EX2_HAND = "B1B1B1B8B8B9C1C5C5C5D1D5D6D7"     # one-step heuristic example
EX3_HAND = "B1B2B3B7B8B9C2C2C2D1D2D3D5D9"     # horizon-2 example
EX3_KB = "(000000000)(000000000)(010110001)"

_DECK = [k for k in range(NUM_KINDS) for _ in range(MAX_COPIES)]


def random_hand(rng: random.Random) -> Hand14:
    """Uniform deal of 14 tiles from the 108-tile set."""
    return Hand14.of(Tile.from_kind(k) for k in rng.sample(_DECK, HAND_SIZE))


def hand_with_suit_size(n: int, rng: random.Random) -> Hand14:
    suit = rng.randrange(3)
    major = [9 * suit + i for i in range(9) for _ in range(MAX_COPIES)]
    minor = [k for k in range(NUM_KINDS) if k // 9 != suit for _ in range(MAX_COPIES)]
    kinds = rng.sample(major, n) + rng.sample(minor, HAND_SIZE - n)
    return Hand14.of(Tile.from_kind(k) for k in kinds)


def check_valid_hand(hand: Hand14) -> None:
    """The standard-form invariants every operation must preserve."""
    assert len(hand.tiles) == HAND_SIZE
    assert list(hand.tiles) == sorted(hand.tiles)
    assert all(0 <= n <= MAX_COPIES for n in hand.counts)
    assert sum(hand.counts) == HAND_SIZE


@pytest.fixture(scope="session")
def pure_map():
    from mahjong0.oracle import pure_deficiency_map
    return pure_deficiency_map()


@pytest.fixture
def rng():
    return random.Random(20240817)


@pytest.fixture(scope="session")
def worked_hands():
    return {name: parse_hand(text) for name, text in
            [("eq1", EQ1), ("eq2", EQ2), ("eq3", EQ3), ("eq4", EQ4),
             ("ex2", EX2_HAND), ("ex3", EX3_HAND)]}
