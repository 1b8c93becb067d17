"""Partial decompositions and their cost
=========================================

A p-decomposition parks tiles in four meld slots and an eye slot; the
cost is the number of draws that finish every slot.  The minimum cost
over all p-decompositions is exactly the deficiency.
"""

from mahjong0 import (
    INFINITE,
    PDecomposition,
    cost,
    deficiency,
    is_saturated,
    parse_hand,
    saturate,
)

hand = parse_hand("B1B1B2B2B2B2B3B3C1C2C8D2D2D8")
print("hand:", hand)

# A poor choice of slots can be unfinishable: the pchow B1B3 below needs
# a fifth B2, so its cost is infinite.
stuck = PDecomposition.of("B1B2B3", "B2B2B2", "B1B3", "D2D2", "D8")
print("stuck slots:  ", stuck, "-> cost", cost(hand, stuck))
assert cost(hand, stuck) == INFINITE

# A workable but wasteful choice: four holes to fill.
weak = PDecomposition.of("B1B2B3", "B1B2B3", "B2", "D2D2", "D8")
print("weak slots:   ", weak, "-> cost", cost(hand, weak))

# The minimal one matches the deficiency.
best = PDecomposition.of("B1B2B3", "B1B2B3", "C1C2", "D2D2", "B2B2")
print("best slots:   ", best, "-> cost", cost(hand, best))
print("deficiency:   ", deficiency(hand).value)

# Saturation: absorb remainder tiles while the slots stay finishable.
# From empty slots the absorber rediscovers a minimal p-decomposition.
empty = PDecomposition.empty()
print("\nempty is saturated?", is_saturated(hand, empty))
filled = saturate(hand, empty)
print("saturated:    ", filled, "-> cost", cost(hand, filled))
assert is_saturated(hand, filled)
