"""Trust but verify
===================

The engine answers with a branch-and-bound over p-decompositions; the
oracle answers with a plain breadth-first search over single-tile
changes.  They must agree wherever the search depth reaches.
"""

import random

from mahjong0 import bfs_deficiency, deficiency_value
from mahjong0.tiles import Hand14, Tile

rng = random.Random(7)
deck = [k for k in range(27) for _ in range(4)]

agree = 0
deep = 0
for _ in range(12):
    hand = Hand14.of(Tile.from_kind(k) for k in rng.sample(deck, 14))
    engine = deficiency_value(hand)
    oracle = bfs_deficiency(hand, 3)
    if oracle is None:
        deep += 1
        status = f"engine {engine}, oracle: beyond depth 3"
        assert engine > 3
    else:
        agree += 1
        status = f"both say {engine}"
        assert oracle == engine
    print(f"{str(hand):46s} {status}")

print(f"\n{agree} agreed exactly, {deep} confirmed out of range")
