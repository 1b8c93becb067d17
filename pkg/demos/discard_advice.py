"""Which tile should I discard?
================================

The knowledge base tracks how many copies of each kind the player
believes are still available.  Two policies: count the draws that
lower the deficiency (fast heuristic), or compute the exact chance of
completing within k changes (expectimax over draws, rational
arithmetic).
"""

from mahjong0 import (
    delta,
    discard1,
    discard_k,
    format_kb,
    kb_initial,
    kb_observe_discard,
    parse_hand,
    parse_kb,
    val_k,
)
from mahjong0.tiles import Tile

# One of each tile is available; the hand is two changes from winning.
hand = parse_hand("B1B1B1B8B8B9C1C5C5C5D1D5D6D7")
kb = parse_kb("1" * 27)
print("hand:", hand)
print("improvement counts:", delta(hand, kb))
report = discard1(hand, kb)
print("discard:", report.entries[report.recommended_index][0])

# The exact policy looks deeper.  With only D2, D4, D5, D9 available,
# the one-step counts cannot separate D5 from D9; the exact two-step
# values can, and D9 wins.
hand = parse_hand("B1B2B3B7B8B9C2C2C2D1D2D3D5D9")
kb = parse_kb("(000000000)(000000000)(010110001)")
print("\nhand:", hand)
print("pool:", format_kb(kb))
for name in ("D1", "D5", "D9"):
    i = [str(t) for t in hand.tiles].index(name)
    print(f"  chance within 2 changes discarding {name}:",
          val_k(hand, kb, i, 2))
report = discard_k(hand, kb, 2)
tile, chance = report.entries[report.recommended_index]
print("discard:", tile, "with chance", chance)

# Seeing tiles leave the game shrinks the pool.
kb = kb_initial(hand)
print("\ninitial availability:", format_kb(kb), "total", kb.norm)
kb = kb_observe_discard(kb, Tile(2, 9))
print("after seeing a D9:   ", format_kb(kb), "total", kb.norm)
