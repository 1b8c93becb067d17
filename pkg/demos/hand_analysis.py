"""How far is a hand from winning?
=================================

A hand wins with four melds (pong or chow) plus a pair.  The
deficiency number counts the single-tile changes needed to get there.
"""

from mahjong0 import deficiency, format_hand, neighbours, parse_hand

# A complete hand: deficiency 0 and the engine shows a decomposition.
hand = parse_hand("B1B2B2B3B3B4B7B7B7C1C1D4D5D6")
result = deficiency(hand)
print(format_hand(hand))
print("  deficiency:", result.value)
print("  witness:   ", result.witness)

# The same tiles with a few swapped become a two-away hand.  The witness
# is now a partial decomposition: holes in its slots count the cost.
hand = parse_hand("B1B1B2B2B2B2B3B3C1C2C8D2D2D8")
result = deficiency(hand)
print()
print(format_hand(hand))
print("  deficiency:", result.value)
print("  witness:   ", result.witness)

# The worst possible hands need six changes; suits split 5/5/4 with
# nothing but scattered pairs and gaps is one of the shapes.
hand = parse_hand("B1B1B2B5B8C1C2C2C5C8D3D6D8D9")
print()
print(format_hand(hand), "-> deficiency", deficiency(hand).value)

# Deficiency is a true graph distance: every hand one change away is a
# neighbour, and an incomplete hand sits one above its best neighbour.
hand = parse_hand("B1B2B3B7B8B9C2C2C2D1D2D3D5D9")
best = min(deficiency(nb).value for nb in neighbours(hand))
print()
print(format_hand(hand), "-> deficiency", deficiency(hand).value,
      "| best neighbour:", best)
