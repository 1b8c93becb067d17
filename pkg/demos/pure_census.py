"""The pure 14-tile census
==========================

All 118800 single-suit hands, classified by deficiency with a reverse
breadth-first search seeded at the complete ones.  Pure hands never
need more than three changes.
"""

import time

from mahjong0 import enumerate_pure_14tiles, is_deficiency3_pure, pure_census
from mahjong0.oracle import pure_deficiency_map

t0 = time.time()
report = pure_census()
print(f"census in {time.time() - t0:.1f}s")
print(f"  valid pure 14-tiles: {report.total}")
for d, n in sorted(report.by_deficiency.items()):
    print(f"  deficiency {d}: {n}")

# The first few hands in enumeration order.
stream = enumerate_pure_14tiles()
for _ in range(3):
    print(" ", next(stream))

# The 90 three-away hands have a crisp shape: a kong or a pong with a
# stray tile, padded by five distinct pairs, and never two disjoint
# melds.  The predicate picks out exactly the census class.
dmap = pure_deficiency_map()
hits = [seq for seq in dmap if is_deficiency3_pure(seq)]
print(f"\ncharacterized three-away hands: {len(hits)}")
print("  first:", hits[0])
print("  all match the census:",
      all(dmap[seq] == 3 for seq in hits))
