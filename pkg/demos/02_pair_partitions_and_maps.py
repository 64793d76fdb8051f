"""
Pair-partitions, couples and the surfaces they glue
===================================================

"""

from zonalkit import canonical_couple, enumerate_pair_partitions, loop_structure, map_stats
from zonalkit.pairings import make_pair_partition

# (2k-1)!! pair-partitions of [2k]
for k in range(1, 6):
    print(k, sum(1 for _ in enumerate_pair_partitions(k)))

# a couple of type μ has loops of half-lengths μ
s1, s2 = canonical_couple((3, 1))
print(s1, s2, loop_structure(s1, s2).type)

# a third pair-partition glues the faces into a surface
_, s2 = canonical_couple((2,))
print(map_stats((2,), s2).to_dict())
print(map_stats((2,), make_pair_partition([(1, 3), (2, 4)])).to_dict())
