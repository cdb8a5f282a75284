"""
Hypercubes inside other flip graphs
===================================

Each ``bits_to_*`` map embeds the n-cube as an induced subgraph of another
flip graph.  Bitflip Gray codes for any subset then carry over, and so
does their number.
"""

import random

from flipgray import (BIT_TAGS, REDUCTIONS, BitString, build_flip_graph,
                      check_hypercube_inducement, count_hamilton_paths,
                      format_object, map_bitstrings, reduce_instance)
from flipgray.verify import random_bit_instance

# the non-crossing partition images of all 3-bit strings
for s in ("111", "110", "101", "011", "100", "010", "001", "000"):
    (p,) = map_bitstrings("bits_to_ncpartitions", [BitString.from_str(s)])
    print(s, "->", format_object(p))

# every map induces Q_n exactly
for tag in BIT_TAGS:
    flips = ",".join(REDUCTIONS[tag].target_flips)
    print(f"{tag:28s} {flips:40s}", all(check_hypercube_inducement(tag, n) for n in range(1, 5)))

# solution counts survive the trip
rng = random.Random(1)
src = random_bit_instance(4, 7, rng)
print("source:", [format_object(b) for b in src.objects])
print("source paths:", count_hamilton_paths(build_flip_graph(src)))
for tag in ("bits_to_trees", "bits_to_matchings", "bits_to_peakless"):
    tgt = reduce_instance(src, tag)
    print(f"{tag}: {count_hamilton_paths(build_flip_graph(tgt))} paths,",
          "first image", format_object(tgt.objects[0]))
