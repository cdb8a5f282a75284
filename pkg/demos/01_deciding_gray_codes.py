"""
Deciding whether a list has a Gray code
=======================================

A list of objects has a Gray code when it can be ordered so that each
object is one flip away from the next.  That is a Hamilton path in the
flip graph the list induces.
"""

from flipgray import (BitString, Instance, Permutation, build_flip_graph,
                      format_object, has_hamilton_path, verify_certificate)

# four strings around 000: every other string touches only 000
star = Instance("bitstring", "bitflip",
                tuple(BitString.from_str(s) for s in ("000", "001", "010", "100")))
g = build_flip_graph(star)
print("star adjacency:", g.adj)
res = has_hamilton_path(g)
print("answer:", res.answer, res.stats)

# three permutations under adjacent swaps: a path once reordered
perms = Instance("permutation", "swap",
                 tuple(Permutation.from_str(s) for s in ("1234", "1324", "1243")))
res = has_hamilton_path(build_flip_graph(perms))
print("answer:", res.answer, "certificate:", res.certificate)
print("order:", [format_object(perms.objects[i]) for i in res.certificate.vertices()])
print("verifies:", verify_certificate(perms, res.certificate))

# the full cube Q_8: the search follows fewest-exits-first and rarely backtracks
cube = Instance("bitstring", "bitflip",
                tuple(BitString(tuple((c >> (7 - i)) & 1 for i in range(8))) for c in range(256)))
res = has_hamilton_path(build_flip_graph(cube))
print("Q_8:", res.answer, "nodes expanded:", res.stats["nodes"])
