"""
From grid points to strings and permutations
============================================

Integer 2-tuples under +-1 steps are grid-graph Hamilton path instances.
A list with a gap in either coordinate can never be traversed; otherwise
it is shifted to start at (1,1) and mapped on.
"""

import random

from flipgray import (Instance, Tuple2, brute_force_hamilton, build_flip_graph,
                      format_object, normalize_continuous, tuples_to_bitstrings,
                      tuples_to_permutations)
from flipgray.verify import random_continuous_tuples

print(normalize_continuous([(1, 1), (3, 1)]))
print(normalize_continuous([(5, 5), (5, 6), (6, 5)]))

src = random_continuous_tuples(6, random.Random(4))
print("tuples:", [format_object(t) for t in src.objects])
bits = tuples_to_bitstrings(src.objects)
perms = tuples_to_permutations(src.objects)
print("strings:", [format_object(b) for b in bits])
print("permutations:", [format_object(p) for p in perms])

# one answer, three ways
for kind, flip, objs in (("tuple", "pm1_tuple", src.objects),
                         ("bitstring", "bitflip", bits),
                         ("permutation", "swap", perms)):
    print(kind, brute_force_hamilton(build_flip_graph(Instance(kind, flip, tuple(objs)))))
