"""
De Bruijn subsets and shorthand universal cycles
================================================

Under register shifts (or the two shorthand rotations) the flip graph is a
line graph, so its Hamilton cycles are Eulerian circuits of a smaller
transition graph and can be found in polynomial time.
"""

import itertools

from flipgray import (BitString, Permutation, check_debruijn_sequence,
                      solve_debruijn_subset, solve_shorthand_ucycle)

b3 = [BitString(b) for b in itertools.product((0, 1), repeat=3)]
res = solve_debruijn_subset(b3, cyclic=True)
print("B_3:", res.text)

middle = [b for b in b3 if b.weight in (1, 2)]
res = solve_debruijn_subset(middle, cyclic=True)
print("weight 1 or 2:", res.text, check_debruijn_sequence(res.sequence, middle))

print("{000,111}:", solve_debruijn_subset(
    [BitString.from_str("000"), BitString.from_str("111")]).answer)

s3 = [Permutation(p) for p in itertools.permutations((1, 2, 3))]
print("S_3 shorthand:", solve_shorthand_ucycle(s3, cyclic=True).text)

s4 = [Permutation(p) for p in itertools.permutations((1, 2, 3, 4))]
res = solve_shorthand_ucycle(s4, cyclic=True)
print("S_4 shorthand:", res.text, len(res.sequence))
