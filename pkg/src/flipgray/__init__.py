"""Gray codes on combinatorial objects.

Exact Hamilton search on flip graphs, plus checked reductions between object families.
"""

from .errors import (BadIndices, BoundExceeded, DuplicateObject, EmptyInstance,
                     GrayCodeError, InapplicableFlip, InvariantViolation,
                     KindMismatch, MalformedText, MixedSizes, NotContinuous,
                     ResourceLimit, SizeMismatch)
from .flipgraph import (FlipGraph, build_flip_graph, connected_components,
                        degree_profile)
from .flips import FAMILIES, adjacent
from .objects import (BitString, Combination, DiamondGraph, EdgeSubset,
                      Instance, Permutation, SetPartition, Tuple2,
                      contains_pattern, format_object, is_peakless,
                      parse_object, validate_instance)
from .reductions import (BIT_TAGS, REDUCTIONS, build_diamond_graph,
                         lift_certificate, map_bitstrings, normalize_continuous,
                         reduce_instance, tuples_to_bitstrings,
                         tuples_to_permutations)
from .solver import (Certificate, SolveResult, UcycleResult,
                     check_debruijn_sequence, check_shorthand_sequence,
                     count_hamilton_paths, has_hamilton_cycle,
                     has_hamilton_path, solve_debruijn_subset,
                     solve_shorthand_ucycle, verify_certificate)
from .verify import (ReductionReport, brute_force_hamilton,
                     check_hypercube_inducement, check_reduction)

__version__ = "0.1.0"
