from bvquery.group.action import (
    apply_permutation, check_invariance, point_permutation,
)
from bvquery.group.permutation import (
    Permutation, compose, group_closure, identity, parse_cycles,
    random_permutations, symmetric_generators,
)
