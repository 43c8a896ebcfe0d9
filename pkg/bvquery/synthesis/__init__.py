from bvquery.synthesis.cover import (
    CoverViolation, eta_cover, global_family, greedy_cover,
)
from bvquery.synthesis.local import (
    LocalDatum, align_targets, eq_alpha_formula, induced_permutation,
    local_formula, zeta_witness,
)
from bvquery.synthesis.synthesize import (
    SynthesisResult, synthesize_definition, verify_definition,
)
