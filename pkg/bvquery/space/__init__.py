from bvquery.space.clopen import ClopenSet
from bvquery.space.conservativity import conservativity_report
from bvquery.space.enumerations import (
    BALANCED, UNBALANCED, enumerate_enumerations, fibres,
)
from bvquery.space.space import (
    Point, Space, canonical_point, equality_clopen, evaluate_bvm,
    point_separation,
)
