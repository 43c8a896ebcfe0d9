from bvquery.predicates.atoms import (
    InvariantAtom, invariant_atoms, predicate_from_atoms,
)
from bvquery.predicates.exchange import dump_predicate, load_predicate
from bvquery.predicates.predicate import (
    Predicate, check_extensionality, fibre_size_predicate,
    predicate_complement, predicate_from_formula,
)
