from bvquery.logic.parser import parse_formula
from bvquery.logic.printer import print_formula, print_term
from bvquery.logic.syntax import (
    Signature, free_variables, conjunction, disjunction,
)
from bvquery.logic.theory import Theory, load_theory, parse_theory
from bvquery.logic.translate import translate_to_relational
