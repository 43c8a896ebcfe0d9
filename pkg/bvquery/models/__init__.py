from bvquery.models.describe import complete_description
from bvquery.models.enumerate import ModelClass, enumerate_models
from bvquery.models.evaluate import evaluate_classical
from bvquery.models.isomorphism import automorphisms, find_isomorphisms
from bvquery.models.structure import Structure, canonical_form
