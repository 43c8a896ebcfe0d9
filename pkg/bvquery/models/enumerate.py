"""Exhaustive enumeration of the finite models of a theory.

Candidates are generated size by size as raw tables. A candidate is kept
when no relabelling gives a smaller encoding (so it is the canonical member
of its isomorphism class) and it satisfies every axiom.
"""

from dataclasses import dataclass
import itertools
import logging

from bvquery.exceptions import EnumerationError, ResourceLimitError
from bvquery.models.evaluate import evaluate_classical
from bvquery.models.structure import Structure, domain_tuples, is_canonical

DEFAULT_CANDIDATE_CAP = 10 ** 6


@dataclass(frozen=True)
class ModelClass(object):
    theory: object
    max_size: int
    models: tuple = ()

    def __len__(self):
        return len(self.models)

    def __iter__(self):
        return iter(self.models)

    def __getitem__(self, index):
        return self.models[index]

    def sizes(self):
        return sorted(set(m.size for m in self.models))

    def to_dict(self):
        return {
            "theory": self.theory.to_dict(),
            "max_size": self.max_size,
            "models": [dict(m.to_dict(), index=i)
                       for i, m in enumerate(self.models)],
        }


def candidate_count(signature, size):
    '''Number of raw labelled structures of the given size.'''
    bits = sum(size ** arity for _, arity in signature.relations)
    cells = sum(size ** arity for _, arity in signature.functions)
    return 2 ** bits * size ** (cells + len(signature.constants))


def _candidates(signature, size):
    rel_shapes = [domain_tuples(size, arity) for _, arity in signature.relations]
    fun_cells = [size ** arity for _, arity in signature.functions]
    rel_choices = itertools.product(*[
        itertools.product((0, 1), repeat=len(shape)) for shape in rel_shapes])
    for bits in rel_choices:
        relations = tuple(
            frozenset(t for t, bit in zip(shape, row) if bit)
            for shape, row in zip(rel_shapes, bits))
        fun_choices = itertools.product(*[
            itertools.product(range(size), repeat=cells) for cells in fun_cells])
        for tables in fun_choices:
            for constants in itertools.product(
                    range(size), repeat=len(signature.constants)):
                yield Structure(signature, size, relations, tuple(tables),
                                tuple(constants))


def enumerate_models(theory, max_size, cap=DEFAULT_CANDIDATE_CAP):
    if max_size < 1:
        raise EnumerationError("max size must be at least 1, not %d" % max_size)
    signature = theory.signature
    total = sum(candidate_count(signature, n) for n in range(1, max_size + 1))
    if total > cap:
        raise ResourceLimitError(
            "%d candidate structures exceed the cap of %d" % (total, cap))

    models = []
    for size in range(1, max_size + 1):
        kept = 0
        for candidate in _candidates(signature, size):
            if not is_canonical(candidate):
                continue
            if all(evaluate_classical(candidate, axiom, {})
                   for axiom in theory.axioms):
                models.append(candidate)
                kept += 1
        logging.debug("size %d: %d of %d candidates are models" % (
            size, kept, candidate_count(signature, size)))
    models.sort(key=lambda m: m.encode())
    return ModelClass(theory, max_size, tuple(models))
