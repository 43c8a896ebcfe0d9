"""Finite structures over {0, ..., n-1}."""

from dataclasses import dataclass
import itertools

from bvquery.exceptions import StructureError


def domain_tuples(size, arity):
    '''All arity-tuples over range(size) in lexicographic order.'''
    return list(itertools.product(range(size), repeat=arity))


def table_index(size, args):
    index = 0
    for a in args:
        index = index * size + a
    return index


@dataclass(frozen=True)
class Structure(object):

    """
    A finite model of a signature. Relations are stored per symbol, in
    signature order, as frozensets of tuples; functions as flat value
    tables indexed by the lexicographic position of the argument tuple;
    constants as elements.
    """

    signature: object
    size: int
    relations: tuple = ()
    functions: tuple = ()
    constants: tuple = ()

    def __post_init__(self):
        sig = self.signature
        n = self.size
        if n < 1:
            raise StructureError("Structures need a non-empty domain")
        if len(self.relations) != len(sig.relations):
            raise StructureError("Expected %d relation tables, got %d" % (
                len(sig.relations), len(self.relations)))
        if len(self.functions) != len(sig.functions):
            raise StructureError("Expected %d function tables, got %d" % (
                len(sig.functions), len(self.functions)))
        if len(self.constants) != len(sig.constants):
            raise StructureError("Expected %d constants, got %d" % (
                len(sig.constants), len(self.constants)))
        for (name, arity), table in zip(sig.relations, self.relations):
            for t in table:
                if len(t) != arity or any(not 0 <= a < n for a in t):
                    raise StructureError("Tuple %r of %s outside the domain" % (
                        t, name))
        for (name, arity), table in zip(sig.functions, self.functions):
            if len(table) != n ** arity:
                raise StructureError("Function %s is not total" % name)
            if any(not 0 <= v < n for v in table):
                raise StructureError("Function %s leaves the domain" % name)
        for name, value in zip(sig.constants, self.constants):
            if not 0 <= value < n:
                raise StructureError("Constant %s outside the domain" % name)

    @classmethod
    def build(cls, signature, size, relations=None, functions=None,
              constants=None):
        '''
        Convenience constructor from name-keyed dicts. Unary relations may
        list bare elements; functions may be given as {args: value} dicts
        or as flat tables.
        '''
        relations = relations or {}
        functions = functions or {}
        constants = constants or {}
        rel_tables = []
        for name, _ in signature.relations:
            rows = set()
            for t in relations.get(name, ()):
                rows.add(tuple(t) if isinstance(t, (tuple, list)) else (t,))
            rel_tables.append(frozenset(rows))
        fun_tables = []
        for name, arity in signature.functions:
            given = functions.get(name)
            if given is None:
                raise StructureError("Missing table for function %s" % name)
            if isinstance(given, dict):
                table = []
                for args in domain_tuples(size, arity):
                    key = args if arity > 1 else args[0]
                    if key not in given and args not in given:
                        raise StructureError("Function %s is not total" % name)
                    table.append(given.get(key, given.get(args)))
                given = table
            fun_tables.append(tuple(given))
        const_values = []
        for name in signature.constants:
            if name not in constants:
                raise StructureError("Missing value for constant %s" % name)
            const_values.append(constants[name])
        return cls(signature, size, tuple(rel_tables), tuple(fun_tables),
                   tuple(const_values))

    def relation(self, name):
        for (symbol, _), table in zip(self.signature.relations, self.relations):
            if symbol == name:
                return table
        raise KeyError(name)

    def function_value(self, name, args):
        for (symbol, _), table in zip(self.signature.functions, self.functions):
            if symbol == name:
                return table[table_index(self.size, args)]
        raise KeyError(name)

    def constant(self, name):
        return self.constants[list(self.signature.constants).index(name)]

    def encode(self):
        '''Integer vector used to order structures.'''
        code = [self.size]
        for (_, arity), table in zip(self.signature.relations, self.relations):
            code.extend(1 if t in table else 0
                        for t in domain_tuples(self.size, arity))
        for table in self.functions:
            code.extend(table)
        code.extend(self.constants)
        return tuple(code)

    def relabel(self, mapping):
        '''The isomorphic copy in which element a is renamed mapping[a].'''
        n = self.size
        inverse = [0] * n
        for a, b in enumerate(mapping):
            inverse[b] = a
        relations = tuple(
            frozenset(tuple(mapping[a] for a in t) for t in table)
            for table in self.relations)
        functions = []
        for (_, arity), table in zip(self.signature.functions, self.functions):
            functions.append(tuple(
                mapping[table[table_index(n, [inverse[b] for b in args])]]
                for args in domain_tuples(n, arity)))
        constants = tuple(mapping[c] for c in self.constants)
        return Structure(self.signature, n, relations, tuple(functions),
                         constants)

    def to_dict(self):
        return {
            "size": self.size,
            "relations": dict(
                (name, [list(t) for t in sorted(table)])
                for (name, _), table in zip(self.signature.relations,
                                            self.relations)),
            "functions": dict(
                (name, list(table))
                for (name, _), table in zip(self.signature.functions,
                                            self.functions)),
            "constants": dict(zip(self.signature.constants, self.constants)),
        }


def canonical_form(structure):
    '''The relabelling of structure with the least encoding.'''
    best = None
    for mapping in itertools.permutations(range(structure.size)):
        candidate = structure.relabel(mapping)
        if best is None or candidate.encode() < best.encode():
            best = candidate
    return best


def is_canonical(structure):
    code = structure.encode()
    for mapping in itertools.permutations(range(structure.size)):
        if structure.relabel(mapping).encode() < code:
            return False
    return True
