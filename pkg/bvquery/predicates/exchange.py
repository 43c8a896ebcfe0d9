"""JSON exchange format for predicates.

    {
     "arity": 1,
     "K": 4,
     "space_hash": "<sha256 of the space export>",
     "entries": {"0": [1, 4, 6], "1": [...], ...}
    }

Entry keys are comma separated index tuples; a missing entry is the empty
set.
"""

from bvquery.exceptions import PredicateError, SpaceMismatchError
from bvquery.predicates.predicate import Predicate, index_tuples
from bvquery.utils import read_json, write_json


def entry_key(m):
    return ",".join(str(eta) for eta in m)


def predicate_to_dict(predicate):
    space = predicate.space
    return {
        "arity": predicate.arity,
        "K": space.K,
        "space_hash": space.space_hash(),
        "entries": dict((entry_key(m), value.members())
                        for m, value in predicate.items()),
    }


def predicate_from_dict(space, data):
    try:
        arity = int(data["arity"])
        K = int(data["K"])
        entries = data.get("entries", {})
    except (KeyError, TypeError, ValueError) as e:
        raise PredicateError("Malformed predicate document: %s" % e)
    if K != space.K:
        raise SpaceMismatchError("Predicate for K=%d, space has K=%d" % (
            K, space.K))
    if data.get("space_hash") != space.space_hash():
        raise SpaceMismatchError("Predicate was built for a different space")
    known = set(entry_key(m) for m in index_tuples(K, arity))
    table = dict((m, space.empty()) for m in index_tuples(K, arity))
    for key, members in entries.items():
        try:
            m = tuple(int(w) for w in str(key).split(","))
        except ValueError:
            raise PredicateError("Bad entry key %r" % key)
        if entry_key(m) not in known:
            raise PredicateError("Entry %r is not a tuple of arity %d below %d"
                                 % (key, arity, K))
        table[m] = space.clopen(members)
    return Predicate(space, arity, [table[m] for m in index_tuples(K, arity)])


def dump_predicate(predicate, path=None):
    write_json(predicate_to_dict(predicate), path)


def load_predicate(space, path):
    try:
        data = read_json(path)
    except (IOError, OSError, ValueError) as e:
        raise PredicateError("Cannot read predicate file %s: %s" % (path, e))
    return predicate_from_dict(space, data)
