class BVQueryException(Exception):
    '''Root of every domain error raised by bvquery'''
    pass


class FormulaSyntaxError(BVQueryException):
    '''Exception thrown when formula text does not match the grammar'''

    def __init__(self, message, text="", position=0, line=1, column=1):
        super(FormulaSyntaxError, self).__init__(
            "%s (line %d, column %d)" % (message, line, column))
        self.text = text
        self.position = position
        self.line = line
        self.column = column


class SignatureError(BVQueryException):
    '''Exception thrown for duplicate symbol names or non-positive arities'''
    pass


class UnknownSymbolError(BVQueryException):
    '''Exception thrown when a formula names a symbol outside the signature'''
    pass


class ArityError(BVQueryException):
    '''Exception thrown when a symbol is applied to the wrong number of args'''
    pass


class TheoryFileError(BVQueryException):
    '''Exception thrown for a malformed theory file line'''

    def __init__(self, message, line=0):
        if line > 0:
            message = "line %d: %s" % (line, message)
        super(TheoryFileError, self).__init__(message)
        self.line = line


class UnassignedVariableError(BVQueryException):
    pass


class ResourceLimitError(BVQueryException):
    '''Exception thrown when a search would exceed its configured cap'''
    pass


class EnumerationError(BVQueryException):
    pass


class PermutationError(BVQueryException):
    pass


class PredicateError(BVQueryException):
    pass


class SpaceMismatchError(BVQueryException):
    '''Exception thrown when an object was built against a different space'''
    pass


class FibreExhaustedError(BVQueryException):
    '''Exception thrown when an enumeration fibre has no free index left'''

    def __init__(self, element, message=None):
        super(FibreExhaustedError, self).__init__(
            message or "fibre of element %d is exhausted" % element)
        self.element = element


class PatternMismatchError(BVQueryException):
    pass


class StructureError(BVQueryException):
    '''Exception thrown for tables outside the domain or partial functions'''
    pass


class IndexRangeError(BVQueryException):
    '''Exception thrown for an index outside {0, ..., K-1}'''
    pass


class ConfigError(BVQueryException):
    '''Exception thrown for unreadable or inconsistent run configuration'''
    pass


class UsageError(BVQueryException):
    '''Exception thrown for command lines argparse rejects'''
    pass
