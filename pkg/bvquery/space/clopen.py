from bvquery.exceptions import SpaceMismatchError
from bvquery.utils import iter_bits, popcount


class ClopenSet(object):

    """
    A subset of the points of a space, kept as an integer bit vector over
    point indices. `size` is the number of points in the whole space.
    """

    __slots__ = ("bits", "size")

    def __init__(self, bits, size):
        if bits < 0 or bits >> size:
            raise SpaceMismatchError("Bits outside a space of %d points" % size)
        self.bits = bits
        self.size = size

    @classmethod
    def empty(cls, size):
        return cls(0, size)

    @classmethod
    def full(cls, size):
        return cls((1 << size) - 1, size)

    @classmethod
    def from_indices(cls, indices, size):
        bits = 0
        for i in indices:
            if not 0 <= i < size:
                raise SpaceMismatchError(
                    "Point %d outside a space of %d points" % (i, size))
            bits |= 1 << i
        return cls(bits, size)

    def _same(self, other):
        if self.size != other.size:
            raise SpaceMismatchError(
                "Clopen sets from spaces of %d and %d points" % (
                    self.size, other.size))

    def __and__(self, other):
        self._same(other)
        return ClopenSet(self.bits & other.bits, self.size)

    def __or__(self, other):
        self._same(other)
        return ClopenSet(self.bits | other.bits, self.size)

    def __sub__(self, other):
        self._same(other)
        return ClopenSet(self.bits & ~other.bits, self.size)

    def __invert__(self):
        return ClopenSet(((1 << self.size) - 1) ^ self.bits, self.size)

    complement = __invert__

    def __le__(self, other):
        self._same(other)
        return self.bits & ~other.bits == 0

    issubset = __le__

    def __eq__(self, other):
        if not isinstance(other, ClopenSet):
            return NotImplemented
        return self.size == other.size and self.bits == other.bits

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.bits, self.size))

    def __contains__(self, index):
        return 0 <= index < self.size and bool(self.bits >> index & 1)

    def __len__(self):
        return popcount(self.bits)

    def __iter__(self):
        return iter_bits(self.bits)

    def __bool__(self):
        return self.bits != 0

    def is_full(self):
        return self.bits == (1 << self.size) - 1

    def members(self):
        return list(iter_bits(self.bits))

    def __repr__(self):
        return "ClopenSet(%r of %d)" % (self.members(), self.size)
