"""
Permutations of [n] in one-line notation.

Products compose as functions: ``tau * sigma`` applies sigma first. Right
actions follow x·(τσ) = (x·τ)·σ.
"""
import itertools
import random

from sympy.combinatorics import Permutation as _SympyPermutation

from .exception import InvalidPermutation
from .scalars import default_field

_MYPY = False
if _MYPY:
    import typing  # noqa: F401 # pylint: disable=import-error,unused-import,useless-suppression


class Permutation:
    """
    A bijection of {1, ..., n}.

    Args:
        images: The one-line notation sigma(1), ..., sigma(n).
    """

    __slots__ = ('images',)

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise InvalidPermutation(
                '%s is not a permutation of 1..%d.' % (list(images), len(images)))
        self.images = images

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n, i, j):
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = images[j - 1], images[i - 1]
        return cls(images)

    @property
    def size(self):
        return len(self.images)

    def __len__(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i - 1]

    def compose(self, other):
        """``self`` after ``other``."""
        if other.size != self.size:
            raise InvalidPermutation(
                'Cannot compose permutations of %d and %d letters.'
                % (self.size, other.size))
        return Permutation(self.images[i - 1] for i in other.images)

    __mul__ = compose

    def inverse(self):
        inv = [0] * self.size
        for i, image in enumerate(self.images, 1):
            inv[image - 1] = i
        return Permutation(inv)

    def is_identity(self):
        return all(i == image for i, image in enumerate(self.images, 1))

    def inversions(self):
        n = self.size
        return sum(1 for a in range(n) for b in range(a + 1, n)
                   if self.images[a] > self.images[b])

    def parity(self):
        if self.size < 2:
            return 0
        signature = _SympyPermutation([i - 1 for i in self.images]).signature()
        return 0 if signature == 1 else 1

    def sign(self, field=None):
        field = field or default_field()
        return field.sign(self.parity())

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __lt__(self, other):
        return (self.size, self.images) < (other.size, other.images)

    def __hash__(self):
        return hash(self.images)

    def __str__(self):
        return '[%s]' % ','.join(str(i) for i in self.images)

    def __repr__(self):
        return 'Permutation({!r})'.format(list(self.images))


def sign(sigma, field=None):
    """(-1)^(number of inversions) as a scalar."""
    return sigma.sign(field)


def all_permutations(n):
    """Every permutation of [n], in lexicographic order."""
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def adjacent_transpositions(n):
    """The Coxeter generators (i i+1) of the symmetric group on n letters."""
    return [Permutation.transposition(n, i, i + 1) for i in range(1, n)]


def random_permutation(n, rng):
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Permutation(images)


def spot_check_permutations(n, count, seed=0):
    """``count`` seeded random permutations of [n]."""
    rng = random.Random('%d:%d' % (seed, n))
    return [random_permutation(n, rng) for _ in range(count)]


def block_permutation(sigma, blocks):
    """
    The permutation of sum(blocks) letters that moves the j-th consecutive
    block, of length ``blocks[j-1]``, intact into slot sigma(j).
    """
    blocks = tuple(blocks)
    if len(blocks) != sigma.size:
        raise InvalidPermutation(
            'Expected %d block lengths for %s, got %d.'
            % (sigma.size, sigma, len(blocks)))
    if any(b < 0 for b in blocks):
        raise InvalidPermutation('Block lengths must be nonnegative.')
    h = sigma.size
    inverse = sigma.inverse()
    # Starting position of the block that lands in each slot.
    slot_start = {}
    position = 0
    for slot in range(1, h + 1):
        slot_start[slot] = position
        position += blocks[inverse(slot) - 1]
    images = []
    for j in range(1, h + 1):
        start = slot_start[sigma(j)]
        images.extend(start + r + 1 for r in range(blocks[j - 1]))
    return Permutation(images)


def block_starts(blocks):
    starts = []
    position = 0
    for b in blocks:
        starts.append(position)
        position += b
    return starts


def direct_sum(*taus):
    """tau_1 ⊕ ... ⊕ tau_h: acts as tau_j inside the j-th block."""
    images = []
    offset = 0
    for tau in taus:
        images.extend(offset + i for i in tau.images)
        offset += tau.size
    return Permutation(images)
