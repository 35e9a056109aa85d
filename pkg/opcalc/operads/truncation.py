"""
The finiteness contract every computation runs under.
"""
import itertools

from .exception import SignatureError, TruncationOverflow

DEFAULT_MAX_ARITY = 4
DEFAULT_MIN_DEGREE = -2
DEFAULT_MAX_DEGREE = 2
DEFAULT_MAX_DEPTH = 3


class TruncationProfile:
    """
    Args:
        max_arity (int): N, the largest arity computed.
        min_degree, max_degree (int): Window for input degrees: generator
            degrees of a free operad and basis degrees of M for End(M).
            Components derived from them are computed exactly and may leave
            the window.
        max_depth (int): D, the largest number of vertices in a tree.
    """

    def __init__(self, max_arity=DEFAULT_MAX_ARITY, min_degree=DEFAULT_MIN_DEGREE,
                 max_degree=DEFAULT_MAX_DEGREE, max_depth=DEFAULT_MAX_DEPTH):
        if max_arity < 1:
            raise ValueError('max_arity must be at least 1, got %d.' % max_arity)
        if max_depth < 1:
            raise ValueError('max_depth must be at least 1, got %d.' % max_depth)
        if min_degree > max_degree:
            raise ValueError('Empty degree window [%d, %d].' % (min_degree, max_degree))
        self.max_arity = max_arity
        self.min_degree = min_degree
        self.max_degree = max_degree
        self.max_depth = max_depth

    def check_degree(self, degree, what):
        if not self.min_degree <= degree <= self.max_degree:
            raise TruncationOverflow(
                '%s has degree %d outside the window [%d, %d].'
                % (what, degree, self.min_degree, self.max_degree), what)

    def check_signature(self, h, inputs):
        if h < 1:
            raise SignatureError('Compositions with h = 0 are not supported.',
                                 (h, tuple(inputs)))
        if len(inputs) != h:
            raise SignatureError('Signature needs %d input arities.' % h,
                                 (h, tuple(inputs)))
        if any(i < 0 for i in inputs):
            raise SignatureError('Input arities must be nonnegative.',
                                 (h, tuple(inputs)))
        if h > self.max_arity or sum(inputs) > self.max_arity:
            raise SignatureError(
                'Signature (%d; %s) leaves arity %d.'
                % (h, ','.join(str(i) for i in inputs), self.max_arity),
                (h, tuple(inputs)))

    def signatures(self):
        """Every (h, (i_1, ..., i_h)) with 1 <= h <= N and sum(i) <= N."""
        for h in range(1, self.max_arity + 1):
            for inputs in itertools.product(range(self.max_arity + 1), repeat=h):
                if sum(inputs) <= self.max_arity:
                    yield h, inputs

    def with_changes(self, **kwargs):
        values = dict(max_arity=self.max_arity, min_degree=self.min_degree,
                      max_degree=self.max_degree, max_depth=self.max_depth)
        values.update(kwargs)
        return TruncationProfile(**values)

    def to_json(self):
        return {
            'max_arity': self.max_arity,
            'min_degree': self.min_degree,
            'max_degree': self.max_degree,
            'max_depth': self.max_depth,
        }

    def __eq__(self, other):
        return (isinstance(other, TruncationProfile) and
                self.to_json() == other.to_json())

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(tuple(sorted(self.to_json().items())))

    def __repr__(self):
        return ('TruncationProfile(max_arity={!r}, min_degree={!r}, '
                'max_degree={!r}, max_depth={!r})').format(
                    self.max_arity, self.min_degree, self.max_degree, self.max_depth)
