class AlgebraError(Exception):
    """Base class for errors raised while building algebraic data."""


class FieldMismatch(AlgebraError):
    """Raised when two objects over different fields are combined."""

    def __init__(self, left, right):
        super().__init__('Field mismatch: {} vs {}.'.format(left, right))
        self.left = left
        self.right = right


class InvalidGradedSpace(AlgebraError):
    """Raised when a graded space violates one of its invariants.

    The witness is the name of the offending basis vector, when there is one.
    """

    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.msg = msg
        self.witness = witness


class InvalidLinearMap(AlgebraError):
    pass


class InvalidPermutation(AlgebraError):
    pass


class NotWellDefined(AlgebraError):
    """Raised when a structure fails to descend to a quotient."""

    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.msg = msg
        self.witness = witness


class NotInvertible(AlgebraError):
    pass
