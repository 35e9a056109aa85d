class OperadError(Exception):
    """Base class for errors raised while building operads and morphisms."""


class SignatureError(OperadError):
    """Raised for a composition signature the operad does not carry.

    Args:
        signature: The offending ``(h, (i_1, ..., i_h))``.
    """

    def __init__(self, msg, signature=None):
        super().__init__(msg)
        self.msg = msg
        self.signature = signature


class TruncationOverflow(OperadError):
    """Raised when a result would leave the truncation profile."""

    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.msg = msg
        self.witness = witness


class MorphismError(OperadError):
    """Raised when morphisms do not fit together or are not equivariant."""


class NotReflexive(OperadError):
    """Raised when a pair of morphisms lacks a common section."""

    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.msg = msg
        self.witness = witness


class NonCommutingCocone(OperadError):
    """Raised when a target cocone does not commute with a diagram arrow.

    Args:
        arrow: Index of the arrow that fails.
        witness: Arity and basis vector where the two composites differ.
    """

    def __init__(self, msg, arrow=None, witness=None):
        super().__init__(msg)
        self.msg = msg
        self.arrow = arrow
        self.witness = witness
