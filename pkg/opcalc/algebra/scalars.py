"""
Exact scalar fields.

A Field wraps a sympy domain, either ``GF(p)`` for a prime p or ``QQ``. Scalars
are the domain's own elements; they are never floats.
"""
import re

from sympy import isprime
from sympy.polys.domains import GF, QQ

from .exception import FieldMismatch

_FIELD_RE = re.compile(r'^(?:F|GF|F_)(\d+)$')

DEFAULT_FIELD_NAME = 'F101'


class Field:
    """
    An exact field. Instances compare equal when they describe the same field.

    Args:
        name (str): ``'Q'`` or ``'F<p>'``.
    """

    def __init__(self, name):
        assert isinstance(name, str), type(name)
        if name in ('Q', 'QQ'):
            self.name = 'Q'
            self.characteristic = 0
            self.domain = QQ
        else:
            m = _FIELD_RE.match(name)
            if not m:
                raise ValueError('Unknown field %r: use Q or F<p>.' % name)
            p = int(m.group(1))
            if not isprime(p):
                raise ValueError('F%d is not a field: %d is not prime.' % (p, p))
            self.name = 'F%d' % p
            self.characteristic = p
            self.domain = GF(p)
        self.zero = self.domain.zero
        self.one = self.domain.one

    def __call__(self, value):
        """Converts an int (or a scalar of this field) into a scalar."""
        if isinstance(value, int):
            return self.domain(value)
        return self.domain.convert(value)

    def fraction(self, numerator, denominator):
        if denominator == 0:
            raise ZeroDivisionError('Zero denominator in %d/%d.' % (numerator, denominator))
        if self.characteristic and denominator % self.characteristic == 0:
            raise ZeroDivisionError(
                '%d is not invertible in %s.' % (denominator, self.name))
        return self(numerator) / self(denominator)

    def sign(self, exponent):
        """(-1)**exponent as a scalar."""
        return self.one if exponent % 2 == 0 else -self.one

    def check_same(self, other):
        if self != other:
            raise FieldMismatch(self, other)

    def to_json(self, value):
        """Renders a scalar as an int when integral, otherwise as "p/q"."""
        expr = self.domain.to_sympy(value)
        if expr.is_Integer:
            return int(expr)
        return str(expr)

    def format(self, value):
        return str(self.to_json(value))

    def __eq__(self, other):
        return isinstance(other, Field) and self.name == other.name

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return 'Field({!r})'.format(self.name)


def default_field():
    return Field(DEFAULT_FIELD_NAME)
