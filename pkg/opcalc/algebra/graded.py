"""
Graded vector spaces with differential and (co)augmentation, linear maps
between them, tensor products and hom-spaces with Koszul signs.
"""
import itertools
import logging
from collections import OrderedDict

from .exception import (
    InvalidGradedSpace,
    InvalidLinearMap,
)
from .scalars import default_field
from .vectors import (
    add_into,
    combine,
    difference,
    scaled,
)

_MYPY = False
if _MYPY:
    import typing  # noqa: F401 # pylint: disable=import-error,unused-import,useless-suppression

logger = logging.getLogger('opcalc.algebra.graded')

TENSOR = '⊗'


def koszul_sign(p, q, field=None):
    """(-1)^(p*q) in the given field (F101 when omitted)."""
    field = field or default_field()
    return field.sign(p * q)


def shuffle_parity(degrees, positions):
    """
    Parity of the Koszul sign for moving graded factors.

    Args:
        degrees: Degree of each factor, in its original order.
        positions: ``positions[a]`` is the new (0-based) slot of factor a.
    """
    parity = 0
    n = len(degrees)
    for a in range(n):
        if degrees[a] % 2 == 0:
            continue
        for b in range(a + 1, n):
            if positions[a] > positions[b] and degrees[b] % 2:
                parity ^= 1
    return parity


def koszul_shuffle_sign(degrees, positions, field=None):
    field = field or default_field()
    return field.sign(shuffle_parity(degrees, positions))


class GradedSpace:
    """
    A finite-dimensional graded vector space over an exact field.

    The basis order is the order given; constructors in this package produce
    deterministic orders. Vectors are sparse dicts keyed by basis index.

    Args:
        field (opcalc.algebra.scalars.Field): Ground field.
        basis: Sequence of ``(name, degree)`` pairs.
        differential: Optional sequence with one sparse column per basis
            vector; omitted means the zero differential.
        augmentation: Optional dict index -> scalar describing eps: V -> F.
        coaugmentation: Optional sparse vector, the image of 1 under F -> V.
        keys: Optional hashable keys, one per basis vector. Defaults to the
            names.
    """

    def __init__(self, field, basis, differential=None, augmentation=None,
                 coaugmentation=None, keys=None, validate=True):
        self.field = field
        self.names = tuple(name for name, _ in basis)
        self.degrees = tuple(int(degree) for _, degree in basis)
        self.keys = tuple(keys) if keys is not None else self.names
        if len(self.keys) != len(self.names):
            raise InvalidGradedSpace('Expected one key per basis vector.')
        self._index = {key: i for i, key in enumerate(self.keys)}
        if len(self._index) != len(self.keys):
            raise InvalidGradedSpace('Basis keys must be distinct.')
        if differential is None:
            self.differential = None
        else:
            self.differential = tuple(
                {i: c for i, c in col.items() if c} for col in differential)
            if len(self.differential) != self.dim:
                raise InvalidGradedSpace(
                    'Differential needs one column per basis vector.')
            if not any(self.differential):
                self.differential = None
        self.augmentation = (
            None if augmentation is None
            else {i: c for i, c in augmentation.items() if c})
        self.coaugmentation = (
            None if coaugmentation is None
            else {i: c for i, c in coaugmentation.items() if c})
        if validate:
            self.validate()

    @classmethod
    def from_dims(cls, field, dims, prefix='e'):
        """A space with ``dims[degree]`` anonymous basis vectors per degree."""
        basis = []
        for degree in sorted(dims):
            for k in range(dims[degree]):
                basis.append(('%s%d_%d' % (prefix, degree, k), degree))
        return cls(field, basis)

    @classmethod
    def unit(cls, field, name='1'):
        """The ground field as a DGA-module: one vector in degree 0."""
        one = {0: field.one}
        return cls(field, [(name, 0)], augmentation=one, coaugmentation=one,
                   keys=[()])

    @classmethod
    def zero(cls, field):
        return cls(field, [])

    @property
    def dim(self):
        return len(self.names)

    def __len__(self):
        return len(self.names)

    def index(self, key):
        return self._index[key]

    def has_key(self, key):
        return key in self._index

    def degree_of(self, i):
        return self.degrees[i]

    def basis_vector(self, i):
        return {i: self.field.one}

    def graded_piece(self, degree):
        return [i for i, d in enumerate(self.degrees) if d == degree]

    def dims_by_degree(self):
        counts = OrderedDict()
        for d in sorted(set(self.degrees)):
            counts[d] = self.degrees.count(d)
        return counts

    def vector_degree(self, vec):
        """The degree of a nonzero homogeneous vector, or None."""
        degrees = {self.degrees[i] for i in vec}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def homogeneous_parts(self, vec):
        parts = OrderedDict()
        for i in sorted(vec):
            parts.setdefault(self.degrees[i], {})[i] = vec[i]
        return list(parts.values())

    def diff_basis(self, i):
        if self.differential is None:
            return {}
        return self.differential[i]

    def diff(self, vec):
        if self.differential is None:
            return {}
        return combine((c, self.differential[i]) for i, c in vec.items())

    def augment(self, vec):
        if self.augmentation is None:
            return None
        total = self.field.zero
        for i, c in vec.items():
            if i in self.augmentation:
                total += c * self.augmentation[i]
        return total

    def format_vector(self, vec):
        """Renders a sparse vector as a list of [coefficient, name] pairs."""
        return [[self.field.to_json(c), self.names[i]]
                for i, c in sorted(vec.items())]

    def validate(self):
        """
        Checks the DGA-module invariants, raising InvalidGradedSpace with the
        offending basis vector.
        """
        if self.differential is not None:
            for i, col in enumerate(self.differential):
                for j in col:
                    if j < 0 or j >= self.dim:
                        raise InvalidGradedSpace(
                            'Differential of %s leaves the space.' % self.names[i],
                            self.names[i])
                    if self.degrees[j] != self.degrees[i] - 1:
                        raise InvalidGradedSpace(
                            'Differential of %s does not lower degree by 1.'
                            % self.names[i], self.names[i])
            for i in range(self.dim):
                if self.diff(self.differential[i]):
                    raise InvalidGradedSpace(
                        'd(d(%s)) is not zero.' % self.names[i], self.names[i])
        if self.augmentation is not None:
            for i in self.augmentation:
                if self.degrees[i] != 0:
                    raise InvalidGradedSpace(
                        'Augmentation is nonzero on %s, which has degree %d.'
                        % (self.names[i], self.degrees[i]), self.names[i])
            if self.differential is not None:
                for i in range(self.dim):
                    if self.augment(self.differential[i]):
                        raise InvalidGradedSpace(
                            'Augmentation does not vanish on d(%s).' % self.names[i],
                            self.names[i])
        if self.coaugmentation is not None:
            for i in self.coaugmentation:
                if self.degrees[i] != 0:
                    raise InvalidGradedSpace(
                        'Coaugmentation has a component of degree %d.'
                        % self.degrees[i], self.names[i])
            if self.diff(self.coaugmentation):
                raise InvalidGradedSpace('Coaugmentation is not a cycle.')
        if self.augmentation is not None and self.coaugmentation is not None:
            if self.augment(self.coaugmentation) != self.field.one:
                raise InvalidGradedSpace(
                    'Augmentation after coaugmentation is not the identity of %s.'
                    % self.field.name)

    def same_shape(self, other):
        return (self.field == other.field and
                self.keys == other.keys and
                self.degrees == other.degrees)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, GradedSpace):
            return NotImplemented
        return (self.same_shape(other) and
                (self.differential or ()) == (other.differential or ()))

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.field, self.keys, self.degrees))

    def __repr__(self):
        return 'GradedSpace({}, dims={})'.format(
            self.field.name, dict(self.dims_by_degree()))


class TensorSpace(GradedSpace):
    """
    The tensor product of finitely many graded spaces. Basis tuples are
    ordered lexicographically, left factor slowest.
    """

    def __init__(self, field, factors):
        self.factors = tuple(factors)
        self.factor_dims = tuple(f.dim for f in self.factors)
        strides = []
        stride = 1
        for d in reversed(self.factor_dims):
            strides.append(stride)
            stride *= d
        self._strides = tuple(reversed(strides))
        tuples = list(itertools.product(*[range(d) for d in self.factor_dims]))
        self._tuples = tuples
        basis = []
        keys = []
        for t in tuples:
            name = TENSOR.join(f.names[i] for f, i in zip(self.factors, t)) or '1'
            degree = sum(f.degrees[i] for f, i in zip(self.factors, t))
            basis.append((name, degree))
            keys.append(tuple(f.keys[i] for f, i in zip(self.factors, t)))
        differential = None
        if any(f.differential is not None for f in self.factors):
            differential = [self._tensor_diff(field, t) for t in tuples]
        augmentation = None
        if all(f.augmentation is not None for f in self.factors):
            augmentation = {}
            for idx, t in enumerate(tuples):
                value = field.one
                for f, i in zip(self.factors, t):
                    value = value * f.augmentation.get(i, field.zero)
                if value:
                    augmentation[idx] = value
        coaugmentation = None
        if all(f.coaugmentation is not None for f in self.factors):
            coaugmentation = self.tensor_vectors(
                [f.coaugmentation for f in self.factors], field)
        super().__init__(field, basis, differential=differential,
                         augmentation=augmentation,
                         coaugmentation=coaugmentation, keys=keys,
                         validate=False)

    def index_of(self, t):
        return sum(i * s for i, s in zip(t, self._strides))

    def tuple_of(self, index):
        return self._tuples[index]

    def tensor_vectors(self, vecs, field=None):
        """The elementary tensor of sparse vectors, without signs."""
        field = field or self.field
        out = {}
        items = [sorted(v.items()) for v in vecs]
        for combo in itertools.product(*items):
            coeff = field.one
            t = []
            for i, c in combo:
                coeff = coeff * c
                t.append(i)
            if coeff:
                add_into(out, {self.index_of(t): coeff})
        return out

    def _tensor_diff(self, field, t):
        out = {}
        prefix_degree = 0
        for j, f in enumerate(self.factors):
            col = f.diff_basis(t[j])
            if col:
                sign = field.sign(prefix_degree)
                for i, c in col.items():
                    t2 = t[:j] + (i,) + t[j + 1:]
                    add_into(out, {self.index_of(t2): sign * c})
            prefix_degree += f.degrees[t[j]]
        return out


def tensor_spaces(*spaces, field=None):
    """
    The n-fold tensor product. With no factors the result is the unit
    space, so ``field`` must then be given.
    """
    if not spaces:
        if field is None:
            raise InvalidGradedSpace('The empty tensor product needs a field.')
        return TensorSpace(field, ())
    field = spaces[0].field
    for s in spaces[1:]:
        field.check_same(s.field)
    return TensorSpace(field, spaces)


def tensor_space(a, b):
    return tensor_spaces(a, b)


class LinearMap:
    """
    A homogeneous linear map stored as sparse columns, one per source basis
    vector.

    Args:
        source (GradedSpace): Domain.
        target (GradedSpace): Codomain.
        degree (int): Degree of the map.
        columns: Sequence of sparse vectors in the target.
    """

    def __init__(self, source, target, degree, columns, validate=True):
        source.field.check_same(target.field)
        self.source = source
        self.target = target
        self.degree = degree
        self.field = source.field
        self.columns = tuple({i: c for i, c in col.items() if c} for col in columns)
        if len(self.columns) != source.dim:
            raise InvalidLinearMap(
                'Expected %d columns, got %d.' % (source.dim, len(self.columns)))
        if validate:
            self.validate()

    @classmethod
    def from_function(cls, source, target, degree, fn, validate=True):
        return cls(source, target, degree, [fn(i) for i in range(source.dim)],
                   validate=validate)

    @classmethod
    def identity(cls, space):
        return cls(space, space, 0,
                   [{i: space.field.one} for i in range(space.dim)],
                   validate=False)

    @classmethod
    def zero(cls, source, target, degree=0):
        return cls(source, target, degree, [{} for _ in range(source.dim)],
                   validate=False)

    def validate(self):
        for i, col in enumerate(self.columns):
            for j in col:
                if j < 0 or j >= self.target.dim:
                    raise InvalidLinearMap(
                        'Column %s has an entry outside the target.'
                        % self.source.names[i])
                if self.target.degrees[j] != self.source.degrees[i] + self.degree:
                    raise InvalidLinearMap(
                        'Image of %s is not in degree %d.'
                        % (self.source.names[i], self.source.degrees[i] + self.degree))

    def __call__(self, vec):
        return combine((c, self.columns[i]) for i, c in vec.items())

    def compose(self, other):
        """``self`` after ``other``."""
        if not other.target.same_shape(self.source):
            raise InvalidLinearMap('Maps are not composable.')
        return LinearMap(other.source, self.target, self.degree + other.degree,
                         [self(col) for col in other.columns], validate=False)

    def __add__(self, other):
        self._check_parallel(other)
        return LinearMap(self.source, self.target, self.degree,
                         [add_into(dict(a), b)
                          for a, b in zip(self.columns, other.columns)],
                         validate=False)

    def __sub__(self, other):
        self._check_parallel(other)
        return LinearMap(self.source, self.target, self.degree,
                         [difference(a, b)
                          for a, b in zip(self.columns, other.columns)],
                         validate=False)

    def __neg__(self):
        return self.scaled(-self.field.one)

    def scaled(self, coeff):
        return LinearMap(self.source, self.target, self.degree,
                         [scaled(col, coeff) for col in self.columns],
                         validate=False)

    def _check_parallel(self, other):
        if not (self.source.same_shape(other.source) and
                self.target.same_shape(other.target) and
                self.degree == other.degree):
            raise InvalidLinearMap('Maps are not parallel.')

    def is_zero(self):
        return not any(self.columns)

    def is_identity(self):
        if not self.source.same_shape(self.target) or self.degree != 0:
            return False
        one = self.field.one
        return all(col == {i: one} for i, col in enumerate(self.columns))

    def first_difference(self, other):
        """Index of the first source basis vector where the maps differ."""
        for i, (a, b) in enumerate(zip(self.columns, other.columns)):
            if a != b:
                return i
        return None

    def to_rows(self):
        zero = self.field.zero
        rows = [[zero] * self.source.dim for _ in range(self.target.dim)]
        for i, col in enumerate(self.columns):
            for j, c in col.items():
                rows[j][i] = c
        return rows

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return (self.source.same_shape(other.source) and
                self.target.same_shape(other.target) and
                self.degree == other.degree and
                self.columns == other.columns)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None  # type: ignore

    def __repr__(self):
        return 'LinearMap({}x{}, degree={})'.format(
            self.target.dim, self.source.dim, self.degree)


def tensor_maps(*maps, field=None):
    """
    (f1 ⊗ ... ⊗ fk)(x1 ⊗ ... ⊗ xk) = ±f1(x1) ⊗ ... ⊗ fk(xk), where fj picks up
    (-1)^(|fj| * (|x1| + ... + |x(j-1)|)).
    """
    if not maps:
        unit = tensor_spaces(field=field)
        return LinearMap.identity(unit)
    fld = maps[0].field
    for f in maps[1:]:
        fld.check_same(f.field)
    source = tensor_spaces(*[f.source for f in maps])
    target = tensor_spaces(*[f.target for f in maps])
    degree = sum(f.degree for f in maps)

    def column(idx):
        t = source.tuple_of(idx)
        prefix = 0
        parity = 0
        for f, i in zip(maps, t):
            parity += f.degree * prefix
            prefix += f.source.degrees[i]
        images = [f.columns[i] for f, i in zip(maps, t)]
        if not all(images):
            return {}
        return scaled(target.tensor_vectors(images), fld.sign(parity))

    return LinearMap.from_function(source, target, degree, column, validate=False)


def tensor_map(f, g):
    return tensor_maps(f, g)


class HomSpace(GradedSpace):
    """
    Hom(M^{⊗n}, N): spanned by elementary maps sending one basis tensor of
    M^{⊗n} to one basis vector of N and every other basis tensor to zero.
    Basis order is by source tuple, then target vector.
    """

    def __init__(self, m, n, target):
        m.field.check_same(target.field)
        self.m = m
        self.arity = n
        self.source_tensor = tensor_spaces(*([m] * n), field=m.field)
        self.target = target
        st = self.source_tensor
        basis = []
        keys = []
        for s in range(st.dim):
            for t in range(target.dim):
                name = '(%s->%s)' % (st.names[s], target.names[t])
                basis.append((name, target.degrees[t] - st.degrees[s]))
                keys.append((st.keys[s], target.keys[t]))
        differential = None
        if st.differential is not None or target.differential is not None:
            incoming = [dict() for _ in range(st.dim)]
            for s2 in range(st.dim):
                for s, c in st.diff_basis(s2).items():
                    incoming[s][s2] = c
            differential = []
            for s in range(st.dim):
                for t in range(target.dim):
                    degree = target.degrees[t] - st.degrees[s]
                    col = {}
                    for t2, c in target.diff_basis(t).items():
                        add_into(col, {self.elementary_index(s, t2): c})
                    sign = -m.field.sign(degree)
                    for s2, c in incoming[s].items():
                        add_into(col, {self.elementary_index(s2, t): sign * c})
                    differential.append(col)
        super().__init__(m.field, basis, differential=differential, keys=keys,
                         validate=False)

    def elementary_index(self, s, t):
        return s * self.target.dim + t

    def elementary(self, index):
        """Returns ``(source tuple index, target index)``."""
        return divmod(index, self.target.dim)


def hom_space(m, n, target):
    return HomSpace(m, n, target)


def is_chain_map(f):
    """Checks d∘f = (-1)^|f| f∘d exactly."""
    sign = f.field.sign(f.degree)
    for i in range(f.source.dim):
        left = f.target.diff(f.columns[i])
        right = scaled(f(f.source.diff_basis(i)), sign)
        if left != right:
            return False
    return True


def direct_sum_spaces(spaces, field=None):
    """
    Direct sum with basis keys ``(summand index, key)``. Returns the space
    and the per-summand index offsets.
    """
    if not spaces:
        return GradedSpace.zero(field), []
    field = spaces[0].field
    basis = []
    keys = []
    offsets = []
    differential = []
    has_diff = False
    for k, s in enumerate(spaces):
        field.check_same(s.field)
        offset = len(basis)
        offsets.append(offset)
        for i in range(s.dim):
            basis.append((s.names[i] if len(spaces) == 1 else
                          '%s@%d' % (s.names[i], k), s.degrees[i]))
            keys.append((k, s.keys[i]))
            col = s.diff_basis(i)
            if col:
                has_diff = True
            differential.append({j + offset: c for j, c in col.items()})
    space = GradedSpace(field, basis, differential=differential if has_diff else None,
                        keys=keys, validate=False)
    return space, offsets
