"""
Exact linear algebra over sparse vectors: row reduction, ranks, quotients by
spans, inverses and reflexive pairs of linear maps.

Ranks and inverses go through sympy's DomainMatrix over the field's domain.
RowReducer keeps an echelon basis that grows one vector at a time, which the
ideal closures and quotients need for membership tests and representatives.
"""
import logging

from sympy.polys.matrices import DomainMatrix

from .exception import (
    InvalidLinearMap,
    NotInvertible,
    NotWellDefined,
)
from .graded import GradedSpace, LinearMap
from .vectors import add_into, remapped, scaled

_MYPY = False
if _MYPY:
    import typing  # noqa: F401 # pylint: disable=import-error,unused-import,useless-suppression

logger = logging.getLogger('opcalc.algebra.linalg')


class RowReducer:
    """
    Incrementally maintains a reduced row echelon basis of a span.

    Each stored row is normalized so that its pivot, the largest index in
    its support, has coefficient one, and no other stored row has an entry
    at that pivot. Reducing a vector therefore only ever touches pivots.
    """

    def __init__(self, field):
        self.field = field
        self.rows = {}  # type: typing.Dict[int, typing.Dict[int, typing.Any]]

    def reduce(self, vec):
        out = dict(vec)
        for p in [p for p in out if p in self.rows]:
            c = out.get(p)
            if c:
                add_into(out, self.rows[p], -c)
        return out

    def add(self, vec):
        """Adds a vector to the span. Returns True if the rank grew."""
        r = self.reduce(vec)
        if not r:
            return False
        p = max(r)
        r = scaled(r, self.field.one / r[p])
        for q, row in self.rows.items():
            c = row.get(p)
            if c:
                self.rows[q] = add_into(dict(row), r, -c)
        self.rows[p] = r
        return True

    def extend(self, vecs):
        for v in vecs:
            self.add(v)
        return self

    def contains(self, vec):
        return not self.reduce(vec)

    @property
    def rank(self):
        return len(self.rows)

    @property
    def pivots(self):
        return sorted(self.rows)

    def basis(self):
        return [self.rows[p] for p in sorted(self.rows)]


def _domain_matrix(rows, width, field):
    return DomainMatrix(rows, (len(rows), width), field.domain)


def rank(vectors, field):
    """The rank of the span of sparse vectors."""
    vectors = [v for v in vectors if v]
    if not vectors:
        return 0
    width = max(max(v) for v in vectors) + 1
    rows = [[v.get(j, field.zero) for j in range(width)] for v in vectors]
    return _domain_matrix(rows, width, field).rank()


class Quotient:
    """
    V/W for a graded subspace W of V.

    Basis vectors of V that are not pivots of W's echelon basis survive as
    representatives, so the earliest basis elements are kept. Iterating a
    Quotient yields ``(space, projection, section)``.
    """

    def __init__(self, source, reducer, space, projection, section):
        self.source = source
        self.reducer = reducer
        self.space = space
        self.projection = projection
        self.section = section
        self.representatives = tuple(
            i for i in range(source.dim) if i not in reducer.rows)

    def __iter__(self):
        return iter((self.space, self.projection, self.section))

    def project(self, vec):
        return self.projection(vec)

    def lift(self, vec):
        return self.section(vec)

    def in_kernel(self, vec):
        return self.reducer.contains(vec)

    def kernel_basis(self):
        return self.reducer.basis()

    def __repr__(self):
        return 'Quotient({} -> {})'.format(self.source.dim, self.space.dim)


def subspace_quotient(space, spanning_vectors, name_prefix=None):
    """
    Quotients ``space`` by the smallest graded subspace containing the given
    vectors. Inhomogeneous vectors contribute each of their homogeneous parts.

    Raises NotWellDefined when the subspace is not closed under the
    differential. The augmentation descends only if it vanishes on the
    subspace; otherwise the quotient has none.
    """
    field = space.field
    reducer = RowReducer(field)
    for vec in spanning_vectors:
        for part in space.homogeneous_parts(vec):
            reducer.add(part)
    if space.differential is not None:
        for p, row in sorted(reducer.rows.items()):
            if reducer.reduce(space.diff(row)):
                raise NotWellDefined(
                    'Subspace is not closed under the differential: '
                    'd of the relation at %s escapes it.' % space.names[p],
                    space.names[p])
    keep = [i for i in range(space.dim) if i not in reducer.rows]
    position = {i: k for k, i in enumerate(keep)}

    def project(vec):
        return remapped(reducer.reduce(vec), position)

    basis = [((name_prefix or '') + space.names[i], space.degrees[i]) for i in keep]
    keys = [space.keys[i] for i in keep]
    differential = None
    if space.differential is not None:
        differential = [project(space.diff_basis(i)) for i in keep]
    augmentation = None
    if space.augmentation is not None:
        if all(not space.augment(row) for row in reducer.rows.values()):
            augmentation = {position[i]: c for i, c in space.augmentation.items()
                            if i in position}
        else:
            logger.debug('Augmentation does not vanish on the subspace; dropped.')
    coaugmentation = None
    if space.coaugmentation is not None:
        coaugmentation = project(space.coaugmentation)
    quotient = GradedSpace(field, basis, differential=differential,
                           augmentation=augmentation,
                           coaugmentation=coaugmentation, keys=keys,
                           validate=False)
    projection = LinearMap(space, quotient, 0,
                           [project({i: field.one}) for i in range(space.dim)],
                           validate=False)
    section = LinearMap(quotient, space, 0,
                        [{i: field.one} for i in keep], validate=False)
    logger.debug('Quotient of a %d-dimensional space by a rank %d subspace.',
                 space.dim, reducer.rank)
    return Quotient(space, reducer, quotient, projection, section)


def image_vectors(f):
    return [col for col in f.columns if col]


def map_rank(f):
    return rank(f.columns, f.field)


def invert(f):
    """The inverse of a bijective linear map."""
    n = f.source.dim
    if f.target.dim != n:
        raise NotInvertible(
            'A %dx%d map is not invertible.' % (f.target.dim, n))
    if map_rank(f) != n:
        raise NotInvertible('Map has rank %d below %d.' % (map_rank(f), n))
    field = f.field
    columns = [{} for _ in range(n)]
    if n:
        inverse = _domain_matrix(f.to_rows(), n, field).inv().to_Matrix()
        for s in range(n):
            for t in range(n):
                c = field.domain.from_sympy(inverse[s, t])
                if c:
                    columns[t][s] = c
    return LinearMap(f.target, f.source, -f.degree, columns, validate=False)


class LinearReflexivePair:
    """
    Two parallel maps ``f, g: A -> B`` of DGA-modules with a common section
    ``s: B -> A`` (f∘s = g∘s = 1).
    """

    def __init__(self, f, g, s):
        if not (f.source.same_shape(g.source) and f.target.same_shape(g.target)):
            raise InvalidLinearMap('Reflexive pair maps are not parallel.')
        if not (s.source.same_shape(f.target) and s.target.same_shape(f.source)):
            raise InvalidLinearMap('Section has the wrong shape.')
        for name, m in (('f', f), ('g', g)):
            if not m.compose(s).is_identity():
                raise InvalidLinearMap('%s∘s is not the identity.' % name)
        self.f = f
        self.g = g
        self.s = s

    @property
    def source(self):
        return self.f.source

    @property
    def target(self):
        return self.f.target

    def coequalizer(self):
        return subspace_quotient(self.target, (self.f - self.g).columns)

    def __repr__(self):
        return 'LinearReflexivePair({!r}, {!r}, {!r})'.format(self.f, self.g, self.s)
