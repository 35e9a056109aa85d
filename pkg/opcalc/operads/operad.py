"""
Operads in DGA-modules, given by a Σ-module, a unit and composition maps,
and the morphisms between them.
"""
import itertools
import logging
from collections import OrderedDict

from opcalc.algebra.graded import LinearMap, tensor_spaces
from opcalc.algebra.smodule import SModuleMap
from opcalc.algebra.vectors import add_into

from .exception import MorphismError, TruncationOverflow

_MYPY = False
if _MYPY:
    import typing  # noqa: F401 # pylint: disable=import-error,unused-import,useless-suppression

logger = logging.getLogger('opcalc.operads.operad')


def expand(vectors):
    """
    Multilinear expansion of a tensor of sparse vectors: yields
    ``(coefficient, index tuple)`` for every nonzero basis tensor.
    """
    assert vectors, 'Nothing to expand.'
    for combo in itertools.product(*[sorted(v.items()) for v in vectors]):
        coeff = combo[0][1]
        for _, c in combo[1:]:
            coeff = coeff * c
        if coeff:
            yield coeff, tuple(i for i, _ in combo)


class Operad:
    """
    An operad truncated at ``trunc.max_arity``.

    Args:
        smodule (opcalc.algebra.smodule.SModule): The components P(n) with
            their right actions.
        unit: Sparse vector in P(1), the image of 1 under η.
        compose_rule: ``(h, inputs, idx) -> (vector, overflow)`` where
            ``idx = (a, b_1, ..., b_h)`` are basis indices of P(h) and the
            P(i_j), and the vector lies in P(sum(inputs)). ``overflow`` is True
            when the composite was cut off by the truncation.
        trunc (TruncationProfile): Finiteness contract.
        exact (bool): False when composites may be cut off.
    """

    def __init__(self, smodule, unit, compose_rule, trunc, name=None, exact=True):
        if smodule.max_arity != trunc.max_arity:
            raise TruncationOverflow(
                'Σ-module is truncated at %d, profile at %d.'
                % (smodule.max_arity, trunc.max_arity))
        self.smodule = smodule
        self.field = smodule.field
        self.unit = dict(unit)
        self.trunc = trunc
        self.name = name
        self.exact = exact
        self._rule = compose_rule
        self._cache = {}  # type: typing.Dict[typing.Tuple, typing.Tuple[typing.Dict, bool]]
        self.overflowed = set()  # type: typing.Set[typing.Tuple]

    @property
    def max_arity(self):
        return self.trunc.max_arity

    def component(self, n):
        return self.smodule.component(n)

    def __getitem__(self, n):
        return self.smodule.component(n)

    def arities(self):
        return self.smodule.arities()

    def dims(self):
        return self.smodule.dims()

    def dims_by_degree(self):
        return OrderedDict((n, self.component(n).dims_by_degree())
                           for n in self.arities())

    def act(self, n, vec, sigma):
        return self.smodule.act(n, vec, sigma)

    def compose_basis_flagged(self, h, inputs, idx):
        key = (h, tuple(inputs), tuple(idx))
        result = self._cache.get(key)
        if result is None:
            vec, overflow = self._rule(h, tuple(inputs), tuple(idx))
            result = ({i: c for i, c in vec.items() if c}, overflow)
            self._cache[key] = result
            if overflow:
                self.overflowed.add((h, tuple(inputs)))
        return result

    def compose_basis(self, h, inputs, idx):
        return self.compose_basis_flagged(h, inputs, idx)[0]

    def is_overflow(self, h, inputs, idx):
        return self.compose_basis_flagged(h, inputs, idx)[1]

    def compose(self, h, inputs, alpha, betas):
        """γ(α ⊗ β_1 ⊗ ... ⊗ β_h), expanded multilinearly."""
        self.trunc.check_signature(h, inputs)
        out = {}
        for coeff, idx in expand([alpha] + list(betas)):
            add_into(out, self.compose_basis(h, inputs, idx), coeff)
        return out

    def compose_flagged(self, h, inputs, alpha, betas):
        """Like ``compose``, also reporting whether any term was cut off."""
        self.trunc.check_signature(h, inputs)
        out = {}
        overflow = False
        for coeff, idx in expand([alpha] + list(betas)):
            vec, cut = self.compose_basis_flagged(h, inputs, idx)
            overflow = overflow or cut
            add_into(out, vec, coeff)
        return out, overflow

    def gamma(self, h, inputs):
        """The composition map P(h) ⊗ P(i_1) ⊗ ... ⊗ P(i_h) -> P(n)."""
        inputs = tuple(inputs)
        self.trunc.check_signature(h, inputs)
        source = tensor_spaces(self.component(h),
                               *[self.component(i) for i in inputs])
        target = self.component(sum(inputs))
        return LinearMap.from_function(
            source, target, 0,
            lambda k: self.compose_basis(h, inputs, source.tuple_of(k)),
            validate=False)

    def partial_composition(self, alpha, h, i, beta, m):
        """α ∘_i β: β in slot i and the unit in every other slot."""
        if not 1 <= i <= h:
            raise ValueError('Slot %d is outside 1..%d.' % (i, h))
        if h + m - 1 > self.max_arity:
            raise TruncationOverflow(
                'α ∘_%d β has arity %d above %d.' % (i, h + m - 1, self.max_arity),
                (h, i, m))
        inputs = tuple(m if j == i else 1 for j in range(1, h + 1))
        betas = [beta if j == i else self.unit for j in range(1, h + 1)]
        return self.compose(h, inputs, alpha, betas)

    def __repr__(self):
        return 'Operad({!r}, dims={})'.format(self.name, dict(self.dims()))


class OperadMorphism:
    """
    A morphism of operads given per arity.

    Args:
        source, target (Operad): Domain and codomain.
        components (dict): Arity -> degree-0 LinearMap P(n) -> Q(n). Missing
            arities are zero.
        cut: Pairs ``(n, i)`` of source basis vectors whose image was cut
            off by the truncation of the target.
    """

    def __init__(self, source, target, components, name=None, cut=()):
        source.field.check_same(target.field)
        if source.max_arity != target.max_arity:
            raise MorphismError('Operads are truncated at different arities.')
        self.source = source
        self.target = target
        self.name = name
        self.field = source.field
        self.cut = frozenset(cut)
        self.components = OrderedDict()
        for n in source.arities():
            f = components.get(n)
            if f is None:
                f = LinearMap.zero(source.component(n), target.component(n))
            if f.degree != 0:
                raise MorphismError('Operad morphisms have degree 0.')
            self.components[n] = f

    @classmethod
    def from_function(cls, source, target, fn, name=None):
        """``fn(n, i)`` is the image of the i-th basis vector of P(n)."""
        return cls(source, target, {
            n: LinearMap.from_function(
                source.component(n), target.component(n), 0,
                lambda i, n=n: fn(n, i), validate=False)
            for n in source.arities()}, name=name)

    def component(self, n):
        return self.components[n]

    def apply(self, n, vec):
        return self.components[n](vec)

    def underlying(self):
        """The map of Σ-modules U(f)."""
        return SModuleMap(self.source.smodule, self.target.smodule,
                          self.components, name=self.name)

    def compose(self, other):
        """``self`` after ``other``."""
        return compose_morphisms(self, other)

    def __eq__(self, other):
        if not isinstance(other, OperadMorphism):
            return NotImplemented
        return all(self.components[n] == other.components.get(n)
                   for n in self.components)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None  # type: ignore

    def __repr__(self):
        return 'OperadMorphism({!r}: {!r} -> {!r})'.format(
            self.name, self.source.name, self.target.name)


def identity_morphism(operad):
    return OperadMorphism(operad, operad,
                          {n: LinearMap.identity(operad.component(n))
                           for n in operad.arities()},
                          name='id')


def same_operad_shape(p, q):
    if p is q:
        return True
    return (p.max_arity == q.max_arity and
            all(p.component(n).same_shape(q.component(n)) for n in p.arities()))


def compose_morphisms(g, f):
    """g ∘ f, arity by arity."""
    if not same_operad_shape(f.target, g.source):
        raise MorphismError('Cannot compose %r after %r.' % (g, f))
    name = None
    if g.name and f.name:
        name = '%s∘%s' % (g.name, f.name)
    cut = set(f.cut)
    if g.cut:
        one = f.field.one
        for n in f.source.arities():
            for i in range(f.source.component(n).dim):
                if any((n, j) in g.cut for j in f.apply(n, {i: one})):
                    cut.add((n, i))
    return OperadMorphism(f.source, g.target, {
        n: g.components[n].compose(f.components[n]) for n in f.source.arities()},
        name=name, cut=cut)


def morphism_from_smodule_map(source, target, f, name=None):
    """Wraps a Σ-module map between underlying Σ-modules as a morphism."""
    return OperadMorphism(source, target, f.components, name=name or f.name)
