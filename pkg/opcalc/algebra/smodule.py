"""
Σ-modules: arity-indexed families of graded spaces with right actions of the
symmetric groups, the maps between them and their finite colimits.
"""
import logging
from collections import OrderedDict

from .checking import CheckReport
from .exception import AlgebraError, InvalidLinearMap, NotWellDefined
from .graded import GradedSpace, LinearMap, direct_sum_spaces
from .linalg import subspace_quotient
from .permutations import (
    Permutation,
    adjacent_transpositions,
    all_permutations,
    spot_check_permutations,
)
from .vectors import combine, difference

_MYPY = False
if _MYPY:
    import typing  # noqa: F401 # pylint: disable=import-error,unused-import,useless-suppression

logger = logging.getLogger('opcalc.algebra.smodule')

TRIVIAL = 'trivial'
SIGN = 'sign'
REGULAR = 'regular'
ACTIONS = (TRIVIAL, SIGN, REGULAR)

DEFAULT_SPOT_CHECKS = 8


class SModule:
    """
    A Σ-module truncated at ``max_arity``.

    Args:
        field: Ground field.
        components (dict): Arity -> GradedSpace. Missing arities are zero.
        action_rule: ``(n, sigma, i) -> sparse vector``, the image of the
            i-th basis vector of component n under the right action of sigma.
        max_arity (int): Largest arity carried.
    """

    def __init__(self, field, components, action_rule, max_arity, name=None):
        self.field = field
        self.max_arity = max_arity
        self.name = name
        self._zero = GradedSpace.zero(field)
        self.components = OrderedDict()
        for n in range(0, max_arity + 1):
            space = components.get(n)
            if space is None:
                space = self._zero
            field.check_same(space.field)
            self.components[n] = space
        self._rule = action_rule
        self._cache = {}  # type: typing.Dict[typing.Tuple, typing.Dict]

    @classmethod
    def zero(cls, field, max_arity, name='0'):
        return cls(field, {}, lambda n, sigma, i: {}, max_arity, name=name)

    def component(self, n):
        if n < 0 or n > self.max_arity:
            return self._zero
        return self.components[n]

    def __getitem__(self, n):
        return self.component(n)

    def arities(self):
        return range(0, self.max_arity + 1)

    def dims(self):
        return OrderedDict((n, space.dim) for n, space in self.components.items())

    def act_basis(self, n, i, sigma):
        if sigma.is_identity():
            return {i: self.field.one}
        key = (n, sigma.images, i)
        result = self._cache.get(key)
        if result is None:
            result = self._rule(n, sigma, i)
            self._cache[key] = result
        return result

    def act(self, n, vec, sigma):
        """The right action vec·sigma in component n."""
        if sigma.is_identity():
            return dict(vec)
        return combine((c, self.act_basis(n, i, sigma)) for i, c in vec.items())

    def action_map(self, n, sigma):
        space = self.component(n)
        return LinearMap(space, space, 0,
                         [self.act_basis(n, i, sigma) for i in range(space.dim)],
                         validate=False)

    def __repr__(self):
        return 'SModule({!r}, dims={})'.format(self.name, dict(self.dims()))


class Generator:
    """
    A named generator of a Σ-module.

    Args:
        name (str): Label used in trees and presentations.
        arity (int): Number of inputs.
        degree (int): Homological degree.
        action (str): ``trivial``, ``sign`` or ``regular``. A regular
            generator spans a free orbit, one basis vector per permutation.
    """

    def __init__(self, name, arity, degree, action=TRIVIAL):
        if action not in ACTIONS:
            raise AlgebraError('Unknown action %r for %s.' % (action, name))
        if arity < 0:
            raise AlgebraError('Generator %s has negative arity.' % name)
        self.name = name
        self.arity = arity
        self.degree = degree
        self.action = action

    def __eq__(self, other):
        return (isinstance(other, Generator) and
                (self.name, self.arity, self.degree, self.action) ==
                (other.name, other.arity, other.degree, other.action))

    def __hash__(self):
        return hash((self.name, self.arity, self.degree, self.action))

    def __repr__(self):
        return 'Generator({!r}, {!r}, {!r}, {!r})'.format(
            self.name, self.arity, self.degree, self.action)


def decorated_name(name, rho):
    if rho.is_identity():
        return name
    return '%s%s' % (name, rho)


def generated_smodule(field, generators, max_arity, differentials=None, name=None):
    """
    The Σ-module spanned by the given generators.

    Basis keys are ``(generator name, rho)``; for trivial and sign generators
    rho is always the identity, for regular ones it runs over the group.

    Args:
        differentials (dict): Generator name -> sparse vector over basis keys,
            the differential of the undecorated generator. It is extended
            equivariantly to the orbit of a regular generator.
    """
    differentials = differentials or {}
    kinds = {}
    basis = {}
    keys = {}
    for gen in generators:
        if gen.arity > max_arity:
            logger.debug('Generator %s has arity %d above %d; dropped.',
                         gen.name, gen.arity, max_arity)
            continue
        kinds[gen.name] = gen.action
        rhos = (all_permutations(gen.arity) if gen.action == REGULAR
                else [Permutation.identity(gen.arity)])
        for rho in rhos:
            basis.setdefault(gen.arity, []).append(
                (decorated_name(gen.name, rho), gen.degree))
            keys.setdefault(gen.arity, []).append((gen.name, rho))
    spaces = {n: GradedSpace(field, basis[n], keys=keys[n], validate=False)
              for n in basis}

    def rule(n, sigma, i):
        space = spaces[n]
        gen_name, rho = space.keys[i]
        kind = kinds[gen_name]
        if kind == TRIVIAL:
            return {i: field.one}
        if kind == SIGN:
            return {i: sigma.sign(field)}
        return {space.index((gen_name, rho.compose(sigma))): field.one}

    module = SModule(field, spaces, rule, max_arity, name=name)
    if differentials:
        for n, space in list(spaces.items()):
            columns = []
            for gen_name, rho in space.keys:
                raw = differentials.get(gen_name, {})
                vec = {space.index(k): c for k, c in raw.items() if c}
                columns.append(module.act(n, vec, rho))
            spaces[n] = GradedSpace(field, basis[n], differential=columns,
                                    keys=keys[n])
        module = SModule(field, spaces, rule, max_arity, name=name)
    return module


def check_right_action(module, seed=0, spot_checks=DEFAULT_SPOT_CHECKS):
    """
    Verifies the right-action laws on adjacent transpositions and on seeded
    random permutations: the identity acts trivially, (x·τ)·σ = x·(τσ),
    and every action commutes with the differential and preserves the
    augmentation.
    """
    report = CheckReport('right-action')
    for n in module.arities():
        space = module.component(n)
        if not space.dim:
            continue
        identity = Permutation.identity(n)
        for i in range(space.dim):
            report.expect(module._rule(n, identity, i) == {i: module.field.one},
                          'identity', 'The identity does not act trivially.',
                          arity=n, basis=space.names[i])
        gens = adjacent_transpositions(n)
        randoms = spot_check_permutations(n, spot_checks, seed) if n > 2 else []
        pairs = [(t, s) for t in gens for s in gens]
        pairs += list(zip(randoms, reversed(randoms)))
        for tau, sigma in pairs:
            for i in range(space.dim):
                left = module.act(n, module.act_basis(n, i, tau), sigma)
                right = module.act_basis(n, i, tau.compose(sigma))
                if not report.expect(left == right, 'composition',
                                     '(x·τ)·σ differs from x·(τσ).',
                                     arity=n, tau=tau, sigma=sigma,
                                     basis=space.names[i]):
                    break
        for sigma in gens + randoms:
            for i in range(space.dim):
                moved = module.act_basis(n, i, sigma)
                left = space.diff(moved)
                right = module.act(n, space.diff_basis(i), sigma)
                report.expect(left == right, 'differential',
                              'The action does not commute with d.',
                              arity=n, sigma=sigma, basis=space.names[i])
                if space.augmentation is not None:
                    report.expect(
                        space.augment(moved) == space.augment({i: module.field.one}),
                        'augmentation', 'The action does not preserve the augmentation.',
                        arity=n, sigma=sigma, basis=space.names[i])
    return report


class SModuleMap:
    """
    A degree-0 map of Σ-modules, given per arity.

    Args:
        source (SModule): Domain.
        target (SModule): Codomain.
        components (dict): Arity -> LinearMap; missing arities are zero.
    """

    def __init__(self, source, target, components, name=None):
        source.field.check_same(target.field)
        self.source = source
        self.target = target
        self.name = name
        self.field = source.field
        self.components = OrderedDict()
        for n in source.arities():
            f = components.get(n)
            if f is None:
                f = LinearMap.zero(source.component(n), target.component(n))
            if f.degree != 0:
                raise InvalidLinearMap('Σ-module maps have degree 0.')
            self.components[n] = f

    @classmethod
    def identity(cls, module):
        return cls(module, module,
                   {n: LinearMap.identity(module.component(n))
                    for n in module.arities()}, name='id')

    @classmethod
    def zero(cls, source, target):
        return cls(source, target, {}, name='0')

    @classmethod
    def from_function(cls, source, target, fn, name=None):
        """``fn(n, i)`` gives the image of the i-th basis vector of arity n."""
        return cls(source, target, {
            n: LinearMap.from_function(
                source.component(n), target.component(n), 0,
                lambda i, n=n: fn(n, i), validate=False)
            for n in source.arities()}, name=name)

    def component(self, n):
        return self.components[n]

    def apply(self, n, vec):
        return self.components[n](vec)

    def compose(self, other):
        """``self`` after ``other``."""
        return SModuleMap(other.source, self.target, {
            n: self.components[n].compose(other.components[n])
            for n in other.source.arities()})

    def __sub__(self, other):
        return SModuleMap(self.source, self.target, {
            n: self.components[n] - other.components[n]
            for n in self.source.arities()})

    def __add__(self, other):
        return SModuleMap(self.source, self.target, {
            n: self.components[n] + other.components[n]
            for n in self.source.arities()})

    def __eq__(self, other):
        if not isinstance(other, SModuleMap):
            return NotImplemented
        return all(self.components[n] == other.components.get(n)
                   for n in self.components)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None  # type: ignore

    def __repr__(self):
        return 'SModuleMap({!r}: {!r} -> {!r})'.format(
            self.name, self.source.name, self.target.name)


def check_smodule_map(f, seed=0, spot_checks=DEFAULT_SPOT_CHECKS):
    """Equivariance and the chain-map identity, arity by arity."""
    report = CheckReport('smodule-map')
    for n in f.source.arities():
        space = f.source.component(n)
        fn = f.components[n]
        perms = adjacent_transpositions(n)
        if n > 2:
            perms += spot_check_permutations(n, spot_checks, seed)
        for i in range(space.dim):
            for sigma in perms:
                left = fn(f.source.act_basis(n, i, sigma))
                right = f.target.act(n, fn.columns[i], sigma)
                if not report.expect(left == right, 'equivariance',
                                     'f(x·σ) differs from f(x)·σ.',
                                     arity=n, sigma=sigma, basis=space.names[i]):
                    break
            left = f.target.component(n).diff(fn.columns[i])
            right = fn(space.diff_basis(i))
            report.expect(left == right, 'differential',
                          'f does not commute with d.',
                          arity=n, basis=space.names[i])
    return report


def direct_sum_smodules(modules, name=None):
    """
    The direct sum with block-diagonal actions. Returns the sum together with
    its injections and projections.
    """
    assert modules, 'A direct sum needs at least one summand.'
    field = modules[0].field
    max_arity = modules[0].max_arity
    for m in modules[1:]:
        field.check_same(m.field)
        if m.max_arity != max_arity:
            raise AlgebraError('Summands are truncated at different arities.')
    spaces = {}
    offsets = {}
    for n in range(max_arity + 1):
        spaces[n], offsets[n] = direct_sum_spaces(
            [m.component(n) for m in modules], field)

    def locate(n, i):
        offs = offsets[n]
        k = max(j for j, o in enumerate(offs)
                if o <= i and modules[j].component(n).dim > i - o)
        return k, i - offs[k]

    def rule(n, sigma, i):
        k, local = locate(n, i)
        off = offsets[n][k]
        return {j + off: c
                for j, c in modules[k].act_basis(n, local, sigma).items()}

    total = SModule(field, spaces, rule, max_arity, name=name)
    injections = []
    projections = []
    for k, m in enumerate(modules):
        injections.append(SModuleMap.from_function(
            m, total, lambda n, i, k=k: {i + offsets[n][k]: field.one},
            name='in%d' % k))
        projections.append(SModuleMap.from_function(
            total, m, lambda n, i, k=k: _project_summand(locate(n, i), k, field),
            name='pr%d' % k))
    return total, injections, projections


def _project_summand(location, k, field):
    j, local = location
    return {local: field.one} if j == k else {}


def quotient_smodule(module, spans, name=None, verify=True):
    """
    Quotients each component by a Σ-stable span.

    Args:
        spans (dict): Arity -> iterable of vectors.
        verify (bool): Check that the spans are stable under adjacent
            transpositions, raising NotWellDefined otherwise.

    Returns ``(quotient, projection, quotients)`` where ``quotients`` maps each
    arity to its opcalc.algebra.linalg.Quotient.
    """
    field = module.field
    quotients = OrderedDict()
    for n in module.arities():
        quotients[n] = subspace_quotient(module.component(n), spans.get(n, ()))
        if verify:
            reducer = quotients[n].reducer
            for sigma in adjacent_transpositions(n):
                for row in reducer.basis():
                    if not reducer.contains(module.act(n, row, sigma)):
                        raise NotWellDefined(
                            'Span in arity %d is not stable under %s.' % (n, sigma),
                            (n, str(sigma)))

    def rule(n, sigma, i):
        q = quotients[n]
        return q.project(module.act(n, q.section.columns[i], sigma))

    quotient = SModule(field, {n: q.space for n, q in quotients.items()},
                       rule, module.max_arity, name=name)
    projection = SModuleMap(module, quotient,
                            {n: q.projection for n, q in quotients.items()},
                            name='q')
    return quotient, projection, quotients


class SModuleColimit:
    """
    The colimit of a finite diagram of Σ-modules.

    Attributes:
        module: The colimit.
        cocone: One SModuleMap per object, into the colimit.
        total: The direct sum of the objects.
        injections: Its injections.
        projection: The quotient map from the sum onto the colimit.
        quotients: Arity -> linalg.Quotient of that projection.
    """

    def __init__(self, module, cocone, total, injections, projection, quotients):
        self.module = module
        self.cocone = cocone
        self.total = total
        self.injections = injections
        self.projection = projection
        self.quotients = quotients


def smodule_colimit(objects, arrows, name=None):
    """
    Direct sum of the objects modulo x ~ a(x) for every arrow ``(i, j, a)``
    with ``a: objects[i] -> objects[j]``.
    """
    total, injections, _ = direct_sum_smodules(objects, name='sum')
    spans = {}
    for i, j, a in arrows:
        for n in total.arities():
            source = objects[i].component(n)
            for b in range(source.dim):
                image = injections[j].apply(n, a.apply(n, {b: total.field.one}))
                moved = injections[i].apply(n, {b: total.field.one})
                spans.setdefault(n, []).append(difference(image, moved))
    module, projection, quotients = quotient_smodule(total, spans, name=name,
                                                     verify=False)
    cocone = [projection.compose(inj) for inj in injections]
    logger.debug('Σ-module colimit of %d objects and %d arrows: dims %s',
                 len(objects), len(arrows), dict(module.dims()))
    return SModuleColimit(module, cocone, total, injections, projection, quotients)


def scaled_map(f, coeff):
    return SModuleMap(f.source, f.target,
                      {n: c.scaled(coeff) for n, c in f.components.items()})
