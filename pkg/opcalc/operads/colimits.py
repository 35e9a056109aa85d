"""
Colimits of operads.

Reflexive coequalizers are computed componentwise: the image of f - g is an
operadic ideal and the quotient inherits a composition. Every finite colimit
is one such coequalizer. With A the colimit of the underlying Σ-modules and
B the colimit of the U F U(P_i), the pair

    d0, d1: F(B) ⇉ F(A)

with common section s = F(β) is reflexive and its coequalizer is the colimit
of the diagram. Both maps are θ⁻¹ of Σ-module maps, so the pair is given by
its values on B and F(B) is only enumerated on request. A general
coequalizer of f, g: P ⇉ Q is made reflexive through [f, 1], [g, 1]: P ⊔ Q ⇉ Q
with the injection of Q as section.
"""
import logging
from collections import deque

from opcalc.algebra.checking import CheckReport
from opcalc.algebra.graded import tensor_maps
from opcalc.algebra.linalg import (
    LinearReflexivePair,
    RowReducer,
    invert,
    map_rank,
)
from opcalc.algebra.exception import NotInvertible, NotWellDefined
from opcalc.algebra.permutations import Permutation, adjacent_transpositions
from opcalc.algebra.smodule import (
    REGULAR,
    Generator,
    SModuleMap,
    direct_sum_smodules,
    generated_smodule,
    quotient_smodule,
    smodule_colimit,
)
from opcalc.algebra.vectors import add_into, difference

from .exception import (
    MorphismError,
    NonCommutingCocone,
    NotReflexive,
    OperadError,
    TruncationOverflow,
)
from .free import (
    FreeOperad,
    epsilon_counit,
    eta_unit,
    free_on_morphism,
    theta_inverse,
)
from .operad import (
    Operad,
    OperadMorphism,
    compose_morphisms,
    identity_morphism,
    same_operad_shape,
)

_MYPY = False
if _MYPY:
    import typing  # noqa: F401 # pylint: disable=import-error,unused-import,useless-suppression

logger = logging.getLogger('opcalc.operads.colimits')


class ReflexivePair:
    """
    Operad morphisms ``f, g: P -> Q`` with a common section ``s: Q -> P``.

    Raises NotReflexive unless f∘s and g∘s are the identity of Q.
    """

    def __init__(self, f, g, s):
        if not (same_operad_shape(f.source, g.source) and
                same_operad_shape(f.target, g.target)):
            raise NotReflexive('f and g are not parallel.')
        if not (same_operad_shape(s.source, f.target) and
                same_operad_shape(s.target, f.source)):
            raise NotReflexive('The section runs between the wrong operads.')
        for label, m in (('f', f), ('g', g)):
            for n, c in compose_morphisms(m, s).components.items():
                if not c.is_identity():
                    raise NotReflexive('%s∘s is not the identity in arity %d.'
                                       % (label, n), (label, n))
        self.f = f
        self.g = g
        self.s = s

    @property
    def source(self):
        return self.f.source

    @property
    def target(self):
        return self.f.target

    @property
    def needs_closure(self):
        """Truncated operads may lose part of the ideal im(f - g) spans."""
        return not (self.source.exact and self.target.exact)

    def difference_spans(self):
        """
        Arity -> the columns of f_n - g_n, leaving out source basis vectors
        whose image under f or g was cut off.
        """
        cut = self.f.cut | self.g.cut
        spans = {}
        for n in self.target.arities():
            diff = self.f.component(n) - self.g.component(n)
            spans[n] = [col for i, col in enumerate(diff.columns)
                        if col and (n, i) not in cut]
        return spans

    def unit_image(self):
        return self.f.apply(1, self.source.unit)

    def equalizes(self, h):
        """True when h∘f = h∘g."""
        return compose_morphisms(h, self.f) == compose_morphisms(h, self.g)

    def __repr__(self):
        return 'ReflexivePair({!r}, {!r}, {!r})'.format(self.f, self.g, self.s)


class FreeReflexivePair:
    """
    The pair θ⁻¹(first), θ⁻¹(second): F(B) ⇉ F(A) with section F(section),
    given by Σ-module maps ``first, second: B -> U(F(A))`` and
    ``section: A -> B``.

    Since θ⁻¹ is faithful, d0∘s = d1∘s = 1 holds exactly when
    first∘section = second∘section = η_A. Raises NotReflexive otherwise.
    """

    def __init__(self, target, generators, first, second, section, name=None):
        eta = eta_unit(target)
        for label, g in (('d0', first), ('d1', second)):
            composite = g.compose(section)
            for n in target.generators.arities():
                diff = composite.component(n).first_difference(eta.component(n))
                if diff is not None:
                    raise NotReflexive(
                        '%s∘s is not the identity on generators of arity %d.'
                        % (label, n),
                        (label, n, target.generators.component(n).names[diff]))
        self.target = target
        self.generators = generators
        self.first = first
        self.second = second
        self.section = section
        self.name = name

    @property
    def needs_closure(self):
        """im(d0 - d1) is the ideal the generator values span."""
        return True

    def difference_spans(self):
        one = self.target.field.one
        spans = {}
        for n in self.generators.arities():
            spans[n] = []
            for b in range(self.generators.component(n).dim):
                vec = difference(self.first.apply(n, {b: one}),
                                 self.second.apply(n, {b: one}))
                if vec:
                    spans[n].append(vec)
        return spans

    def unit_image(self):
        return dict(self.target.unit)

    def equalizes(self, h):
        """True when h∘d0 = h∘d1, checked on the generators of F(B)."""
        u = h.underlying()
        return u.compose(self.first) == u.compose(self.second)

    def morphisms(self):
        """Enumerates F(B) and returns the pair as a ReflexivePair."""
        source = FreeOperad(self.generators, self.target.trunc, check_degrees=False,
                            name=self.name or 'F(B)')
        d0 = theta_inverse(source, self.first, self.target, verify=False, name='d0')
        d1 = theta_inverse(source, self.second, self.target, verify=False, name='d1')
        s = free_on_morphism(self.section, self.target, source)
        s.name = 's'
        return ReflexivePair(d0, d1, s)

    def __repr__(self):
        return 'FreeReflexivePair({!r} ⇉ {!r})'.format(
            self.generators.name, self.target.name)


class OperadQuotient:
    """
    A quotient O = Q/I of an operad by an ideal, with its projection.

    Iterating yields ``(operad, morphism)``.

    Attributes:
        source (Operad): Q.
        operad (Operad): O.
        morphism (OperadMorphism): The projection q: Q -> O.
        quotients (dict): Arity -> opcalc.algebra.linalg.Quotient.
        pair: The reflexive pair O is the coequalizer of.
    """

    def __init__(self, source, operad, morphism, quotients, pair=None):
        self.source = source
        self.operad = operad
        self.morphism = morphism
        self.quotients = quotients
        self.pair = pair

    def __iter__(self):
        return iter((self.operad, self.morphism))

    def lift(self, n, vec):
        return self.quotients[n].lift(vec)

    def project(self, n, vec):
        return self.quotients[n].project(vec)

    def __repr__(self):
        return 'OperadQuotient({!r} -> {!r})'.format(self.source.name, self.operad.name)


def partial_flagged(operad, alpha, h, i, beta, m):
    """α ∘_i β together with the overflow flag of the composite."""
    inputs = tuple(m if j == i else 1 for j in range(1, h + 1))
    betas = [beta if j == i else operad.unit for j in range(1, h + 1)]
    return operad.compose_flagged(h, inputs, alpha, betas)


def _assemble(source, module, projection, quotients, unit, name, pair=None):
    def lift(n, i):
        return quotients[n].section.columns[i]

    def rule(h, inputs, idx):
        # The kernel is an ideal, so one composite of representatives suffices.
        vec, overflow = source.compose_flagged(
            h, inputs, lift(h, idx[0]),
            [lift(i, b) for i, b in zip(inputs, idx[1:])])
        return quotients[sum(inputs)].project(vec), overflow

    operad = Operad(module, unit, rule, source.trunc, name=name, exact=source.exact)
    q = OperadMorphism(source, operad, projection.components, name='q')
    return OperadQuotient(source, operad, q, quotients, pair)


def _check_ideal(operad, quotients):
    """
    Raises NotWellDefined unless the kernels are closed under ∘_i both ways.
    Composites cut off by the truncation are not checked.
    """
    one = operad.field.one
    for m, q in quotients.items():
        for row in q.kernel_basis():
            for k in operad.arities():
                space = operad.component(k)
                if m and m + k - 1 <= operad.max_arity:
                    for i in range(1, m + 1):
                        for b in range(space.dim):
                            vec, cut = partial_flagged(operad, row, m, i, {b: one}, k)
                            if not cut and not quotients[m + k - 1].in_kernel(vec):
                                raise NotWellDefined(
                                    'Composition is not well defined on the '
                                    'quotient: kernel ∘_%d %s escapes the kernel.'
                                    % (i, space.names[b]), (m, i, k))
                if k and k + m - 1 <= operad.max_arity:
                    for i in range(1, k + 1):
                        for b in range(space.dim):
                            vec, cut = partial_flagged(operad, {b: one}, k, i, row, m)
                            if not cut and not quotients[k + m - 1].in_kernel(vec):
                                raise NotWellDefined(
                                    'Composition is not well defined on the '
                                    'quotient: %s ∘_%d kernel escapes the kernel.'
                                    % (space.names[b], i), (k, i, m))


def reflexive_coequalizer(pair, name=None, verify=True):
    """
    O(n) = Q(n)/im(f_n - g_n) with γ_O(x; y) = q(γ_Q(x̃; ỹ)) on representatives.

    ``pair`` is a ReflexivePair or a FreeReflexivePair. When truncation may
    have cut part of the image off, the spans are closed up to the ideal
    they generate. With ``verify`` the kernel is checked to be Σ-stable and
    an ideal, so γ_O does not depend on the representatives; NotWellDefined
    is raised otherwise.
    """
    target = pair.target
    spans = pair.difference_spans()
    if pair.needs_closure:
        reducers = ideal_closure(target, spans)
        spans = {n: r.basis() for n, r in reducers.items()}
    module, projection, quotients = quotient_smodule(target.smodule, spans,
                                                     name=name, verify=verify)
    if verify:
        _check_ideal(target, quotients)
    unit = quotients[1].project(target.unit)
    if unit != quotients[1].project(pair.unit_image()):
        raise NotWellDefined('The two unit choices of the coequalizer differ.')
    result = _assemble(target, module, projection, quotients, unit,
                       name or 'Coeq(%s)' % target.name, pair)
    logger.info('Reflexive coequalizer of %s: dims %s', target.name,
                dict(result.operad.dims()))
    return result


def _default_multipliers(operad):
    one = operad.field.one
    if isinstance(operad, FreeOperad):
        gens = operad.generators
        return {k: [operad.generator_vector(k, b) for b in range(gens.component(k).dim)]
                for k in gens.arities()}
    return {k: [{b: one} for b in range(operad.component(k).dim)]
            for k in operad.arities()}


def ideal_closure(operad, relations, multipliers=None):
    """
    The smallest subspace containing ``relations`` (arity -> vectors) that is
    stable under Σ, d and partial composition with ``multipliers`` on either
    side. Multipliers default to the generators of a free operad, else every
    basis vector. Composites cut off by truncation are left out, so the
    result never exceeds the ideal the relations generate.

    Returns arity -> RowReducer.
    """
    multipliers = multipliers or _default_multipliers(operad)
    n_max = operad.max_arity
    reducers = {n: RowReducer(operad.field) for n in operad.arities()}
    queue = deque()  # type: typing.Deque[typing.Tuple[int, typing.Dict]]

    def push(n, vec):
        for part in operad.component(n).homogeneous_parts(vec):
            if reducers[n].add(part):
                queue.append((n, part))

    for n, vecs in relations.items():
        for vec in vecs:
            push(n, vec)
    while queue:
        n, row = queue.popleft()
        space = operad.component(n)
        for sigma in adjacent_transpositions(n):
            push(n, operad.act(n, row, sigma))
        if space.differential is not None:
            push(n, space.diff(row))
        for k, vecs in multipliers.items():
            if n and n + k - 1 <= n_max:
                for i in range(1, n + 1):
                    for vec in vecs:
                        result, cut = partial_flagged(operad, row, n, i, vec, k)
                        if not cut:
                            push(n + k - 1, result)
            if k and k + n - 1 <= n_max:
                for i in range(1, k + 1):
                    for vec in vecs:
                        result, cut = partial_flagged(operad, vec, k, i, row, n)
                        if not cut:
                            push(k + n - 1, result)
    logger.debug('Ideal closure in %s: ranks %s', operad.name,
                 {n: r.rank for n, r in reducers.items()})
    return reducers


def relation_pair(free, relations, name=None):
    """
    The reflexive pair F(X ⊕ R) ⇉ F(X) whose coequalizer is F(X) modulo the
    ideal of ``relations`` (a list of ``(arity, vector)``). R has one
    regular generator per relation, plus one for its differential when that
    is nonzero. d0 sends it to the relation and d1 to zero; both are η on X,
    whose inclusion is the section.
    """
    field = free.field
    one = field.one
    gens = []
    differentials = {}
    images = {}
    for k, (n, vec) in enumerate(relations, 1):
        rname = '$r%d' % k
        space = free.component(n)
        degree = space.vector_degree(vec)
        gens.append(Generator(rname, n, degree, REGULAR))
        images[rname] = vec
        dvec = space.diff(vec) if space.differential is not None else {}
        if dvec:
            dname = '$dr%d' % k
            gens.append(Generator(dname, n, degree - 1, REGULAR))
            differentials[rname] = {(dname, Permutation.identity(n)): one}
            images[dname] = dvec
    rels = generated_smodule(field, gens, free.max_arity, differentials, name='R')
    extended, (incl, _), (pr_x, pr_r) = direct_sum_smodules(
        [free.generators, rels], name='X+R')

    def relation_image(n, i):
        gname, rho = rels.component(n).keys[i]
        return free.act(n, images[gname], rho)

    eta = eta_unit(free)
    on_x = eta.compose(pr_x)
    on_r = SModuleMap.from_function(rels, free.smodule, relation_image).compose(pr_r)
    return FreeReflexivePair(free, extended, on_x + on_r, on_x, incl,
                             name=name or 'F(X+R)')


def factor_through_quotient(quotient, h, name=None):
    """
    The morphism O -> R with h = result∘q, for h: Q -> R vanishing on the
    kernel of q. Raises NonCommutingCocone otherwise. Kernel vectors on which
    h was cut off by truncation are not checked.
    """
    source = quotient.source
    if not same_operad_shape(h.source, source):
        raise MorphismError('%r does not start at %s.' % (h, source.name))
    for n, q in quotient.quotients.items():
        for row in q.kernel_basis():
            if any((n, i) in h.cut for i in row):
                continue
            if h.apply(n, row):
                raise NonCommutingCocone(
                    'Morphism does not vanish on the kernel of the quotient.',
                    witness=(n, source.component(n).format_vector(row)))
    cut = {(n, k) for n, q in quotient.quotients.items()
           for k, i in enumerate(q.representatives) if (n, i) in h.cut}
    return OperadMorphism(quotient.operad, h.target, {
        n: h.component(n).compose(q.section)
        for n, q in quotient.quotients.items()}, name=name or h.name, cut=cut)


class FiniteDiagram:
    """
    Operads and arrows ``(i, j, f)`` with ``f: objects[i] -> objects[j]``.
    """

    def __init__(self, objects, arrows=()):
        if not objects:
            raise OperadError('A diagram needs at least one object.')
        first = objects[0]
        for p in objects[1:]:
            first.field.check_same(p.field)
            if p.max_arity != first.max_arity:
                raise TruncationOverflow(
                    '%s and %s are truncated at different arities.'
                    % (first.name, p.name))
        for k, (i, j, f) in enumerate(arrows):
            if not (0 <= i < len(objects) and 0 <= j < len(objects)):
                raise OperadError('Arrow %d refers to a missing object.' % k)
            if not (same_operad_shape(f.source, objects[i]) and
                    same_operad_shape(f.target, objects[j])):
                raise MorphismError('Arrow %d is not a morphism %s -> %s.'
                                    % (k, objects[i].name, objects[j].name))
        self.objects = list(objects)
        self.arrows = list(arrows)

    def __repr__(self):
        return 'FiniteDiagram({}, {})'.format(
            [p.name for p in self.objects],
            [(i, j, f.name) for i, j, f in self.arrows])


class Colimit:
    """
    A colimit together with the data that built it.

    Attributes:
        operad (Operad): The colimit object.
        cocone (list): One OperadMorphism per diagram object.
        diagram (FiniteDiagram): The diagram.
        presentation (OperadQuotient): The reflexive coequalizer the colimit
            is, with its pair.
        lift: ``targets -> morphism`` out of ``presentation.source`` induced
            by a target cocone; cocone_factorization descends it to the
            colimit.
        generators: The SModuleColimit A of the underlying Σ-modules, for
            colimits presented by a free pair.
    """

    def __init__(self, operad, cocone, diagram, presentation, lift, generators=None):
        self.operad = operad
        self.cocone = cocone
        self.diagram = diagram
        self.presentation = presentation
        self.lift = lift
        self.generators = generators

    @property
    def pair(self):
        return self.presentation.pair

    def __iter__(self):
        return iter((self.operad, self.cocone))

    def __repr__(self):
        return 'Colimit({!r}, dims={})'.format(self.operad.name,
                                               dict(self.operad.dims()))


def free_pair(diagram, trunc=None):
    """
    The free reflexive pair of a diagram.

    A = colim U(P_i) and B = colim U F U(P_i), both over the diagram's
    arrows. On the summand of P_i, d0 relabels trees through α_i, d1
    evaluates them in P_i first (η_A∘α_i∘U(ε_P_i)) and β is in_i∘η_U(P_i).

    Returns ``(pair, generators)`` with ``generators`` the SModuleColimit A.
    """
    objects = diagram.objects
    trunc = trunc or objects[0].trunc
    if trunc.max_arity != objects[0].max_arity:
        raise TruncationOverflow('Diagram is truncated at %d, profile at %d.'
                                 % (objects[0].max_arity, trunc.max_arity))
    generators = smodule_colimit(
        [p.smodule for p in objects],
        [(i, j, f.underlying()) for i, j, f in diagram.arrows], name='A')
    free = FreeOperad(generators.module, trunc, check_degrees=False, name='F(A)')
    eta = eta_unit(free)
    words = [FreeOperad(p.smodule, trunc, check_degrees=False,
                        name='F(U(%s))' % p.name) for p in objects]
    wide = smodule_colimit(
        [w.smodule for w in words],
        [(i, j, free_on_morphism(f.underlying(), words[i], words[j]).underlying())
         for i, j, f in diagram.arrows], name='B')
    relabel = []
    evaluate = []
    for i, p in enumerate(objects):
        alpha = generators.cocone[i]
        relabel.append(free_on_morphism(alpha, words[i], free).underlying())
        evaluate.append(eta.compose(alpha).compose(
            epsilon_counit(p, words[i]).underlying()))
    first = induced_smodule_map(wide, relabel, free.smodule, name='d0')
    second = induced_smodule_map(wide, evaluate, free.smodule, name='d1')
    section = induced_smodule_map(
        generators, [wide.cocone[i].compose(eta_unit(w)) for i, w in enumerate(words)],
        wide.module, name='s')
    pair = FreeReflexivePair(free, wide.module, first, second, section,
                             name='F(B)')
    logger.debug('Free pair of %d objects: B dims %s, F(A) dims %s', len(objects),
                 dict(wide.module.dims()), dict(free.dims()))
    return pair, generators


def colimit(diagram, trunc=None, name=None, verify=False):
    """
    The colimit of a finite diagram: the reflexive coequalizer of its free
    pair. Cocone edges are f_i = q∘η_A∘α_i.
    """
    objects = diagram.objects
    pair, generators = free_pair(diagram, trunc)
    free = pair.target
    presentation = reflexive_coequalizer(
        pair, verify=verify,
        name=name or 'colim(%s)' % ','.join(str(p.name) for p in objects))
    operad = presentation.operad
    eta = eta_unit(free)
    one = free.field.one
    for i, p in enumerate(objects):
        alt = presentation.project(
            1, eta.apply(1, generators.cocone[i].apply(1, p.unit)))
        if alt != operad.unit:
            raise NotWellDefined('Unit of %s does not map to the unit of the '
                                 'colimit.' % p.name, i)
    cocone = []
    for i, p in enumerate(objects):
        alpha = generators.cocone[i]
        cocone.append(OperadMorphism.from_function(
            p, operad,
            lambda n, b, alpha=alpha: presentation.project(
                n, eta.apply(n, alpha.apply(n, {b: one}))),
            name='f%d' % i))

    def lift(targets):
        target = targets[0].target
        g = induced_smodule_map(generators, [t.underlying() for t in targets],
                                target.smodule, name='g')
        return theta_inverse(free, g, target, verify=False)

    logger.info('Colimit of %d objects, %d arrows: dims %s%s', len(objects),
                len(diagram.arrows), dict(operad.dims()),
                '' if operad.exact else ' (truncated at %d vertices)'
                % free.trunc.max_depth)
    return Colimit(operad, cocone, diagram, presentation, lift, generators)


def coproduct(operads, trunc=None, name=None):
    """The colimit of the discrete diagram on ``operads``."""
    return colimit(FiniteDiagram(operads), trunc, name=name)


def coequalizer(f, g, trunc=None, name=None):
    """
    The coequalizer of f, g: P ⇉ Q, made reflexive as
    [f, 1], [g, 1]: P ⊔ Q ⇉ Q with the injection of Q as common section.
    ``cocone[1]`` is the projection from Q.
    """
    if not (same_operad_shape(f.source, g.source) and
            same_operad_shape(f.target, g.target)):
        raise MorphismError('%r and %r are not parallel.' % (f, g))
    source, target = f.source, f.target
    both = coproduct([source, target], trunc)
    ident = identity_morphism(target)
    pair = ReflexivePair(cocone_factorization(both, [f, ident], name='[f,1]'),
                         cocone_factorization(both, [g, ident], name='[g,1]'),
                         both.cocone[1])
    presentation = reflexive_coequalizer(
        pair, verify=False, name=name or 'Coeq(%s,%s)' % (f.name, g.name))
    q = presentation.morphism
    q.name = 'f1'
    from_source = compose_morphisms(q, f)
    from_source.name = 'f0'
    diagram = FiniteDiagram([source, target], [(0, 1, f), (0, 1, g)])
    logger.info('Coequalizer of %s and %s: dims %s', f.name, g.name,
                dict(presentation.operad.dims()))
    return Colimit(presentation.operad, [from_source, q], diagram, presentation,
                   lambda targets: targets[1])


def pushout(f, g, trunc=None, name=None):
    """
    The colimit of the span P <- R -> Q given by ``f: R -> P`` and
    ``g: R -> Q``. ``cocone[1]`` and ``cocone[2]`` are the edges from P and Q.
    """
    if not same_operad_shape(f.source, g.source):
        raise MorphismError('%r and %r do not share a source.' % (f, g))
    diagram = FiniteDiagram([f.source, f.target, g.target],
                            [(0, 1, f), (0, 2, g)])
    return colimit(diagram, trunc, name=name or 'Pushout(%s,%s)' % (f.name, g.name))


def _check_cocone(diagram, targets):
    if len(targets) != len(diagram.objects):
        raise MorphismError('Cocone has %d edges for %d objects.'
                            % (len(targets), len(diagram.objects)))
    target = targets[0].target
    for k, t in enumerate(targets):
        if not same_operad_shape(t.source, diagram.objects[k]):
            raise MorphismError('Edge %d does not start at %s.'
                                % (k, diagram.objects[k].name))
        if not same_operad_shape(t.target, target):
            raise MorphismError('Cocone edges have different targets.')
    for k, (i, j, a) in enumerate(diagram.arrows):
        composite = compose_morphisms(targets[j], a)
        for n, c in composite.components.items():
            diff = c.first_difference(targets[i].component(n))
            if diff is not None:
                raise NonCommutingCocone(
                    'Target cocone does not commute with arrow %d (%d -> %d).'
                    % (k, i, j), k, (n, diagram.objects[i].component(n).names[diff]))


def induced_smodule_map(generators, maps, target, name=None):
    """
    The Σ-module map out of a Σ-module colimit induced by one map per
    object. The maps must agree along the arrows.
    """
    one = target.field.one
    owners = {}
    for n in generators.total.arities():
        for k, inj in enumerate(generators.injections):
            for b in range(inj.source.component(n).dim):
                (s, _), = inj.apply(n, {b: one}).items()
                owners[(n, s)] = (k, b)

    def image(n, i):
        out = {}
        for s, c in generators.quotients[n].lift({i: one}).items():
            k, b = owners[(n, s)]
            add_into(out, maps[k].apply(n, {b: one}), c)
        return out

    return SModuleMap.from_function(generators.module, target, image, name=name)


def cocone_factorization(colim, targets, name=None):
    """
    The unique h: colim -> R with h∘f_i = t_i for a target cocone t_i: P_i -> R.
    Raises NonCommutingCocone when the t_i do not commute with the diagram or
    do not factor through the coequalizer.
    """
    _check_cocone(colim.diagram, targets)
    return factor_through_quotient(colim.presentation, colim.lift(targets),
                                   name=name or 'h')


def tensor_coequalizer_map(pairs):
    """
    ψ: Coeq(⊗f_k, ⊗g_k) -> ⊗Coeq(f_k, g_k) for linear reflexive pairs, and the
    candidate inverse built from the sections. Returns ``(psi, inverse,
    well_defined)``.
    """
    field = pairs[0].f.field
    f = tensor_maps(*[p.f for p in pairs], field=field)
    g = tensor_maps(*[p.g for p in pairs], field=field)
    s = tensor_maps(*[p.s for p in pairs], field=field)
    total = LinearReflexivePair(f, g, s)
    coeq = total.coequalizer()
    factors = [p.coequalizer() for p in pairs]
    projections = tensor_maps(*[q.projection for q in factors], field=field)
    sections = tensor_maps(*[q.section for q in factors], field=field)
    well_defined = all(not projections(row) for row in coeq.kernel_basis())
    psi = projections.compose(coeq.section)
    inverse = coeq.projection.compose(sections)
    return psi, inverse, well_defined


def check_tensor_coeq_iso(pairs):
    """
    Certifies that ψ: Coeq(⊗ of pairs) -> ⊗ of Coeqs is an isomorphism: it
    is well defined, has full rank, and the section-built map inverts it.
    """
    report = CheckReport('tensor-coequalizer')
    psi, inverse, well_defined = tensor_coequalizer_map(pairs)
    report.expect(well_defined, 'well-defined',
                  'The tensor of projections does not vanish on im(⊗f - ⊗g).')
    report.expect(psi.source.dim == psi.target.dim, 'dimension',
                  'Both sides have different dimensions.',
                  left=psi.source.dim, right=psi.target.dim)
    report.expect(map_rank(psi) == psi.target.dim, 'rank', 'ψ is not surjective.',
                  rank=map_rank(psi), dim=psi.target.dim)
    report.expect(inverse.compose(psi).is_identity(), 'left-inverse',
                  'ψ⁻¹∘ψ is not the identity.')
    report.expect(psi.compose(inverse).is_identity(), 'right-inverse',
                  'ψ∘ψ⁻¹ is not the identity.')
    if report.passed:
        try:
            report.expect(invert(psi) == inverse, 'inverse',
                          'Gauss-Jordan inverse differs from the section-built map.')
        except NotInvertible as e:
            report.fail('inverse', str(e))
    return report
