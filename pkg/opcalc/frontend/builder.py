"""
Semantic analysis of presentations and the operads they describe.

A presentation names generators with arities, degrees and actions, the
differentials of those generators and a list of homogeneous relations. It
describes the free operad on the generators modulo the operadic ideal the
relations generate.
"""
import logging
import os

from opcalc.algebra.exception import AlgebraError
from opcalc.algebra.permutations import Permutation
from opcalc.algebra.scalars import DEFAULT_FIELD_NAME, Field
from opcalc.algebra.smodule import (
    ACTIONS,
    TRIVIAL,
    Generator,
    SModuleMap,
    generated_smodule,
)
from opcalc.operads.colimits import (
    factor_through_quotient,
    reflexive_coequalizer,
    relation_pair,
)
from opcalc.operads.exception import MorphismError
from opcalc.operads.free import free_operad, theta_inverse
from opcalc.operads.truncation import TruncationProfile

from .ast import AstLabel, AstLeaf
from .exception import InvalidPresentation

_MYPY = False
if _MYPY:
    import typing  # noqa: F401 # pylint: disable=import-error,unused-import,useless-suppression

logger = logging.getLogger('opcalc.frontend.builder')


def _error(msg, node):
    return InvalidPresentation(msg, node.lineno, node.col, node.path)


def check_presentation(ast):
    """
    Raises InvalidPresentation for the first statement that does not make
    sense on its own: redeclared or undeclared names, arity mismatches,
    leaves that are not a bijection onto 1..n, unknown actions or fields and
    relations mixing arities or degrees.
    """
    if len(ast.fields) > 1:
        raise _error('Field declared twice.', ast.fields[1])
    for field in ast.fields:
        try:
            Field(field.name)
        except ValueError as e:
            raise _error(str(e), field)

    generators = {}
    for gen in ast.generators:
        if gen.name in generators:
            raise _error('Generator %s is already declared on line %d.'
                         % (gen.name, generators[gen.name].lineno), gen)
        if gen.action is not None and gen.action not in ACTIONS:
            raise _error('Unknown action %s; use %s.'
                         % (gen.action, ', '.join(ACTIONS)), gen)
        generators[gen.name] = gen

    seen = set()
    for diff in ast.differentials:
        source = _lookup(generators, diff.name, diff)
        if diff.name in seen:
            raise _error('Differential of %s is given twice.' % diff.name, diff)
        seen.add(diff.name)
        for term in diff.terms:
            _check_coefficient(term)
            label = term.atom
            if not isinstance(label, AstLabel):
                raise _error('Differentials are combinations of generators, '
                             'not trees.', term)
            target = _check_label(generators, label)
            if target.arity != source.arity:
                raise _error('d(%s) must have arity %d, %s has arity %d.'
                             % (source.name, source.arity, target.name,
                                target.arity), label)
            if target.degree != source.degree - 1:
                raise _error('d(%s) must have degree %d, %s has degree %d.'
                             % (source.name, source.degree - 1, target.name,
                                target.degree), label)

    for rel in ast.relations:
        shape = None
        for term in rel.terms:
            _check_coefficient(term)
            term_shape = _check_tree(generators, term.atom)
            if shape is None:
                shape = term_shape
            elif term_shape[0] != shape[0]:
                raise _error('Relation mixes arities %d and %d.'
                             % (shape[0], term_shape[0]), term)
            elif term_shape[1] != shape[1]:
                raise _error('Relation mixes degrees %d and %d.'
                             % (shape[1], term_shape[1]), term)


def _lookup(generators, name, node):
    try:
        return generators[name]
    except KeyError:
        raise _error('Undeclared generator %s.' % name, node)


def _check_coefficient(term):
    if term.denominator == 0:
        raise _error('Zero denominator.', term)


def _check_label(generators, label):
    gen = _lookup(generators, label.name, label)
    if label.permutation is not None:
        perm = list(label.permutation)
        if sorted(perm) != list(range(1, gen.arity + 1)):
            raise _error('%s is not a permutation of 1..%d for %s.'
                         % (perm, gen.arity, gen.name), label)
    return gen


def _check_tree(generators, atom):
    """Returns ``(arity, degree)`` of a tree literal."""
    leaves = []
    degree = _walk_tree(generators, atom, leaves)
    if sorted(leaves) != list(range(1, len(leaves) + 1)):
        raise _error('Leaf labels %s are not a bijection onto 1..%d.'
                     % (leaves, len(leaves)), atom)
    return len(leaves), degree


def _walk_tree(generators, atom, leaves):
    if isinstance(atom, AstLeaf):
        leaves.append(atom.label)
        return 0
    if isinstance(atom, AstLabel):
        gen = _check_label(generators, atom)
        if gen.arity:
            raise _error('%s takes %d inputs; write %s(...).'
                         % (gen.name, gen.arity, gen.name), atom)
        return gen.degree
    gen = _check_label(generators, atom.label)
    if len(atom.children) != gen.arity:
        raise _error('%s takes %d inputs, got %d.'
                     % (gen.name, gen.arity, len(atom.children)), atom)
    return gen.degree + sum(_walk_tree(generators, c, leaves) for c in atom.children)


def resolve_field(ast, field=None):
    """An explicit field wins over the presentation's, which wins over F101."""
    if field is not None:
        return field if isinstance(field, Field) else Field(field)
    return Field(ast.field or DEFAULT_FIELD_NAME)


def presentation_name(ast):
    if ast.path:
        return os.path.splitext(os.path.basename(ast.path))[0]
    return 'P'


class Presentation:
    """
    A presentation built into a truncated operad.

    Attributes:
        ast (AstPresentation): What was parsed.
        generators (list[Generator]): Declared generators, in order.
        smodule (SModule): The Σ-module X they span, with its differential.
        free (FreeOperad): F(X).
        relations (list): ``(arity, vector of F(X))`` per kept relation.
        quotient (OperadQuotient): F(X) modulo the ideal of the relations.
        skipped (list): ``(line, reason)`` per relation the truncation
            dropped.
    """

    def __init__(self, ast, generators, smodule, free, relations, quotient,
                 differentials, skipped=()):
        self.ast = ast
        self.generators = generators
        self.smodule = smodule
        self.free = free
        self.relations = relations
        self.quotient = quotient
        self.differentials = differentials
        self.skipped = list(skipped)

    @property
    def field(self):
        return self.smodule.field

    @property
    def trunc(self):
        return self.free.trunc

    @property
    def operad(self):
        return self.quotient.operad

    @property
    def projection(self):
        return self.quotient.morphism

    def generator(self, name):
        for gen in self.generators:
            if gen.name == name:
                return gen
        return None

    def __repr__(self):
        return 'Presentation({!r}, {} generators, {} relations)'.format(
            self.operad.name, len(self.generators), len(self.relations))


def _label_vector(module, label):
    """The vector of X(k) a label such as ``mu[2,1]`` stands for."""
    gen_arity = None
    for k in module.arities():
        space = module.component(k)
        key = (label.name, Permutation.identity(k))
        if space.has_key(key):
            gen_arity = k
            break
    assert gen_arity is not None, label
    idx = module.component(gen_arity).index((label.name, Permutation.identity(gen_arity)))
    vec = {idx: module.field.one}
    if label.permutation is not None:
        vec = module.act(gen_arity, vec, Permutation(label.permutation))
    return gen_arity, vec


def _coefficient(field, term):
    try:
        return field.fraction(term.numerator, term.denominator)
    except ZeroDivisionError as e:
        raise _error(str(e), term)


def _differentials(ast, field, generators, max_arity):
    plain = generated_smodule(field, generators, max_arity)
    out = {}
    for diff in ast.differentials:
        raw = {}
        for term in diff.terms:
            if not _kept(plain, term.atom.name):
                continue
            k, vec = _label_vector(plain, term.atom)
            c = _coefficient(field, term)
            keys = plain.component(k).keys
            for i, v in vec.items():
                raw[keys[i]] = raw.get(keys[i], field.zero) + c * v
        out[diff.name] = {key: c for key, c in raw.items() if c}
    return out


def _kept(module, name):
    return any(module.component(k).has_key((name, Permutation.identity(k)))
               for k in module.arities())


def _tree_terms(module, atom):
    """Expands a tree literal into ``{tree: coefficient}`` over basis labels."""
    one = module.field.one
    if isinstance(atom, AstLeaf):
        return {atom.label: one}
    label = atom if isinstance(atom, AstLabel) else atom.label
    children = [] if isinstance(atom, AstLabel) else atom.children
    k, vec = _label_vector(module, label)
    terms = {(): one}
    for child in children:
        expanded = _tree_terms(module, child)
        terms = {kids + (t,): c * ct for kids, c in terms.items()
                 for t, ct in expanded.items()}
    out = {}
    for b, cb in vec.items():
        for kids, c in terms.items():
            tree = (k, b, kids)
            out[tree] = out.get(tree, module.field.zero) + cb * c
    return out


def _uses_only(module, atom):
    if isinstance(atom, AstLeaf):
        return True
    label = atom if isinstance(atom, AstLabel) else atom.label
    if not _kept(module, label.name):
        return False
    children = [] if isinstance(atom, AstLabel) else atom.children
    return all(_uses_only(module, c) for c in children)


def _relation_vectors(ast, free):
    """
    Returns ``(kept, skipped)``: ``(arity, vector)`` per relation F(X) can
    carry, and ``(line, reason)`` per relation truncation dropped.
    """
    module = free.generators
    field = module.field
    declared = {g.name: g for g in ast.generators}
    out = []
    skipped = []

    def skip(rel, reason):
        logger.warning('Line %d: %s; skipped.', rel.lineno, reason)
        skipped.append((rel.lineno, reason))

    for rel in ast.relations:
        if not all(_uses_only(module, term.atom) for term in rel.terms):
            skip(rel, 'relation uses a generator above arity %d' % free.max_arity)
            continue
        n, _ = _check_tree(declared, rel.terms[0].atom)
        if n > free.max_arity:
            skip(rel, 'relation of arity %d is above %d' % (n, free.max_arity))
            continue
        vec = {}
        for term in rel.terms:
            c = _coefficient(field, term)
            for tree, ct in _tree_terms(module, term.atom).items():
                value = free.tree_vector(tree)
                for i, v in value.items():
                    vec[i] = vec.get(i, field.zero) + c * ct * v
        vec = {i: c for i, c in vec.items() if c}
        if not vec:
            logger.info('Line %d: relation vanishes in F(X)(%d).', rel.lineno, n)
            continue
        out.append((n, vec))
    return out, skipped


def build_presentation(ast, trunc=None, field=None, name=None):
    """
    Builds F(X) and its quotient by the relations, the coequalizer of
    F(X ⊕ R) ⇉ F(X).

    Raises InvalidPresentation for semantic errors and TruncationOverflow
    when a generator degree leaves the window or a relation has more
    vertices than the profile allows.
    """
    check_presentation(ast)
    trunc = trunc or TruncationProfile()
    field = resolve_field(ast, field)
    name = name or presentation_name(ast)
    generators = [Generator(g.name, g.arity, g.degree, g.action or TRIVIAL)
                  for g in ast.generators]
    differentials = _differentials(ast, field, generators, trunc.max_arity)
    try:
        module = generated_smodule(field, generators, trunc.max_arity,
                                   differentials, name='X')
    except AlgebraError as e:
        node = ast.differentials[0] if ast.differentials else ast.generators[0]
        raise _error('Differentials do not define a Σ-module: %s' % e, node)
    free = free_operad(module, trunc, name='F(X)')
    relations, skipped = _relation_vectors(ast, free)
    quotient = reflexive_coequalizer(relation_pair(free, relations), name=name,
                                     verify=False)
    logger.info('Presentation %s: %d generators, %d relations, dims %s',
                name, len(generators), len(relations), dict(quotient.operad.dims()))
    return Presentation(ast, generators, module, free, relations, quotient,
                        differentials, skipped)


def build(ast, trunc=None, field=None):
    """The operad a presentation describes."""
    return build_presentation(ast, trunc, field).operad


def presentation_pair(presentation):
    """
    The reflexive pair d0, d1: F(X ⊕ R) ⇉ F(X) whose coequalizer is the
    presented operad, with F(X ⊕ R) enumerated.
    """
    return relation_pair(presentation.free, presentation.relations).morphisms()


def presentation_morphism(source, target, name=None):
    """
    The morphism between built presentations sending each generator to the
    equally named generator. Raises MorphismError when a generator has no
    counterpart of the same arity and degree or the assignment is not
    equivariant, and NonCommutingCocone when a relation of the source does
    not hold in the target.
    """
    module = source.smodule

    def image(n, i):
        gname, rho = module.component(n).keys[i]
        counterpart = target.generator(gname)
        mine = source.generator(gname)
        if counterpart is None:
            raise MorphismError('Generator %s has no counterpart in %s.'
                                % (gname, target.operad.name))
        if (counterpart.arity, counterpart.degree) != (mine.arity, mine.degree):
            raise MorphismError(
                'Generator %s has arity %d and degree %d in %s, arity %d and '
                'degree %d in %s.' % (gname, mine.arity, mine.degree,
                                      source.operad.name, counterpart.arity,
                                      counterpart.degree, target.operad.name))
        space = target.smodule.component(n)
        vec = target.free.generator_vector(
            n, space.index((gname, Permutation.identity(n))))
        moved = target.free.act(n, vec, rho)
        return target.quotient.project(n, moved)

    g = SModuleMap.from_function(module, target.operad.smodule, image, name='names')
    h = theta_inverse(source.free, g, target.operad)
    return factor_through_quotient(source.quotient, h,
                                   name=name or '%s->%s' % (source.operad.name,
                                                            target.operad.name))
