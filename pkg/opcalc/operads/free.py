"""
Truncated free operads on Σ-modules and the free-forgetful adjunction.

F(X)(n) is spanned by normal-form trees with n leaves and at most D vertices,
modulo the relations that normal forms cannot absorb: transposing two equal
leafless children of a vertex. Composites with more than D vertices vanish
and are flagged, which makes F(X) the quotient of the free operad by the
ideal of large trees.
"""
import logging

from opcalc.algebra.checking import CheckReport
from opcalc.algebra.graded import GradedSpace
from opcalc.algebra.linalg import subspace_quotient
from opcalc.algebra.permutations import Permutation
from opcalc.algebra.smodule import SModule, SModuleMap, check_smodule_map
from opcalc.algebra.vectors import add_into, difference, scaled

from .exception import MorphismError, TruncationOverflow
from .operad import Operad, OperadMorphism
from .trees import (
    TreeEnumerator,
    act_on_leaves,
    corolla,
    degree,
    graft,
    is_leaf,
    leaves,
    min_leaf,
    normalize,
    replace_label,
    standardize,
    subtree_at,
    tree_str,
    vertex_count,
    vertex_degree,
    vertices,
)
from .truncation import TruncationProfile

_MYPY = False
if _MYPY:
    import typing  # noqa: F401 # pylint: disable=import-error,unused-import,useless-suppression

logger = logging.getLogger('opcalc.operads.free')


class FreeOperad(Operad):
    """
    The free operad F(X) truncated at arity N and D vertices.

    Args:
        generators (SModule): X, truncated at the same arity as ``trunc``.
        trunc (TruncationProfile): Finiteness contract.
        check_degrees (bool): Require generator degrees inside the profile's
            degree window.
    """

    def __init__(self, generators, trunc, check_degrees=True, name=None):
        if generators.max_arity != trunc.max_arity:
            raise TruncationOverflow(
                'Generators are truncated at arity %d, profile at %d.'
                % (generators.max_arity, trunc.max_arity))
        if check_degrees:
            for k in generators.arities():
                space = generators.component(k)
                for b in range(space.dim):
                    trunc.check_degree(space.degrees[b], 'Generator %s' % space.names[b])
        self.generators = generators
        field = generators.field
        enumerator = TreeEnumerator(generators)
        self.raw_trees = {}
        self._raw_index = {}
        self.raw_spaces = {}
        self.quotients = {}
        for n in range(trunc.max_arity + 1):
            trees = enumerator.trees(n, trunc.max_depth)
            self.raw_trees[n] = trees
            self._raw_index[n] = {t: i for i, t in enumerate(trees)}
        has_diff = any(generators.component(k).differential is not None
                       for k in generators.arities())
        for n in range(trunc.max_arity + 1):
            trees = self.raw_trees[n]
            basis = [(tree_str(t, generators), degree(t, generators)) for t in trees]
            differential = None
            if has_diff:
                differential = [self._tree_differential(n, t) for t in trees]
            self.raw_spaces[n] = GradedSpace(field, basis, differential=differential,
                                             keys=trees, validate=False)
            self.quotients[n] = subspace_quotient(self.raw_spaces[n],
                                                  self._relations(n))
        components = {n: q.space for n, q in self.quotients.items()}
        smodule = SModule(field, components, self._act, trunc.max_arity,
                          name=name or 'F(%s)' % (generators.name or 'X'))
        unit = self.quotients[1].project({self._raw_index[1][1]: field.one})
        self._trunc = trunc
        super().__init__(smodule, unit, self._compose, trunc,
                         name=smodule.name, exact=self.is_exact())
        logger.info('Built %s: dims %s (%s)', self.name, dict(self.dims()),
                    'exact' if self.exact else 'truncated at %d vertices' % trunc.max_depth)

    def is_exact(self):
        """True when no tree with more than D vertices has arity at most N."""
        arities = [k for k in self.generators.arities()
                   if self.generators.component(k).dim]
        if not arities:
            return True
        smallest = min(arities)
        if smallest < 2:
            return False
        return 1 + (self._trunc.max_depth + 1) * (smallest - 1) > self._trunc.max_arity

    def _raw_vector(self, n, combination):
        index = self._raw_index[n]
        return {index[t]: c for t, c in combination.items() if c}

    def _tree_differential(self, n, tree):
        """The sum over vertices in preorder of ±(tree with d applied there)."""
        gens = self.generators
        out = {}
        prefix = 0
        for path, k, b in vertices(tree):
            for b2, c in gens.component(k).diff_basis(b).items():
                changed = replace_label(tree, path, b2)
                add_into(out, self._raw_vector(n, normalize(changed, gens)),
                         c * gens.field.sign(prefix))
            prefix += vertex_degree(gens, k, b)
        return out

    def _relations(self, n):
        gens = self.generators
        one = gens.field.one
        relations = []
        for i, tree in enumerate(self.raw_trees[n]):
            for path, k, b in vertices(tree):
                children = subtree_at(tree, path)[2]
                for q in range(k - 1):
                    child = children[q]
                    if child != children[q + 1] or min_leaf(child) is not None:
                        continue
                    tau = Permutation.transposition(k, q + 1, q + 2)
                    eps = gens.field.sign(degree(child, gens))
                    swapped = {}
                    for b2, c in gens.act_basis(k, b, tau).items():
                        add_into(swapped, self._raw_vector(
                            n, normalize(replace_label(tree, path, b2), gens)), c)
                    rel = difference({i: one}, scaled(swapped, eps))
                    if rel:
                        relations.append(rel)
        if relations:
            logger.debug('Arity %d: %d relations between leafless siblings.',
                         n, len(relations))
        return relations

    def basis_tree(self, n, i):
        """The normal-form tree representing the i-th basis vector of F(X)(n)."""
        q = self.quotients[n]
        return self.raw_trees[n][q.representatives[i]]

    def tree_vector(self, tree):
        """The vector of F(X) a (not necessarily normal) tree stands for."""
        if vertex_count(tree) > self._trunc.max_depth:
            raise TruncationOverflow(
                'Tree has %d vertices, more than %d.'
                % (vertex_count(tree), self._trunc.max_depth), tree)
        n = len(leaves(tree))
        raw = self._raw_vector(n, normalize(tree, self.generators))
        return self.quotients[n].project(raw)

    def generator_vector(self, k, b):
        return self.tree_vector(corolla(k, b))

    def _act(self, n, sigma, i):
        moved = act_on_leaves(self.basis_tree(n, i), sigma)
        return self.quotients[n].project(
            self._raw_vector(n, normalize(moved, self.generators)))

    def _compose(self, h, inputs, idx):
        outer = self.basis_tree(h, idx[0])
        slots = [self.basis_tree(i, b) for i, b in zip(inputs, idx[1:])]
        count = vertex_count(outer) + sum(vertex_count(s) for s in slots)
        if count > self._trunc.max_depth:
            return {}, True
        grafted, sign = graft(outer, slots, self.generators)
        n = sum(inputs)
        raw = self._raw_vector(n, normalize(grafted, self.generators))
        return self.quotients[n].project(scaled(raw, sign)), False


def free_operad(generators, trunc=None, check_degrees=True, name=None):
    return FreeOperad(generators, trunc or TruncationProfile(),
                      check_degrees=check_degrees, name=name)


def eta_unit(free):
    """η_X: X -> U(F(X)), each generator to its corolla."""
    return SModuleMap.from_function(
        free.generators, free.smodule,
        lambda k, b: free.generator_vector(k, b), name='eta')


def evaluate_tree(tree, target, label_map):
    """
    Evaluates a labeled tree in an operad by iterated composition.

    Args:
        label_map: ``(k, b) -> vector of target(k)``, the image of the
            vertex label.

    Returns ``(vector, overflow)``; ``overflow`` is True when the target cut
    off a composite on the way.
    """
    if is_leaf(tree):
        return dict(target.unit), False
    k, b, children = tree
    label = label_map(k, b)
    if k == 0:
        return label, False
    values = []
    inputs = []
    inverse = []
    overflow = False
    ranks = {l: r for r, l in enumerate(sorted(leaves(tree)), 1)}
    for child in children:
        std, labels = standardize(child)
        value, cut = evaluate_tree(std, target, label_map)
        overflow = overflow or cut
        values.append(value)
        inputs.append(len(labels))
        inverse.extend(ranks[l] for l in labels)
    if not label or not all(values):
        return {}, overflow
    composite, cut = target.compose_flagged(k, tuple(inputs), label, values)
    n = sum(inputs)
    placement = Permutation(inverse).inverse() if n else Permutation(())
    return target.act(n, composite, placement), overflow or cut


def evaluate_vector(free, n, vec, target, label_map):
    """Evaluates a vector of F(X)(n) basis trees. Returns (vector, overflow)."""
    out = {}
    overflow = False
    for i, c in vec.items():
        value, cut = evaluate_tree(free.basis_tree(n, i), target, label_map)
        overflow = overflow or cut
        add_into(out, value, c)
    return out, overflow


def _cached_labels(fn):
    cache = {}

    def label_map(k, b):
        if (k, b) not in cache:
            cache[(k, b)] = fn(k, b)
        return cache[(k, b)]

    return label_map


def theta(f, free):
    """θ(f) = U(f)∘η_X for a morphism f: F(X) -> Q."""
    return f.underlying().compose(eta_unit(free))


def theta_inverse(free, g, target, verify=True, name=None):
    """
    The unique morphism F(X) -> Q restricting to g along η_X.

    Args:
        g (SModuleMap): X -> U(Q), equivariant and commuting with d.
        verify (bool): Reject a g that is not a Σ-module map.
    """
    if verify:
        report = check_smodule_map(g)
        if not report:
            raise MorphismError('θ⁻¹ needs a Σ-module map: %s'
                                % report.first_failure().message)
    one = free.field.one
    label_map = _cached_labels(lambda k, b: g.apply(k, {b: one}))
    cut = set()

    def image(n, i):
        vec, overflow = evaluate_tree(free.basis_tree(n, i), target, label_map)
        if overflow:
            cut.add((n, i))
        return vec

    result = OperadMorphism.from_function(free, target, image,
                                          name=name or 'θ⁻¹(%s)' % (g.name or 'g'))
    result.cut = frozenset(cut)
    if cut:
        logger.debug('%s: %d basis trees cut off in the target.', result.name, len(cut))
    return result


def epsilon_counit(operad, free=None):
    """ε_P: F(U(P)) -> P, evaluating trees by iterated composition in P."""
    free = free or free_operad(operad.smodule, operad.trunc, check_degrees=False,
                               name='F(U(%s))' % operad.name)
    return theta_inverse(free, SModuleMap.identity(operad.smodule), operad,
                         verify=False, name='ε')


def free_on_morphism(f, source, target):
    """F(f) = θ⁻¹(η_Y∘f) for a Σ-module map f: X -> Y."""
    return theta_inverse(source, eta_unit(target).compose(f), target,
                         name='F(%s)' % (f.name or 'f'))


def check_triangular(generators=None, operad=None, trunc=None):
    """
    The triangular identities of the adjunction, as exact equalities on every
    basis vector: ε_F(X)∘F(η_X) = 1 on F(X) and U(ε_P)∘η_U(P) = 1 on U(P).
    """
    report = CheckReport('triangular')
    if generators is not None:
        trunc = trunc or TruncationProfile(max_arity=generators.max_arity)
        fx = free_operad(generators, trunc)
        one = fx.field.one
        fufx = free_operad(fx.smodule, trunc, check_degrees=False)
        double_eta = _cached_labels(
            lambda k, b: _corollas(fufx, k, fx.generator_vector(k, b)))
        identity_labels = _cached_labels(lambda k, c: {c: one})
        for n in fx.arities():
            for i in range(fx.component(n).dim):
                image, _ = evaluate_tree(fx.basis_tree(n, i), fufx, double_eta)
                back, _ = evaluate_vector(fufx, n, image, fx, identity_labels)
                report.expect(back == {i: one}, 'counit-after-free-unit',
                              'ε_F(X)∘F(η_X) is not the identity.',
                              arity=n, basis=fx.component(n).names[i])
    if operad is not None:
        one = operad.field.one
        fup = free_operad(operad.smodule, operad.trunc, check_degrees=False)
        identity_labels = _cached_labels(lambda k, c: {c: one})
        for n in operad.arities():
            for i in range(operad.component(n).dim):
                image = fup.generator_vector(n, i)
                back, _ = evaluate_vector(fup, n, image, operad, identity_labels)
                report.expect(back == {i: one}, 'counit-after-unit',
                              'U(ε_P)∘η_U(P) is not the identity.',
                              arity=n, basis=operad.component(n).names[i])
    return report


def _corollas(free, k, vec):
    """η applied to a vector of generators of ``free``."""
    out = {}
    for b, c in vec.items():
        add_into(out, free.generator_vector(k, b), c)
    return out
