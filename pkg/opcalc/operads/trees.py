"""
Labeled trees, the basis elements of free operads.

A tree is either a leaf, an ``int`` label, or a vertex ``(k, b, children)``
where ``b`` indexes a basis vector of X(k) and ``children`` is a tuple of k
trees. A tree stands for the nested composite in which every vertex is
composed with its children in order, so its symbols are read in preorder.
Leaf l receives the l-th input.

A tree is in normal form when, at every vertex, children carrying leaves
come first ordered by their smallest leaf, followed by leafless children in
canonical order.
"""
import itertools

from opcalc.algebra.graded import koszul_shuffle_sign
from opcalc.algebra.permutations import Permutation
from opcalc.algebra.vectors import add_into

_MYPY = False
if _MYPY:
    import typing  # noqa: F401 # pylint: disable=import-error,unused-import,useless-suppression


def is_leaf(tree):
    return isinstance(tree, int)


def corolla(k, b):
    """The one-vertex tree with leaves 1..k in order."""
    return (k, b, tuple(range(1, k + 1)))


def leaves(tree):
    """Leaf labels in planar order."""
    if is_leaf(tree):
        return [tree]
    out = []
    for child in tree[2]:
        out.extend(leaves(child))
    return out


def arity(tree):
    return len(leaves(tree))


def vertex_count(tree):
    if is_leaf(tree):
        return 0
    return 1 + sum(vertex_count(c) for c in tree[2])


def vertex_degree(smodule, k, b):
    return smodule.component(k).degrees[b]


def degree(tree, smodule):
    if is_leaf(tree):
        return 0
    k, b, children = tree
    return vertex_degree(smodule, k, b) + sum(degree(c, smodule) for c in children)


def min_leaf(tree):
    ls = leaves(tree)
    return min(ls) if ls else None


def structural_key(tree):
    if is_leaf(tree):
        return (-1, tree, ())
    k, b, children = tree
    return (k, b, tuple(structural_key(c) for c in children))


def sort_key(tree):
    """Children with leaves sort by smallest leaf, before leafless ones."""
    m = min_leaf(tree)
    if m is not None:
        return (0, m, ())
    return (1, 0, structural_key(tree))


def relabel_leaves(tree, mapping):
    """Replaces every leaf l by ``mapping[l]`` (a dict, or a callable)."""
    if is_leaf(tree):
        return mapping(tree) if callable(mapping) else mapping[tree]
    k, b, children = tree
    return (k, b, tuple(relabel_leaves(c, mapping) for c in children))


def act_on_leaves(tree, rho):
    """The right action of rho on a labeled tree: leaf l becomes rho⁻¹(l)."""
    inverse = rho.inverse()
    return relabel_leaves(tree, inverse)


def standardize(tree):
    """Relabels leaves by rank. Returns the tree and its sorted leaf labels."""
    ls = sorted(leaves(tree))
    rank = {l: r for r, l in enumerate(ls, 1)}
    return relabel_leaves(tree, rank), ls


def shift_leaves(tree, offset):
    if not offset:
        return tree
    return relabel_leaves(tree, lambda l: l + offset)


def is_normal(tree):
    if is_leaf(tree):
        return True
    children = tree[2]
    keys = [sort_key(c) for c in children]
    return keys == sorted(keys) and all(is_normal(c) for c in children)


def normalize(tree, smodule):
    """
    Rewrites a tree as a combination of normal-form trees.

    At a vertex labeled x with children c, sorting the children by a
    permutation π uses T[x; c] = ε·T[x·π; c∘π], where ε is the Koszul sign of
    reordering the children by their degrees and x·π is expanded in X.
    Returns a dict tree -> coefficient.
    """
    one = smodule.field.one
    if is_leaf(tree):
        return {tree: one}
    k, b, children = tree
    expansions = [list(normalize(c, smodule).items()) for c in children]
    out = {}
    for combo in itertools.product(*expansions):
        coeff = one
        kids = []
        for child, c in combo:
            coeff = coeff * c
            kids.append(child)
        order = sorted(range(k), key=lambda j: sort_key(kids[j]))
        if order == list(range(k)):
            add_into(out, {(k, b, tuple(kids)): coeff})
            continue
        pi = Permutation([j + 1 for j in order])
        ordered = tuple(kids[j] for j in order)
        degrees = [degree(c, smodule) for c in ordered]
        eps = koszul_shuffle_sign(degrees, [pi(j) - 1 for j in range(1, k + 1)],
                                  smodule.field)
        for b2, c2 in smodule.act_basis(k, b, pi).items():
            add_into(out, {(k, b2, ordered): coeff * eps * c2})
    return out


class TreeNormalForm:
    """A normal-form tree with the scalar it picked up while normalizing."""

    def __init__(self, tree, coefficient):
        self.tree = tree
        self.coefficient = coefficient

    def __eq__(self, other):
        return (isinstance(other, TreeNormalForm) and
                (self.tree, self.coefficient) == (other.tree, other.coefficient))

    def __hash__(self):
        return hash((self.tree, self.coefficient))

    def __repr__(self):
        return 'TreeNormalForm({!r}, {!r})'.format(self.tree, self.coefficient)


def normal_forms(tree, smodule):
    """The terms of ``normalize``, ordered by tree."""
    return [TreeNormalForm(t, c) for t, c in
            sorted(normalize(tree, smodule).items(), key=lambda item: structural_key(item[0]))]


def _preorder_symbols(tree, path=()):
    """Yields ``(path, node)`` in preorder, leaves included."""
    yield path, tree
    if not is_leaf(tree):
        for j, child in enumerate(tree[2]):
            for item in _preorder_symbols(child, path + (j,)):
                yield item


def vertices(tree):
    """``(path, k, b)`` for every vertex, in preorder."""
    return [(path, node[0], node[1]) for path, node in _preorder_symbols(tree)
            if not is_leaf(node)]


def replace_label(tree, path, b):
    k, old, children = tree
    if not path:
        return (k, b, children)
    j = path[0]
    kids = list(children)
    kids[j] = replace_label(kids[j], path[1:], b)
    return (k, old, tuple(kids))


def subtree_at(tree, path):
    for j in path:
        tree = tree[2][j]
    return tree


def graft(tree, slot_trees, smodule):
    """
    γ(T; S_1, ..., S_h): substitutes S_j, its leaves shifted past the earlier
    blocks, for the leaf labeled j. Returns ``(tree, sign)`` where the sign
    moves each S_j from after T's symbols to its preorder position.
    """
    offsets = []
    total = 0
    for s in slot_trees:
        offsets.append(total)
        total += arity(s)
    source_degrees = []
    for _, node in _preorder_symbols(tree):
        if not is_leaf(node):
            source_degrees.append(vertex_degree(smodule, node[0], node[1]))
    n_vertices = len(source_degrees)
    source_degrees.extend(degree(s, smodule) for s in slot_trees)
    # Target order: walk T in preorder, dropping each S_j in at leaf j.
    target_order = []
    vertex_iter = iter(range(n_vertices))
    for _, node in _preorder_symbols(tree):
        if is_leaf(node):
            target_order.append(n_vertices + node - 1)
        else:
            target_order.append(next(vertex_iter))
    positions = [0] * len(source_degrees)
    for target, source in enumerate(target_order):
        positions[source] = target
    sign = koszul_shuffle_sign(source_degrees, positions, smodule.field)

    def substitute(node):
        if is_leaf(node):
            return shift_leaves(slot_trees[node - 1], offsets[node - 1])
        k, b, children = node
        return (k, b, tuple(substitute(c) for c in children))

    return substitute(tree), sign


def validate_tree(tree, smodule):
    """Raises ValueError unless the tree is well formed over the Σ-module."""
    if not is_leaf(tree):
        _check_vertices(tree, smodule)
    ls = leaves(tree)
    if sorted(ls) != list(range(1, len(ls) + 1)):
        raise ValueError('Leaf labels %s are not a bijection onto 1..%d.'
                         % (ls, len(ls)))


def _check_vertices(tree, smodule):
    k, b, children = tree
    if len(children) != k:
        raise ValueError('Vertex of arity %d has %d children.' % (k, len(children)))
    if not 0 <= b < smodule.component(k).dim:
        raise ValueError('No basis vector %d in arity %d.' % (b, k))
    for c in children:
        if not is_leaf(c):
            _check_vertices(c, smodule)


def tree_str(tree, smodule):
    """Renders a tree in the literal syntax, e.g. ``mu(1,nu(2,3))``."""
    if is_leaf(tree):
        return str(tree)
    k, b, children = tree
    name = smodule.component(k).names[b]
    return '%s(%s)' % (name, ','.join(tree_str(c, smodule) for c in children))


def set_partitions(items, blocks):
    """Partitions of ``items`` into ``blocks`` nonempty blocks, ordered by min."""
    items = list(items)
    if blocks == 0:
        if not items:
            yield []
        return
    if len(items) < blocks:
        return
    first, rest = items[0], items[1:]
    # The block of the smallest item comes first.
    for size in range(0, len(rest) + 1):
        for companions in itertools.combinations(rest, size):
            remaining = [x for x in rest if x not in companions]
            for tail in set_partitions(remaining, blocks - 1):
                yield [[first] + list(companions)] + tail


class TreeEnumerator:
    """
    Enumerates normal-form trees over a Σ-module with a vertex budget.
    """

    def __init__(self, smodule):
        self.smodule = smodule
        self.labels = [(k, b) for k in smodule.arities()
                       for b in range(smodule.component(k).dim)]
        self._memo = {}  # type: typing.Dict[typing.Tuple[int, int], typing.List]

    def trees(self, m, budget):
        """Normal trees with leaves 1..m and at most ``budget`` vertices."""
        key = (m, budget)
        if key in self._memo:
            return self._memo[key]
        result = []
        if m == 1:
            result.append(1)
        if budget > 0:
            for k in self.smodule.arities():
                dim = self.smodule.component(k).dim
                if not dim:
                    continue
                for kids in self._children(k, m, budget - 1):
                    for b in range(dim):
                        result.append((k, b, kids))
        result.sort(key=lambda t: (vertex_count(t), structural_key(t)))
        self._memo[key] = result
        return result

    def _children(self, k, m, budget):
        leafless = sorted(self.trees(0, budget), key=sort_key) if budget > 0 else []
        for leafy in range(1 if m else 0, min(k, m) + 1):
            bare = k - leafy
            if bare and not leafless:
                continue
            for blocks in set_partitions(range(1, m + 1), leafy):
                options = []
                for block in blocks:
                    mapping = {r: l for r, l in enumerate(block, 1)}
                    options.append([relabel_leaves(t, mapping)
                                    for t in self.trees(len(block), budget)])
                for filled in itertools.product(*options):
                    used = sum(vertex_count(t) for t in filled)
                    if used > budget:
                        continue
                    for rest in itertools.combinations_with_replacement(
                            leafless, bare):
                        if used + sum(vertex_count(t) for t in rest) <= budget:
                            yield tuple(filled) + tuple(rest)
