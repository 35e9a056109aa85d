"""
Finite categories and the finality of the diagonal functor on the category
that indexes reflexive pairs.

That category has two objects, ``0`` (the source of the pair) and ``1``,
arrows ``i, j: 0 -> 1`` and ``s: 1 -> 0`` with i∘s = j∘s = 1. Its seven
morphisms are the two identities, i, j, s, s∘i and s∘j.
"""
import itertools
import logging

from opcalc.algebra.checking import CheckReport

_MYPY = False
if _MYPY:
    import typing  # noqa: F401 # pylint: disable=import-error,unused-import,useless-suppression

logger = logging.getLogger('opcalc.operads.finality')


class FiniteCategory:
    """
    A category given by tables.

    Args:
        objects (list): Object labels.
        morphisms (dict): Name -> (source, target).
        identities (dict): Object -> name of its identity.
        composition (dict): (g, f) -> name of g∘f, for composable g, f.
    """

    def __init__(self, objects, morphisms, identities, composition, name=None):
        self.objects = list(objects)
        self.morphisms = dict(morphisms)
        self.identities = dict(identities)
        self.composition = dict(composition)
        self.name = name

    def source(self, f):
        return self.morphisms[f][0]

    def target(self, f):
        return self.morphisms[f][1]

    def hom(self, a, b):
        return sorted(f for f, (s, t) in self.morphisms.items() if s == a and t == b)

    def identity(self, a):
        return self.identities[a]

    def compose(self, g, f):
        """g∘f."""
        if self.target(f) != self.source(g):
            raise ValueError('%s and %s are not composable.' % (g, f))
        return self.composition[(g, f)]

    def check(self):
        """Identity and associativity laws, over every composable triple."""
        report = CheckReport('category')
        for f in self.morphisms:
            a, b = self.morphisms[f]
            report.expect(self.compose(f, self.identity(a)) == f, 'identity',
                          'f∘1 differs from f.', morphism=f)
            report.expect(self.compose(self.identity(b), f) == f, 'identity',
                          '1∘f differs from f.', morphism=f)
        for f, g, h in itertools.product(self.morphisms, repeat=3):
            if self.target(f) != self.source(g) or self.target(g) != self.source(h):
                continue
            left = self.compose(h, self.compose(g, f))
            right = self.compose(self.compose(h, g), f)
            report.expect(left == right, 'associativity',
                          'Composition is not associative.', morphisms=[f, g, h])
        return report

    def __repr__(self):
        return 'FiniteCategory({!r}, {} morphisms)'.format(self.name, len(self.morphisms))


class ProductCategory(FiniteCategory):
    """The n-fold power of a finite category, computed componentwise."""

    def __init__(self, base, n):
        self.base = base
        self.n = n
        objects = list(itertools.product(base.objects, repeat=n))
        morphisms = {fs: (tuple(base.source(f) for f in fs),
                          tuple(base.target(f) for f in fs))
                     for fs in itertools.product(sorted(base.morphisms), repeat=n)}
        identities = {a: tuple(base.identity(x) for x in a) for a in objects}
        super().__init__(objects, morphisms, identities, {},
                         name='%s^%d' % (base.name, n))

    def hom(self, a, b):
        return [tuple(fs) for fs in
                itertools.product(*[self.base.hom(x, y) for x, y in zip(a, b)])]

    def compose(self, g, f):
        return tuple(self.base.compose(x, y) for x, y in zip(g, f))


def reflexive_category():
    """The indexing category of reflexive pairs."""
    morphisms = {
        '1_0': (0, 0),
        '1_1': (1, 1),
        'i': (0, 1),
        'j': (0, 1),
        's': (1, 0),
        'si': (0, 0),
        'sj': (0, 0),
    }
    identities = {0: '1_0', 1: '1_1'}
    table = {
        ('i', 's'): '1_1',
        ('j', 's'): '1_1',
        ('s', 'i'): 'si',
        ('s', 'j'): 'sj',
        ('i', 'si'): 'i',
        ('i', 'sj'): 'j',
        ('j', 'si'): 'i',
        ('j', 'sj'): 'j',
        ('si', 'si'): 'si',
        ('si', 'sj'): 'sj',
        ('sj', 'si'): 'si',
        ('sj', 'sj'): 'sj',
        ('si', 's'): 's',
        ('sj', 's'): 's',
    }
    for f, (a, b) in morphisms.items():
        table[(f, identities[a])] = f
        table[(identities[b], f)] = f
    return FiniteCategory([0, 1], morphisms, identities, table, name='D0')


class _UnionFind:

    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        self.parent[self.find(x)] = self.find(y)

    def components(self):
        return len({self.find(x) for x in range(len(self.parent))})


def comma_components(base, power, x):
    """
    Connected components of the comma category x/Δ for the diagonal
    Δ: base -> power. Objects are pairs (c, m: x -> Δc) and a morphism
    (c, m) -> (c', m') is u: c -> c' with Δ(u)∘m = m'.

    Returns ``(object count, component count)``.
    """
    objects = []
    for c in base.objects:
        for m in power.hom(x, (c,) * power.n):
            objects.append((c, m))
    index = {obj: k for k, obj in enumerate(objects)}
    uf = _UnionFind(len(objects))
    for c, m in objects:
        for u, (a, b) in base.morphisms.items():
            if a != c:
                continue
            image = power.compose((u,) * power.n, m)
            uf.union(index[(c, m)], index[(b, image)])
    return len(objects), uf.components() if objects else 0


def check_diagonal_final(n):
    """
    The diagonal from the reflexive-pair category into its n-th power is
    final: every comma category x/Δ is nonempty and connected.
    """
    if n < 1:
        raise ValueError('Power must be at least 1, got %d.' % n)
    base = reflexive_category()
    power = ProductCategory(base, n)
    report = CheckReport('diagonal-final')
    report.merge(base.check())
    for x in power.objects:
        size, components = comma_components(base, power, x)
        report.expect(size > 0, 'nonempty', 'The comma category is empty.', object=x)
        report.expect(components == 1, 'connected',
                      'The comma category is not connected.',
                      object=x, components=components)
    logger.info('Diagonal into D0^%d: %s', n, 'final' if report else 'not final')
    return report
