#!/usr/bin/env python

import random
import textwrap
import unittest

from sympy import Matrix

from opcalc.algebra.graded import GradedSpace, LinearMap
from opcalc.algebra.linalg import LinearReflexivePair, map_rank
from opcalc.algebra.permutations import Permutation
from opcalc.algebra.scalars import Field
from opcalc.algebra.smodule import (
    REGULAR,
    Generator,
    SModuleMap,
    direct_sum_smodules,
    generated_smodule,
)
from opcalc.algebra.vectors import difference
from opcalc.frontend.builder import build_presentation, presentation_pair
from opcalc.frontend.frontend import parse
from opcalc.operads.checks import check_morphism, check_operad
from opcalc.operads.colimits import (
    FiniteDiagram,
    FreeReflexivePair,
    ReflexivePair,
    check_tensor_coeq_iso,
    cocone_factorization,
    coequalizer,
    colimit,
    coproduct,
    factor_through_quotient,
    ideal_closure,
    pushout,
    reflexive_coequalizer,
    relation_pair,
)
from opcalc.operads.exception import (
    MorphismError,
    NonCommutingCocone,
    NotReflexive,
    OperadError,
)
from opcalc.operads.free import (
    free_on_morphism,
    free_operad,
    theta,
    theta_inverse,
)
from opcalc.operads.operad import (
    OperadMorphism,
    compose_morphisms,
    identity_morphism,
)
from opcalc.operads.truncation import TruncationProfile
from opcalc.operads.zoo import augmentation_M_to_N, operad_M, operad_N

Q = Field('Q')

TRIVIAL_MU = 'field Q;\ngen mu : arity 2, degree 0;\n'
REGULAR_MU = 'field Q;\ngen mu : arity 2, degree 0, action regular;\n'
ASSOCIATOR = 'rel mu(mu(1,2),3) - mu(1,mu(2,3));\n'

# (presentation, dims, whether the generators sent to a_2 factor to N)
PRESENTED = [
    (TRIVIAL_MU + ASSOCIATOR, {0: 0, 1: 1, 2: 1, 3: 1}, True),
    (REGULAR_MU + ASSOCIATOR, {0: 0, 1: 1, 2: 2, 3: 6}, True),
    (textwrap.dedent("""\
        field Q;
        gen l : arity 2, degree 0, action sign;
        rel l(l(1,2),3) + l(l(2,3),1) + l(l(3,1),2);
        """), {0: 0, 1: 1, 2: 1, 3: 2}, None),
    (TRIVIAL_MU + 'rel mu(mu(1,2),3);\n', {0: 0, 1: 1, 2: 1, 3: 0}, False),
    (REGULAR_MU + 'rel mu(1,2) - mu[2,1](1,2);\n', {0: 0, 1: 1, 2: 1, 3: 3}, True),
]


def binary_free(name, max_arity=3, max_depth=3, action=None):
    gen = Generator(name, 2, 0) if action is None else Generator(name, 2, 0, action)
    module = generated_smodule(Q, [gen], max_arity, name=name)
    return free_operad(module, TruncationProfile(max_arity=max_arity,
                                                 max_depth=max_depth))


def associator(free):
    left = free.tree_vector((2, 0, ((2, 0, (1, 2)), 3)))
    right = free.tree_vector((2, 0, (1, (2, 0, (2, 3)))))
    return difference(left, right)


def oracle_rank(columns, dim):
    rows = [[Q.domain.to_sympy(col.get(j, Q.zero)) for j in range(dim)]
            for col in columns if col]
    return Matrix(rows).rank() if rows else 0


def constant_map(free, target):
    """Sends every generator of F(X) to the basis vector of target(k)."""
    return theta_inverse(free, SModuleMap.from_function(
        free.generators, target.smodule, lambda k, b: {0: Q.one}), target)


def arity_weight(operad, c):
    """a_n·ρ -> c^(n-1) a_n·ρ, an automorphism of N and of M for c != 0."""
    c = Q(c)
    return OperadMorphism.from_function(
        operad, operad, lambda n, i: {i: c ** (n - 1) if n else Q.one / c},
        name='w')


class TestReflexiveCoequalizer(unittest.TestCase):

    def setUp(self):
        self.trunc = TruncationProfile(max_arity=3)
        self.n = operad_N(self.trunc, Q)
        self.m = operad_M(self.trunc, Q)

    def test_identity_pair(self):
        ident = identity_morphism(self.n)
        quotient = reflexive_coequalizer(ReflexivePair(ident, ident, ident))
        self.assertEqual(quotient.operad.dims(), self.n.dims())
        operad, projection = quotient
        self.assertTrue(check_morphism(projection).passed)

    def test_not_reflexive(self):
        ident = identity_morphism(self.n)
        aug = augmentation_M_to_N(self.m, self.n)
        with self.assertRaises(NotReflexive):
            ReflexivePair(ident, aug, ident)
        zero = OperadMorphism.from_function(self.n, self.n, lambda n, i: {})
        with self.assertRaises(NotReflexive):
            ReflexivePair(ident, zero, ident)

    def test_presented_pairs_match_the_rank_oracle(self):
        for text, dims, _ in PRESENTED:
            with self.subTest(text=text):
                pres = build_presentation(parse(text), self.trunc)
                pair = presentation_pair(pres)
                quotient = reflexive_coequalizer(pair)
                self.assertEqual(dict(quotient.operad.dims()), dims)
                self.assertEqual(quotient.operad.dims(), pres.operad.dims())
                q = quotient.morphism
                for n in pres.free.arities():
                    dim = pres.free.component(n).dim
                    columns = (pair.f.component(n) - pair.g.component(n)).columns
                    expected = oracle_rank(columns, dim)
                    self.assertEqual(quotient.quotients[n].reducer.rank, expected)
                    self.assertEqual(quotient.operad.component(n).dim, dim - expected)
                    for col in columns:
                        self.assertEqual(q.apply(n, col), {})
                    self.assertEqual(map_rank(q.component(n)),
                                     quotient.operad.component(n).dim)
                self.assertEqual(compose_morphisms(q, pair.f),
                                 compose_morphisms(q, pair.g))
                self.assertTrue(pair.equalizes(q))
                self.assertTrue(check_morphism(q).passed)

    def test_presented_pairs_factor_exactly_when_they_equalize(self):
        n = operad_N(self.trunc, Q)
        for text, _, factors in PRESENTED:
            if factors is None:
                continue
            with self.subTest(text=text):
                pres = build_presentation(parse(text), self.trunc)
                pair = presentation_pair(pres)
                quotient = reflexive_coequalizer(pair)
                h = constant_map(pres.free, n)
                self.assertEqual(pair.equalizes(h), factors)
                if not factors:
                    with self.assertRaises(NonCommutingCocone):
                        factor_through_quotient(quotient, h)
                    continue
                descended = factor_through_quotient(quotient, h)
                self.assertTrue(check_morphism(descended).passed)
                self.assertEqual(compose_morphisms(descended, quotient.morphism), h)

    def test_unit_choices_agree(self):
        pres = build_presentation(parse(REGULAR_MU + ASSOCIATOR), self.trunc)
        quotient = reflexive_coequalizer(presentation_pair(pres))
        pair = quotient.pair
        self.assertEqual(quotient.project(1, pair.f.apply(1, pair.source.unit)),
                         quotient.operad.unit)


class TestRelationPairs(unittest.TestCase):

    def test_commutative_associative(self):
        free = binary_free('mu', max_arity=4)
        quotient = reflexive_coequalizer(
            relation_pair(free, [(3, associator(free))]), name='Com')
        self.assertEqual(dict(quotient.operad.dims()),
                         {0: 0, 1: 1, 2: 1, 3: 1, 4: 1})
        self.assertEqual(quotient.operad.name, 'Com')

    def test_quotient_is_an_operad(self):
        free = binary_free('mu')
        quotient = reflexive_coequalizer(relation_pair(free, [(3, associator(free))]))
        report = check_operad(quotient.operad)
        self.assertTrue(report.passed, report.failures)
        self.assertTrue(check_morphism(quotient.morphism).passed)

    def test_closure_is_sigma_stable(self):
        free = binary_free('mu')
        reducers = ideal_closure(free, {3: [associator(free)]})
        # Every parenthesization of three inputs lies in one class.
        self.assertEqual(reducers[3].rank, 2)
        self.assertEqual(reducers[2].rank, 0)

    def test_enumerated_pair_agrees(self):
        free = binary_free('mu')
        pair = relation_pair(free, [(3, associator(free))])
        quotient = reflexive_coequalizer(pair)
        enumerated = pair.morphisms()
        self.assertEqual(enumerated.target.dims(), free.dims())
        self.assertEqual(reflexive_coequalizer(enumerated).operad.dims(),
                         quotient.operad.dims())
        self.assertTrue(pair.equalizes(quotient.morphism))
        self.assertTrue(enumerated.equalizes(quotient.morphism))

    def test_section_must_split_both_maps(self):
        free = binary_free('mu')
        pair = relation_pair(free, [(3, associator(free))])
        with self.assertRaises(NotReflexive) as cm:
            FreeReflexivePair(free, pair.generators, pair.first, pair.second,
                              SModuleMap.zero(free.generators, pair.generators))
        self.assertEqual(cm.exception.witness[:2], ('d0', 2))

    def test_factor_through_quotient(self):
        free = binary_free('mu')
        quotient = reflexive_coequalizer(relation_pair(free, [(3, associator(free))]))
        n = operad_N(free.trunc, Q)
        h = factor_through_quotient(quotient, constant_map(free, n))
        self.assertTrue(check_morphism(h).passed)
        self.assertEqual(compose_morphisms(h, quotient.morphism),
                         constant_map(free, n))

    def test_symmetrized_product_is_not_associative(self):
        free = binary_free('mu')
        quotient = reflexive_coequalizer(relation_pair(free, [(3, associator(free))]))
        m = operad_M(free.trunc, Q)
        symmetrize = SModuleMap.from_function(free.generators, m.smodule,
                                              lambda k, b: {0: Q.one, 1: Q.one})
        with self.assertRaises(NonCommutingCocone) as cm:
            factor_through_quotient(quotient, theta_inverse(free, symmetrize, m))
        self.assertEqual(cm.exception.witness[0], 3)


class TestColimits(unittest.TestCase):

    def setUp(self):
        self.trunc = TruncationProfile(max_arity=2, max_depth=2)
        self.n = operad_N(self.trunc, Q)
        self.m = operad_M(self.trunc, Q)
        self.aug = augmentation_M_to_N(self.m, self.n)

    def test_diagram_validation(self):
        with self.assertRaises(OperadError):
            FiniteDiagram([])
        with self.assertRaises(OperadError):
            FiniteDiagram([self.n], [(0, 1, self.aug)])
        with self.assertRaises(MorphismError):
            FiniteDiagram([self.n, self.m], [(0, 1, self.aug)])

    def test_coproduct_of_one_object(self):
        colim = coproduct([self.n])
        self.assertEqual(colim.operad.dims(), self.n.dims())
        self.assertEqual(len(colim.cocone), 1)
        self.assertEqual(colim.cocone[0].name, 'f0')
        self.assertTrue(check_morphism(colim.cocone[0]).passed)
        self.assertIsInstance(colim.pair, FreeReflexivePair)

    def test_enumerated_free_pair(self):
        colim = coproduct([self.n])
        enumerated = colim.pair.morphisms()
        self.assertEqual(enumerated.s.name, 's')
        quotient = reflexive_coequalizer(enumerated, verify=False)
        self.assertEqual(quotient.operad.dims(), colim.operad.dims())

    def test_coproduct_with_nullary_operations(self):
        trunc = TruncationProfile(max_arity=3, max_depth=2)
        n = operad_N(trunc, Q)
        colim = coproduct([n, n])
        # (2; 3, 0) passes through arity 4 if the inputs are grafted one at a time.
        self.assertIsInstance(colim.operad.compose_basis(2, (3, 0), (0, 0, 0)), dict)
        ident = identity_morphism(n)
        fold = cocone_factorization(colim, [ident, ident])
        self.assertTrue(check_morphism(fold).passed)
        for edge in colim.cocone:
            self.assertEqual(compose_morphisms(fold, edge), ident)

    def test_fold(self):
        colim = coproduct([self.n, self.n])
        ident = identity_morphism(self.n)
        fold = cocone_factorization(colim, [ident, ident], name='fold')
        self.assertEqual(fold.name, 'fold')
        self.assertTrue(check_morphism(fold).passed)
        self.assertEqual(compose_morphisms(fold, colim.cocone[0]), ident)
        self.assertEqual(compose_morphisms(fold, colim.cocone[1]), ident)

    def test_cocone_edges_are_determined_by_the_generators(self):
        colim = coproduct([self.n, self.m])
        q = colim.presentation.morphism
        free = colim.presentation.source
        for i, edge in enumerate(colim.cocone):
            self.assertEqual(edge.underlying(),
                             theta(q, free).compose(colim.generators.cocone[i]))

    def test_free_pair_equalizes_exactly_operad_morphisms(self):
        colim = coproduct([self.n])
        ident = identity_morphism(self.n)
        self.assertTrue(colim.pair.equalizes(colim.lift([ident])))
        self.assertTrue(colim.pair.equalizes(colim.presentation.morphism))
        # Scaling a_2 alone breaks γ(a_2; a_2, a_0) = a_2.
        doubled = OperadMorphism.from_function(
            self.n, self.n, lambda n, i: {0: Q(2) if n == 2 else Q.one})
        self.assertFalse(check_morphism(doubled).passed)
        self.assertFalse(colim.pair.equalizes(colim.lift([doubled])))
        with self.assertRaises(NonCommutingCocone):
            cocone_factorization(colim, [doubled])

    def test_invariant_under_permuting_objects(self):
        first = coproduct([self.n, self.m])
        second = coproduct([self.m, self.n])
        self.assertEqual(first.operad.dims(), second.operad.dims())
        there = cocone_factorization(first, [second.cocone[1], second.cocone[0]])
        back = cocone_factorization(second, [first.cocone[1], first.cocone[0]])
        self.assertEqual(compose_morphisms(back, there),
                         identity_morphism(first.operad))
        self.assertEqual(compose_morphisms(there, back),
                         identity_morphism(second.operad))

    def test_collapsing_along_an_epimorphism(self):
        colim = colimit(FiniteDiagram([self.m, self.n], [(0, 1, self.aug)]))
        self.assertEqual(dict(colim.operad.dims()), {0: 1, 1: 1, 2: 1})
        for edge in colim.cocone:
            self.assertTrue(check_morphism(edge).passed)

    def test_coequalizer_of_equal_maps(self):
        colim = coequalizer(self.aug, self.aug)
        self.assertEqual(dict(colim.operad.dims()), {0: 1, 1: 1, 2: 1})
        self.assertIsInstance(colim.pair, ReflexivePair)
        self.assertEqual([e.name for e in colim.cocone], ['f0', 'f1'])
        with self.assertRaises(MorphismError):
            coequalizer(self.aug, identity_morphism(self.n))

    def test_coequalizer_of_arity_weights(self):
        weight = arity_weight(self.m, -1)
        self.assertTrue(check_morphism(weight).passed)
        # Twisting a_n·ρ by the sign of ρ is not compatible with γ.
        twist = OperadMorphism.from_function(
            self.m, self.m,
            lambda n, i: {i: self.m.component(n).keys[i].sign(Q)})
        self.assertFalse(check_morphism(twist).passed)
        colim = coequalizer(identity_morphism(self.m), weight)
        # a_0 and a_2 are killed, and with them a_1 = γ(a_2; a_1, a_0).
        self.assertEqual(dict(colim.operad.dims()), {0: 0, 1: 0, 2: 0})
        self.assertTrue(colim.pair.equalizes(colim.presentation.morphism))

    def test_coequalizer_of_free_operads(self):
        free = binary_free('mu', max_depth=2, action=REGULAR)
        module = free.generators
        swap = SModuleMap.from_function(
            module, module,
            lambda k, b: module.act(k, {b: Q.one}, Permutation([2, 1])), name='swap')
        ident = identity_morphism(free)
        colim = coequalizer(ident, free_on_morphism(swap, free, free))
        self.assertEqual(dict(colim.operad.dims()), {0: 0, 1: 1, 2: 1, 3: 3})
        e = free.generator_vector(2, 0)
        relations = [(2, difference(e, free.act(2, e, Permutation([2, 1]))))]
        presented = reflexive_coequalizer(relation_pair(free, relations))
        self.assertEqual(colim.operad.dims(), presented.operad.dims())

        n = operad_N(free.trunc, Q)
        target = constant_map(free, n)
        h = cocone_factorization(colim, [target, target])
        self.assertTrue(check_morphism(h).passed)
        self.assertEqual(compose_morphisms(h, colim.cocone[1]), target)
        self.assertEqual(compose_morphisms(h, colim.cocone[0]), target)

    def test_pushout(self):
        colim = pushout(self.aug, self.aug)
        self.assertEqual(dict(colim.operad.dims()), {0: 1, 1: 1, 2: 1})
        self.assertEqual(len(colim.cocone), 3)

    def test_factorization(self):
        colim = colimit(FiniteDiagram([self.m, self.n], [(0, 1, self.aug)]))
        h = cocone_factorization(colim, [self.aug, identity_morphism(self.n)])
        self.assertTrue(check_morphism(h).passed)
        self.assertEqual(compose_morphisms(h, colim.cocone[1]),
                         identity_morphism(self.n))
        self.assertEqual(compose_morphisms(h, colim.cocone[0]), self.aug)

    def test_non_commuting_cocone(self):
        colim = colimit(FiniteDiagram([self.m, self.n], [(0, 1, self.aug)]))
        zero = OperadMorphism.from_function(self.m, self.n, lambda n, i: {})
        with self.assertRaises(NonCommutingCocone) as cm:
            cocone_factorization(colim, [zero, identity_morphism(self.n)])
        self.assertEqual(cm.exception.arrow, 0)
        with self.assertRaises(MorphismError):
            cocone_factorization(colim, [self.aug])


class TestRandomTargets(unittest.TestCase):

    def test_factorization_into_scaled_targets(self):
        fx = binary_free('mu', max_depth=2)
        fy = binary_free('nu', max_depth=2)
        n = operad_N(fx.trunc, Q)
        colim = coproduct([fx, fy])
        rng = random.Random(7)
        for _ in range(3):
            scales = [Q(rng.randint(1, 5)) for _ in range(2)]
            targets = [theta_inverse(free, SModuleMap.from_function(
                free.generators, n.smodule, lambda k, b, c=c: {0: c}), n)
                for free, c in zip([fx, fy], scales)]
            h = cocone_factorization(colim, targets)
            self.assertTrue(check_morphism(h).passed)
            for edge, target in zip(colim.cocone, targets):
                self.assertEqual(compose_morphisms(h, edge), target)
        # h is unique: every component of the colimit is reached from F(A).
        q = colim.presentation.morphism
        for k in colim.operad.arities():
            self.assertEqual(map_rank(q.component(k)), colim.operad.component(k).dim)


class TestFreePreservesCoproducts(unittest.TestCase):

    def test_coproduct_of_free_operads(self):
        fx = binary_free('mu', max_depth=2, action=REGULAR)
        fy = binary_free('nu', max_depth=2)
        colim = coproduct([fx, fy])
        both, (in_x, in_y), (pr_x, pr_y) = direct_sum_smodules(
            [fx.generators, fy.generators])
        fxy = free_operad(both, fx.trunc)
        self.assertEqual(dict(fxy.dims()), {0: 0, 1: 1, 2: 3, 3: 27})
        self.assertEqual(colim.operad.dims(), fxy.dims())

        g = (theta(colim.cocone[0], fx).compose(pr_x) +
             theta(colim.cocone[1], fy).compose(pr_y))
        canonical = theta_inverse(fxy, g, colim.operad)
        inverse = cocone_factorization(colim, [free_on_morphism(in_x, fx, fxy),
                                               free_on_morphism(in_y, fy, fxy)])
        self.assertEqual(compose_morphisms(inverse, canonical),
                         identity_morphism(fxy))
        self.assertEqual(compose_morphisms(canonical, inverse),
                         identity_morphism(colim.operad))
        self.assertTrue(check_morphism(canonical).passed)


def random_linear_pair(rng):
    """A reflexive pair A ⇉ B of graded spaces with degrees in {0, 1}."""
    one = Q.one
    degrees = [rng.choice([0, 1]) for _ in range(rng.randint(1, 2))]
    extras = [rng.choice(degrees) for _ in range(rng.randint(1, 2))]
    b = GradedSpace(Q, [('b%d' % i, d) for i, d in enumerate(degrees)])
    a = GradedSpace(Q, [('a%d' % i, d) for i, d in enumerate(degrees + extras)])

    def column(d):
        col = {j: Q(rng.randint(-2, 2)) for j, e in enumerate(degrees) if e == d}
        return {j: c for j, c in col.items() if c}

    split = [{i: one} for i in range(len(degrees))]
    f = LinearMap(a, b, 0, split + [column(d) for d in extras])
    g = LinearMap(a, b, 0, split + [column(d) for d in extras])
    s = LinearMap(b, a, 0, split)
    return LinearReflexivePair(f, g, s)


class TestTensorCoequalizers(unittest.TestCase):

    def pair(self):
        one = Q.one
        a = GradedSpace(Q, [('a1', 0), ('a2', 0), ('a3', 0)])
        b = GradedSpace(Q, [('b1', 0), ('b2', 0)])
        f = LinearMap(a, b, 0, [{0: one}, {1: one}, {1: one}])
        g = LinearMap(a, b, 0, [{0: one}, {1: one}, {0: one}])
        s = LinearMap(b, a, 0, [{0: one}, {1: one}])
        return LinearReflexivePair(f, g, s)

    def odd_pair(self):
        one = Q.one
        a = GradedSpace(Q, [('u', 1), ('v', 1)])
        b = GradedSpace(Q, [('w', 1)])
        f = LinearMap(a, b, 0, [{0: one}, {0: one}])
        g = LinearMap(a, b, 0, [{0: one}, {}])
        s = LinearMap(b, a, 0, [{0: one}])
        return LinearReflexivePair(f, g, s)

    def test_iso(self):
        self.assertEqual(self.pair().coequalizer().space.dim, 1)
        report = check_tensor_coeq_iso([self.pair(), self.pair()])
        self.assertTrue(report.passed, report.failures)
        self.assertIn('inverse', report.checked)

    def test_odd_pairs(self):
        report = check_tensor_coeq_iso([self.odd_pair(), self.pair()])
        self.assertTrue(report.passed, report.failures)

    def test_three_factors(self):
        report = check_tensor_coeq_iso([self.odd_pair(), self.pair(), self.odd_pair()])
        self.assertTrue(report.passed, report.failures)
        self.assertIn('inverse', report.checked)

    def test_generated_pairs(self):
        for seed in range(6):
            with self.subTest(seed=seed):
                rng = random.Random(seed)
                count = 3 if seed % 2 == 0 else 2
                pairs = [random_linear_pair(rng) for _ in range(count)]
                report = check_tensor_coeq_iso(pairs)
                self.assertTrue(report.passed, report.failures)


if __name__ == '__main__':
    unittest.main()
