#!/usr/bin/env python

import unittest

from opcalc.algebra.permutations import Permutation
from opcalc.algebra.scalars import Field
from opcalc.algebra.smodule import (
    REGULAR,
    SIGN,
    Generator,
    SModuleMap,
    generated_smodule,
)
from opcalc.operads.checks import check_morphism, check_operad
from opcalc.operads.exception import MorphismError, TruncationOverflow
from opcalc.operads.free import (
    check_triangular,
    epsilon_counit,
    eta_unit,
    free_on_morphism,
    free_operad,
    theta,
    theta_inverse,
)
from opcalc.operads.operad import identity_morphism
from opcalc.operads.trees import (
    TreeEnumerator,
    act_on_leaves,
    arity,
    corolla,
    graft,
    is_normal,
    leaves,
    normal_forms,
    normalize,
    set_partitions,
    standardize,
    tree_str,
    validate_tree,
    vertex_count,
)
from opcalc.operads.truncation import TruncationProfile
from opcalc.operads.zoo import operad_N

Q = Field('Q')


def binary(action='trivial', max_arity=4, degree=0, extra=()):
    return generated_smodule(Q, [Generator('mu', 2, degree, action)] + list(extra),
                             max_arity)


class TestTrees(unittest.TestCase):

    def test_shape(self):
        tree = (2, 0, ((2, 0, (3, 1)), 2))
        self.assertEqual(leaves(tree), [3, 1, 2])
        self.assertEqual(arity(tree), 3)
        self.assertEqual(vertex_count(tree), 2)
        self.assertEqual(corolla(3, 1), (3, 1, (1, 2, 3)))
        self.assertEqual(standardize((2, 0, (5, 2))), ((2, 0, (2, 1)), [2, 5]))

    def test_action_on_leaves(self):
        tree = corolla(2, 0)
        self.assertEqual(act_on_leaves(tree, Permutation([2, 1])), (2, 0, (2, 1)))

    def test_normalize_trivial(self):
        module = binary()
        self.assertEqual(normalize((2, 0, (2, 1)), module), {corolla(2, 0): Q.one})
        self.assertTrue(is_normal(corolla(2, 0)))
        self.assertFalse(is_normal((2, 0, (2, 1))))

    def test_normalize_regular_and_sign(self):
        regular = binary(REGULAR)
        self.assertEqual(normalize((2, 0, (2, 1)), regular), {(2, 1, (1, 2)): Q.one})
        signed = binary(SIGN)
        self.assertEqual(normalize((2, 0, (2, 1)), signed), {corolla(2, 0): -Q.one})
        forms = normal_forms((2, 0, (2, 1)), signed)
        self.assertEqual([f.coefficient for f in forms], [-Q.one])

    def test_graft(self):
        module = binary()
        grafted, sign = graft(corolla(2, 0), [corolla(2, 0), 1], module)
        self.assertEqual(grafted, (2, 0, ((2, 0, (1, 2)), 3)))
        self.assertEqual(sign, Q.one)
        grafted, _ = graft(corolla(2, 0), [1, corolla(2, 0)], module)
        self.assertEqual(grafted, (2, 0, (1, (2, 0, (2, 3)))))

    def test_graft_sign_for_odd_vertices(self):
        module = binary(degree=1)
        # The inner vertex moves past nothing: the outer one already precedes it.
        _, sign = graft(corolla(2, 0), [corolla(2, 0), 1], module)
        self.assertEqual(sign, Q.one)

    def test_validate_tree(self):
        module = binary()
        validate_tree((2, 0, (1, 2)), module)
        with self.assertRaises(ValueError):
            validate_tree((2, 0, (1, 3)), module)
        with self.assertRaises(ValueError):
            validate_tree((2, 0, (1,)), module)
        with self.assertRaises(ValueError):
            validate_tree((2, 4, (1, 2)), module)

    def test_tree_str(self):
        module = binary(REGULAR)
        self.assertEqual(tree_str((2, 1, ((2, 0, (1, 2)), 3)), module),
                         'mu[2,1](mu(1,2),3)')

    def test_set_partitions(self):
        parts = list(set_partitions([1, 2, 3], 2))
        self.assertEqual(parts, [[[1], [2, 3]], [[1, 2], [3]], [[1, 3], [2]]])
        self.assertEqual(list(set_partitions([], 0)), [[]])

    def test_enumerator(self):
        enumerator = TreeEnumerator(binary())
        self.assertEqual(enumerator.trees(1, 3), [1])
        self.assertEqual(len(enumerator.trees(3, 3)), 3)
        self.assertEqual(len(enumerator.trees(3, 1)), 0)
        self.assertTrue(all(is_normal(t) for t in enumerator.trees(4, 3)))


class TestFreeOperad(unittest.TestCase):

    def test_dims_trivial_binary(self):
        free = free_operad(binary(), TruncationProfile(max_arity=4, max_depth=3))
        self.assertEqual(dict(free.dims()), {0: 0, 1: 1, 2: 1, 3: 3, 4: 15})
        self.assertTrue(free.is_exact())
        self.assertEqual(free.name, 'F(X)')
        self.assertEqual(free.basis_tree(2, 0), corolla(2, 0))

    def test_dims_regular_binary(self):
        free = free_operad(binary(REGULAR, max_arity=3),
                           TruncationProfile(max_arity=3))
        self.assertEqual(dict(free.dims()), {0: 0, 1: 1, 2: 2, 3: 12})

    def test_depth_cutoff(self):
        free = free_operad(binary(), TruncationProfile(max_arity=4, max_depth=2))
        self.assertEqual(free.dims()[4], 0)
        self.assertFalse(free.exact)
        mu = free.generator_vector(2, 0)
        inner = free.compose(2, (2, 1), mu, [mu, free.unit])
        vec, overflow = free.compose_flagged(3, (2, 1, 1), inner,
                                             [mu, free.unit, free.unit])
        self.assertEqual(vec, {})
        self.assertTrue(overflow)
        with self.assertRaises(TruncationOverflow):
            free.tree_vector((2, 0, ((2, 0, ((2, 0, (1, 2)), 3)), 4)))

    def test_leafless_children(self):
        nullary = Generator('c', 0, 0)
        shallow = TruncationProfile(max_arity=2, max_depth=2)
        free = free_operad(binary(max_arity=2, extra=[nullary]), shallow)
        self.assertEqual(dict(free.dims()), {0: 1, 1: 2, 2: 1})
        self.assertFalse(free.is_exact())
        deep = TruncationProfile(max_arity=2, max_depth=3)
        free = free_operad(binary(max_arity=2, extra=[nullary]), deep)
        self.assertEqual(free.dims()[0], 2)
        # A sign-twisted vertex with two equal leafless children vanishes.
        free = free_operad(binary(SIGN, max_arity=2, extra=[nullary]), deep)
        self.assertEqual(free.dims()[0], 1)

    def test_degree_window(self):
        with self.assertRaises(TruncationOverflow):
            free_operad(binary(degree=3))
        free = free_operad(binary(degree=3, max_arity=2),
                           TruncationProfile(max_arity=2), check_degrees=False)
        self.assertEqual(dict(free.component(2).dims_by_degree()), {3: 1})

    def test_axioms(self):
        trunc = TruncationProfile(max_arity=3)
        for action in ('trivial', REGULAR):
            report = check_operad(free_operad(binary(action, max_arity=3), trunc))
            self.assertTrue(report.passed, report.failures)

    def test_action(self):
        free = free_operad(binary(REGULAR, max_arity=2), TruncationProfile(max_arity=2))
        mu = free.generator_vector(2, 0)
        swapped = free.act(2, mu, Permutation([2, 1]))
        self.assertNotEqual(swapped, mu)
        self.assertEqual(free.act(2, swapped, Permutation([2, 1])), mu)


class TestAdjunction(unittest.TestCase):

    def setUp(self):
        self.trunc = TruncationProfile(max_arity=3)
        self.x = binary(max_arity=3)
        self.free = free_operad(self.x, self.trunc)
        self.n = operad_N(self.trunc, Q)

    def test_theta_round_trip(self):
        g = SModuleMap.from_function(self.x, self.n.smodule,
                                     lambda n, i: {0: Q.one}, name='g')
        f = theta_inverse(self.free, g, self.n)
        self.assertTrue(check_morphism(f).passed)
        self.assertEqual(f.apply(3, {2: Q.one}), {0: Q.one})
        self.assertEqual(theta(f, self.free), g)

    def test_theta_inverse_needs_an_equivariant_map(self):
        regular = binary(REGULAR, max_arity=3)
        free = free_operad(regular, self.trunc)
        g = SModuleMap.from_function(regular, self.n.smodule,
                                     lambda n, i: {0: Q.one} if i == 0 else {})
        with self.assertRaises(MorphismError):
            theta_inverse(free, g, self.n)

    def test_eta(self):
        eta = eta_unit(self.free)
        self.assertEqual(eta.apply(2, {0: Q.one}), self.free.generator_vector(2, 0))

    def test_free_on_identity(self):
        ident = free_on_morphism(SModuleMap.identity(self.x), self.free, self.free)
        self.assertEqual(ident, identity_morphism(self.free))

    def test_counit(self):
        trunc = TruncationProfile(max_arity=2, max_depth=2)
        n = operad_N(trunc, Q)
        fup = free_operad(n.smodule, trunc, check_degrees=False)
        eps = epsilon_counit(n, fup)
        self.assertEqual(theta(eps, fup), SModuleMap.identity(n.smodule))
        self.assertTrue(check_morphism(eps).passed)

    def test_triangular_identities(self):
        report = check_triangular(generators=self.x)
        self.assertTrue(report.passed, report.failures)
        self.assertIn('counit-after-free-unit', report.checked)
        trunc = TruncationProfile(max_arity=2, max_depth=2)
        report = check_triangular(operad=operad_N(trunc, Q))
        self.assertTrue(report.passed, report.failures)
        self.assertIn('counit-after-unit', report.checked)


if __name__ == '__main__':
    unittest.main()
