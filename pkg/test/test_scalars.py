#!/usr/bin/env python

import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from opcalc.algebra.exception import FieldMismatch
from opcalc.algebra.scalars import DEFAULT_FIELD_NAME, Field, default_field
from opcalc.algebra.vectors import (
    add_into,
    combine,
    difference,
    remapped,
    scaled,
    sorted_items,
)


class TestField(unittest.TestCase):

    def test_names(self):
        self.assertEqual(Field('Q').name, 'Q')
        self.assertEqual(Field('QQ'), Field('Q'))
        self.assertEqual(Field('GF7'), Field('F7'))
        self.assertEqual(Field('F_7').characteristic, 7)
        self.assertEqual(default_field().name, DEFAULT_FIELD_NAME)
        self.assertEqual(repr(Field('F5')), "Field('F5')")

    def test_rejects_non_fields(self):
        with self.assertRaises(ValueError):
            Field('F4')
        with self.assertRaises(ValueError):
            Field('R')

    def test_fractions(self):
        q = Field('Q')
        self.assertEqual(q.to_json(q.fraction(3, 4)), '3/4')
        self.assertEqual(q.to_json(q.fraction(4, 2)), 2)
        f5 = Field('F5')
        self.assertEqual(f5.fraction(1, 2) * f5(2), f5.one)
        with self.assertRaises(ZeroDivisionError):
            f5.fraction(1, 5)
        with self.assertRaises(ZeroDivisionError):
            q.fraction(1, 0)

    def test_characteristic_wraps(self):
        f3 = Field('F3')
        self.assertEqual(f3(3), f3.zero)
        self.assertFalse(f3(6))

    def test_sign(self):
        q = Field('Q')
        self.assertEqual(q.sign(2), q.one)
        self.assertEqual(q.sign(-1), -q.one)

    def test_check_same(self):
        Field('Q').check_same(Field('QQ'))
        with self.assertRaises(FieldMismatch):
            Field('Q').check_same(Field('F101'))

    @settings(max_examples=40)
    @given(st.integers(-50, 50), st.integers(1, 50))
    def test_fraction_times_denominator(self, numerator, denominator):
        q = Field('Q')
        self.assertEqual(q.fraction(numerator, denominator) * q(denominator),
                         q(numerator))


class TestVectors(unittest.TestCase):

    def setUp(self):
        self.q = Field('Q')

    def test_add_into_drops_zeros(self):
        q = self.q
        v = {0: q(1), 1: q(2)}
        add_into(v, {0: q(-1), 2: q(3)})
        self.assertEqual(v, {1: q(2), 2: q(3)})
        add_into(v, {1: q(1)}, q(-2))
        self.assertEqual(v, {2: q(3)})

    def test_scaled(self):
        q = self.q
        self.assertEqual(scaled({0: q(2)}, q.zero), {})
        self.assertEqual(scaled({0: q(2)}, q(3)), {0: q(6)})

    def test_combine_and_difference(self):
        q = self.q
        u = {0: q(1), 1: q(1)}
        v = {1: q(1), 2: q(1)}
        self.assertEqual(combine([(q(1), u), (q(-1), v)]), difference(u, v))
        self.assertEqual(difference(u, u), {})

    def test_remapped_merges(self):
        q = self.q
        self.assertEqual(remapped({0: q(1), 1: q(-1)}, [5, 5]), {})
        self.assertEqual(remapped({0: q(1), 1: q(2)}, {0: 3, 1: 2}),
                         {3: q(1), 2: q(2)})
        self.assertEqual(sorted_items({3: q(1), 2: q(2)}), [(2, q(2)), (3, q(1))])


if __name__ == '__main__':
    unittest.main()
