#!/usr/bin/env python

import os
import textwrap
import unittest

from opcalc.algebra.scalars import Field
from opcalc.frontend.ast import (
    AstCommand,
    AstField,
    AstGenerator,
    AstLabel,
    AstLeaf,
    AstRelation,
    AstVertex,
)
from opcalc.frontend.builder import (
    build,
    build_presentation,
    presentation_morphism,
    presentation_pair,
    resolve_field,
)
from opcalc.frontend.exception import InvalidPresentation
from opcalc.frontend.frontend import load, parse
from opcalc.frontend.parser import ParserFactory
from opcalc.frontend.printer import print_presentation
from opcalc.operads.checks import check_morphism, check_operad
from opcalc.operads.colimits import reflexive_coequalizer
from opcalc.operads.exception import MorphismError, NonCommutingCocone
from opcalc.operads.truncation import TruncationProfile

ASSOCIATIVE = textwrap.dedent("""\
    field Q;
    gen mu : arity 2, degree 0;
    rel mu(mu(1,2),3) - mu(1,mu(2,3));
    do dims;
    """)

EXAMPLE_DIR = os.path.join(os.path.dirname(__file__), os.pardir, 'example')

MAGMA = textwrap.dedent("""\
    field Q;
    gen mu : arity 2, degree 0;
    """)


class TestParser(unittest.TestCase):
    """
    Tests the presentation format.
    """

    def setUp(self):
        self.parser_factory = ParserFactory(debug=False)

    def test_statements(self):
        out = self.parser_factory.get_parser().parse(ASSOCIATIVE)
        self.assertEqual(len(out.statements), 4)
        self.assertIsInstance(out.statements[0], AstField)
        self.assertIsInstance(out.statements[1], AstGenerator)
        self.assertIsInstance(out.statements[2], AstRelation)
        self.assertIsInstance(out.statements[3], AstCommand)
        self.assertEqual(out.field, 'Q')
        gen = out.generators[0]
        self.assertEqual((gen.name, gen.arity, gen.degree, gen.action),
                         ('mu', 2, 0, None))
        self.assertEqual(out.commands[0].verb, 'dims')

    def test_tree_literals(self):
        text = 'rel 2*mu[2,1](mu(1,2),3) - 1/3*c;\n'
        out = self.parser_factory.get_parser().parse(text)
        first, second = out.relations[0].terms
        self.assertEqual((first.numerator, first.denominator), (2, 1))
        self.assertIsInstance(first.atom, AstVertex)
        self.assertEqual(first.atom.label.permutation, (2, 1))
        inner, leaf = first.atom.children
        self.assertIsInstance(inner, AstVertex)
        self.assertIsInstance(leaf, AstLeaf)
        self.assertEqual(leaf.label, 3)
        self.assertEqual((second.numerator, second.denominator), (-1, 3))
        self.assertIsInstance(second.atom, AstLabel)

    def test_positions(self):
        text = textwrap.dedent("""\
            # comment at top
            field F7;

            gen   nu : arity 3, degree -1, action sign; # trailing comment
            """)
        out = self.parser_factory.get_parser().parse(text, 'x.op')
        gen = out.generators[0]
        self.assertEqual((gen.lineno, gen.col, gen.path), (4, 1, 'x.op'))
        self.assertEqual(gen.degree, -1)
        self.assertEqual(gen.action, 'sign')
        self.assertEqual(out.fields[0].lineno, 2)

    def test_hyphenated_verb(self):
        out = self.parser_factory.get_parser().parse('do triangular-check;')
        self.assertEqual(out.commands[0].verb, 'triangular-check')

    def test_empty(self):
        out = self.parser_factory.get_parser().parse('# nothing\n')
        self.assertEqual(out.statements, [])

    def test_syntax_errors(self):
        text = textwrap.dedent("""\
            field Q;
            gen mu : arity 2 degree 0;
            """)
        with self.assertRaises(InvalidPresentation) as cm:
            parse(text, 'bad.op')
        self.assertEqual("Unexpected DEGREE with value 'degree'.", cm.exception.msg)
        self.assertEqual(cm.exception.lineno, 2)
        self.assertEqual(cm.exception.col, 18)
        self.assertEqual(cm.exception.location(), 'bad.op:2:18')

        with self.assertRaises(InvalidPresentation) as cm:
            parse('gen mu : arity 2, degree 0 @;')
        self.assertEqual("Illegal character '@'.", cm.exception.msg)
        self.assertEqual((cm.exception.lineno, cm.exception.col), (1, 28))

        with self.assertRaises(InvalidPresentation) as cm:
            parse('gen mu : arity 2, degree 0')
        self.assertEqual('Unexpected end of input; is a semicolon missing?',
                         cm.exception.msg)
        self.assertIsNone(cm.exception.col)
        self.assertEqual(cm.exception.location(), '<input>:1')


class TestSemanticChecks(unittest.TestCase):

    def assertInvalid(self, text, msg, lineno):
        with self.assertRaises(InvalidPresentation) as cm:
            parse(textwrap.dedent(text))
        self.assertEqual(msg, cm.exception.msg)
        self.assertEqual(lineno, cm.exception.lineno)

    def test_declarations(self):
        self.assertInvalid("""\
            gen mu : arity 2, degree 0;
            gen mu : arity 3, degree 0;
            """, 'Generator mu is already declared on line 1.', 2)
        self.assertInvalid("""\
            field Q;
            field F2;
            """, 'Field declared twice.', 2)
        with self.assertRaises(InvalidPresentation) as cm:
            parse('gen mu : arity 2, degree 0, action weird;')
        self.assertTrue(cm.exception.msg.startswith('Unknown action weird;'))
        with self.assertRaises(InvalidPresentation) as cm:
            parse('field F6;')
        self.assertEqual(cm.exception.lineno, 1)

    def test_trees(self):
        self.assertInvalid("""\
            gen mu : arity 2, degree 0;
            rel nu(1,2) - mu(1,2);
            """, 'Undeclared generator nu.', 2)
        self.assertInvalid("""\
            gen mu : arity 2, degree 0;
            rel mu(1) - mu(1,2);
            """, 'mu takes 2 inputs, got 1.', 2)
        self.assertInvalid("""\
            gen mu : arity 2, degree 0;
            rel mu(1,1) - mu(1,2);
            """, 'Leaf labels [1, 1] are not a bijection onto 1..2.', 2)
        self.assertInvalid("""\
            gen mu : arity 2, degree 0;
            rel mu(1,2) - mu(mu(1,2),3);
            """, 'Relation mixes arities 2 and 3.', 2)
        self.assertInvalid("""\
            gen mu : arity 2, degree 0;
            gen nu : arity 2, degree 1;
            rel mu(1,2) - nu(1,2);
            """, 'Relation mixes degrees 0 and 1.', 3)
        self.assertInvalid("""\
            gen mu : arity 2, degree 0;
            rel mu[1,3](1,2);
            """, '[1, 3] is not a permutation of 1..2 for mu.', 2)
        self.assertInvalid("""\
            gen mu : arity 2, degree 0;
            rel 1/0*mu(1,2);
            """, 'Zero denominator.', 2)

    def test_differentials(self):
        self.assertInvalid("""\
            gen a : arity 2, degree 1;
            gen b : arity 2, degree 1;
            diff a = b;
            """, 'd(a) must have degree 0, b has degree 1.', 3)
        self.assertInvalid("""\
            gen a : arity 2, degree 1;
            gen b : arity 3, degree 0;
            diff a = b;
            """, 'd(a) must have arity 2, b has arity 3.', 3)
        self.assertInvalid("""\
            gen a : arity 2, degree 1;
            gen b : arity 2, degree 0;
            diff a = b(1,2);
            """, 'Differentials are combinations of generators, not trees.', 3)
        self.assertInvalid("""\
            gen a : arity 2, degree 1;
            gen b : arity 2, degree 0;
            diff a = b;
            diff a = 2*b;
            """, 'Differential of a is given twice.', 4)


class TestPrinter(unittest.TestCase):

    def test_canonical_text(self):
        canonical = textwrap.dedent("""\
            field Q;
            gen mu : arity 2, degree 0, action regular;
            gen c : arity 0, degree 0;
            rel mu(mu(1,2),3) - mu(1,mu(2,3));
            rel -mu(1,2) + 2*mu[2,1](1,2) - 1/2*mu(1,2);
            rel mu(c,1) - mu(1,c);
            do triangular-check;
            """)
        self.assertEqual(print_presentation(parse(canonical)), canonical)

    def test_normalizes_spacing(self):
        messy = 'gen  mu:arity 2,degree 0 ;rel  1*mu( 1 ,2 )-mu[2,1](1,2);'
        self.assertEqual(print_presentation(parse(messy)),
                         'gen mu : arity 2, degree 0;\n'
                         'rel mu(1,2) - mu[2,1](1,2);\n')


class TestBuilder(unittest.TestCase):

    def test_associative_commutative(self):
        operad = build(parse(ASSOCIATIVE), TruncationProfile(max_arity=4))
        self.assertEqual(dict(operad.dims()), {0: 0, 1: 1, 2: 1, 3: 1, 4: 1})
        self.assertEqual(operad.name, 'P')

    def test_associative(self):
        text = ASSOCIATIVE.replace('degree 0;', 'degree 0, action regular;')
        pres = build_presentation(parse(text, 'assoc.op'),
                                  TruncationProfile(max_arity=3))
        self.assertEqual(dict(pres.operad.dims()), {0: 0, 1: 1, 2: 2, 3: 6})
        self.assertEqual(pres.operad.name, 'assoc')
        self.assertEqual(len(pres.relations), 1)
        report = check_operad(pres.operad)
        self.assertTrue(report.passed, report.failures)

    def test_skipped_relations(self):
        pres = build_presentation(parse(MAGMA + 'rel mu(1,2) - mu[2,1](1,2);\n'),
                                  TruncationProfile(max_arity=3))
        self.assertEqual(pres.relations, [])
        self.assertEqual(pres.skipped, [])
        with self.assertLogs('opcalc.frontend.builder', level='WARNING') as logs:
            pres = build_presentation(
                parse(MAGMA + 'rel mu(mu(mu(1,2),3),4) - mu(1,mu(2,mu(3,4)));\n'),
                TruncationProfile(max_arity=3))
        self.assertEqual(pres.relations, [])
        self.assertEqual(pres.skipped, [(3, 'relation of arity 4 is above 3')])
        self.assertIn('Line 3', logs.output[0])
        self.assertEqual(dict(pres.operad.dims()), {0: 0, 1: 1, 2: 1, 3: 3})

    def test_field_precedence(self):
        ast = parse(MAGMA.replace('field Q', 'field F7'))
        self.assertEqual(resolve_field(ast), Field('F7'))
        self.assertEqual(resolve_field(ast, 'Q'), Field('Q'))
        self.assertEqual(resolve_field(parse('gen mu : arity 2, degree 0;')),
                         Field('F101'))
        pres = build_presentation(ast, TruncationProfile(max_arity=2), field='F3')
        self.assertEqual(pres.field, Field('F3'))

    def test_differential(self):
        text = textwrap.dedent("""\
            field Q;
            gen a : arity 2, degree 1;
            gen b : arity 2, degree 0;
            diff a = b;
            """)
        operad = build(parse(text), TruncationProfile(max_arity=2))
        self.assertEqual(dict(operad.component(2).dims_by_degree()), {0: 1, 1: 1})
        report = check_operad(operad)
        self.assertTrue(report.passed, report.failures)
        self.assertIn('unit-cycle', report.checked)

    def test_presentation_pair(self):
        trunc = TruncationProfile(max_arity=3)
        pres = build_presentation(parse(ASSOCIATIVE), trunc)
        pair = presentation_pair(pres)
        self.assertEqual(pair.target.dims(), pres.free.dims())
        quotient = reflexive_coequalizer(pair)
        self.assertEqual(quotient.operad.dims(), pres.operad.dims())
        self.assertEqual(dict(quotient.operad.dims()), {0: 0, 1: 1, 2: 1, 3: 1})

    def test_presentation_morphism(self):
        trunc = TruncationProfile(max_arity=3)
        magma = build_presentation(parse(MAGMA, 'magma.op'), trunc)
        com = build_presentation(parse(ASSOCIATIVE, 'com.op'), trunc)
        h = presentation_morphism(magma, com)
        self.assertEqual(h.name, 'magma->com')
        self.assertTrue(check_morphism(h).passed)
        self.assertIs(h.source, magma.operad)
        with self.assertRaises(NonCommutingCocone):
            presentation_morphism(com, magma)
        other = build_presentation(
            parse('field Q;\ngen nu : arity 2, degree 0;\n', 'other.op'), trunc)
        with self.assertRaises(MorphismError):
            presentation_morphism(magma, other)


class TestExamples(unittest.TestCase):

    def load_example(self, name):
        path = os.path.join(EXAMPLE_DIR, name)
        return build(load(path), TruncationProfile(max_arity=3))

    def test_examples(self):
        self.assertEqual(dict(self.load_example('assoc.op').dims()),
                         {0: 0, 1: 1, 2: 2, 3: 6})
        self.assertEqual(dict(self.load_example('commutative.op').dims()),
                         {0: 0, 1: 1, 2: 1, 3: 1})
        self.assertEqual(dict(self.load_example('lie.op').dims()),
                         {0: 0, 1: 1, 2: 1, 3: 2})
        report = check_operad(self.load_example('dg.op'))
        self.assertTrue(report.passed, report.failures)


if __name__ == '__main__':
    unittest.main()
