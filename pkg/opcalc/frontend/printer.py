"""
Canonical text for presentations: one statement per line, single spaces
around binary signs, no spaces inside tree literals. Parsing the output
gives back the same statements.
"""
from .ast import (
    AstCommand,
    AstDifferential,
    AstField,
    AstGenerator,
    AstLabel,
    AstLeaf,
    AstRelation,
)


def format_label(label):
    if label.permutation is None:
        return label.name
    return '%s[%s]' % (label.name, ','.join(str(i) for i in label.permutation))


def format_atom(atom):
    if isinstance(atom, AstLeaf):
        return str(atom.label)
    if isinstance(atom, AstLabel):
        return format_label(atom)
    return '%s(%s)' % (format_label(atom.label),
                       ','.join(format_atom(c) for c in atom.children))


def _magnitude(term):
    numerator = abs(term.numerator)
    atom = format_atom(term.atom)
    if term.denominator != 1:
        return '%d/%d*%s' % (numerator, term.denominator, atom)
    if numerator != 1:
        return '%d*%s' % (numerator, atom)
    return atom


def format_combination(terms):
    out = []
    for k, term in enumerate(terms):
        negative = term.numerator < 0
        if k == 0:
            out.append(('-' if negative else '') + _magnitude(term))
        else:
            out.append(('- ' if negative else '+ ') + _magnitude(term))
    return ' '.join(out)


def format_statement(statement):
    if isinstance(statement, AstField):
        return 'field %s;' % statement.name
    if isinstance(statement, AstGenerator):
        text = 'gen %s : arity %d, degree %d' % (
            statement.name, statement.arity, statement.degree)
        if statement.action is not None:
            text += ', action %s' % statement.action
        return text + ';'
    if isinstance(statement, AstDifferential):
        return 'diff %s = %s;' % (statement.name, format_combination(statement.terms))
    if isinstance(statement, AstRelation):
        return 'rel %s;' % format_combination(statement.terms)
    if isinstance(statement, AstCommand):
        return 'do %s;' % statement.verb
    raise AssertionError('Unknown statement %r' % statement)


def print_presentation(ast):
    """The canonical text of a presentation."""
    return ''.join(format_statement(s) + '\n' for s in ast.statements)
