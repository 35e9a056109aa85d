import logging

import ply.yacc as yacc

from .ast import (
    AstCommand,
    AstDifferential,
    AstField,
    AstGenerator,
    AstLabel,
    AstLeaf,
    AstPresentation,
    AstRelation,
    AstTerm,
    AstVertex,
)
from .lexer import Lexer

logger = logging.getLogger('opcalc.frontend.parser')


class ParserFactory:
    """
    After instantiating a ParserFactory, call get_parser() to get an object
    with a parse() method. It so happens that the object is also a
    ParserFactory. The purpose of get_parser() is to reset the internal state
    of the factory, since ply.yacc builds its tables from the methods of this
    class.

    Due to how ply.yacc works, the docstring of each parser method is a BNF
    rule. Comments that would normally be docstrings for each parser rule
    method are kept before the method definition.
    """

    # Ply parser requiment: Tokens must be re-specified in parser
    tokens = Lexer.tokens

    # Ply feature: Starting grammar rule
    start = 'presentation'

    def __init__(self, debug=False):
        self.debug = debug
        self.yacc = yacc.yacc(module=self, debug=self.debug, write_tables=self.debug)
        self.lexer = Lexer()
        # [(message, line number, column, path), ...]
        self.errors = []
        # Path to file being parsed. Only used to tag nodes and errors.
        self.path = None
        self.exhausted = True

    def get_parser(self):
        """
        Returns a ParserFactory with the state reset so it can be used to
        parse again.

        :return: ParserFactory
        """
        self.path = None
        self.errors = []
        self.exhausted = False
        return self

    def parse(self, data, path=None):
        """
        Args:
            data (str): Raw presentation text.
            path (Optional[str]): Path to the presentation on the filesystem.
                Only used to tag nodes and errors.

        Returns:
            AstPresentation
        """
        assert not self.exhausted, 'Must call get_parser() to reset state.'
        self.path = path
        statements = self.yacc.parse(data, lexer=self.lexer, debug=self.debug)
        # Lexing errors come first since they are often the root of parser
        # errors.
        for msg, lineno, col in self.lexer.errors[::-1]:
            self.errors.insert(0, (msg, lineno, col, self.path))
        self.exhausted = True
        return AstPresentation(path, statements or [])

    def test_lexing(self, data):
        self.lexer.test(data)

    def got_errors_parsing(self):
        """Whether the lexer or parser had errors."""
        return self.errors

    def get_errors(self):
        """
        If got_errors_parsing() returns True, call this to get the errors.

        Returns:
            list[tuple[msg: str, lineno: int, col: int, path: str]]
        """
        return self.errors[:]

    def _position(self, p, n):
        return self.path, p.lineno(n), self.lexer.column(p.lexpos(n))

    # --------------------------------------------------------------
    # Presentation := Statement*

    def p_presentation_empty(self, p):
        'presentation : empty'
        p[0] = []

    def p_presentation_iter(self, p):
        'presentation : presentation statement'
        p[0] = p[1]
        p[0].append(p[2])

    def p_statement(self, p):
        """statement : field
                     | generator
                     | differential
                     | relation
                     | command"""
        p[0] = p[1]

    def p_field(self, p):
        'field : FIELD ID SEMI'
        p[0] = AstField(*self._position(p, 1), name=p[2])

    def p_generator(self, p):
        """generator : GEN ID COLON ARITY INTEGER COMMA DEGREE signed_integer SEMI
                     | GEN ID COLON ARITY INTEGER COMMA DEGREE signed_integer COMMA ACTION ID SEMI"""
        action = p[11] if len(p) > 10 else None
        p[0] = AstGenerator(*self._position(p, 1), name=p[2], arity=p[5],
                            degree=p[8], action=action)

    def p_signed_integer(self, p):
        """signed_integer : INTEGER
                          | MINUS INTEGER"""
        p[0] = p[1] if len(p) == 2 else -p[2]

    def p_differential(self, p):
        'differential : DIFF ID EQ combination SEMI'
        p[0] = AstDifferential(*self._position(p, 1), name=p[2], terms=p[4])

    def p_relation(self, p):
        'relation : REL combination SEMI'
        p[0] = AstRelation(*self._position(p, 1), terms=p[2])

    def p_command(self, p):
        'command : DO verb SEMI'
        p[0] = AstCommand(*self._position(p, 1), verb=p[2])

    # Verbs may contain hyphens, e.g. triangular-check.
    def p_verb(self, p):
        """verb : ID
                | verb MINUS ID"""
        p[0] = p[1] if len(p) == 2 else '%s-%s' % (p[1], p[3])

    # --------------------------------------------------------------
    # Linear combinations

    def p_combination_first(self, p):
        """combination : term
                       | MINUS term"""
        p[0] = [p[1]] if len(p) == 2 else [p[2].negated()]

    def p_combination_iter(self, p):
        """combination : combination PLUS term
                       | combination MINUS term"""
        p[0] = p[1]
        p[0].append(p[3] if p[2] == '+' else p[3].negated())

    def p_term(self, p):
        'term : atom'
        atom = p[1]
        p[0] = AstTerm(atom.path, atom.lineno, atom.col, 1, 1, atom)

    def p_term_scaled(self, p):
        'term : coefficient STAR atom'
        numerator, denominator, position = p[1]
        p[0] = AstTerm(*position, numerator=numerator, denominator=denominator,
                       atom=p[3])

    def p_coefficient(self, p):
        """coefficient : INTEGER
                       | INTEGER SLASH INTEGER"""
        denominator = p[3] if len(p) == 4 else 1
        p[0] = (p[1], denominator, self._position(p, 1))

    # --------------------------------------------------------------
    # Trees and labels

    def p_atom_leaf(self, p):
        'atom : INTEGER'
        p[0] = AstLeaf(*self._position(p, 1), label=p[1])

    def p_atom_label(self, p):
        'atom : label'
        p[0] = p[1]

    def p_atom_constant(self, p):
        'atom : label LPAR RPAR'
        label = p[1]
        p[0] = AstVertex(label.path, label.lineno, label.col, label, [])

    def p_atom_vertex(self, p):
        'atom : label LPAR atom_list RPAR'
        label = p[1]
        p[0] = AstVertex(label.path, label.lineno, label.col, label, p[3])

    def p_atom_list(self, p):
        """atom_list : atom
                     | atom_list COMMA atom"""
        if len(p) == 2:
            p[0] = [p[1]]
        else:
            p[0] = p[1]
            p[0].append(p[3])

    def p_label(self, p):
        """label : ID
                 | ID LBRACKET integer_list RBRACKET"""
        permutation = tuple(p[3]) if len(p) == 5 else None
        p[0] = AstLabel(*self._position(p, 1), name=p[1], permutation=permutation)

    def p_integer_list(self, p):
        """integer_list : INTEGER
                        | integer_list COMMA INTEGER"""
        if len(p) == 2:
            p[0] = [p[1]]
        else:
            p[0] = p[1]
            p[0].append(p[3])

    def p_empty(self, p):
        'empty :'
        pass

    def p_error(self, token):
        if token is None:
            lineno = self.lexer.lex.lineno if self.lexer.lex else None
            logger.debug('Unexpected end of input at line %s', lineno)
            self.errors.append(
                ('Unexpected end of input; is a semicolon missing?',
                 lineno, None, self.path))
            return
        logger.debug('Unexpected %s(%r) at line %d',
                     token.type,
                     token.value,
                     token.lineno)
        self.errors.append(
            ('Unexpected %s with value %s.' % (token.type, repr(token.value)),
             token.lineno, self.lexer.column(token.lexpos), self.path))
