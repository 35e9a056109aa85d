"""
Parsing of command-line operands.

An operand names an operad: ``builtin:N``, ``builtin:M``,
``End(d_1,...,d_k)`` (or ``builtin:End(...)``) for the endomorphism operad
of a space with basis degrees d_i, or the path to a presentation file.
"""
import os

from ply import lex, yacc

_MYPY = False
if _MYPY:
    import typing  # noqa: F401 # pylint: disable=import-error,unused-import,useless-suppression

BUILTINS = ('N', 'M')


class OperandLexer:
    tokens = (
        'ID',
        'INTEGER',
        'LPAR',
        'RPAR',
        'COLON',
        'COMMA',
    )  # type: typing.Tuple[str, ...]

    tokens += (
        'BUILTIN',
        'END',
    )

    t_LPAR = r'\('
    t_RPAR = r'\)'
    t_COLON = r':'
    t_COMMA = r','

    t_ignore = ' '

    KEYWORDS = {
        'builtin': 'BUILTIN',
        'End': 'END',
    }

    def __init__(self, debug=False):
        self.lexer = lex.lex(module=self, debug=debug)
        self.errors = []

    def get_yacc_compat_lexer(self):
        return self.lexer

    def t_INTEGER(self, token):
        r'-?\d+'
        token.value = int(token.value)
        return token

    def t_ID(self, token):
        r'[a-zA-Z_][a-zA-Z0-9_]*'
        token.type = self.KEYWORDS.get(token.value, 'ID')
        return token

    # Error handling rule
    def t_error(self, token):
        self.errors.append('Illegal character %s.' % repr(token.value[0]))
        token.lexer.skip(1)


class OperandParser:
    # Ply parser requiment: Tokens must be re-specified in parser
    tokens = OperandLexer.tokens

    start = 'operand'

    def __init__(self, debug=False):
        self.debug = debug
        self.yacc = yacc.yacc(module=self, debug=debug, write_tables=debug)
        self.lexer = OperandLexer(debug)
        self.errors = []

    def parse(self, data):
        """
        Args:
            data (str): Raw operand, not a file path.
        """
        self.lexer.errors = []
        self.errors = []
        parsed = self.yacc.parse(
            data, lexer=self.lexer.get_yacc_compat_lexer(), debug=self.debug)
        self.errors = self.lexer.errors + self.errors
        return parsed, self.errors

    def p_operand_builtin(self, p):
        'operand : BUILTIN COLON ID'
        p[0] = BuiltinOperand(p[3])

    def p_operand_builtin_end(self, p):
        'operand : BUILTIN COLON end'
        p[0] = p[3]

    def p_operand_end(self, p):
        'operand : end'
        p[0] = p[1]

    def p_end(self, p):
        """end : END LPAR RPAR
               | END LPAR degrees RPAR"""
        p[0] = EndOperand(p[3] if len(p) == 5 else [])

    def p_degrees(self, p):
        """degrees : INTEGER
                   | degrees COMMA INTEGER"""
        if len(p) == 2:
            p[0] = [p[1]]
        else:
            p[0] = p[1]
            p[0].append(p[3])

    def p_error(self, token):
        if token:
            self.errors.append(
                'Unexpected %s with value %s.' % (token.type, repr(token.value)))
        else:
            self.errors.append('Unexpected end of operand.')


class BuiltinOperand:

    def __init__(self, name):
        self.name = name

    def __eq__(self, other):
        return isinstance(other, BuiltinOperand) and self.name == other.name

    def __hash__(self):
        return hash(('builtin', self.name))

    def __repr__(self):
        return 'BuiltinOperand({!r})'.format(self.name)


class EndOperand:

    def __init__(self, degrees):
        self.degrees = list(degrees)

    def __eq__(self, other):
        return isinstance(other, EndOperand) and self.degrees == other.degrees

    def __hash__(self):
        return hash(('End', tuple(self.degrees)))

    def __repr__(self):
        return 'EndOperand({!r})'.format(self.degrees)


class FileOperand:

    def __init__(self, path):
        self.path = path

    def __eq__(self, other):
        return isinstance(other, FileOperand) and self.path == other.path

    def __hash__(self):
        return hash(('file', self.path))

    def __repr__(self):
        return 'FileOperand({!r})'.format(self.path)


def _looks_like_path(text):
    return text.endswith('.op') or os.sep in text or os.path.exists(text)


def parse_operand(text, debug=False):
    """
    Args:
        text (str): The raw command-line operand.

    Returns:
        Tuple[operand, List[str]]: The second element is a list of errors.
    """
    assert isinstance(text, str), type(text)
    if _looks_like_path(text) and not text.startswith(('builtin:', 'End(')):
        return FileOperand(text), []
    parser = OperandParser(debug)
    operand, errors = parser.parse(text)
    if not errors and isinstance(operand, BuiltinOperand) and \
            operand.name not in BUILTINS:
        errors = ['Unknown builtin %s; use one of %s or End(...).'
                  % (operand.name, ', '.join(BUILTINS))]
    return operand, errors


def parse_arrow(text):
    """``I:J`` -> (I, J), indices into the operand list. Raises ValueError."""
    parts = text.split(':')
    if len(parts) != 2:
        raise ValueError('Arrow %r is not of the form I:J.' % text)
    return int(parts[0]), int(parts[1])
