import logging

import ply.lex as lex

_MYPY = False
if _MYPY:
    import typing  # noqa: F401 # pylint: disable=import-error,unused-import,useless-suppression


class Lexer:
    """
    Lexer. Tokenizes operad presentations.

    Statements end with semicolons, so newlines only advance the line count.
    """

    def __init__(self):
        self.lex = None
        self._logger = logging.getLogger('opcalc.frontend.lexer')
        self.last_token = None
        # [(message, line number, column), ...]
        self.errors = []  # type: typing.List[typing.Tuple[str, int, int]]

    def input(self, file_data, **kwargs):
        """
        Required by ply.yacc for this to quack (duck typing) like a ply lexer.

        :param str file_data: Contents of the file to lex.
        """
        self.lex = lex.lex(module=self, **kwargs)
        self.errors = []
        self.lex.input(file_data)

    def token(self):
        """
        Returns the next LexToken. Returns None when all tokens have been
        exhausted.
        """
        self.last_token = self.lex.token()
        return self.last_token

    def test(self, data):
        """Logs all tokens for human inspection. Useful for debugging."""
        self.input(data)
        while True:
            token = self.token()
            if not token:
                break
            self._logger.debug('Token %r', token)

    def column(self, lexpos):
        """1-based column of a character offset in the current input."""
        return lexpos - self.lex.lexdata.rfind('\n', 0, lexpos)

    # List of token names
    tokens = (
        'ID',
        'INTEGER',
    )  # type: typing.Tuple[typing.Text, ...]

    # Punctuation
    tokens += (
        'COLON',
        'COMMA',
        'EQ',
        'LBRACKET',
        'LPAR',
        'RBRACKET',
        'RPAR',
        'SEMI',
    )

    # Arithmetic on coefficients
    tokens += (
        'MINUS',
        'PLUS',
        'SLASH',
        'STAR',
    )

    RESERVED = {
        'action': 'ACTION',
        'arity': 'ARITY',
        'degree': 'DEGREE',
        'diff': 'DIFF',
        'do': 'DO',
        'field': 'FIELD',
        'gen': 'GEN',
        'rel': 'REL',
    }

    tokens += tuple(sorted(RESERVED.values()))

    # Regular expression rules for simple tokens
    t_COLON = r':'
    t_COMMA = r','
    t_EQ = r'='
    t_LBRACKET = r'\['
    t_LPAR = r'\('
    t_MINUS = r'-'
    t_PLUS = r'\+'
    t_RBRACKET = r'\]'
    t_RPAR = r'\)'
    t_SEMI = r';'
    t_SLASH = r'/'
    t_STAR = r'\*'

    # No leading digits
    def t_ID(self, token):
        r'[a-zA-Z_][a-zA-Z0-9_]*'
        token.type = self.RESERVED.get(token.value, 'ID')
        return token

    def t_INTEGER(self, token):
        r'\d+'
        token.value = int(token.value)
        return token

    # Comments run to the end of the line.
    def t_comment(self, token):
        r'[#][^\n]*'

    # Define a rule so we can track line numbers
    def t_newline(self, token):
        r'\n+'
        token.lexer.lineno += len(token.value)

    # A string containing ignored characters (spaces and tabs)
    t_ignore = ' \t\r'

    # Error handling rule
    def t_error(self, token):
        self._logger.debug('Illegal character %r at line %d',
                           token.value[0], token.lexer.lineno)
        self.errors.append(
            ('Illegal character %s.' % repr(token.value[0]),
             token.lexer.lineno, self.column(token.lexpos)))
        token.lexer.skip(1)
