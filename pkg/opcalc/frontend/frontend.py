import io
import logging

from .builder import check_presentation
from .exception import InvalidPresentation
from .parser import ParserFactory

logger = logging.getLogger('opcalc.frontend.frontend')

_parser_factory = None


def _factory(debug):
    global _parser_factory  # pylint: disable=global-statement
    if debug:
        return ParserFactory(debug=True)
    if _parser_factory is None:
        _parser_factory = ParserFactory()
    return _parser_factory


def parse(text, path=None, debug=False):
    """
    Parses a presentation and checks that it makes sense.

    The process is: Lexer -> Parser -> Semantic checks. Building the operad
    is a separate step (see opcalc.frontend.builder.build) since it needs a
    truncation profile.

    :param str text: Contents of a presentation (.op) file.
    :param path: Only used to report the location of errors.

    :raises: InvalidPresentation

    :returns: opcalc.frontend.ast.AstPresentation
    """
    logger.info('Parsing presentation %s', path or '<input>')
    parser = _factory(debug).get_parser()
    if debug:
        parser.test_lexing(text)
    ast = parser.parse(text, path)
    if parser.got_errors_parsing():
        # Only the first error is reported; later ones are usually fallout.
        msg, lineno, col, path = parser.get_errors()[0]
        raise InvalidPresentation(msg, lineno, col, path)
    if not ast.statements:
        logger.info('Empty presentation: %s', path or '<input>')
    check_presentation(ast)
    return ast


def load(path, debug=False):
    """Reads and parses a presentation file."""
    with io.open(path, encoding='utf-8') as f:
        text = f.read()
    return parse(text, path, debug=debug)
