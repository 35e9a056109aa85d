"""
A command-line interface for opcalc.
"""
import argparse
import logging
import sys
import traceback
from collections import OrderedDict

from .algebra.exception import AlgebraError, NotWellDefined
from .algebra.graded import GradedSpace
from .algebra.scalars import DEFAULT_FIELD_NAME, Field
from .algebra.smodule import REGULAR, TRIVIAL, Generator, generated_smodule
from .cli_helpers import (
    BuiltinOperand,
    EndOperand,
    FileOperand,
    parse_arrow,
    parse_operand,
)
from .frontend.builder import (
    build_presentation,
    presentation_morphism,
    presentation_pair,
)
from .frontend.exception import InvalidPresentation
from .frontend.frontend import load
from .operads.checks import check_morphism, check_operad
from .operads.colimits import (
    FiniteDiagram,
    colimit,
    coproduct,
    pushout,
    reflexive_coequalizer,
)
from .operads.exception import MorphismError, NonCommutingCocone, OperadError
from .operads.finality import check_diagonal_final
from .operads.free import check_triangular, free_operad
from .operads.operad import identity_morphism
from .operads.truncation import TruncationProfile
from .operads.zoo import (
    augmentation_M_to_N,
    canonical_End_F_to_N,
    operad_End,
    operad_M,
    operad_N,
)
from .report import FORMATS, dims_by_degree_json, dims_json, render

_MYPY = False
if _MYPY:
    import typing  # noqa: F401 # pylint: disable=import-error,unused-import,useless-suppression

logger = logging.getLogger('opcalc.cli')

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

# Verbs a presentation may run with `do <verb>;`.
SCRIPT_VERBS = ('check', 'dims', 'free', 'coeq', 'triangular-check')

_cmdline_description = (
    'Exact computations with truncated operads: axiom checks, free operads, '
    'and colimits. Operands are builtin:N, builtin:M, End(d1,...,dk) for the '
    'endomorphism operad of a space with basis degrees d1..dk, or the path '
    'to a presentation (.op) file.'
)

_common = argparse.ArgumentParser(add_help=False)
_common.add_argument(
    '-v',
    '--verbose',
    action='count',
    help='Print progress (-v) or debugging statements (-vv).',
)
_common.add_argument(
    '--format',
    choices=FORMATS,
    default='json',
    help='Output format. JSON output is byte-stable for fixed inputs and seed.',
)
_common.add_argument(
    '--max-arity',
    type=int,
    default=4,
    help='Largest arity computed (N).',
)
_common.add_argument(
    '--max-depth',
    type=int,
    default=3,
    help='Largest number of vertices in a tree of a free operad (D).',
)
_common.add_argument(
    '--min-degree',
    type=int,
    default=-2,
    help='Smallest degree allowed for generators and basis vectors of M.',
)
_common.add_argument(
    '--max-degree',
    type=int,
    default=2,
    help='Largest degree allowed for generators and basis vectors of M.',
)
_common.add_argument(
    '--field',
    type=str,
    default=None,
    help=('Q or F<p>. Overrides the field declared by presentations; '
          'without it the first presentation decides, else F101.'),
)
_common.add_argument(
    '--seed',
    type=int,
    default=0,
    help='Seed for the randomized permutation spot checks.',
)
_common.add_argument(
    '--strict-sign',
    action='store_true',
    help=('Act on End(M) by the sign of the permutation instead of the '
          'Koszul sign of the factor shuffle.'),
)

_cmdline_parser = argparse.ArgumentParser(prog='opcalc', description=_cmdline_description)
_subparsers = _cmdline_parser.add_subparsers(dest='command', metavar='command')
_subparsers.required = True


def _add_command(name, help_text):
    return _subparsers.add_parser(name, parents=[_common], help=help_text,
                                  description=help_text)


_add_command('check', 'Check the operad axioms exhaustively.').add_argument(
    'operand', help='The operad to check.')
_add_command('dims', 'Print the dimension of every component.').add_argument(
    'operand', help='The operad to measure.')
_add_command('free', 'Build the free operad on a presentation\'s generators '
             'or on the underlying Σ-module of an operad.').add_argument(
                 'operand', help='Presentation file or operad.')
_add_command('coeq', 'Quotient a presentation by its relations through the '
             'reflexive coequalizer F(X+R) ⇉ F(X).').add_argument(
                 'file', help='Presentation file.')
_add_command('coprod', 'Coproduct of operads.').add_argument(
    'operands', nargs='+', help='Operads to glue.')
_pushout = _add_command('pushout', 'Pushout of P <- R -> Q along canonical '
                        'morphisms.')
_pushout.add_argument('source', help='R.')
_pushout.add_argument('left', help='P.')
_pushout.add_argument('right', help='Q.')
_colim = _add_command('colim', 'Colimit of a finite diagram of operads.')
_colim.add_argument('operands', nargs='+', help='Objects of the diagram.')
_colim.add_argument(
    '--arrow',
    action='append',
    default=[],
    help=('I:J adds the canonical morphism from operand I to operand J '
          '(counted from 0). Repeat for more arrows.'),
)
_morphism = _add_command('morphism-check', 'Check the canonical morphism '
                         'between two operads.')
_morphism.add_argument('source', help='Source operad.')
_morphism.add_argument('target', help='Target operad.')
_add_command('triangular-check', 'Check the triangular identities of the '
             'free-forgetful adjunction.').add_argument(
                 'operand', nargs='?', default=None,
                 help=('Presentation file or operad. Without it the identities '
                       'are checked for one binary generator and for N and M.'))
_add_command('final-check', 'Check that the diagonal into the n-th power of '
             'the reflexive-pair category is final.').add_argument(
                 '--power', type=int, default=2, help='n.')
_add_command('script', 'Run the `do` commands of a presentation.').add_argument(
    'file', help='Presentation file.')


class Operand:
    """A realized operand: the operad and, for files, the presentation."""

    def __init__(self, ref, operad, presentation=None):
        self.ref = ref
        self.operad = operad
        self.presentation = presentation

    @property
    def name(self):
        return self.operad.name


class Session:
    """Everything derived from the flags: profile, field and operand cache."""

    def __init__(self, args):
        self.args = args
        self.trunc = TruncationProfile(
            max_arity=args.max_arity, min_degree=args.min_degree,
            max_degree=args.max_degree, max_depth=args.max_depth)
        self.seed = args.seed
        self.field = Field(args.field) if args.field else None
        self._asts = {}
        self._cache = {}

    def refs(self, texts):
        """Parses operands; loads presentation files so they can pick the field."""
        refs = []
        for text in texts:
            ref, errors = parse_operand(text)
            if errors:
                raise UsageError('Operand %r: %s' % (text, errors[0]))
            if isinstance(ref, FileOperand):
                self._asts[ref.path] = load(ref.path)
            refs.append(ref)
        if self.field is None:
            declared = [self._asts[s.path].field for s in refs
                        if isinstance(s, FileOperand) and self._asts[s.path].field]
            self.field = Field(declared[0] if declared else DEFAULT_FIELD_NAME)
        return refs

    def realize(self, ref):
        if ref in self._cache:
            return self._cache[ref]
        if isinstance(ref, BuiltinOperand):
            maker = operad_N if ref.name == 'N' else operad_M
            result = Operand(ref, maker(self.trunc, self.field))
        elif isinstance(ref, EndOperand):
            space = GradedSpace(self.field, [('e%d' % (k + 1), d)
                                             for k, d in enumerate(ref.degrees)])
            result = Operand(ref, operad_End(space, self.trunc,
                                              strict_sign=self.args.strict_sign))
        else:
            ast = self._asts.get(ref.path) or load(ref.path)
            presentation = build_presentation(ast, self.trunc, self.args.field)
            result = Operand(ref, presentation.operad, presentation)
        self._cache[ref] = result
        return result

    def operands(self, texts):
        return [self.realize(ref) for ref in self.refs(texts)]


class UsageError(Exception):
    pass


def canonical_morphism(source, target):
    """
    The morphism the CLI uses between two operands: the identity, the
    augmentation M -> N, End(F) -> N, or the generator-naming morphism
    between presentations.
    """
    if source.ref == target.ref:
        return identity_morphism(source.operad)
    if source.presentation is not None and target.presentation is not None:
        return presentation_morphism(source.presentation, target.presentation)
    if target.ref == BuiltinOperand('N'):
        if source.ref == BuiltinOperand('M'):
            return augmentation_M_to_N(source.operad, target.operad)
        if source.ref == EndOperand([0]):
            return canonical_End_F_to_N(source.operad, target.operad)
    raise MorphismError('No canonical morphism from %s to %s.'
                        % (source.name, target.name))


def _operad_summary(operad):
    return OrderedDict([
        ('operad', operad.name),
        ('exact', operad.exact),
        ('dims', dims_json(operad)),
    ])


def _report_result(result, report):
    result['passed'] = report.passed
    result['report'] = report
    return result, (EXIT_OK if report.passed else EXIT_FAILED)


def run_check(session, operand):
    result = OrderedDict([('command', 'check'), ('operad', operand.name),
                          ('exact', operand.operad.exact)])
    return _report_result(result, check_operad(operand.operad, seed=session.seed))


def _skipped_json(operand):
    if operand.presentation is None:
        return []
    return [OrderedDict([('line', line), ('reason', reason)])
            for line, reason in operand.presentation.skipped]


def run_dims(session, operand):
    result = OrderedDict([('dims', dims_json(operand.operad))])
    if session.args.format == 'table':
        result['by_degree'] = dims_by_degree_json(operand.operad)
    skipped = _skipped_json(operand)
    if skipped:
        result['skipped_relations'] = skipped
    return result, EXIT_OK


def run_free(session, operand):
    if operand.presentation is not None:
        free = operand.presentation.free
    else:
        free = free_operad(operand.operad.smodule, session.trunc, check_degrees=False,
                           name='F(U(%s))' % operand.name)
    result = _operad_summary(free)
    result['command'] = 'free'
    result.move_to_end('command', last=False)
    return result, EXIT_OK


def run_coeq(session, operand):
    presentation = operand.presentation
    if presentation is None:
        raise UsageError('coeq needs a presentation file.')
    result = OrderedDict([('command', 'coeq'), ('operad', operand.name)])
    try:
        quotient = reflexive_coequalizer(presentation_pair(presentation),
                                         name='Coeq(%s)' % operand.name)
    except NotWellDefined as e:
        result['well_defined'] = False
        result['error'] = str(e)
        result['witness'] = e.witness
        return result, EXIT_FAILED
    result['well_defined'] = True
    result['exact'] = quotient.operad.exact
    result['dims'] = dims_json(quotient.operad)
    result['ideal_dims'] = dims_json(presentation.operad)
    result['skipped_relations'] = _skipped_json(operand)
    return result, EXIT_OK


def _colimit_result(command, colim, session):
    result = _operad_summary(colim.operad)
    result['command'] = command
    result.move_to_end('command', last=False)
    reports = OrderedDict()
    passed = True
    for edge in colim.cocone:
        report = check_morphism(edge, seed=session.seed)
        passed = passed and report.passed
        reports[edge.name] = report
    result['cocone_passed'] = passed
    result['cocone'] = reports
    return result, (EXIT_OK if passed else EXIT_FAILED)


def run_coprod(session, operands):
    colim = coproduct([o.operad for o in operands], session.trunc)
    return _colimit_result('coprod', colim, session)


def run_pushout(session, source, left, right):
    colim = pushout(canonical_morphism(source, left), canonical_morphism(source, right),
                    session.trunc)
    return _colimit_result('pushout', colim, session)


def run_colim(session, operands, arrows):
    diagram_arrows = []
    for text in arrows:
        try:
            i, j = parse_arrow(text)
        except ValueError as e:
            raise UsageError(str(e))
        if not (0 <= i < len(operands) and 0 <= j < len(operands)):
            raise UsageError('Arrow %s refers to a missing operand.' % text)
        diagram_arrows.append((i, j, canonical_morphism(operands[i], operands[j])))
    diagram = FiniteDiagram([o.operad for o in operands], diagram_arrows)
    return _colimit_result('colim', colimit(diagram, session.trunc), session)


def run_morphism_check(session, source, target):
    result = OrderedDict([('command', 'morphism-check'), ('source', source.name),
                          ('target', target.name)])
    try:
        f = canonical_morphism(source, target)
    except NonCommutingCocone as e:
        result['passed'] = False
        result['error'] = e.msg
        result['witness'] = e.witness
        return result, EXIT_FAILED
    result['morphism'] = f.name
    return _report_result(result, check_morphism(f, seed=session.seed))


def run_triangular_check(session, operand):
    result = OrderedDict([('command', 'triangular-check')])
    if operand is None:
        report = None
        for action in (TRIVIAL, REGULAR):
            module = generated_smodule(session.field, [Generator('mu', 2, 0, action)],
                                       session.trunc.max_arity, name='X')
            part = check_triangular(generators=module, trunc=session.trunc)
            report = part if report is None else report.merge(part)
        for maker in (operad_N, operad_M):
            report.merge(check_triangular(operad=maker(session.trunc, session.field)))
        return _report_result(result, report)
    result['operad'] = operand.name
    if operand.presentation is not None:
        report = check_triangular(generators=operand.presentation.smodule,
                                  trunc=session.trunc)
        report.merge(check_triangular(operad=operand.operad))
    else:
        report = check_triangular(operad=operand.operad)
    return _report_result(result, report)


def run_final_check(session, power):
    if power < 1:
        raise UsageError('--power must be at least 1.')
    result = OrderedDict([('command', 'final-check'), ('power', power)])
    return _report_result(result, check_diagonal_final(power))


_SCRIPT_RUNNERS = {
    'check': run_check,
    'dims': run_dims,
    'free': run_free,
    'coeq': run_coeq,
    'triangular-check': run_triangular_check,
}


def run_script(session, operand):
    presentation = operand.presentation
    if presentation is None:
        raise UsageError('script needs a presentation file.')
    for command in presentation.ast.commands:
        if command.verb not in SCRIPT_VERBS:
            raise InvalidPresentation(
                'Unknown verb %s; scripts can run %s.'
                % (command.verb, ', '.join(SCRIPT_VERBS)),
                command.lineno, command.col, command.path)
    results = []
    code = EXIT_OK
    for command in presentation.ast.commands:
        logger.info('Running %s', command.verb)
        result, status = _SCRIPT_RUNNERS[command.verb](session, operand)
        result['verb'] = command.verb
        result.move_to_end('verb', last=False)
        results.append(result)
        code = max(code, status)
    return OrderedDict([('script', operand.ref.path), ('results', results)]), code


def dispatch(args):
    """Runs one command. Returns ``(result, exit code)``."""
    session = Session(args)
    command = args.command
    if command == 'final-check':
        return run_final_check(session, args.power)
    if command in ('coeq', 'script'):
        operand, = session.operands([args.file])
        if operand.presentation is None:
            raise UsageError('%s needs a presentation file.' % command)
        if command == 'coeq':
            return run_coeq(session, operand)
        return run_script(session, operand)
    if command in ('check', 'dims', 'free'):
        operand, = session.operands([args.operand])
        return _SCRIPT_RUNNERS[command](session, operand)
    if command == 'triangular-check':
        if args.operand is None:
            session.refs([])
            return run_triangular_check(session, None)
        operand, = session.operands([args.operand])
        return run_triangular_check(session, operand)
    if command == 'coprod':
        return run_coprod(session, session.operands(args.operands))
    if command == 'pushout':
        return run_pushout(session, *session.operands(
            [args.source, args.left, args.right]))
    if command == 'colim':
        return run_colim(session, session.operands(args.operands), args.arrow)
    if command == 'morphism-check':
        return run_morphism_check(session, *session.operands([args.source, args.target]))
    raise UsageError('Unknown command %s.' % command)


def main(argv=None, stdout=None):
    """The entry point for the program. Returns the exit code."""
    stdout = stdout or sys.stdout
    try:
        args = _cmdline_parser.parse_args(argv)
    except SystemExit as e:
        return e.code
    debug = False
    if args.verbose is None:
        logging_level = logging.WARNING
    elif args.verbose == 1:
        logging_level = logging.INFO
    elif args.verbose == 2:
        logging_level = logging.DEBUG
        debug = True
    else:
        print('error: at most -vv is supported.', file=sys.stderr)
        return EXIT_USAGE

    logging.basicConfig(level=logging_level)

    try:
        result, code = dispatch(args)
    except InvalidPresentation as e:
        print('{}: error: {}'.format(e.location(), e.msg), file=sys.stderr)
        if debug:
            print('A traceback is included below in case this is a bug in '
                  'opcalc.\n', traceback.format_exc(), file=sys.stderr)
        return EXIT_USAGE
    except NonCommutingCocone as e:
        result = OrderedDict([('command', args.command), ('passed', False),
                              ('error', e.msg), ('arrow', e.arrow),
                              ('witness', e.witness)])
        code = EXIT_FAILED
    except NotWellDefined as e:
        result = OrderedDict([('command', args.command), ('passed', False),
                              ('error', str(e)), ('witness', e.witness)])
        code = EXIT_FAILED
    except (UsageError, OperadError, AlgebraError, ValueError, OSError) as e:
        print('error: {}'.format(e), file=sys.stderr)
        if debug:
            print(traceback.format_exc(), file=sys.stderr)
        return EXIT_USAGE
    stdout.write(render(result, args.format))
    return code


if __name__ == '__main__':
    sys.exit(main())
