"""
Rendering of command results.

Results are ordered dicts. JSON output puts each top-level field on one
line as ``"key": value`` with the value in compact form, so reruns with the
same inputs and seed give byte-identical output.
"""
import json
from collections import OrderedDict

from opcalc.algebra.checking import CheckReport

FORMATS = ('json', 'table')


def dims_json(operad):
    """Arity -> dimension, keyed by strings for JSON."""
    return OrderedDict((str(n), d) for n, d in operad.dims().items())


def dims_by_degree_json(operad):
    out = OrderedDict()
    for n in operad.arities():
        by_degree = operad.component(n).dims_by_degree()
        out[str(n)] = OrderedDict((str(d), c) for d, c in by_degree.items())
    return out


def jsonable(value):
    if isinstance(value, CheckReport):
        return value.to_json()
    if isinstance(value, dict):
        return OrderedDict((str(k), jsonable(v)) for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return value


def _compact(value):
    return json.dumps(jsonable(value), separators=(',', ':'), ensure_ascii=False,
                      default=str)


def format_json(result):
    pairs = ['"%s": %s' % (key, _compact(value)) for key, value in result.items()]
    return '{%s}\n' % ', '.join(pairs)


def _table_lines(key, value, indent):
    pad = '  ' * indent
    value = jsonable(value)
    if isinstance(value, dict):
        if value and all(not isinstance(v, (dict, list)) for v in value.values()):
            width = max(len(str(k)) for k in value)
            lines = ['%s%s:' % (pad, key)]
            for k, v in value.items():
                lines.append('%s  %s  %s' % (pad, str(k).rjust(width), _scalar(v)))
            return lines
        lines = ['%s%s:' % (pad, key)]
        for k, v in value.items():
            lines.extend(_table_lines(k, v, indent + 1))
        return lines
    if isinstance(value, list):
        if all(not isinstance(v, (dict, list)) for v in value):
            return ['%s%s: %s' % (pad, key, ', '.join(_scalar(v) for v in value))]
        lines = ['%s%s:' % (pad, key)]
        for k, v in enumerate(value):
            lines.extend(_table_lines('[%d]' % k, v, indent + 1))
        return lines
    return ['%s%s: %s' % (pad, key, _scalar(value))]


def _scalar(value):
    if isinstance(value, bool):
        return 'yes' if value else 'no'
    if value is None:
        return '-'
    return str(value)


def format_table(result):
    lines = []
    for key, value in result.items():
        lines.extend(_table_lines(key, value, 0))
    return '\n'.join(lines) + '\n'


def render(result, fmt):
    if fmt == 'json':
        return format_json(result)
    if fmt == 'table':
        return format_table(result)
    raise ValueError('Unknown format %r; use json or table.' % fmt)
