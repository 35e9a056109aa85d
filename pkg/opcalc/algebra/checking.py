"""
Reports produced by the axiom and law checkers.

Checkers never raise for a failed law. They record what they verified and
the first few failures, each with enough witness data to reproduce it.
"""
from collections import OrderedDict

_MYPY = False
if _MYPY:
    import typing  # noqa: F401 # pylint: disable=import-error,unused-import,useless-suppression

MAX_RECORDED_FAILURES = 10


class Failure:
    """
    A single failed law.

    Args:
        check (str): Name of the check, e.g. ``associativity``.
        message (str): Human-readable description.
        witness (dict): Data that pins the failing instance down (signature,
            permutation, basis vector, ...), rendered with ``str``.
    """

    def __init__(self, check, message, witness):
        self.check = check
        self.message = message
        self.witness = OrderedDict(
            (k, _render(v)) for k, v in witness.items())

    def to_json(self):
        return OrderedDict([
            ('check', self.check),
            ('message', self.message),
            ('witness', self.witness),
        ])

    def __repr__(self):
        return 'Failure({!r}, {!r}, {!r})'.format(
            self.check, self.message, dict(self.witness))


def _render(value):
    if isinstance(value, (int, str)) or value is None:
        return value
    if isinstance(value, (list, tuple)):
        return [_render(v) for v in value]
    return str(value)


class CheckReport:
    """
    Outcome of one or more checks.

    ``bool(report)`` is True when every recorded check passed.
    """

    def __init__(self, name):
        self.name = name
        self.checked = OrderedDict()  # type: typing.Dict[str, int]
        self.failures = []  # type: typing.List[Failure]
        self.failure_count = 0
        self.notes = []  # type: typing.List[str]

    @property
    def passed(self):
        return self.failure_count == 0

    def __bool__(self):
        return self.passed

    def tick(self, check, count=1):
        self.checked[check] = self.checked.get(check, 0) + count

    def fail(self, check, message, **witness):
        self.tick(check, 0)
        self.failure_count += 1
        if len(self.failures) < MAX_RECORDED_FAILURES:
            self.failures.append(Failure(check, message, witness))

    def expect(self, ok, check, message, **witness):
        """Records one verified instance of ``check``. Returns ``ok``."""
        self.tick(check)
        if not ok:
            self.fail(check, message, **witness)
        return ok

    def note(self, text):
        self.notes.append(text)

    def merge(self, other):
        for check, count in other.checked.items():
            self.tick(check, count)
        self.failure_count += other.failure_count
        room = MAX_RECORDED_FAILURES - len(self.failures)
        self.failures.extend(other.failures[:max(room, 0)])
        self.notes.extend(other.notes)
        return self

    def first_failure(self):
        return self.failures[0] if self.failures else None

    def failed_checks(self):
        return sorted({f.check for f in self.failures})

    def to_json(self):
        return OrderedDict([
            ('name', self.name),
            ('passed', self.passed),
            ('checked', self.checked),
            ('failures', [f.to_json() for f in self.failures]),
            ('failure_count', self.failure_count),
            ('notes', list(self.notes)),
        ])

    def __repr__(self):
        return 'CheckReport({!r}, passed={!r}, failures={!r})'.format(
            self.name, self.passed, self.failure_count)
