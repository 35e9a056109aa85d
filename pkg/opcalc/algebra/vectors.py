"""
Sparse vectors: dicts from basis index to a nonzero scalar.

Every helper returns a fresh dict and never stores zero coefficients.
"""

_MYPY = False
if _MYPY:
    import typing  # noqa: F401 # pylint: disable=import-error,unused-import,useless-suppression
    Vector = typing.Dict[int, typing.Any]


def add_into(target, vec, coeff=None):
    """In-place ``target += coeff * vec``. Returns target."""
    for i, c in vec.items():
        v = c if coeff is None else coeff * c
        if i in target:
            s = target[i] + v
            if s:
                target[i] = s
            else:
                del target[i]
        elif v:
            target[i] = v
    return target


def scaled(vec, coeff):
    if not coeff:
        return {}
    out = {}
    for i, c in vec.items():
        v = coeff * c
        if v:
            out[i] = v
    return out


def combine(terms):
    """Sums an iterable of (coeff, vec) pairs."""
    out = {}
    for coeff, vec in terms:
        add_into(out, vec, coeff)
    return out


def difference(u, v):
    out = dict(u)
    for i, c in v.items():
        if i in out:
            s = out[i] - c
            if s:
                out[i] = s
            else:
                del out[i]
        else:
            out[i] = -c
    return out


def remapped(vec, index_map):
    """Re-indexes a vector through ``index_map`` (a dict or a sequence)."""
    out = {}
    for i, c in vec.items():
        add_into(out, {index_map[i]: c})
    return out


def sorted_items(vec):
    return sorted(vec.items())
