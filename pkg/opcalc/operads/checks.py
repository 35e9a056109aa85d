"""
Exhaustive checkers for the operad axioms and for operad morphisms.

Every checker walks all signatures of the truncation profile and evaluates
composites on basis tensors, so no composition matrix is ever built.
Permutation laws are checked on adjacent transpositions plus seeded random
permutations.
"""
import itertools
import logging

from opcalc.algebra.checking import CheckReport
from opcalc.algebra.graded import koszul_shuffle_sign
from opcalc.algebra.permutations import (
    Permutation,
    adjacent_transpositions,
    block_permutation,
    direct_sum,
    spot_check_permutations,
)
from opcalc.algebra.smodule import (
    DEFAULT_SPOT_CHECKS,
    check_right_action,
    check_smodule_map,
)
from opcalc.algebra.vectors import add_into, scaled

_MYPY = False
if _MYPY:
    import typing  # noqa: F401 # pylint: disable=import-error,unused-import,useless-suppression

logger = logging.getLogger('opcalc.operads.checks')


def basis_tuples(operad, arities):
    return itertools.product(*[range(operad.component(n).dim) for n in arities])


def _names(operad, arities, idx):
    return [operad.component(n).names[i] for n, i in zip(arities, idx)]


def _signature(h, inputs):
    return '(%d;%s)' % (h, ','.join(str(i) for i in inputs))


def _generating_permutations(n, seed, spot_checks):
    perms = adjacent_transpositions(n)
    if n > 2:
        perms += spot_check_permutations(n, spot_checks, seed)
    return perms


def check_unit(operad):
    """γ(u; x) = x and γ(x; u, ..., u) = x for every basis vector x."""
    report = CheckReport('unit')
    one = operad.field.one
    for n in operad.arities():
        space = operad.component(n)
        for i in range(space.dim):
            x = {i: one}
            left = operad.compose(1, (n,), operad.unit, [x])
            report.expect(left == x, 'unit-left', 'γ(u; x) differs from x.',
                          signature=_signature(1, (n,)), basis=space.names[i])
            if n >= 1:
                right = operad.compose(n, (1,) * n, x, [operad.unit] * n)
                report.expect(right == x, 'unit-right',
                              'γ(x; u, ..., u) differs from x.',
                              signature=_signature(n, (1,) * n),
                              basis=space.names[i])
    return report


def _double_signatures(trunc):
    n_max = trunc.max_arity
    for h, inputs in trunc.signatures():
        m = sum(inputs)
        for flat in itertools.product(range(n_max + 1), repeat=m):
            if sum(flat) > n_max:
                continue
            blocks = []
            start = 0
            for i in inputs:
                blocks.append(tuple(flat[start:start + i]))
                start += i
            yield h, inputs, tuple(flat), blocks


def check_associativity(operad):
    """
    γ(γ(a; b_1..b_h); c_{1,1}..c_{h,i_h}) equals
    ±γ(a; γ(b_1; c_{1,*}), ..., γ(b_h; c_{h,*})), the sign coming from moving
    each block c_{j,*} past b_{j+1}, ..., b_h.
    """
    report = CheckReport('associativity')
    one = operad.field.one
    for h, inputs, flat, blocks in _double_signatures(operad.trunc):
        m = sum(inputs)
        if m == 0:
            continue
        outer = (h,) + tuple(inputs) + flat
        if any(operad.component(n).dim == 0 for n in outer):
            continue
        for idx in basis_tuples(operad, outer):
            a, bs, cs = idx[0], idx[1:h + 1], idx[h + 1:]
            left_inner = operad.compose_basis(h, inputs, (a,) + bs)
            left = operad.compose(m, flat, left_inner,
                                  [{c: one} for c in cs]) if left_inner else {}
            inner = []
            start = 0
            parity = 0
            b_degrees = [operad.component(i).degrees[b] for i, b in zip(inputs, bs)]
            for j, (i_j, block) in enumerate(zip(inputs, blocks)):
                c_block = cs[start:start + i_j]
                start += i_j
                c_degree = sum(operad.component(k).degrees[c]
                               for k, c in zip(block, c_block))
                parity += c_degree * sum(b_degrees[j + 1:])
                if i_j == 0:
                    inner.append({bs[j]: one})
                else:
                    inner.append(operad.compose_basis(i_j, block, (bs[j],) + c_block))
            sums = tuple(sum(block) for block in blocks)
            right = {}
            if all(inner):
                right = scaled(operad.compose(h, sums, {a: one}, inner),
                               operad.field.sign(parity))
            if not report.expect(
                    left == right, 'associativity',
                    'The two composites of a double composition differ.',
                    signature=_signature(h, inputs),
                    inner=[_signature(i, b) for i, b in zip(inputs, blocks)],
                    basis=_names(operad, outer, idx)):
                break
    return report


def _equivariance_one(operad, report, h, inputs, sigma):
    """γ(a·σ; b) = ε γ(a; b_{σ⁻¹(1)}, ..., b_{σ⁻¹(h)})·σ(i_1, ..., i_h)."""
    one = operad.field.one
    n = sum(inputs)
    inverse = sigma.inverse()
    permuted_inputs = tuple(inputs[inverse(s) - 1] for s in range(1, h + 1))
    blocks = block_permutation(sigma, inputs)
    positions = [sigma(j) - 1 for j in range(1, h + 1)]
    arities = (h,) + tuple(inputs)
    for idx in basis_tuples(operad, arities):
        a, bs = idx[0], idx[1:]
        moved = operad.act(h, {a: one}, sigma)
        left = operad.compose(h, inputs, moved, [{b: one} for b in bs])
        degrees = [operad.component(i).degrees[b] for i, b in zip(inputs, bs)]
        eps = koszul_shuffle_sign(degrees, positions, operad.field)
        reordered = tuple(bs[inverse(s) - 1] for s in range(1, h + 1))
        core = operad.compose_basis(h, permuted_inputs, (a,) + reordered)
        right = scaled(operad.act(n, core, blocks), eps)
        if not report.expect(left == right, 'equivariance-1',
                             'γ(a·σ; b) differs from the block-permuted composite.',
                             signature=_signature(h, inputs), sigma=sigma,
                             basis=_names(operad, arities, idx)):
            return


def _equivariance_two(operad, report, h, inputs, j, tau):
    """γ(a; b_1, ..., b_j·τ, ..., b_h) = γ(a; b)·(id ⊕ ... ⊕ τ ⊕ ... ⊕ id)."""
    one = operad.field.one
    n = sum(inputs)
    total = direct_sum(*[tau if k == j else Permutation.identity(i)
                         for k, i in enumerate(inputs)])
    arities = (h,) + tuple(inputs)
    for idx in basis_tuples(operad, arities):
        a, bs = idx[0], idx[1:]
        betas = [{b: one} for b in bs]
        betas[j] = operad.act(inputs[j], betas[j], tau)
        left = operad.compose(h, inputs, {a: one}, betas)
        right = operad.act(n, operad.compose_basis(h, inputs, idx), total)
        if not report.expect(left == right, 'equivariance-2',
                             'γ(a; .., b·τ, ..) differs from γ(a; b)·(⊕τ).',
                             signature=_signature(h, inputs), slot=j + 1, tau=tau,
                             basis=_names(operad, arities, idx)):
            return


def check_equivariance(operad, seed=0, spot_checks=DEFAULT_SPOT_CHECKS):
    report = CheckReport('equivariance')
    for h, inputs in operad.trunc.signatures():
        if any(operad.component(n).dim == 0 for n in (h,) + tuple(inputs)):
            continue
        for sigma in _generating_permutations(h, seed, spot_checks):
            _equivariance_one(operad, report, h, inputs, sigma)
        for j, i in enumerate(inputs):
            for tau in _generating_permutations(i, seed, spot_checks):
                _equivariance_two(operad, report, h, inputs, j, tau)
    return report


def check_chain_maps(operad):
    """
    Every γ commutes with the differential, where d acts on a basis tensor
    by the Leibniz rule with Koszul signs, and preserves augmentations when
    all components involved carry one. The unit must be a cycle.
    """
    report = CheckReport('chain-maps')
    one = operad.field.one
    report.expect(not operad.component(1).diff(operad.unit), 'unit-cycle',
                  'The unit is not a cycle.')
    for h, inputs in operad.trunc.signatures():
        arities = (h,) + tuple(inputs)
        if any(operad.component(n).dim == 0 for n in arities):
            continue
        n = sum(inputs)
        target = operad.component(n)
        spaces = [operad.component(k) for k in arities]
        with_diff = any(s.differential is not None for s in spaces + [target])
        with_aug = all(s.augmentation is not None for s in spaces + [target])
        if not (with_diff or with_aug):
            continue
        for idx in basis_tuples(operad, arities):
            composite = operad.compose_basis(h, inputs, idx)
            if with_diff:
                right = {}
                prefix = 0
                for pos, (space, i) in enumerate(zip(spaces, idx)):
                    d = space.diff_basis(i)
                    if d:
                        vecs = [{k: one} for k in idx]
                        vecs[pos] = d
                        add_into(right, operad.compose(h, inputs, vecs[0], vecs[1:]),
                                 operad.field.sign(prefix))
                    prefix += space.degrees[i]
                report.expect(target.diff(composite) == right, 'differential',
                              'γ does not commute with d.',
                              signature=_signature(h, inputs),
                              basis=_names(operad, arities, idx))
            if with_aug:
                product = one
                for space, i in zip(spaces, idx):
                    product = product * space.augment({i: one})
                report.expect(target.augment(composite) == product, 'augmentation',
                              'γ does not preserve the augmentation.',
                              signature=_signature(h, inputs),
                              basis=_names(operad, arities, idx))
    return report


def check_operad(operad, seed=0, spot_checks=DEFAULT_SPOT_CHECKS):
    """All operad axioms: right actions, unit, equivariance, associativity, d."""
    report = CheckReport('operad')
    report.merge(check_right_action(operad.smodule, seed, spot_checks))
    report.merge(check_unit(operad))
    report.merge(check_equivariance(operad, seed, spot_checks))
    report.merge(check_associativity(operad))
    report.merge(check_chain_maps(operad))
    if not operad.exact:
        report.note('%s is truncated: composites beyond the depth bound vanish.'
                    % (operad.name or 'operad'))
    logger.info('Checked %s: %s', operad.name, 'pass' if report else 'FAIL')
    return report


def check_morphism(f, seed=0, spot_checks=DEFAULT_SPOT_CHECKS):
    """
    f(u) = u, equivariance, compatibility with d, and the γ-square
    f(γ(a; b)) = γ(f(a); f(b_1), ..., f(b_h)). Basis tensors whose composite
    was cut off by the source truncation are skipped.
    """
    report = CheckReport('morphism')
    source, target = f.source, f.target
    one = f.field.one
    report.expect(f.apply(1, source.unit) == target.unit, 'unit',
                  'f does not preserve the unit.')
    report.merge(check_smodule_map(f.underlying(), seed, spot_checks))
    skipped = 0
    for h, inputs in source.trunc.signatures():
        arities = (h,) + tuple(inputs)
        if any(source.component(n).dim == 0 for n in arities):
            continue
        n = sum(inputs)
        for idx in basis_tuples(source, arities):
            composite, overflow = source.compose_basis_flagged(h, inputs, idx)
            if overflow:
                skipped += 1
                continue
            left = f.apply(n, composite)
            images = [f.apply(k, {i: one}) for k, i in zip(arities, idx)]
            right = target.compose(h, inputs, images[0], images[1:])
            if not report.expect(left == right, 'composition',
                                 'f(γ(a; b)) differs from γ(f(a); f(b)).',
                                 signature=_signature(h, inputs),
                                 basis=_names(source, arities, idx)):
                break
    if skipped:
        report.note('%d composites cut off by truncation were skipped.' % skipped)
    return report
