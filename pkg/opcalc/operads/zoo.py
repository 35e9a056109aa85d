"""
Concrete operads: the commutative operad N with N(n) = F, the associative
operad M with M(n) = F[Σn], and endomorphism operads End(M).
"""
import logging

from opcalc.algebra.graded import GradedSpace, HomSpace, koszul_shuffle_sign
from opcalc.algebra.permutations import (
    all_permutations,
    block_permutation,
    direct_sum,
)
from opcalc.algebra.scalars import default_field
from opcalc.algebra.smodule import SModule, decorated_name

from .exception import MorphismError
from .operad import Operad, OperadMorphism
from .truncation import TruncationProfile

logger = logging.getLogger('opcalc.operads.zoo')


def _unit_component(field, name):
    one = {0: field.one}
    return GradedSpace(field, [(name, 0)], augmentation=one, coaugmentation=one)


def operad_N(trunc=None, field=None):
    """One generator a_n in every arity, trivial actions, γ(a_h; a_i...) = a_n."""
    trunc = trunc or TruncationProfile()
    field = field or default_field()
    spaces = {n: _unit_component(field, 'a%d' % n)
              for n in range(trunc.max_arity + 1)}
    smodule = SModule(field, spaces, lambda n, sigma, i: {i: field.one},
                      trunc.max_arity, name='N')

    def rule(h, inputs, idx):
        return {0: field.one}, False

    return Operad(smodule, {0: field.one}, rule, trunc, name='N')


def operad_M(trunc=None, field=None):
    """
    M(n) = F[Σn] with basis a_n·ρ and the regular right action. A composite
    γ(a_h·σ; a_{i_1}·τ_1, ..., a_{i_h}·τ_h) is a_n·(τ_{σ⁻¹(1)} ⊕ ... ⊕
    τ_{σ⁻¹(h)})∘σ(i_1, ..., i_h).
    """
    trunc = trunc or TruncationProfile()
    field = field or default_field()
    one = field.one
    spaces = {}
    for n in range(trunc.max_arity + 1):
        perms = all_permutations(n)
        basis = [(decorated_name('a%d' % n, rho), 0) for rho in perms]
        spaces[n] = GradedSpace(
            field, basis, keys=perms,
            augmentation={i: one for i in range(len(perms))},
            coaugmentation={0: one})  # perms[0] is the identity

    def act(n, sigma, i):
        space = spaces[n]
        return {space.index(space.keys[i].compose(sigma)): one}

    smodule = SModule(field, spaces, act, trunc.max_arity, name='M')

    def rule(h, inputs, idx):
        sigma = spaces[h].keys[idx[0]]
        taus = [spaces[i].keys[b] for i, b in zip(inputs, idx[1:])]
        inverse = sigma.inverse()
        inside = direct_sum(*[taus[inverse(s) - 1] for s in range(1, h + 1)])
        result = inside.compose(block_permutation(sigma, inputs))
        return {spaces[sum(inputs)].index(result): one}, False

    return Operad(smodule, {0: one}, rule, trunc, name='M')


def end_name(space):
    return 'End(%s)' % ','.join(str(d) for d in space.degrees)


def operad_End(space, trunc=None, strict_sign=False):
    """
    End(M)(n) = Hom(M^⊗n, M) with the identity of M as unit and
    γ(f; g_1, ..., g_h) = f∘(g_1 ⊗ ... ⊗ g_h).

    The right action is (f·σ)(x_1 ⊗ ... ⊗ x_n) = ±f(x_σ⁻¹(1) ⊗ ... ⊗ x_σ⁻¹(n)).
    The sign is the Koszul sign of the factor shuffle; with ``strict_sign`` it
    is the sign of σ, which only yields an operad in low arities.
    """
    trunc = trunc or TruncationProfile()
    field = space.field
    one = field.one
    for i, degree in enumerate(space.degrees):
        trunc.check_degree(degree, 'Basis vector %s of M' % space.names[i])
    homs = {n: HomSpace(space, n, space) for n in range(trunc.max_arity + 1)}
    name = end_name(space) + (' strict' if strict_sign else '')

    def act(n, sigma, i):
        hom = homs[n]
        s_idx, t = hom.elementary(i)
        s = hom.source_tensor.tuple_of(s_idx)
        moved = tuple(s[sigma(p) - 1] for p in range(1, n + 1))
        if strict_sign:
            eps = sigma.sign(field)
        else:
            eps = koszul_shuffle_sign([space.degrees[m] for m in moved],
                                      [sigma(p) - 1 for p in range(1, n + 1)],
                                      field)
        return {hom.elementary_index(hom.source_tensor.index_of(moved), t): eps}

    smodule = SModule(field, homs, act, trunc.max_arity, name=name)

    def rule(h, inputs, idx):
        outer = homs[h]
        u_idx, t = outer.elementary(idx[0])
        u = outer.source_tensor.tuple_of(u_idx)
        sources = []
        parity = 0
        prefix = 0
        for j, (i_j, b) in enumerate(zip(inputs, idx[1:])):
            inner = homs[i_j]
            s_idx, v = inner.elementary(b)
            if v != u[j]:
                return {}, False
            s = inner.source_tensor.tuple_of(s_idx)
            g_degree = space.degrees[v] - inner.source_tensor.degrees[s_idx]
            parity += g_degree * prefix
            prefix += inner.source_tensor.degrees[s_idx]
            sources.extend(s)
        target = homs[sum(inputs)]
        k = target.elementary_index(target.source_tensor.index_of(tuple(sources)), t)
        return {k: field.sign(parity)}, False

    unit_hom = homs[1]
    unit = {unit_hom.elementary_index(i, i): one for i in range(space.dim)}
    return Operad(smodule, unit, rule, trunc, name=name)


def augmentation_M_to_N(m_operad, n_operad):
    """The morphism M -> N sending every a_n·ρ to a_n."""
    one = m_operad.field.one
    return OperadMorphism.from_function(m_operad, n_operad,
                                        lambda n, i: {0: one}, name='aug')


def canonical_End_F_to_N(end_operad, n_operad):
    """End(F) -> N for F one-dimensional in degree 0: both are F in every arity."""
    for n in end_operad.arities():
        space = end_operad.component(n)
        if space.dim != 1 or space.degrees[0] != 0:
            raise MorphismError('End(M) is not End(F): arity %d has dims %s.'
                                % (n, dict(space.dims_by_degree())))
    one = end_operad.field.one
    return OperadMorphism.from_function(end_operad, n_operad,
                                        lambda n, i: {0: one}, name='can')
