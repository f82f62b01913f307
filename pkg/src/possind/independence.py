"""Conditioning and the two independence notions it induces.

A conditional distribution divides a joint out by a marginal through the
residuum of a chosen conjunction.  Membership in the independence
relation requires that conditioning `a` on `b | c` gives the same result
as conditioning on `c` alone, and symmetrically; membership in the
no-interactivity relation requires that the joint conditional factorize
through the conjunction.  Both equalities are evaluated pointwise on the
joint frame of all three parts, after cylindrical extension, within a
tolerance.

The characterize_* functions are closed-form criteria specific to each
conjunction family.  They are implemented straight from the marginals,
independently of the conditioning route, so the two can be cross-checked
against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .conjunction import Conjunction, Generator, IDENTITY, LukasiewiczLike
from .core import (
    EPS,
    Distribution,
    IndependenceRelation,
    Space,
    Triplet,
    _triplets_over,
    triplet_count,
)
from .errors import BadTriplet, NotNormalised, ScopeMismatch, TooLarge

#: Enumeration refuses spaces with more candidate triplets than this.
RELATION_GUARD = 100_000


class RelationKind(str, Enum):
    INDEPENDENCE = "independence"
    NON_INTERACTIVITY = "noninteractivity"


@dataclass(frozen=True)
class Witness:
    """A point where a defining equality failed, with both side values."""

    assignment: dict
    left: float
    right: float


@dataclass(frozen=True)
class MembershipEvidence:
    """Verdict of a membership test; witnesses list every failing point."""

    verdict: bool
    witnesses: tuple[Witness, ...]

    def __bool__(self) -> bool:
        return self.verdict


def condition(dist: Distribution, a, b, conj: Conjunction) -> Distribution:
    """The distribution of `a` conditional on `b`, scoped to their union.

    Each entry is residuum(marginal of b, marginal of a+b); conditioning
    on the empty set divides by the scalar 1 and returns the marginal of
    `a` unchanged.  The input must be normalised.
    """
    if not dist.normalised:
        raise NotNormalised("conditioning needs a normalised distribution")
    a = dist.space.subset(a)
    b = dist.space.subset(b)
    if set(a) & set(b):
        raise ScopeMismatch("target and conditioning sets overlap")
    in_scope = set(dist.scope)
    if not (set(a) <= in_scope and set(b) <= in_scope):
        raise ScopeMismatch("conditioning sets must lie inside the distribution scope")
    key = (a, b, conj)
    try:
        cached = dist._conditionals.get(key)
    except TypeError:  # unhashable custom conjunction
        key = None
        cached = None
    if cached is not None:
        return cached
    union = dist.space.subset(set(a) | set(b))
    joint = dist.marginalize(union)
    given = dist.marginalize(b).extend(union)
    out = Distribution(dist.space, union, conj.residuum(given.table, joint.table))
    if key is not None:
        dist._conditionals[key] = out
    return out


def _validate_membership(dist: Distribution, t: Triplet) -> None:
    t.validate(dist.space)
    if not (t.a | t.b | t.c) <= set(dist.scope):
        raise BadTriplet("triplet names variables outside the distribution scope")
    if not dist.normalised:
        raise NotNormalised("membership tests need a normalised distribution")


def _full_scope(dist: Distribution, t: Triplet) -> tuple[str, ...]:
    return dist.space.subset(t.a | t.b | t.c)


def _membership_sides(dist, t, conj, kind):
    """Yield (lhs, rhs) table pairs whose pointwise equality defines membership."""
    full = _full_scope(dist, t)
    if kind is RelationKind.INDEPENDENCE:
        for x, y in ((t.a, t.b), (t.b, t.a)):
            lhs = condition(dist, x, y | t.c, conj).extend(full).table
            rhs = condition(dist, x, t.c, conj).extend(full).table
            yield lhs, rhs
    else:
        lhs = condition(dist, t.a | t.b, t.c, conj).extend(full).table
        ca = condition(dist, t.a, t.c, conj).extend(full).table
        cb = condition(dist, t.b, t.c, conj).extend(full).table
        yield lhs, conj.conjoin(ca, cb)


def _witnesses(space: Space, scope, lhs, rhs, eps) -> list[Witness]:
    out = []
    for idx in np.argwhere(np.abs(lhs - rhs) > eps):
        idx = tuple(int(i) for i in idx)
        out.append(
            Witness(space.assignment_at(scope, idx), float(lhs[idx]), float(rhs[idx]))
        )
    return out


def _membership(dist, t, conj, kind, eps) -> MembershipEvidence:
    _validate_membership(dist, t)
    full = _full_scope(dist, t)
    witnesses: list[Witness] = []
    for lhs, rhs in _membership_sides(dist, t, conj, kind):
        witnesses.extend(_witnesses(dist.space, full, lhs, rhs, eps))
    return MembershipEvidence(not witnesses, tuple(witnesses))


def _membership_holds(dist, t, conj, kind, eps) -> bool:
    # fast path for bulk enumeration: no witness construction, early exit
    for lhs, rhs in _membership_sides(dist, t, conj, kind):
        if np.max(np.abs(lhs - rhs)) > eps:
            return False
    return True


def in_independence(dist, t, conj, eps: float = EPS) -> MembershipEvidence:
    """Does conditioning `a` on the rest reduce to conditioning on `c`, both ways?"""
    return _membership(dist, t, conj, RelationKind.INDEPENDENCE, eps)


def in_noninteractivity(dist, t, conj, eps: float = EPS) -> MembershipEvidence:
    """Does the joint conditional factorize through the conjunction?"""
    return _membership(dist, t, conj, RelationKind.NON_INTERACTIVITY, eps)


def _marginal_tables(dist, t):
    """Extended marginal tables (abc, c, ac, bc) on the joint frame of the triplet."""
    full = _full_scope(dist, t)
    get = lambda names: dist.marginalize(dist.space.subset(names)).extend(full).table
    return get(t.a | t.b | t.c), get(t.c), get(t.a | t.c), get(t.b | t.c)


def characterize_luka(dist, t, generator: Generator = IDENTITY, eps: float = EPS) -> bool:
    """Additive criterion for Lukasiewicz-like independence.

    True iff phi(joint) + phi(c-marginal) equals phi(ac-marginal) +
    phi(bc-marginal) pointwise.
    """
    _validate_membership(dist, t)
    abc, c, ac, bc = _marginal_tables(dist, t)
    g = generator.apply
    diff = (g(abc) + g(c)) - (g(ac) + g(bc))
    return bool(np.max(np.abs(diff)) <= eps)


def characterize_product_ni(dist, t, generator: Generator = IDENTITY, eps: float = EPS) -> bool:
    """Multiplicative criterion for product-like no-interactivity."""
    _validate_membership(dist, t)
    abc, c, ac, bc = _marginal_tables(dist, t)
    g = generator.apply
    diff = g(abc) * g(c) - g(ac) * g(bc)
    return bool(np.max(np.abs(diff)) <= eps)


def _zero_pattern_clause(dist, a, b, c, eps) -> bool:
    """Zero-slice condition: wherever the c-marginal is positive and some
    b-completion is impossible, the ac-marginal must equal the c-marginal."""
    space = dist.space
    full = space.subset(set(a) | set(b) | set(c))
    get = lambda names: dist.marginalize(space.subset(names)).extend(full).table
    m_c = get(c)
    m_ac = get(set(a) | set(c))
    m_bc = get(set(b) | set(c))
    reduce_axes = space.axes(full, set(a) | set(b))
    some_b_zero = np.any(m_bc <= eps, axis=reduce_axes, keepdims=True)
    bad = (m_c > eps) & some_b_zero & (np.abs(m_ac - m_c) > eps)
    return not bool(np.any(bad))


def characterize_product_i(dist, t, generator: Generator = IDENTITY, eps: float = EPS) -> bool:
    """Product-like independence: the multiplicative criterion plus both
    zero-pattern clauses (one per direction)."""
    if not characterize_product_ni(dist, t, generator, eps):
        return False
    return _zero_pattern_clause(dist, t.a, t.b, t.c, eps) and _zero_pattern_clause(
        dist, t.b, t.a, t.c, eps
    )


def characterize_min_ni(dist, t, eps: float = EPS) -> bool:
    """Min no-interactivity: the joint equals the minimum of the pair marginals."""
    _validate_membership(dist, t)
    abc, _, ac, bc = _marginal_tables(dist, t)
    return bool(np.max(np.abs(abc - np.minimum(ac, bc))) <= eps)


def characterize_min_i(dist, t, eps: float = EPS) -> bool:
    """Min independence: the min factorization plus the max identity
    (the c-marginal equals the maximum of the pair marginals)."""
    _validate_membership(dist, t)
    abc, c, ac, bc = _marginal_tables(dist, t)
    ok_min = np.max(np.abs(abc - np.minimum(ac, bc))) <= eps
    ok_max = np.max(np.abs(c - np.maximum(ac, bc))) <= eps
    return bool(ok_min and ok_max)


def construct_luka_instance(
    space: Space,
    t: Triplet,
    generator: Generator = IDENTITY,
    seed: int = 0,
    grid: int = 10,
) -> tuple[Distribution, Triplet]:
    """Build a distribution guaranteed independent at `t` under the
    Lukasiewicz-like conjunction with this generator.

    Two factors are drawn on the a+c and b+c frames with a shared
    c-marginal and all values at least phi_inv(0.5), so the transformed
    factors always sum to at least 1; their conjunction is returned as
    the joint.  Deterministic for a fixed seed.
    """
    t.validate(space)
    if grid < 1:
        raise ValueError("grid must be >= 1")
    rng = np.random.default_rng(seed)
    k_min = next(k for k in range(grid + 1) if generator.apply(k / grid) >= 0.5)

    c_scope = space.subset(t.c)
    h = np.asarray(rng.integers(k_min, grid + 1, size=space.shape(c_scope)), dtype=float)
    h /= grid
    h.flat[rng.integers(0, h.size)] = 1.0

    f_a = _draw_factor(rng, space, space.subset(t.a | t.c), c_scope, h, k_min, grid)
    f_b = _draw_factor(rng, space, space.subset(t.b | t.c), c_scope, h, k_min, grid)

    full = space.subset(t.a | t.b | t.c)
    conj = LukasiewiczLike(generator)
    table = conj.conjoin(f_a.extend(full).table, f_b.extend(full).table)
    return Distribution(space, full, table), t


def _draw_factor(rng, space, scope, c_scope, h, k_min, grid) -> Distribution:
    shape = space.shape(scope)
    vals = np.asarray(rng.integers(k_min, grid + 1, size=shape), dtype=float) / grid
    c_axes = space.axes(scope, c_scope)
    free_axes = tuple(i for i in range(len(scope)) if i not in set(c_axes))
    # cap every c-slice at its target maximum, then pin one random cell to it
    h_ext = np.expand_dims(h, axis=free_axes)
    vals = np.minimum(vals, h_ext)
    free_shape = tuple(shape[i] for i in free_axes)
    n_free = int(np.prod(free_shape, dtype=int)) if free_shape else 1
    for c_idx in np.ndindex(h.shape):
        flat = int(rng.integers(0, n_free))
        free_idx = np.unravel_index(flat, free_shape)
        idx = [0] * len(scope)
        for pos, ax in zip(c_idx, c_axes):
            idx[ax] = pos
        for pos, ax in zip(free_idx, free_axes):
            idx[ax] = int(pos)
        vals[tuple(idx)] = h[c_idx]
    return Distribution(space, scope, vals)


def enumerate_relation(
    dist: Distribution, conj: Conjunction, kind: RelationKind, eps: float = EPS
) -> IndependenceRelation:
    """All triplets over the distribution scope whose membership test holds."""
    if not dist.normalised:
        raise NotNormalised("relation enumeration needs a normalised distribution")
    names = dist.scope
    if triplet_count(len(names)) > RELATION_GUARD:
        raise TooLarge(
            f"{triplet_count(len(names))} candidate triplets exceed the "
            f"guard of {RELATION_GUARD}"
        )
    kind = RelationKind(kind)
    members = frozenset(
        t for t in _triplets_over(names) if _membership_holds(dist, t, conj, kind, eps)
    )
    return IndependenceRelation(dist.space, members)
