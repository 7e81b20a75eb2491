"""Buchberger's algorithm, normal forms, elimination ideals, Krull dimension.

The engine is deliberately plain: normal pair-selection strategy plus the
coprime and chain criteria, full inter-reduction at the end, and a hard
pair/degree budget so adversarial input fails deterministically instead of
looping.  Dimension is the combinatorial one, read off the leading-term
staircase of a grevlex basis; it agrees with the dimension of the radical,
so no radical computation is needed.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from holoclosure.arith import gq
from holoclosure.errors import ResourceLimitError
from holoclosure.poly import (
    Block,
    BlockElimination,
    GREVLEX,
    MonomialOrder,
    Polynomial,
    VariableContext,
    monomial_degree,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
)


@dataclass(frozen=True)
class GroebnerConfig:
    """Deterministic failure budget for basis computations."""

    max_pairs: int = 50_000
    max_degree: int = 60


DEFAULT_CONFIG = GroebnerConfig()


@dataclass(frozen=True)
class Ideal:
    """An ideal presented by generators (the object is the ideal, not the list)."""

    context: VariableContext
    generators: tuple

    @classmethod
    def from_polys(cls, context: VariableContext, polys: Iterable[Polynomial]) -> "Ideal":
        kept = []
        for f in polys:
            if f.context != context:
                raise ValueError("generator over a different variable context")
            if not f.is_zero:
                kept.append(f)
        return cls(context, tuple(kept))

    @property
    def is_zero(self) -> bool:
        return not self.generators


@dataclass(frozen=True)
class GroebnerBasis:
    order: MonomialOrder
    basis: tuple
    reduced: bool = True

    @property
    def is_unit(self) -> bool:
        return any(not f.is_zero and f.total_degree() == 0 for f in self.basis)

    def leading_monomials(self) -> list:
        return [f.leading(self.order)[0] for f in self.basis]

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self.basis, self.order).is_zero


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    """Remainder of multivariate division of f by G.

    No term of the result is divisible by any leading monomial of G, and
    f - result lies in the ideal generated by G.  Reducers are tried in
    list order, so the result is deterministic.
    """
    reducers = [(g.leading(order), g) for g in G if not g.is_zero]
    remainder = {}
    p = f
    while not p.is_zero:
        m, c = p.leading(order)
        for (lm, lc), g in reducers:
            if monomial_divides(lm, m):
                p = p.sub_scaled(g, monomial_div(m, lm), c / lc)
                break
        else:
            remainder[m] = c
            rest = dict(p.terms)
            del rest[m]
            p = Polynomial(p.context, rest)
    return Polynomial(f.context, remainder)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    mf, cf = f.leading(order)
    mg, cg = g.leading(order)
    lcm = monomial_lcm(mf, mg)
    one = gq(1)
    a = Polynomial.from_monomial(f.context, monomial_div(lcm, mf), one / cf) * f
    b = Polynomial.from_monomial(g.context, monomial_div(lcm, mg), one / cg) * g
    return a - b


def _reduce_basis(G: list, order: MonomialOrder) -> tuple:
    """Minimalize then fully inter-reduce; output monic, sorted by ascending LM."""
    G = sorted((g for g in G if not g.is_zero), key=lambda g: order.key(g.leading(order)[0]))
    minimal = []
    for g in G:
        lm = g.leading(order)[0]
        if not any(monomial_divides(h.leading(order)[0], lm) for h in minimal):
            minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        r = normal_form(g, others, order)
        reduced.append(r.monic(order))
    reduced.sort(key=lambda g: order.key(g.leading(order)[0]))
    return tuple(reduced)


def buchberger(I: Ideal, order: MonomialOrder, config: GroebnerConfig = DEFAULT_CONFIG) -> GroebnerBasis:
    """Reduced Groebner basis of I; deterministic for a fixed generator order."""
    gens = [g for g in I.generators if not g.is_zero]
    if not gens:
        return GroebnerBasis(order, ())
    G = [g.monic(order) for g in gens]
    lead = [g.leading(order)[0] for g in G]

    heap = []
    pending = set()

    def push_pairs(j):
        for i in range(j):
            lcm = monomial_lcm(lead[i], lead[j])
            heapq.heappush(heap, (monomial_degree(lcm), i, j, lcm))
            pending.add((i, j))

    for j in range(len(G)):
        push_pairs(j)

    processed = 0
    while heap:
        _, i, j, lcm = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        processed += 1
        if processed > config.max_pairs:
            raise ResourceLimitError(f"S-pair budget of {config.max_pairs} exceeded")
        # coprime leading terms reduce to zero
        if lcm == monomial_mul(lead[i], lead[j]):
            continue
        # chain criterion: a third element dividing the lcm whose pairs with
        # i and j are both settled makes this pair redundant
        skip = False
        for k in range(len(G)):
            if k == i or k == j:
                continue
            if monomial_divides(lead[k], lcm):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik not in pending and pjk not in pending:
                    skip = True
                    break
        if skip:
            continue
        h = normal_form(s_polynomial(G[i], G[j], order), G, order)
        if h.is_zero:
            continue
        if h.total_degree() > config.max_degree:
            raise ResourceLimitError(
                f"intermediate degree {h.total_degree()} exceeds budget {config.max_degree}"
            )
        G.append(h.monic(order))
        lead.append(h.leading(order)[0])
        push_pairs(len(G) - 1)

    return GroebnerBasis(order, _reduce_basis(G, order))


def ideal_membership(f: Polynomial, I: Ideal, config: GroebnerConfig = DEFAULT_CONFIG) -> bool:
    gb = buchberger(I, GREVLEX, config)
    return normal_form(f, gb.basis, gb.order).is_zero


def eliminate(I: Ideal, block: Block, config: GroebnerConfig = DEFAULT_CONFIG) -> Ideal:
    """Generators of I intersected with the subring omitting ``block``.

    Computed from a block-elimination basis by discarding every element that
    touches an eliminated variable; the result context drops the block.
    """
    order = BlockElimination.for_block(I.context, block)
    target, kept = I.context.drop(block)
    if I.is_zero:
        return Ideal(target, ())
    gb = buchberger(I, order, config)
    elim = set(order.eliminated)
    new_index = {old: new for new, old in enumerate(kept)}
    out = []
    for g in gb.basis:
        used = g.used_indices()
        if used & elim:
            continue
        index_map = [new_index.get(k, 0) for k in range(I.context.size)]
        out.append(g.rename(target, index_map))
    return Ideal(target, tuple(out))


def _staircase_independent_set(supports: list, variables: tuple):
    """Largest S inside ``variables`` such that no support is contained in S."""
    if any(not s for s in supports):
        return None  # a constant leads the staircase: unit ideal
    for size in range(len(variables), -1, -1):
        for S in combinations(variables, size):
            s_set = set(S)
            if not any(sup <= s_set for sup in supports):
                return frozenset(S)
    return None


def dimension_and_witness(
    I: Ideal,
    block: Block | None = None,
    config: GroebnerConfig = DEFAULT_CONFIG,
):
    """(Krull dimension, maximal independent set) or (None, None) if 1 in I."""
    if block is None:
        variables = tuple(range(I.context.size))
    else:
        variables = I.context.indices(block)
        for g in I.generators:
            if not g.used_indices() <= set(variables):
                raise ValueError("generators leave the requested block")
    if I.is_zero:
        return len(variables), frozenset(variables)
    gb = buchberger(I, GREVLEX, config)
    if gb.is_unit:
        return None, None
    supports = [frozenset(k for k, e in enumerate(m) if e) for m in gb.leading_monomials()]
    witness = _staircase_independent_set(supports, variables)
    if witness is None:
        return None, None
    return len(witness), witness


def ideal_dimension(
    I: Ideal,
    block: Block | None = None,
    config: GroebnerConfig = DEFAULT_CONFIG,
):
    """Krull dimension of the quotient ring; None means the unit ideal (empty)."""
    dim, _ = dimension_and_witness(I, block, config)
    return dim
