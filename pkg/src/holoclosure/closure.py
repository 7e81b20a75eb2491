"""Holomorphic closure dimension and Gabrielov ranks via elimination.

The holomorphic closure ideal of a system is the w-block elimination of its
complexification: the smallest complex algebraic set through the projection
of the complexified variety.  For maps, the kernel of the pullback is the
source-block elimination of the graph ideal (giving the rank r3), while r1
is recovered from generic fibre dimension: r1 = dim A - lambda, with lambda
sampled at seeded random rational points of the source variety.  Fibre
dimension is upper-semicontinuous, so the minimum over samples is the
generic value with overwhelming probability, and r1 <= r3 holds for every
sample outcome.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Sequence

from holoclosure.arith import gq
from holoclosure.complexify import System, complexify_ideal
from holoclosure.errors import EmptySetError, SamplingError
from holoclosure.groebner import (
    DEFAULT_CONFIG,
    GroebnerConfig,
    Ideal,
    buchberger,
    dimension_and_witness,
    eliminate,
    ideal_dimension,
)
from holoclosure.poly import (
    Block,
    LEX,
    Polynomial,
    VariableContext,
    z_context,
    zw_context,
)


@dataclass(frozen=True)
class HCReport:
    """Holomorphic closure ideal over the z variables, with both dimensions."""

    hc_ideal: Ideal
    hc_dimension: int
    real_dimension: int


@dataclass(frozen=True)
class RankReport:
    """Gabrielov ranks of a polynomial map restricted to a source variety.

    ``lam`` is the generic fibre dimension; regular means r1 == r3.  The
    fibre witness is the sampled source point realizing the minimal fibre.
    """

    r1: int
    r3: int
    lam: int
    regular: bool
    fibre_witness: tuple


def holomorphic_closure(system: System, config: GroebnerConfig = DEFAULT_CONFIG) -> HCReport:
    """Eliminate the w block of the complexification; report both dimensions."""
    ci = complexify_ideal(system, config)
    real_dim = ideal_dimension(ci.ideal, config=config)
    if real_dim is None:
        raise EmptySetError("the system defines the empty set")
    hc_ideal = eliminate(ci.ideal, Block.W, config)
    hc_dim = ideal_dimension(hc_ideal, config=config)
    n = system.n
    if not (real_dim + 1) // 2 <= hc_dim <= n:
        raise AssertionError(
            f"holomorphic closure dimension {hc_dim} violates bounds for d={real_dim}, n={n}"
        )
    return HCReport(hc_ideal, hc_dim, real_dim)


def _validate_map(components: Sequence[Polynomial]) -> VariableContext:
    if not components:
        raise ValueError("a map needs at least one component")
    src = components[0].context
    for f in components:
        if f.context != src:
            raise ValueError("map components over different contexts")
    if any(b is not Block.PARAM for b in src.blocks):
        raise ValueError("map source variables must form a parameter block")
    n = len(components)
    target_names = {f"z{j}" for j in range(1, n + 1)}
    if target_names & set(src.names):
        raise ValueError("source variable names collide with target z1..zn")
    return src


def hc_dimension_parametrized(
    components: Sequence[Polynomial], config: GroebnerConfig = DEFAULT_CONFIG
) -> HCReport:
    """Holomorphic closure data of the image of a polynomial parametrization.

    The parameters are complexified: the graph of (phi, conj-coefficient phi)
    is eliminated down to C[z,w] (giving the complexification of the real
    image, hence its real dimension) and then down to C[z] (giving the
    closure of the image of phi itself).
    """
    src = _validate_map(components)
    n = len(components)
    zw = zw_context(n)
    big = src.concat(zw)
    gens = []
    for j, f in enumerate(components):
        zj = Polynomial.variable(big, f"z{j + 1}")
        wj = Polynomial.variable(big, f"w{j + 1}")
        gens.append(zj - f.embed(big))
        gens.append(wj - f.conjugate().embed(big))
    graph = Ideal.from_polys(big, gens)
    cimage = eliminate(graph, Block.PARAM, config)
    real_dim = ideal_dimension(cimage, config=config)
    hc_ideal = eliminate(cimage, Block.W, config)
    hc_dim = ideal_dimension(hc_ideal, config=config)
    if not (real_dim + 1) // 2 <= hc_dim <= n:
        raise AssertionError(
            f"holomorphic closure dimension {hc_dim} violates bounds for d={real_dim}, n={n}"
        )
    return HCReport(hc_ideal, hc_dim, real_dim)


def pullback_kernel(
    components: Sequence[Polynomial],
    source: Ideal | None = None,
    config: GroebnerConfig = DEFAULT_CONFIG,
) -> Ideal:
    """Kernel of the pullback along the map restricted to V(source).

    This is the elimination of the source block from the graph ideal; its
    zero set is the Zariski closure of the image.
    """
    src = _validate_map(components)
    n = len(components)
    target = z_context(n)
    big = src.concat(target)
    gens = []
    if source is not None:
        if source.context != src:
            raise ValueError("source ideal over a different context than the map")
        gens.extend(g.embed(big) for g in source.generators)
    for j, f in enumerate(components):
        gens.append(Polynomial.variable(big, f"z{j + 1}") - f.embed(big))
    return eliminate(Ideal.from_polys(big, gens), Block.PARAM, config)


def gabrielov_r3(
    components: Sequence[Polynomial],
    source: Ideal | None = None,
    config: GroebnerConfig = DEFAULT_CONFIG,
) -> int:
    """Krull dimension of the target coordinate ring modulo the pullback kernel."""
    kernel = pullback_kernel(components, source, config)
    dim = ideal_dimension(kernel, config=config)
    if dim is None:
        raise EmptySetError("pullback kernel is the unit ideal")
    return dim


# -- rational point sampling -------------------------------------------------


def _random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-100, 100), rng.randint(1, 100))


def _divisors(n: int) -> list:
    n = abs(n)
    if n == 0:
        return []
    if n > 10**12:
        return [1, n]
    out = []
    k = 1
    while k <= isqrt(n):
        if n % k == 0:
            out.append(k)
            if k != n // k:
                out.append(n // k)
        k += 1
    return sorted(out)


def _univariate_coeffs(f: Polynomial, index: int) -> list:
    """Dense coefficient list (ascending degree) of a univariate polynomial."""
    deg = max(m[index] for m in f.terms)
    coeffs = [gq(0)] * (deg + 1)
    for m, c in f.terms.items():
        coeffs[m[index]] = c
    return coeffs


def _rational_roots(coeffs: list) -> list:
    """Roots in Q(i) found exactly: linear always, higher degree over Q only."""
    while len(coeffs) > 1 and not coeffs[-1]:
        coeffs.pop()
    if len(coeffs) <= 1:
        return []
    if len(coeffs) == 2:
        return [-coeffs[0] / coeffs[1]]
    if any(c.im != 0 for c in coeffs):
        return []
    roots = []
    rational = [c.re for c in coeffs]
    if rational[0] == 0:
        roots.append(gq(0))
        while rational[0] == 0 and len(rational) > 1:
            rational.pop(0)
        if len(rational) == 2:
            roots.append(gq(-rational[0] / rational[1]))
            return sorted(set(roots), key=lambda r: (r.re, r.im))
    denom_lcm = 1
    for c in rational:
        denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in rational]
    lead, const = ints[-1], ints[0]
    for p in _divisors(const):
        for q in _divisors(lead):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                val = Fraction(0)
                for c in reversed(ints):
                    val = val * cand + c
                if val == 0:
                    roots.append(gq(cand))
    return sorted(set(roots), key=lambda r: (r.re, r.im))


def _drop_variable(ctx: VariableContext, index: int) -> VariableContext:
    return VariableContext(
        ctx.names[:index] + ctx.names[index + 1:],
        ctx.blocks[:index] + ctx.blocks[index + 1:],
    )


def _substitute_value(gens, ctx, index, value):
    """Plug a constant into one variable; generators move to the smaller context."""
    sub = _drop_variable(ctx, index)
    images = {}
    for k, name in enumerate(ctx.names):
        if k == index:
            images[name] = Polynomial.constant(sub, value)
        else:
            images[name] = Polynomial.variable(sub, name)
    return [g.substitute(sub, images) for g in gens], sub


def _find_rational_point(I: Ideal, rng: random.Random, config: GroebnerConfig):
    """Solve a (generically zero-dimensional) system by triangular descent."""
    ctx = I.context
    if ctx.size == 0:
        return {} if all(g.is_zero for g in I.generators) else None
    if I.is_zero:
        return {name: gq(_random_rational(rng)) for name in ctx.names}
    gb = buchberger(I, LEX, config)
    if gb.is_unit:
        return None
    last = ctx.size - 1
    univariate = None
    touched = False
    for g in gb.basis:
        used = g.used_indices()
        if last in used:
            touched = True
            if used <= {last}:
                univariate = g
                break
    if univariate is None:
        if touched:
            return None  # not triangular in the last variable; try another slice
        value = gq(_random_rational(rng))
        gens, sub = _substitute_value(gb.basis, ctx, last, value)
        rest = _find_rational_point(Ideal.from_polys(sub, gens), rng, config)
        if rest is None:
            return None
        rest[ctx.names[last]] = value
        return rest
    for root in _rational_roots(_univariate_coeffs(univariate, last)):
        gens, sub = _substitute_value(gb.basis, ctx, last, root)
        rest = _find_rational_point(Ideal.from_polys(sub, gens), rng, config)
        if rest is not None:
            rest[ctx.names[last]] = root
            return rest
    return None


def sample_point_on_variety(
    source: Ideal,
    rng: random.Random,
    config: GroebnerConfig = DEFAULT_CONFIG,
    retries: int = 25,
) -> tuple:
    """A random exact point of V(source), found by random slicing.

    Random rational values are assigned to a maximal independent set of
    variables and the rest solved triangularly; only rational (linear) or
    rational-root solvable slices succeed, so after the retry budget the
    caller is asked for an explicit witness point.
    """
    ctx = source.context
    if source.is_zero:
        return tuple(gq(_random_rational(rng)) for _ in ctx.names)
    dim, indep = dimension_and_witness(source, config=config)
    if dim is None:
        raise EmptySetError("the source variety is empty")
    for attempt in range(retries):
        # slice the staircase independent set first; on later attempts try
        # other coordinate subsets (a set can be unlucky, e.g. forcing square
        # roots, while another admits a triangular rational solve)
        if attempt == 0:
            sliced = sorted(indep, reverse=True)
        else:
            sliced = sorted(rng.sample(range(ctx.size), dim), reverse=True)
        values = {}
        gens = list(source.generators)
        work_ctx = ctx
        for k in sliced:
            name = ctx.names[k]
            values[name] = gq(_random_rational(rng))
            idx = work_ctx.index(name)
            gens, work_ctx = _substitute_value(gens, work_ctx, idx, values[name])
        solved = _find_rational_point(Ideal.from_polys(work_ctx, gens), rng, config)
        if solved is None:
            continue
        values.update(solved)
        point = tuple(values[name] for name in ctx.names)
        check = {name: values[name] for name in ctx.names}
        if all(not g.evaluate(check) for g in source.generators):
            return point
    raise SamplingError(
        "no rational point found on the source variety; supply a witness point"
    )


def gabrielov_r1(
    components: Sequence[Polynomial],
    source: Ideal | None = None,
    seed: int = 0,
    config: GroebnerConfig = DEFAULT_CONFIG,
    samples: int = 5,
    retries: int = 25,
) -> RankReport:
    """Rank report from fibre-dimension sampling plus the elimination rank.

    r1 = dim V(source) - min fibre dimension over ``samples`` seeded draws.
    """
    src = _validate_map(components)
    if source is None:
        source = Ideal(src, ())
    elif source.context != src:
        raise ValueError("source ideal over a different context than the map")
    dim_a, _ = dimension_and_witness(source, config=config)
    if dim_a is None:
        raise EmptySetError("the source variety is empty")
    rng = random.Random(seed)
    best_lam = None
    best_point = None
    for _ in range(samples):
        point = sample_point_on_variety(source, rng, config, retries)
        values = dict(zip(src.names, point))
        fibre_gens = list(source.generators)
        for f in components:
            fibre_gens.append(f - Polynomial.constant(src, f.evaluate(values)))
        lam = ideal_dimension(Ideal.from_polys(src, fibre_gens), config=config)
        if lam is None:
            raise AssertionError("sampled fibre is empty despite containing the sample")
        if best_lam is None or lam < best_lam:
            best_lam = lam
            best_point = point
    r1 = dim_a - best_lam
    r3 = gabrielov_r3(components, source, config)
    return RankReport(r1, r3, best_lam, r1 == r3, best_point)
