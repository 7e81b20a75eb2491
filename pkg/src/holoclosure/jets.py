"""Truncated power series (jets) and the relation-degree probe.

A jet is a polynomial truncation of a power series at a fixed total degree
K; arithmetic drops every term above K.  The relation probe looks for a
nonzero polynomial F of bounded degree with F(components) = 0 up to degree
K: the coefficients of F satisfy an exact rational linear system whose
nullspace is computed by fraction Gaussian elimination.  Applied to the
truncations of the map (v,w) -> (v, vw, vw*e^w), the probe exhibits how the
minimal relation degree grows with K while any fixed degree is eventually
excluded - one-sided evidence (not proof) that the components satisfy no
analytic relation at all.  Relations are sought over Q: the components
handled here have rational coefficients, and then a relation with Gaussian
rational coefficients exists iff one with rational coefficients does (take
real or imaginary parts).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from holoclosure import linalg
from holoclosure.errors import ResourceLimitError
from holoclosure.poly import (
    Block,
    GREVLEX,
    Monomial,
    Polynomial,
    VariableContext,
    monomial_mul,
    param_context,
    z_context,
)

MAX_PROBE_ENTRIES = 2_000_000  # rows x cols bound for the relation system


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if c.im != 0:
        raise ValueError("jet coefficients must be rational (real)")
    return c.re


class Jet:
    """Power series truncated at total degree ``order``, over Q."""

    __slots__ = ("context", "order", "coeffs")

    def __init__(self, context: VariableContext, order: int, coeffs: Mapping[Monomial, Fraction]):
        if order < 0:
            raise ValueError("jet order must be non-negative")
        pruned = {}
        for m, c in coeffs.items():
            c = _as_fraction(c)
            if c and sum(m) <= order:
                pruned[m] = c
        object.__setattr__(self, "context", context)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", pruned)

    def __setattr__(self, name, value):
        raise AttributeError("Jet is immutable")

    @classmethod
    def zero(cls, context: VariableContext, order: int) -> "Jet":
        return cls(context, order, {})

    @classmethod
    def constant(cls, context: VariableContext, order: int, c) -> "Jet":
        return cls(context, order, {(0,) * context.size: _as_fraction(c)})

    @classmethod
    def variable(cls, context: VariableContext, order: int, name: str) -> "Jet":
        e = [0] * context.size
        e[context.index(name)] = 1
        return cls(context, order, {tuple(e): Fraction(1)})

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def _require_compatible(self, other: "Jet"):
        if self.context != other.context or self.order != other.order:
            raise ValueError("jets with different contexts or orders")

    def __add__(self, other: "Jet") -> "Jet":
        self._require_compatible(other)
        res = dict(self.coeffs)
        for m, c in other.coeffs.items():
            s = res.get(m, Fraction(0)) + c
            if s:
                res[m] = s
            else:
                res.pop(m, None)
        return Jet(self.context, self.order, res)

    def __sub__(self, other: "Jet") -> "Jet":
        return self + other.scale(Fraction(-1))

    def __mul__(self, other: "Jet") -> "Jet":
        self._require_compatible(other)
        res = {}
        for m1, c1 in self.coeffs.items():
            d1 = sum(m1)
            for m2, c2 in other.coeffs.items():
                if d1 + sum(m2) > self.order:
                    continue
                m = monomial_mul(m1, m2)
                s = res.get(m, Fraction(0)) + c1 * c2
                if s:
                    res[m] = s
                else:
                    res.pop(m, None)
        return Jet(self.context, self.order, res)

    def __pow__(self, e: int) -> "Jet":
        if e < 0:
            raise ValueError("negative jet power")
        result = Jet.constant(self.context, self.order, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def scale(self, c) -> "Jet":
        c = _as_fraction(c)
        return Jet(self.context, self.order, {m: k * c for m, k in self.coeffs.items()})

    def truncate(self, order: int) -> "Jet":
        return Jet(self.context, order, self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Jet):
            return NotImplemented
        return (
            self.context == other.context
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.context, self.order, frozenset(self.coeffs.items())))

    def __repr__(self):
        terms = sorted(self.coeffs.items())
        return f"<Jet order={self.order} {terms!r}>"


def jet_exp(context: VariableContext, name: str, order: int) -> Jet:
    """Truncation of e^t for the named variable: sum of t^j / j! for j <= K."""
    idx = context.index(name)
    coeffs = {}
    factorial = 1
    for j in range(order + 1):
        if j:
            factorial *= j
        e = [0] * context.size
        e[idx] = j
        coeffs[tuple(e)] = Fraction(1, factorial)
    return Jet(context, order, coeffs)


def jet_compose(F: Polynomial, components: Sequence[Jet], order: int) -> Jet:
    """Exact composition F(components) truncated at total degree ``order``."""
    if not components:
        raise ValueError("need at least one component")
    ctx = components[0].context
    for jet in components:
        if jet.context != ctx:
            raise ValueError("components over different parameter contexts")
        if jet.order < order:
            raise ValueError("component order below the composition order")
    if F.context.size != len(components):
        raise ValueError("polynomial arity does not match component count")
    comps = [jet.truncate(order) for jet in components]
    result = Jet.zero(ctx, order)
    for m, c in F.terms.items():
        term = Jet.constant(ctx, order, _as_fraction(c))
        for k, e in enumerate(m):
            if e:
                term = term * comps[k] ** e
        result = result + term
    return result


def jet_from_symbolic(f: Polynomial, order: int) -> Jet:
    """Evaluate a polynomial over a PARAM+EXP context into a jet.

    Each EXP variable named ``exp(t)`` becomes the exponential jet of its
    parameter; PARAM variables become themselves.
    """
    src = f.context
    param_names = [src.names[k] for k in src.indices(Block.PARAM)]
    ctx = param_context(param_names)
    images = {}
    for k, name in enumerate(src.names):
        if src.blocks[k] is Block.PARAM:
            images[name] = Jet.variable(ctx, order, name)
        else:
            inner = name[4:-1]  # exp(<param>)
            images[name] = jet_exp(ctx, inner, order)
    result = Jet.zero(ctx, order)
    for m, c in f.terms.items():
        term = Jet.constant(ctx, order, _as_fraction(c))
        for k, e in enumerate(m):
            if e:
                term = term * images[src.names[k]] ** e
        result = result + term
    return result


@dataclass(frozen=True)
class ProbeResult:
    """Outcome of a relation search: minimal witness degree, or none <= D."""

    jet_order: int
    max_degree: int
    min_relation_degree: int | None
    witness: Polynomial | None


def _monomials_up_to(nvars: int, degree: int) -> list:
    """All exponent tuples of total degree <= degree, ascending grevlex."""
    out = [()]
    for _ in range(nvars):
        out = [m + (e,) for m in out for e in range(degree + 1 - sum(m))]
    return sorted(out, key=GREVLEX.key)


def relation_probe(
    components: Sequence[Jet],
    order: int,
    max_degree: int,
    max_entries: int = MAX_PROBE_ENTRIES,
) -> ProbeResult:
    """Minimal degree of a nonzero polynomial relation visible at this order.

    Unknowns are coefficients of F with deg F <= D; one linear equation per
    parameter monomial of total degree <= K in the composed jet.  The first
    degree with a nonzero nullspace wins; the witness is the first basis
    vector, normalized so its leading nonzero coefficient is 1.
    """
    if order < 1 or max_degree < 1:
        raise ValueError("probe needs order >= 1 and max_degree >= 1")
    r = len(components)
    ctx = components[0].context
    target = z_context(r)
    candidate_monomials = _monomials_up_to(r, max_degree)
    composed = {}
    for alpha in candidate_monomials:
        jet = Jet.constant(ctx, order, 1)
        for k, e in enumerate(alpha):
            if e:
                jet = jet * components[k].truncate(order) ** e
        composed[alpha] = jet
    equations = _monomials_up_to(ctx.size, order)
    for degree in range(1, max_degree + 1):
        cols = [a for a in candidate_monomials if sum(a) <= degree]
        if len(cols) * len(equations) > max_entries:
            raise ResourceLimitError(
                f"relation system {len(equations)}x{len(cols)} exceeds the probe budget"
            )
        matrix = []
        for mu in equations:
            matrix.append([composed[a].coeffs.get(mu, Fraction(0)) for a in cols])
        kernel = linalg.nullspace(matrix, len(cols))
        if kernel:
            vec = kernel[0]
            witness = Polynomial(
                target, {cols[j]: vec[j] for j in range(len(cols)) if vec[j]}
            )
            if witness.total_degree() != degree:
                raise AssertionError("witness degree inconsistent with search level")
            return ProbeResult(order, max_degree, degree, witness)
    return ProbeResult(order, max_degree, None, None)


def osgood_components(order: int) -> list:
    """Jets of the map (v, w) -> (v, v*w, v*w*e^w) at the given order."""
    ctx = param_context(("v", "w"))
    v = Jet.variable(ctx, order, "v")
    w = Jet.variable(ctx, order, "w")
    return [v, v * w, v * w * jet_exp(ctx, "w", order)]


def osgood_probe(orders: Sequence[int], max_degree: int) -> list:
    """Relation probe on the Osgood map at each truncation order."""
    return [relation_probe(osgood_components(k), k, max_degree) for k in orders]
