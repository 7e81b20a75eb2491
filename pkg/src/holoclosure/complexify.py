"""Coordinate conversion, conjugation closure, and complexification ideals.

A ``System`` describes a real algebraic subset of C^n either in zeta form
(variables zeta_1..zeta_n and their formal conjugates, Q(i) coefficients) or
in real form (variables x_1,y_1,...,x_n,y_n, rational coefficients).  The
complexification replaces zeta_j by z_j and conj(zeta_j) by w_j after the
system has been closed under conjugation; the resulting ideal in C[z,w] has
Krull dimension equal to the real dimension of the described set, and its
z-block elimination is the holomorphic closure ideal.

Everything here is ideal-theoretic (Zariski-global): germ-level answers at
special points require the caller to supply generators of the local germ.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from holoclosure.arith import GaussianRational, gq, HALF, I as IMAG
from holoclosure.groebner import (
    DEFAULT_CONFIG,
    GroebnerConfig,
    Ideal,
    ideal_dimension,
    ideal_membership,
)
from holoclosure.poly import (
    Block,
    GREVLEX,
    Polynomial,
    VariableContext,
    real_context,
    zeta_context,
    zw_context,
)

ZETA_SWAP = {Block.ZETA: Block.ZETABAR}
ZW_SWAP = {Block.Z: Block.W}

ZETA_FORM = "zeta"
REAL_FORM = "real"


@dataclass(frozen=True)
class System:
    """Defining equations of a real set, in zeta or real coordinates."""

    context: VariableContext
    form: str
    generators: tuple
    conjugation_closed: bool = False

    def __post_init__(self):
        if self.form == ZETA_FORM:
            nz = len(self.context.indices(Block.ZETA))
            nb = len(self.context.indices(Block.ZETABAR))
            if nz == 0 or nz != nb:
                raise ValueError("zeta-form context needs paired zeta/zetabar blocks")
        elif self.form == REAL_FORM:
            nr = len(self.context.indices(Block.REAL))
            if nr == 0 or nr % 2 != 0:
                raise ValueError("real-form context needs interleaved x,y pairs")
            for g in self.generators:
                if any(c.im != 0 for c in g.terms.values()):
                    raise ValueError("real-form generators must have real coefficients")
        else:
            raise ValueError(f"unknown system form {self.form!r}")
        for g in self.generators:
            if g.context != self.context:
                raise ValueError("generator over a different context")

    @property
    def n(self) -> int:
        return self.context.size // 2

    def ideal(self) -> Ideal:
        return Ideal.from_polys(self.context, self.generators)

    @classmethod
    def from_document(cls, doc) -> "System":
        """Build from a parsed input document of a system kind."""
        if doc.kind == "system-zeta":
            return cls(doc.context, ZETA_FORM, doc.equations)
        if doc.kind == "system-real":
            return cls(doc.context, REAL_FORM, doc.equations, conjugation_closed=True)
        raise ValueError(f"document kind {doc.kind!r} is not a system")


@dataclass(frozen=True)
class ComplexifiedIdeal:
    """Image of a conjugation-closed system under zeta->z, conj(zeta)->w."""

    ideal: Ideal

    def swap_conjugate(self, f: Polynomial) -> Polynomial:
        return f.conjugate(ZW_SWAP)

    def is_swap_symmetric(self, config: GroebnerConfig = DEFAULT_CONFIG) -> bool:
        return all(
            ideal_membership(self.swap_conjugate(g), self.ideal, config)
            for g in self.ideal.generators
        )


def real_to_zeta(system: System) -> System:
    """Substitute x_j -> (zeta_j + conj)/2, y_j -> (zeta_j - conj)/(2i).

    The resulting zeta-form system defines the same real set; since real
    functions are fixed by conjugation, it is conjugation-closed already.
    """
    if system.form != REAL_FORM:
        raise ValueError("real_to_zeta expects a real-form system")
    n = system.n
    zctx = zeta_context([f"z{j}" for j in range(1, n + 1)])
    images = {}
    minus_i_half = -IMAG * HALF
    for j in range(n):
        zeta = Polynomial.variable(zctx, zctx.names[j])
        zbar = Polynomial.variable(zctx, zctx.names[n + j])
        images[system.context.names[2 * j]] = (zeta + zbar).scale(HALF)
        images[system.context.names[2 * j + 1]] = (zeta - zbar).scale(minus_i_half)
    gens = tuple(g.substitute(zctx, images) for g in system.generators)
    return System(zctx, ZETA_FORM, gens, conjugation_closed=True)


def zeta_to_real(system: System) -> System:
    """Substitute zeta_j -> x_j + i*y_j and split into real and imaginary parts."""
    if system.form != ZETA_FORM:
        raise ValueError("zeta_to_real expects a zeta-form system")
    n = system.n
    names = []
    for j in range(1, n + 1):
        names.extend([f"x{j}", f"y{j}"])
    rctx = real_context(names)
    images = {}
    for j in range(n):
        x = Polynomial.variable(rctx, names[2 * j])
        y = Polynomial.variable(rctx, names[2 * j + 1])
        images[system.context.names[j]] = x + y.scale(IMAG)
        images[system.context.names[n + j]] = x - y.scale(IMAG)
    gens = []
    for g in system.generators:
        h = g.substitute(rctx, images)
        re_part = Polynomial(rctx, {m: gq(c.re) for m, c in h.terms.items()})
        im_part = Polynomial(rctx, {m: gq(c.im) for m, c in h.terms.items()})
        for part in (re_part, im_part):
            if not part.is_zero and part not in gens:
                gens.append(part)
    return System(rctx, REAL_FORM, tuple(gens), conjugation_closed=True)


def conjugation_closure(system: System, config: GroebnerConfig = DEFAULT_CONFIG) -> System:
    """Append missing generator conjugates (membership-tested, not list-tested)."""
    if system.form == REAL_FORM or system.conjugation_closed:
        return replace(system, conjugation_closed=True)
    gens = list(system.generators)
    for g in system.generators:
        gbar = g.conjugate(ZETA_SWAP)
        if not ideal_membership(gbar, Ideal.from_polys(system.context, gens), config):
            gens.append(gbar)
    return System(system.context, ZETA_FORM, tuple(gens), conjugation_closed=True)


def complexify_ideal(system: System, config: GroebnerConfig = DEFAULT_CONFIG) -> ComplexifiedIdeal:
    """The ideal of the complexification in C[z,w], by literal substitution."""
    if system.form == REAL_FORM:
        system = real_to_zeta(system)
    if not system.conjugation_closed:
        system = conjugation_closure(system, config)
    n = system.n
    zw = zw_context(n)
    identity = list(range(2 * n))
    gens = tuple(g.rename(zw, identity) for g in system.generators)
    return ComplexifiedIdeal(Ideal.from_polys(zw, gens))


def complexify_complex_set(generators: Sequence[Polynomial]) -> Ideal:
    """For a complex set X given by g_k(z)=0, the ideal of X_z meet X_w.

    Adjoins the coefficient-conjugated copy of each generator rewritten in
    the w variables; the dimension doubles.  Generators are normalized to
    monic form.
    """
    if not generators:
        raise ValueError("need at least one generator")
    ctx = generators[0].context
    if any(b is not Block.Z for b in ctx.blocks):
        raise ValueError("complex-set generators must involve only z variables")
    n = ctx.size
    zw = zw_context(n)
    z_map = list(range(n))
    w_map = [n + k for k in range(n)]
    gens = []
    for g in generators:
        if g.context != ctx:
            raise ValueError("generators over different contexts")
        gens.append(g.rename(zw, z_map).monic(GREVLEX))
    for g in generators:
        gens.append(g.conjugate().rename(zw, w_map).monic(GREVLEX))
    return Ideal.from_polys(zw, gens)


def real_dimension(system: System, config: GroebnerConfig = DEFAULT_CONFIG):
    """dim_R of the described set = Krull dimension of the complexification.

    Returns None when the equations are inconsistent (empty set).
    """
    return ideal_dimension(complexify_ideal(system, config).ideal, config=config)


def evaluate_system(system: System, point: Sequence[GaussianRational]) -> list:
    """Values of every generator at a point given by n complex coordinates."""
    n = system.n
    if len(point) != n:
        raise ValueError(f"expected {n} coordinates, got {len(point)}")
    point = [gq(c) for c in point]
    values = {}
    if system.form == ZETA_FORM:
        for j in range(n):
            values[system.context.names[j]] = point[j]
            values[system.context.names[n + j]] = point[j].conjugate()
    else:
        for j in range(n):
            values[system.context.names[2 * j]] = gq(point[j].re)
            values[system.context.names[2 * j + 1]] = gq(point[j].im)
    return [g.evaluate(values) for g in system.generators]
