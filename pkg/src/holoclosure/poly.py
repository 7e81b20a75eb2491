"""Multivariate polynomials over Q(i) with named, block-structured variables.

A ``VariableContext`` fixes an ordered list of variable names, each assigned
to one block (ambient zeta coordinates, their formal conjugates, the
complexified z/w pair, interleaved real coordinates, parameters, or formal
exp symbols).  Monomials are dense exponent tuples against that context.
Polynomials are immutable term maps monomial -> nonzero coefficient, so two
polynomials are equal exactly when they are mathematically equal.

Block structure is what makes the geometric constructions mechanical: the
conjugation swap pairs the zeta/zetabar (or z/w) blocks positionally, and
elimination orders rank every monomial touching an eliminated block above
all monomials free of it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, Sequence

from holoclosure.arith import GaussianRational, gq, gq_to_text

Monomial = tuple  # dense exponent tuple, one entry per context variable


class Block(Enum):
    ZETA = "zeta"        # ambient coordinates of C^n
    ZETABAR = "zetabar"  # their formal conjugates
    Z = "z"              # first factor of the complexified C^2n
    W = "w"              # second factor of the complexified C^2n
    REAL = "real"        # interleaved x1,y1,...,xn,yn
    PARAM = "param"      # map source / parametrization variables
    EXP = "exp"          # formal exp(t) symbols used by jet components


@dataclass(frozen=True)
class VariableContext:
    """Ordered variable names partitioned into labeled blocks."""

    names: tuple
    blocks: tuple

    def __post_init__(self):
        if len(self.names) != len(self.blocks):
            raise ValueError("one block label per variable required")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")

    @property
    def size(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def indices(self, block: Block) -> tuple:
        return tuple(k for k, b in enumerate(self.blocks) if b is block)

    def has_block(self, block: Block) -> bool:
        return block in self.blocks

    def block_of(self, name: str) -> Block:
        return self.blocks[self.index(name)]

    def drop(self, block: Block) -> tuple["VariableContext", tuple]:
        """Context without ``block``, plus the kept old indices in order."""
        kept = tuple(k for k, b in enumerate(self.blocks) if b is not block)
        ctx = VariableContext(
            tuple(self.names[k] for k in kept),
            tuple(self.blocks[k] for k in kept),
        )
        return ctx, kept

    def concat(self, other: "VariableContext") -> "VariableContext":
        return VariableContext(self.names + other.names, self.blocks + other.blocks)

    def swap_permutation(self, swap: Mapping[Block, Block]) -> tuple:
        """Involutive index permutation pairing swapped blocks positionally."""
        perm = list(range(self.size))
        for src, dst in swap.items():
            a, b = self.indices(src), self.indices(dst)
            if len(a) != len(b):
                raise ValueError(f"blocks {src} and {dst} differ in size")
            for i, j in zip(a, b):
                perm[i] = j
                perm[j] = i
        return tuple(perm)


def zeta_context(names: Sequence[str]) -> VariableContext:
    """Ambient context for n declared zeta variables plus their conjugates."""
    names = tuple(names)
    conj_names = tuple(f"conj({v})" for v in names)
    return VariableContext(
        names + conj_names,
        (Block.ZETA,) * len(names) + (Block.ZETABAR,) * len(names),
    )


def zw_context(n: int) -> VariableContext:
    names = tuple(f"z{j}" for j in range(1, n + 1)) + tuple(f"w{j}" for j in range(1, n + 1))
    return VariableContext(names, (Block.Z,) * n + (Block.W,) * n)


def z_context(n: int) -> VariableContext:
    return VariableContext(tuple(f"z{j}" for j in range(1, n + 1)), (Block.Z,) * n)


def real_context(names: Sequence[str]) -> VariableContext:
    """Interleaved real coordinates x1,y1,...,xn,yn (even count required)."""
    names = tuple(names)
    if len(names) % 2 != 0:
        raise ValueError("real context needs an even number of variables (x,y pairs)")
    return VariableContext(names, (Block.REAL,) * len(names))


def param_context(names: Sequence[str]) -> VariableContext:
    return VariableContext(tuple(names), (Block.PARAM,) * len(names))


# -- monomial helpers -------------------------------------------------------


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))

def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))

def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))

def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))

def monomial_degree(m: Monomial) -> int:
    return sum(m)


# -- monomial orders --------------------------------------------------------


def _grevlex_key(m: Monomial):
    return (sum(m), tuple(-e for e in reversed(m)))


class MonomialOrder:
    """Total, multiplicative well-order on monomials, exposed as a sort key."""

    def key(self, m: Monomial):
        raise NotImplementedError


@dataclass(frozen=True)
class Lex(MonomialOrder):
    def key(self, m: Monomial):
        return m


@dataclass(frozen=True)
class Grevlex(MonomialOrder):
    def key(self, m: Monomial):
        return _grevlex_key(m)


@dataclass(frozen=True)
class BlockElimination(MonomialOrder):
    """Eliminated indices dominate; grevlex inside each of the two groups."""

    eliminated: tuple
    kept: tuple

    @classmethod
    def for_block(cls, context: VariableContext, block: Block) -> "BlockElimination":
        if not context.has_block(block):
            raise ValueError(f"context has no {block} block")
        elim = context.indices(block)
        kept = tuple(k for k in range(context.size) if k not in elim)
        return cls(elim, kept)

    @classmethod
    def for_indices(cls, size: int, eliminated: Iterable[int]) -> "BlockElimination":
        elim = tuple(sorted(eliminated))
        kept = tuple(k for k in range(size) if k not in elim)
        return cls(elim, kept)

    def key(self, m: Monomial):
        return (
            _grevlex_key(tuple(m[k] for k in self.eliminated)),
            _grevlex_key(tuple(m[k] for k in self.kept)),
        )


GREVLEX = Grevlex()
LEX = Lex()


def monomial_compare(order: MonomialOrder, a: Monomial, b: Monomial) -> int:
    """-1, 0, or 1 as a <, =, > b in the given order."""
    if len(a) != len(b):
        raise ValueError("monomials from different contexts")
    ka, kb = order.key(a), order.key(b)
    if ka < kb:
        return -1
    if ka > kb:
        return 1
    return 0


# -- polynomials ------------------------------------------------------------


class Polynomial:
    """Immutable multivariate polynomial over Q(i).

    ``terms`` maps exponent tuples to nonzero coefficients.  Sorted term
    views are cached per monomial order (orders change between the grevlex
    dimension phase and the elimination phase, so caching is keyed by the
    order object).
    """

    __slots__ = ("context", "terms", "_sorted")

    def __init__(self, context: VariableContext, terms: Mapping[Monomial, GaussianRational]):
        pruned = {}
        for m, c in terms.items():
            c = gq(c)
            if c:
                pruned[m] = c
        object.__setattr__(self, "context", context)
        object.__setattr__(self, "terms", pruned)
        object.__setattr__(self, "_sorted", {})

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, context: VariableContext) -> "Polynomial":
        return cls(context, {})

    @classmethod
    def constant(cls, context: VariableContext, c) -> "Polynomial":
        return cls(context, {(0,) * context.size: gq(c)})

    @classmethod
    def variable(cls, context: VariableContext, name: str) -> "Polynomial":
        e = [0] * context.size
        e[context.index(name)] = 1
        return cls(context, {tuple(e): gq(1)})

    @classmethod
    def from_monomial(cls, context: VariableContext, m: Monomial, c=1) -> "Polynomial":
        return cls(context, {tuple(m): gq(c)})

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Max term degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def used_indices(self) -> set:
        used = set()
        for m in self.terms:
            for k, e in enumerate(m):
                if e:
                    used.add(k)
        return used

    def sorted_terms(self, order: MonomialOrder) -> list:
        """Terms as (monomial, coeff), descending in the active order."""
        cached = self._sorted.get(order)
        if cached is None:
            cached = sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)
            self._sorted[order] = cached
        return cached

    def leading(self, order: MonomialOrder) -> tuple:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.sorted_terms(order)[0]

    # -- ring operations ----------------------------------------------------

    def _require_same_context(self, other: "Polynomial"):
        if self.context != other.context:
            raise ValueError("polynomials from different variable contexts")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._require_same_context(other)
        res = dict(self.terms)
        for m, c in other.terms.items():
            s = res.get(m)
            s = c if s is None else s + c
            if s:
                res[m] = s
            else:
                res.pop(m, None)
        return Polynomial(self.context, res)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._require_same_context(other)
        res = dict(self.terms)
        for m, c in other.terms.items():
            s = res.get(m)
            s = -c if s is None else s - c
            if s:
                res[m] = s
            else:
                res.pop(m, None)
        return Polynomial(self.context, res)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.context, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._require_same_context(other)
        res = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                c = c1 * c2
                s = res.get(m)
                s = c if s is None else s + c
                if s:
                    res[m] = s
                else:
                    res.pop(m, None)
        return Polynomial(self.context, res)

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.constant(self.context, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        c = gq(c)
        if not c:
            return Polynomial.zero(self.context)
        return Polynomial(self.context, {m: k * c for m, k in self.terms.items()})

    def monic(self, order: MonomialOrder) -> "Polynomial":
        if self.is_zero:
            return self
        _, lc = self.leading(order)
        return self.scale(gq(1) / lc)

    def sub_scaled(self, other: "Polynomial", m: Monomial, c: GaussianRational) -> "Polynomial":
        """self - c * x^m * other, the reduction step of the division algorithm."""
        res = dict(self.terms)
        for m2, c2 in other.terms.items():
            key = monomial_mul(m, m2)
            delta = c * c2
            s = res.get(key)
            s = -delta if s is None else s - delta
            if s:
                res[key] = s
            else:
                res.pop(key, None)
        return Polynomial(self.context, res)

    # -- substitution, conjugation, calculus ---------------------------------

    def substitute(self, target: VariableContext, images: Mapping[str, "Polynomial"]) -> "Polynomial":
        """Ring homomorphism sending each used variable to its image over target."""
        image_list = [None] * self.context.size
        for k in self.used_indices():
            name = self.context.names[k]
            if name not in images:
                raise KeyError(f"no image for variable {name!r}")
            img = images[name]
            if img.context != target:
                raise ValueError(f"image of {name!r} is not over the target context")
            image_list[k] = img
        result = Polynomial.zero(target)
        for m, c in self.terms.items():
            term = Polynomial.constant(target, c)
            for k, e in enumerate(m):
                if e:
                    term = term * (image_list[k] ** e)
            result = result + term
        return result

    def rename(self, target: VariableContext, index_map: Sequence[int]) -> "Polynomial":
        """Transport to ``target``, old index k becoming ``index_map[k]``."""
        res = {}
        zero = [0] * target.size
        for m, c in self.terms.items():
            e = zero[:]
            for k, exp in enumerate(m):
                if exp:
                    e[index_map[k]] += exp
            res[tuple(e)] = c
        return Polynomial(target, res)

    def embed(self, target: VariableContext) -> "Polynomial":
        """Transport to a larger context containing all of this one's names."""
        index_map = [target.index(v) for v in self.context.names]
        return self.rename(target, index_map)

    def conjugate(self, swap: Mapping[Block, Block] | None = None) -> "Polynomial":
        """Coefficient conjugation composed with a positional block swap."""
        if swap:
            perm = self.context.swap_permutation(swap)
        else:
            perm = tuple(range(self.context.size))
        res = {}
        for m, c in self.terms.items():
            e = [0] * len(m)
            for k, exp in enumerate(m):
                if exp:
                    e[perm[k]] = exp
            res[tuple(e)] = c.conjugate()
        return Polynomial(self.context, res)

    def derivative(self, name: str) -> "Polynomial":
        k = self.context.index(name)
        res = {}
        for m, c in self.terms.items():
            e = m[k]
            if e:
                dm = m[:k] + (e - 1,) + m[k + 1:]
                prev = res.get(dm)
                cc = c * gq(e)
                res[dm] = cc if prev is None else prev + cc
        return Polynomial(self.context, res)

    def evaluate(self, values: Mapping[str, GaussianRational]) -> GaussianRational:
        point = []
        for k in range(self.context.size):
            name = self.context.names[k]
            point.append(gq(values[name]) if name in values else None)
        total = gq(0)
        for m, c in self.terms.items():
            v = c
            for k, e in enumerate(m):
                if e:
                    if point[k] is None:
                        raise KeyError(f"no value for variable {self.context.names[k]!r}")
                    v = v * point[k] ** e if e > 1 else v * point[k]
            total = total + v
        return total

    # -- protocol ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.context == other.context and self.terms == other.terms

    def __hash__(self):
        return hash((self.context, frozenset(self.terms.items())))

    def __repr__(self):
        return f"<Polynomial {polynomial_to_text(self)}>"


def _pow_text(name: str, e: int) -> str:
    return name if e == 1 else f"{name}^{e}"


def _monomial_to_text(context: VariableContext, m: Monomial) -> str:
    parts = [_pow_text(context.names[k], e) for k, e in enumerate(m) if e]
    return "*".join(parts)


def _coeff_is_negative(c: GaussianRational) -> bool:
    return c.re < 0 or (c.re == 0 and c.im < 0)


def _coeff_to_factor_text(c: GaussianRational) -> str:
    """Coefficient as a multiplicative prefix; mixed values get parentheses."""
    if c.re != 0 and c.im != 0:
        return f"({gq_to_text(c)})"
    return gq_to_text(c)


def polynomial_to_text(f: Polynomial, order: MonomialOrder = GREVLEX) -> str:
    """Canonical text: terms descending in ``order``, reparseable exactly."""
    if f.is_zero:
        return "0"
    chunks = []
    for m, c in f.sorted_terms(order):
        neg = _coeff_is_negative(c)
        mag = -c if neg else c
        mono = _monomial_to_text(f.context, m)
        if not mono:
            body = _coeff_to_factor_text(mag)
        elif mag == gq(1):
            body = mono
        else:
            body = f"{_coeff_to_factor_text(mag)}*{mono}"
        if not chunks:
            chunks.append(f"-{body}" if neg else body)
        else:
            chunks.append(f" - {body}" if neg else f" + {body}")
    return "".join(chunks)


def poly_arith(f: Polynomial, g: Polynomial, kind: str) -> Polynomial:
    """Ring operation dispatch; kind is one of add, sub, mul."""
    if kind == "add":
        return f + g
    if kind == "sub":
        return f - g
    if kind == "mul":
        return f * g
    raise ValueError(f"unknown arithmetic kind {kind!r}")
