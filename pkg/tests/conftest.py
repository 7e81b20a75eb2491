"""Shared fixtures and seeded random generators for the test suite."""

from fractions import Fraction
from itertools import combinations
from pathlib import Path

import pytest

from holoclosure.arith import GaussianRational
from holoclosure.complexify import System
from holoclosure.poly import Block, Polynomial, VariableContext
from holoclosure.syntax import parse

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

SYSTEM_FIXTURES = [
    "totally_real_r1.sys",
    "totally_real_r2.sys",
    "totally_real_r3.sys",
    "complex_line_c2.sys",
    "complex_hyperplane_c3.sys",
    "sphere.sys",
    "line_times_real.sys",
    "umbrella.sys",
    "umbrella_stick_germ.sys",
    "paraboloid.sys",
    "mixed_graph.sys",
]

ALL_FIXTURES = SYSTEM_FIXTURES + ["whitney.map", "osgood.jets", "surface_param.par"]


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def load_fixture(name):
    return (FIXTURES / name).read_text(encoding="utf-8")


def system_from_text(text):
    return System.from_document(parse(text))


def system_fixture(name):
    return system_from_text(load_fixture(name))


def rand_fraction(rng, bound=5, den=3):
    return Fraction(rng.randint(-bound, bound), rng.randint(1, den))


def rand_gq(rng, bound=5, den=3):
    return GaussianRational(rand_fraction(rng, bound, den), rand_fraction(rng, bound, den))


def rand_exponents(rng, nvars, max_deg):
    total = rng.randint(0, max_deg)
    m = []
    rest = total
    for _ in range(nvars - 1):
        e = rng.randint(0, rest)
        m.append(e)
        rest -= e
    m.append(rest)
    return tuple(m)


def rand_poly(rng, ctx, max_terms=3, max_deg=3, real=False):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        c = GaussianRational(rand_fraction(rng)) if real else rand_gq(rng)
        if c:
            terms[rand_exponents(rng, ctx.size, max_deg)] = c
    return Polynomial(ctx, terms)


def rand_nonzero_poly(rng, ctx, max_terms=3, max_deg=3, real=False):
    while True:
        f = rand_poly(rng, ctx, max_terms, max_deg, real)
        if not f.is_zero:
            return f


def param_ctx(names):
    return VariableContext(tuple(names), (Block.PARAM,) * len(names))


def staircase_dimension_brute_force(monomials, nvars):
    """Independent oracle: subset search directly on monomial generators."""
    supports = [frozenset(k for k, e in enumerate(m) if e) for m in monomials]
    if any(not s for s in supports):
        return None
    for size in range(nvars, -1, -1):
        for S in combinations(range(nvars), size):
            s_set = set(S)
            if not any(sup <= s_set for sup in supports):
                return size
    return None
