# filename: tests/test_cohom.py

import random

import pytest
from hypothesis import given, settings, strategies as st

from app.core.config import MAX_COCHAIN_DEGREE
from utils.cohom import DiffCochain, diff_coboundary, hochschild_d, is_3_cocycle, zero_cochain
from utils.errors import DimensionError
from utils.exactlin import MultiMap, Space, identity
from utils.genkit import diff_algebras, diff_bimodules, random_cochain

seeds = st.integers(min_value=0, max_value=10_000)
DIFF_ALGEBRAS = diff_algebras(max_dim=3)
IDS = [name for name, _ in DIFF_ALGEBRAS]


def _coefficients(da):
    return [bm for name, bm in diff_bimodules(da) if name in ("regular", "twisted")]


@pytest.mark.parametrize("name,da", DIFF_ALGEBRAS, ids=IDS)
@settings(max_examples=2, deadline=None)
@given(seeds)
def test_coboundary_squares_to_zero(name, da, seed):
    for bm in _coefficients(da):
        for degree in range(4):
            c = random_cochain(random.Random(seed + degree), da, bm, degree)
            twice = diff_coboundary(da, bm, diff_coboundary(da, bm, c))
            assert twice.degree == degree + 2
            assert twice.is_zero()


@pytest.mark.parametrize("name,da", DIFF_ALGEBRAS, ids=IDS)
@settings(max_examples=2, deadline=None)
@given(seeds)
def test_coboundaries_are_cocycles(name, da, seed):
    for bm in _coefficients(da):
        image = diff_coboundary(da, bm, random_cochain(random.Random(seed), da, bm, 2))
        assert is_3_cocycle(da, bm, image.f, image.second())


def test_degree_three_cochain_goes_twice(dual_da, regular):
    c = random_cochain(random.Random(0), dual_da, regular, 3)
    twice = diff_coboundary(dual_da, regular, diff_coboundary(dual_da, regular, c))
    assert twice.degree == 5
    assert twice.is_zero()


def test_degree_zero_keeps_the_module_term(dual_da, regular):
    # u = e: δu = ae - ea = 0 on a commutative algebra, the second component is -Δ(e) = -e
    u = DiffCochain(degree=0, f=MultiMap((), regular.module, [0, 1]))
    image = diff_coboundary(dual_da, regular, u)
    assert image.f.is_zero()
    assert image.second().column() == (0, -1)


def test_hochschild_of_identity_on_regular_module(dual, dual_da, regular):
    # δ(Id)(a, b) = ab - ab + ab = ab
    assert hochschild_d(identity(dual_da.space), dual_da.mult, regular.plain()) == dual.algebra.mult


def test_zero_cochain_is_zero(dual_da, regular):
    for degree in range(4):
        assert zero_cochain(dual_da, regular, degree).is_zero()


def test_degree_cap(dual_da, regular):
    top = zero_cochain(dual_da, regular, MAX_COCHAIN_DEGREE)
    with pytest.raises(DimensionError):
        diff_coboundary(dual_da, regular, top)


def test_mismatched_arity_is_rejected(regular):
    a = Space(2)
    with pytest.raises(ValueError):
        DiffCochain(degree=2, f=MultiMap.from_entries((a,), regular.module, []))
    with pytest.raises(ValueError):
        DiffCochain(degree=0, f=MultiMap((), regular.module, [0, 0]), chi=MultiMap((), regular.module, [0, 0]))
    with pytest.raises(ValueError):
        DiffCochain(degree=MAX_COCHAIN_DEGREE + 1, f=MultiMap.from_entries((a,) * (MAX_COCHAIN_DEGREE + 1), regular.module, []))
