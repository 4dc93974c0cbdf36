# filename: tests/test_derived.py

import random

import pytest
from hypothesis import given, settings, strategies as st

from utils.derived import (
    _Halves,
    build_star,
    check_star,
    gerstenhaber,
    graph_subalgebra_check,
    l1,
    mc_report,
    mc_residual,
)
from utils.diffalg import AssocAlgebra, check_associative
from utils.errors import DimensionError
from utils.exactlin import MultiMap, Space, identity, subset_sum
from utils.genkit import catalog, diff_algebras, random_lin, random_multimap, rationals

DIFF_ALGEBRAS = diff_algebras(max_dim=3)


@pytest.mark.parametrize("name,da", DIFF_ALGEBRAS, ids=[name for name, _ in DIFF_ALGEBRAS])
def test_difference_operators_are_maurer_cartan(name, da):
    report = mc_report(da.alg, da.d)
    assert report.agree
    assert report.difference_identity and report.graph_criterion and report.maurer_cartan
    assert report.residual == []


def test_identity_fails_all_three_criteria():
    alg = rationals().algebra
    report = mc_report(alg, identity(alg.space))
    assert report.agree
    assert not (report.difference_identity or report.graph_criterion or report.maurer_cartan)
    # d(1)1 + 1d(1) + d(1)d(1) - d(1) = 2
    assert report.residual == [([0, 0, 0], "2")]


@pytest.mark.parametrize("entry", catalog(max_dim=3), ids=lambda e: e.name)
@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_random_maps_agree(entry, seed):
    alg = entry.algebra
    d = random_lin(random.Random(seed), alg.space, alg.space)
    report = mc_report(alg, d)
    assert report.agree
    assert mc_residual(alg, d) == subset_sum(alg.mult, [d, d]) - alg.mult.postcompose(d)
    assert graph_subalgebra_check(alg, d) == report.maurer_cartan


@pytest.mark.parametrize("entry", catalog(max_dim=4), ids=lambda e: e.name)
def test_star_product_is_associative(entry):
    star = build_star(entry.algebra)
    assert star.carrier.dim == 2 * entry.algebra.space.dim
    assert check_star(star).ok


def test_bracket_of_a_product_with_itself():
    for entry in catalog(max_dim=3):
        m = entry.algebra.mult
        assert gerstenhaber(m, m).is_zero()

    a = Space(2)
    # e0 e0 = e1, e1 e0 = e0
    m = MultiMap.from_entries((a, a), a, [((1, 0, 0), 1), ((0, 1, 0), 1)])
    assert not check_associative(AssocAlgebra(space=a, mult=m)).ok
    assert not gerstenhaber(m, m).is_zero()


def test_bracket_of_linear_maps_is_the_commutator():
    rng = random.Random(4)
    a = Space(3)
    f, g = random_lin(rng, a, a), random_lin(rng, a, a)
    assert gerstenhaber(f, g) == f @ g - g @ f


def test_linear_part_is_the_hochschild_differential(dual):
    # l1(d)(a, b) = d(a)b + a d(b) - d(ab) on the Ā^2 -> A component
    alg = dual.algebra
    d = random_lin(random.Random(1), alg.space, alg.space)
    h = _Halves(alg.space)
    read = l1(alg, d).with_inputs(h.i_bar, h.i_bar).postcompose(h.p)
    expected = alg.mult.precompose(0, d) + alg.mult.precompose(1, d) - alg.mult.postcompose(d)
    assert read == expected


def test_arity_cap():
    a = Space(1)
    m3 = MultiMap.from_entries((a, a, a), a, [])
    m2 = MultiMap.from_entries((a, a), a, [])
    with pytest.raises(DimensionError):
        gerstenhaber(m3, m2)
    with pytest.raises(DimensionError):
        gerstenhaber(MultiMap((), a, [1]), m2)


def _random_maps(seed: int, *arities: int) -> list[MultiMap]:
    rng = random.Random(seed)
    a = Space(2)
    return [random_multimap(rng, (a,) * k, a) for k in arities]


@pytest.mark.parametrize("k,l", [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (3, 1)])
@settings(max_examples=10, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_bracket_is_graded_antisymmetric(k, l, seed):
    f, g = _random_maps(seed, k, l)
    forward = gerstenhaber(f, g)
    # degrees are arity - 1
    assert gerstenhaber(g, f) == (forward if (k - 1) * (l - 1) % 2 else -forward)


@pytest.mark.parametrize("arities", [(2, 2, 1), (2, 1, 2), (1, 2, 2), (1, 1, 3), (2, 1, 1)])
@settings(max_examples=10, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_bracket_satisfies_graded_jacobi(arities, seed):
    # [f, [g, h]] = [[f, g], h] + (-1)^{|f||g|} [g, [f, h]]
    f, g, h = _random_maps(seed, *arities)
    sign = -1 if (arities[0] - 1) * (arities[1] - 1) % 2 else 1
    left = gerstenhaber(f, gerstenhaber(g, h))
    right = gerstenhaber(gerstenhaber(f, g), h)
    other = gerstenhaber(g, gerstenhaber(f, h))
    assert left == (right - other if sign < 0 else right + other)
