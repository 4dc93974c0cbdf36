# filename: tests/test_diffainf2.py

import pytest
from hypothesis import given, settings, strategies as st

from utils.ainf2 import AInf2, check_ainf2, check_ainf2_morphism, identity_ainf2_morphism
from utils.checking import same_maps
from utils.cohom import zero_cochain
from utils.corresp import cocycle_to_skeletal, crossed_to_strict, identity_crossed_module
from utils.diffainf2 import (
    TwoTermDiffAInf,
    check_diff_ainf2,
    check_diff_morphism,
    compose_diff_morphism,
    identity_diff_morphism,
    is_skeletal,
    is_strict,
    zero_diffop2,
)
from utils.diffalg import DifferenceAlgebra, regular_diff_bimodule
from utils.errors import DimensionError
from utils.exactlin import MultiMap, zero_lin
from utils.genkit import catalog, gen_skeletal, random_transport, rationals

seeds = st.integers(min_value=0, max_value=10_000)


def _q_skeletal_with_mu(value) -> TwoTermDiffAInf:
    """Skeletal structure over (Q, 0) whose homotopy is the constant ``value``."""
    alg = rationals().algebra
    da = DifferenceAlgebra(alg=alg, d=zero_lin(alg.space, alg.space))
    bm = regular_diff_bimodule(da)
    x = cocycle_to_skeletal(da, bm, zero_cochain(da, bm, 3))
    q = alg.space
    mu = MultiMap.from_entries((q, q, q), q, [((0, 0, 0, 0), value)])
    a = x.ainf
    return TwoTermDiffAInf(ainf=AInf2(cx=a.cx, m00=a.m00, m01=a.m01, m10=a.m10, mu=mu), dop=x.dop)


def test_generated_skeletal(skeletal):
    assert is_skeletal(skeletal)
    report = check_diff_ainf2(skeletal)
    assert report.ok, report.summary()
    assert {"(A8)", "(D4)"} <= set(report.checked)


def test_strict_from_identity_crossed_module(strict):
    assert is_strict(strict)
    assert not is_skeletal(strict)
    assert check_diff_ainf2(strict).ok


def test_nonzero_homotopy_over_q_breaks_the_pentagon():
    x = _q_skeletal_with_mu(1)
    report = check_diff_ainf2(x)
    assert not report.ok
    assert report.failed_tags() == ["(A8)"]
    assert check_diff_ainf2(_q_skeletal_with_mu(0)).ok


def test_zero_operator_on_strict_structure(strict):
    x = TwoTermDiffAInf(ainf=strict.ainf, dop=zero_diffop2(strict.ainf))
    assert check_diff_ainf2(x).ok


@settings(max_examples=8, deadline=None)
@given(seeds)
def test_transport_gives_valid_target_and_morphism(skeletal, seed):
    moved, morphism = random_transport(skeletal, seed)
    assert check_diff_ainf2(moved).ok
    assert check_diff_morphism(skeletal, moved, morphism).ok


@settings(max_examples=5, deadline=None)
@given(seeds)
def test_composites_of_morphisms_are_morphisms(strict, seed):
    middle, f = random_transport(strict, seed)
    end, g = random_transport(middle, seed + 1)
    assert check_diff_morphism(strict, end, compose_diff_morphism(g, f)).ok


def test_identity_morphisms(skeletal):
    assert check_ainf2_morphism(skeletal.ainf, skeletal.ainf, identity_ainf2_morphism(skeletal.ainf)).ok
    ident = identity_diff_morphism(skeletal)
    assert check_diff_morphism(skeletal, skeletal, ident).ok

    moved, f = random_transport(skeletal, 11)
    assert same_maps(compose_diff_morphism(identity_diff_morphism(moved), f), f)
    assert same_maps(compose_diff_morphism(f, ident), f)


def test_wrong_phi3_breaks_the_difference_identities(strict):
    moved, f = random_transport(strict, 5)
    shifted = f.model_copy(update={"phi3": f.phi3 + _unit_lin(strict)})
    report = check_diff_morphism(strict, moved, shifted)
    assert not report.ok
    # delta is invertible here, so phi0 d0 - d0' phi0 = delta' phi3 pins phi3 down
    assert "(hd-eq1)" in report.failed_tags()


def _unit_lin(x: TwoTermDiffAInf):
    return MultiMap.from_entries((x.A0,), x.A1, [((0, 0), 1)])


def test_shape_mismatch_raises(skeletal, strict):
    with pytest.raises(DimensionError):
        check_ainf2(AInf2(cx=strict.ainf.cx, m00=skeletal.ainf.m00, m01=skeletal.ainf.m01, m10=skeletal.ainf.m10, mu=strict.ainf.m00))


@settings(max_examples=3, deadline=None)
@given(seeds)
def test_composition_is_associative(skeletal, seed):
    a, f = random_transport(skeletal, seed)
    b, g = random_transport(a, seed + 1)
    _, h = random_transport(b, seed + 2)
    left = compose_diff_morphism(h, compose_diff_morphism(g, f))
    right = compose_diff_morphism(compose_diff_morphism(h, g), f)
    assert same_maps(left, right)


def test_perturbed_d2_is_reported_under_d4(skeletal):
    # delta = 0, so only the identity linking d2 to the products can notice
    bump = MultiMap.from_entries((skeletal.A0, skeletal.A0), skeletal.A1, [((0, 0, 0), 1)])
    dop = skeletal.dop.model_copy(update={"d2": skeletal.dop.d2 + bump})
    report = check_diff_ainf2(TwoTermDiffAInf(ainf=skeletal.ainf, dop=dop))
    assert report.failed_tags() == ["(D4)"]


def _corpus_structures(entry) -> list[TwoTermDiffAInf]:
    """A skeletal and a strict structure over the entry's last difference operator."""
    da = DifferenceAlgebra(alg=entry.algebra, d=entry.difference_ops()[-1])
    return [gen_skeletal(da, regular_diff_bimodule(da), seed=1), crossed_to_strict(identity_crossed_module(da))]


@pytest.mark.parametrize("entry", catalog(max_dim=3), ids=lambda e: e.name)
def test_category_laws_over_the_catalog(entry):
    for k, x in enumerate(_corpus_structures(entry)):
        a, f = random_transport(x, 10 * k)
        b, g = random_transport(a, 10 * k + 1)
        _, h = random_transport(b, 10 * k + 2)
        assert check_diff_morphism(x, a, f).ok
        assert same_maps(compose_diff_morphism(identity_diff_morphism(a), f), f)
        assert same_maps(compose_diff_morphism(f, identity_diff_morphism(x)), f)
        left = compose_diff_morphism(h, compose_diff_morphism(g, f))
        right = compose_diff_morphism(compose_diff_morphism(h, g), f)
        assert same_maps(left, right)
