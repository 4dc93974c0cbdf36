# filename: tests/test_twoalg.py

import pytest

from nodes.convert_node import convert_structure
from utils.checking import same_maps
from utils.corresp import crossed_to_strict, identity_crossed_module
from utils.diffainf2 import compose_diff_morphism, identity_diff_morphism
from utils.diffalg import DifferenceAlgebra, regular_diff_bimodule
from utils.errors import DimensionError
from utils.exactlin import inverse, lin_from_rows
from utils.genkit import catalog, gen_skeletal, random_transport
from utils.twoalg import (
    DiffAss2,
    TwoVec,
    alpha,
    alpha_inverse,
    check_diffass2,
    check_diffass2_morphism,
    check_twovec,
    compose_arrows,
    compose_diffass2_morphism,
    discrete_diffass2,
    functor_S,
    functor_S_mor,
    functor_T,
    functor_T_mor,
    identity_diffass2_morphism,
    is_strict_2alg,
)


def _rebased(c: DiffAss2, u) -> DiffAss2:
    """The same 2-algebra written in the basis u of C1."""
    v = inverse(u)
    tv = c.tv
    return DiffAss2(
        tv=TwoVec(C0=tv.C0, C1=tv.C1, s=tv.s @ v, t=tv.t @ v, i=u @ tv.i),
        bullet0=c.bullet0,
        bullet1=c.bullet1.with_inputs(v, v).postcompose(u),
        assoc=c.assoc.postcompose(u),
        D0=c.D0,
        D1=u @ c.D1 @ v,
        Dnat=c.Dnat.postcompose(u),
    )


def _shear(c: DiffAss2):
    n = c.C1.dim
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    rows[0][n - 1] = 1
    return lin_from_rows(c.C1, c.C1, rows)


@pytest.fixture(scope="module")
def moved(skeletal):
    return random_transport(skeletal, 2)


def test_images_are_2algebras_and_come_back(skeletal, strict, moved):
    for x in (skeletal, strict, moved[0]):
        c = functor_T(x)
        assert check_diffass2(c).ok
        assert c.C1.dim == x.A0.dim + x.A1.dim
        assert same_maps(functor_S(c), x)
        assert same_maps(functor_T(functor_S(c)), c)


def test_skeletal_image_has_equal_source_and_target(skeletal):
    c = functor_T(skeletal)
    assert c.tv.s == c.tv.t
    assert check_twovec(c.tv).ok


def test_strict_input_gives_strict_2algebra(strict):
    assert is_strict_2alg(functor_T(strict))


def test_composing_arrows(skeletal):
    tv = functor_T(skeletal).tv
    # skeletal: t(x, h) = x
    assert compose_arrows(tv, (1, 0, 1, 0), (1, 0, 0, 1)) == (1, 0, 1, 1)
    with pytest.raises(DimensionError):
        compose_arrows(tv, (1, 0, 1, 0), (0, 1, 0, 0))


def test_basis_change_is_alpha_isomorphic(skeletal):
    c = _rebased(functor_T(skeletal), _shear(functor_T(skeletal)))
    assert check_diffass2(c).ok
    back = functor_T(functor_S(c))
    assert not same_maps(back, c)
    assert check_diffass2_morphism(back, c, alpha(c)).ok
    assert check_diffass2_morphism(c, back, alpha_inverse(c)).ok
    assert convert_structure(c, "ainf").relation == "alpha-isomorphic"


def test_normal_form_converts_identically(strict):
    c = functor_T(strict)
    assert convert_structure(c, "ainf").relation == "identical"
    assert convert_structure(strict, "2alg").relation == "identical"


def test_image_of_a_morphism(skeletal, moved):
    target, f = moved
    src, dst = functor_T(skeletal), functor_T(target)
    m = functor_T_mor(skeletal, target, f)
    assert check_diffass2_morphism(src, dst, m).ok
    assert same_maps(functor_S_mor(src, dst, m), f)


def test_identity_laws(skeletal, moved):
    target, f = moved
    src, dst = functor_T(skeletal), functor_T(target)
    m = functor_T_mor(skeletal, target, f)
    assert same_maps(compose_diffass2_morphism(identity_diffass2_morphism(dst), m, dst), m)
    assert same_maps(compose_diffass2_morphism(m, identity_diffass2_morphism(src), dst), m)


def test_identity_goes_to_identity(skeletal):
    image = functor_T_mor(skeletal, skeletal, identity_diff_morphism(skeletal))
    assert same_maps(image, identity_diffass2_morphism(functor_T(skeletal)))


def test_images_compose(strict):
    middle, f = random_transport(strict, 1)
    end, g = random_transport(middle, 2)
    direct = functor_T_mor(strict, end, compose_diff_morphism(g, f))
    stepwise = compose_diffass2_morphism(
        functor_T_mor(middle, end, g),
        functor_T_mor(strict, middle, f),
        functor_T(end),
    )
    assert same_maps(direct, stepwise)
    assert check_diffass2_morphism(functor_T(strict), functor_T(end), stepwise).ok


def test_discrete_2algebra(dual_da):
    c = discrete_diffass2(dual_da)
    assert check_diffass2(c).ok
    assert is_strict_2alg(c)


def test_composition_of_images_is_associative(strict):
    a, f = random_transport(strict, 3)
    b, g = random_transport(a, 4)
    c, h = random_transport(b, 5)
    F, G, H = functor_T_mor(strict, a, f), functor_T_mor(a, b, g), functor_T_mor(b, c, h)
    end = functor_T(c)
    left = compose_diffass2_morphism(H, compose_diffass2_morphism(G, F, functor_T(b)), end)
    right = compose_diffass2_morphism(compose_diffass2_morphism(H, G, end), F, end)
    assert same_maps(left, right)


@pytest.mark.parametrize("entry", catalog(max_dim=3), ids=lambda e: e.name)
def test_category_laws_for_images_over_the_catalog(entry):
    da = DifferenceAlgebra(alg=entry.algebra, d=entry.difference_ops()[-1])
    for k, x in enumerate([gen_skeletal(da, regular_diff_bimodule(da), seed=2), crossed_to_strict(identity_crossed_module(da))]):
        a, f = random_transport(x, 10 * k)
        b, g = random_transport(a, 10 * k + 1)
        c, h = random_transport(b, 10 * k + 2)
        src, mid, end = functor_T(x), functor_T(b), functor_T(c)
        F, G, H = functor_T_mor(x, a, f), functor_T_mor(a, b, g), functor_T_mor(b, c, h)
        assert check_diffass2_morphism(src, functor_T(a), F).ok
        assert same_maps(compose_diffass2_morphism(identity_diffass2_morphism(functor_T(a)), F, functor_T(a)), F)
        assert same_maps(compose_diffass2_morphism(F, identity_diffass2_morphism(src), functor_T(a)), F)
        left = compose_diffass2_morphism(H, compose_diffass2_morphism(G, F, mid), end)
        right = compose_diffass2_morphism(compose_diffass2_morphism(H, G, end), F, end)
        assert same_maps(left, right)
