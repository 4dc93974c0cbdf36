# filename: tests/test_hbimod.py

import pytest

from utils.ainf2 import check_ainf2
from utils.checking import same_maps
from utils.diffainf2 import check_diff_ainf2, is_skeletal, is_strict
from utils.diffalg import twist_diff_bimodule
from utils.errors import StructureError
from utils.genkit import gen_diff_hbimods, gen_hbimods, skeletal_diff_hbimod, strict_diff_hbimod
from utils.hbimod import (
    DiffHBimod2,
    check_diff_hbimod,
    check_hbimod,
    direct_sum_diff_hbimod,
    is_skeletal_hbimod,
    is_strict_hbimod,
    semidirect_2alg,
    semidirect_ainf2,
    semidirect_diff,
)
from utils.twoalg import check_diffass2, functor_T, is_strict_2alg


def test_generated_difference_hbimods_pass(dual_da):
    for k, dhb in enumerate(gen_diff_hbimods(dual_da, seed=4)):
        report = check_diff_hbimod(dual_da, dhb)
        assert report.ok, f"{k}: {report.summary()}"


def test_plain_hbimods_pass(dual):
    for hb in gen_hbimods(dual.algebra, seed=2):
        assert check_hbimod(dual.algebra, hb).ok
        assert check_ainf2(semidirect_ainf2(dual.algebra, hb)).ok


@pytest.mark.parametrize("seed", [0, 1, 7])
def test_semidirect_product_is_a_difference_structure(dual_da, seed):
    for dhb in gen_diff_hbimods(dual_da, seed):
        x = semidirect_diff(dual_da, dhb)
        assert check_diff_ainf2(x).ok
        assert x.A0.dim == dual_da.space.dim + dhb.base.M0.dim
        assert x.A1.dim == dhb.base.M1.dim


def test_semidirect_2alg_is_the_image_of_the_semidirect_product(dual_da):
    for dhb in gen_diff_hbimods(dual_da, seed=5):
        c = semidirect_2alg(dual_da, dhb)
        assert check_diffass2(c).ok
        assert same_maps(c, functor_T(semidirect_diff(dual_da, dhb)))


def test_skeletal_and_strict_are_preserved(dual_da, regular):
    skeletal = skeletal_diff_hbimod(dual_da, regular, regular, seed=9)
    assert is_skeletal_hbimod(skeletal.base)
    assert is_skeletal(semidirect_diff(dual_da, skeletal))

    strict = strict_diff_hbimod(dual_da)
    assert is_strict_hbimod(strict)
    assert is_strict(semidirect_diff(dual_da, strict))
    assert is_strict_2alg(semidirect_2alg(dual_da, strict))


def test_direct_sum_mixes_both_kinds(dual_da, regular):
    strict = strict_diff_hbimod(dual_da)
    skeletal = skeletal_diff_hbimod(dual_da, regular, twist_diff_bimodule(dual_da, regular), seed=2)
    mixed = direct_sum_diff_hbimod(dual_da, strict, skeletal)
    assert mixed.base.M0.dim == 4 and mixed.base.M1.dim == 4
    assert check_diff_hbimod(dual_da, mixed).ok
    assert not is_skeletal_hbimod(mixed.base)


def test_broken_homotopy_is_rejected(dual_da):
    good = strict_diff_hbimod(dual_da)
    broken = DiffHBimod2(
        base=good.base,
        Delta0=good.Delta0,
        Delta1=good.Delta1,
        theta_am=good.base.left0,
        theta_ma=good.theta_ma,
    )
    assert not check_diff_hbimod(dual_da, broken).ok
    with pytest.raises(StructureError):
        semidirect_diff(dual_da, broken)
