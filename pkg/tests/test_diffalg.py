# filename: tests/test_diffalg.py

import pytest

from utils.diffalg import (
    AssocAlgebra,
    DifferenceAlgebra,
    check_associative,
    check_diff_algebra,
    check_diff_bimodule,
    check_diff_homomorphism,
    check_endomorphism,
    endo_to_diff,
)
from utils.errors import DimensionError, StructureError
from utils.exactlin import MultiMap, Space, identity, lin_from_rows
from utils.genkit import catalog, diff_algebras, diff_bimodules, rationals

DIFF_ALGEBRAS = diff_algebras(max_dim=4)


@pytest.mark.parametrize("entry", catalog(max_dim=4), ids=lambda e: e.name)
def test_catalog_algebras_and_endomorphisms(entry):
    assert check_associative(entry.algebra).ok
    for phi in entry.endomorphisms:
        assert check_endomorphism(entry.algebra, phi).ok


@pytest.mark.parametrize("name,da", DIFF_ALGEBRAS, ids=[name for name, _ in DIFF_ALGEBRAS])
def test_generated_operators_are_difference_operators(name, da):
    report = check_diff_algebra(da)
    assert report.ok, report.summary()
    assert report.checked == ["(assoc)", "(Eq1)"]


@pytest.mark.parametrize("name,da", DIFF_ALGEBRAS, ids=[name for name, _ in DIFF_ALGEBRAS])
def test_generated_bimodules(name, da):
    for label, bm in diff_bimodules(da):
        assert check_diff_bimodule(da, bm).ok, label


def test_identity_is_not_a_difference_operator():
    alg = rationals().algebra
    report = check_diff_algebra(DifferenceAlgebra(alg=alg, d=identity(alg.space)))
    assert not report.ok
    assert report.failed_tags() == ["(Eq1)"]
    # d(1*1) = 1 against 1 + 1 + 1
    violation = report.violations[0]
    assert violation.point == [0, 0]
    assert violation.lhs == ["1"] and violation.rhs == ["3"]


def test_non_associative_product_is_reported():
    a = Space(2)
    # e0 e0 = e1, e1 e0 = e0
    mult = MultiMap.from_entries((a, a), a, [((1, 0, 0), 1), ((0, 1, 0), 1)])
    report = check_associative(AssocAlgebra(space=a, mult=mult))
    assert report.failed_tags() == ["(assoc)"]


def test_endo_to_diff_rejects_non_endomorphisms():
    alg = rationals().algebra
    with pytest.raises(StructureError) as caught:
        endo_to_diff(alg, lin_from_rows(alg.space, alg.space, [[2]]))
    assert caught.value.report.failed_tags() == ["(endo)"]


def test_endomorphism_gives_difference_operator(dual):
    for phi in dual.endomorphisms:
        d = endo_to_diff(dual.algebra, phi)
        assert check_diff_algebra(DifferenceAlgebra(alg=dual.algebra, d=d)).ok


def test_identity_is_a_homomorphism(dual_da):
    assert check_diff_homomorphism(dual_da, dual_da, identity(dual_da.space)).ok


def test_wrong_shapes_raise(dual_da):
    with pytest.raises(DimensionError):
        check_diff_algebra(DifferenceAlgebra(alg=dual_da.alg, d=identity(Space(3))))
