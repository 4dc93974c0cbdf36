# filename: tests/test_genkit.py

import pytest

from nodes.check_node import check_structure
from nodes.generate_node import GEN_KINDS, generate_structures
from utils.codec import decode, dump
from utils.errors import FormatError
from utils.exactlin import identity, zero_lin
from utils.genkit import catalog, find_entry, gen_difference_ops, gen_skeletal, rationals


def test_catalog_respects_max_dim():
    assert [e.name for e in catalog(max_dim=2)] == ["Q", "dual", "QC2", "zero2"]
    assert all(e.algebra.space.dim <= 3 for e in catalog(max_dim=3))
    assert len(catalog(max_dim=4)) == 7


def test_find_entry():
    assert find_entry("M2").algebra.space.dim == 4
    with pytest.raises(KeyError):
        find_entry("octonions")


def test_difference_ops_start_with_zero_and_minus_identity(dual):
    ops = gen_difference_ops(dual.algebra, dual.endomorphisms)
    space = dual.algebra.space
    assert ops[0] == zero_lin(space, space)
    assert ops[1] == -identity(space)
    assert len(ops) == 4


def test_repeated_endomorphisms_are_dropped():
    q = rationals().algebra
    assert len(gen_difference_ops(q, [identity(q.space), identity(q.space)])) == 2


def test_generation_is_deterministic(dual_da, regular):
    assert dump(gen_skeletal(dual_da, regular, seed=12)) == dump(gen_skeletal(dual_da, regular, seed=12))


@pytest.mark.parametrize("kind", GEN_KINDS)
def test_every_generated_file_passes_its_check(kind):
    files = generate_structures(kind, seed=1, algebra="dual")
    assert files
    for name, sf in files:
        assert sf.kind == kind
        report = check_structure(decode(sf))
        assert report.ok, f"{name}: {report.summary()}"


def test_generation_errors():
    with pytest.raises(FormatError):
        generate_structures("tensor")
    with pytest.raises(FormatError):
        generate_structures("algebra", algebra="M2", max_dim=2)
