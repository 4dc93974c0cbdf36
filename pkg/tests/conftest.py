# filename: tests/conftest.py

import pytest

from utils.corresp import crossed_to_strict, identity_crossed_module
from utils.diffalg import DifferenceAlgebra, regular_diff_bimodule
from utils.genkit import dual_numbers, gen_skeletal, rationals


@pytest.fixture(scope="session")
def dual():
    return dual_numbers()


@pytest.fixture(scope="session")
def dual_da(dual):
    """Dual numbers with d = diag(1, 2) - Id, i.e. e -> e."""
    return DifferenceAlgebra(alg=dual.algebra, d=dual.difference_ops()[2])


@pytest.fixture(scope="session")
def q_da():
    """Q with d = -Id."""
    entry = rationals()
    return DifferenceAlgebra(alg=entry.algebra, d=entry.difference_ops()[1])


@pytest.fixture(scope="session")
def regular(dual_da):
    return regular_diff_bimodule(dual_da)


@pytest.fixture(scope="session")
def skeletal(dual_da, regular):
    return gen_skeletal(dual_da, regular, seed=3)


@pytest.fixture(scope="session")
def strict(dual_da):
    return crossed_to_strict(identity_crossed_module(dual_da))
