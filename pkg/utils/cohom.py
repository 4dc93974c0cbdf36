# filename: utils/cohom.py

"""
Cochains of a difference algebra (A, d) with coefficients in a difference
bimodule (M, Delta).

C^0 = M and C^n = Hom(A^n, M) + Hom(A^(n-1), M) for n >= 1, where
Hom(A^0, M) = M is held as an arity-0 map. The differential is

    (f, chi) -> (delta f, delta^d chi + (-1)^n partial f)

with delta the Hochschild coboundary, delta^d the Hochschild coboundary for
the twisted actions and partial = partial^{d, Delta}. In degree 0 the second
component of the result is -Delta(u); dropping it would break delta^2 = 0.
"""

import logging

from pydantic import model_validator

from app.core.config import MAX_COCHAIN_DEGREE
from utils.checking import Structure, require_shape
from utils.diffalg import Bimodule, DiffBimodule, DifferenceAlgebra, twist_bimodule
from utils.errors import DimensionError
from utils.exactlin import Lin, MultiMap, zero_map, subset_sum

logger = logging.getLogger(__name__)


class DiffCochain(Structure):
    degree: int
    f: MultiMap
    chi: MultiMap | None = None

    @model_validator(mode="after")
    def _degree_matches(self):
        if not 0 <= self.degree <= MAX_COCHAIN_DEGREE:
            raise DimensionError(f"cochain degree {self.degree} outside 0..{MAX_COCHAIN_DEGREE}")
        if self.f.arity != self.degree:
            raise DimensionError(f"f has arity {self.f.arity} in a degree-{self.degree} cochain")
        if self.degree == 0 and self.chi is not None:
            raise DimensionError("degree-0 cochains have no second component")
        if self.degree > 0 and self.chi is not None and self.chi.arity != self.degree - 1:
            raise DimensionError(f"chi has arity {self.chi.arity} in a degree-{self.degree} cochain")
        return self

    def second(self) -> MultiMap | None:
        """chi, with the zero map standing in when it was left out."""
        if self.degree == 0:
            return None
        if self.chi is None:
            return zero_map(self.f.srcs[1:], self.f.dst)
        return self.chi

    def is_zero(self) -> bool:
        chi = self.second()
        return self.f.is_zero() and (chi is None or chi.is_zero())


def hochschild_d(f: MultiMap, mult: MultiMap, bm: Bimodule) -> MultiMap:
    """(δf)(a1..a_{n+1}) = a1 f(a2..) + Σ (-1)^i f(.., a_i a_{i+1}, ..) + (-1)^{n+1} f(a1..an) a_{n+1}."""
    a = mult.dst
    n = f.arity
    if f.dst != bm.module or any(s != a for s in f.srcs):
        raise DimensionError(f"cochain of signature {f.signature()} does not fit A^n -> M")
    require_shape("left", bm.left, (a, bm.module), bm.module)
    require_shape("right", bm.right, (bm.module, a), bm.module)
    out = bm.left.insert(1, f)
    for i in range(1, n + 1):
        term = f.insert(i - 1, mult)
        out = out - term if i % 2 else out + term
    last = bm.right.insert(0, f)
    return out - last if (n + 1) % 2 else out + last


def partial_d_delta(f: MultiMap, d: Lin, Delta: Lin) -> MultiMap:
    """Sum of f with d inserted in every nonempty set of slots, minus Delta ∘ f."""
    if f.dst != Delta.src:
        raise DimensionError("Delta does not act on the values of f")
    return subset_sum(f, [d] * f.arity) - f.postcompose(Delta)


def diff_coboundary(da: DifferenceAlgebra, bm: DiffBimodule, c: DiffCochain) -> DiffCochain:
    n = c.degree
    if n + 1 > MAX_COCHAIN_DEGREE:
        raise DimensionError(f"coboundary of a degree-{n} cochain exceeds the degree cap {MAX_COCHAIN_DEGREE}")
    plain = bm.plain()
    new_f = hochschild_d(c.f, da.mult, plain)
    new_chi = partial_d_delta(c.f, da.d, bm.Delta)
    if n % 2:
        new_chi = -new_chi
    chi = c.second()
    if chi is not None:
        new_chi = new_chi + hochschild_d(chi, da.mult, twist_bimodule(da, plain))
    return DiffCochain(degree=n + 1, f=new_f, chi=new_chi)


def is_3_cocycle(da: DifferenceAlgebra, bm: DiffBimodule, mu: MultiMap, chi: MultiMap) -> bool:
    return diff_coboundary(da, bm, DiffCochain(degree=3, f=mu, chi=chi)).is_zero()


def zero_cochain(da: DifferenceAlgebra, bm: DiffBimodule, degree: int) -> DiffCochain:
    a = da.space
    chi = None if degree == 0 else zero_map((a,) * (degree - 1), bm.module)
    return DiffCochain(degree=degree, f=zero_map((a,) * degree, bm.module), chi=chi)
