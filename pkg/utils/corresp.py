# filename: utils/corresp.py

"""
Skeletal structures against 3-cocycles, strict structures against crossed
modules of difference algebras.
"""

import logging
from typing import Sequence

from app.schemas.models import CheckReport
from utils.ainf2 import AInf2, TwoTermComplex
from utils.checking import Reporter, Structure, require, require_shape
from utils.cohom import DiffCochain, is_3_cocycle
from utils.diffainf2 import DiffOp2, TwoTermDiffAInf, check_diff_ainf2, is_skeletal, is_strict
from utils.diffalg import (
    AssocAlgebra,
    DiffBimodule,
    DifferenceAlgebra,
    check_diff_algebra,
    check_diff_bimodule,
    check_diff_homomorphism,
)
from utils.errors import DimensionError, StructureError
from utils.exactlin import Lin, MultiMap, Space, identity, left_inverse, lin_from_columns, zero_lin, zero_map

logger = logging.getLogger(__name__)


class CrossedModule(Structure):
    base: DifferenceAlgebra
    top: DifferenceAlgebra
    left: MultiMap
    right: MultiMap
    partial: Lin

    def as_bimodule(self) -> DiffBimodule:
        return DiffBimodule(module=self.top.space, left=self.left, right=self.right, Delta=self.top.d)


def check_crossed_module(cm: CrossedModule) -> CheckReport:
    a, h = cm.base.space, cm.top.space
    require_shape("left", cm.left, (a, h), h)
    require_shape("right", cm.right, (h, a), h)
    require_shape("partial", cm.partial, (h,), a)
    mult, top, left, right, partial = cm.base.mult, cm.top.mult, cm.left, cm.right, cm.partial

    rep = Reporter("crossed module of difference algebras")
    rep.include(check_diff_algebra(cm.base), "base:")
    rep.include(check_diff_algebra(cm.top), "top:")
    rep.include(check_diff_bimodule(cm.base, cm.as_bimodule()), "action:")
    rep.include(check_diff_homomorphism(cm.top, cm.base, partial), "partial:")
    # a(hk) = (ah)k, h(ak) = (ha)k, h(ka) = (hk)a
    rep.expect("(crm1-ahk)", left.insert(1, top), top.insert(0, left))
    rep.expect("(crm1-hak)", top.insert(1, left), top.insert(0, right))
    rep.expect("(crm1-hka)", top.insert(1, right), right.insert(0, top))
    rep.expect("(crm2-left)", left.postcompose(partial), mult.precompose(1, partial))
    rep.expect("(crm2-right)", right.postcompose(partial), mult.precompose(0, partial))
    rep.expect("(crm2-peiffer-l)", left.precompose(0, partial), top)
    rep.expect("(crm2-peiffer-r)", right.precompose(1, partial), top)
    return rep.finish()


def skeletal_to_cocycle(x: TwoTermDiffAInf) -> tuple[DifferenceAlgebra, DiffBimodule, DiffCochain]:
    if not is_skeletal(x):
        raise StructureError("structure is not skeletal: delta is nonzero")
    require(check_diff_ainf2(x), "2-term difference A-infinity check")
    a = x.ainf
    da = DifferenceAlgebra(alg=AssocAlgebra(space=a.A0, mult=a.m00), d=x.dop.d0)
    bm = DiffBimodule(module=a.A1, left=a.m01, right=a.m10, Delta=x.dop.d1)
    return da, bm, DiffCochain(degree=3, f=a.mu, chi=x.dop.d2)


def cocycle_to_skeletal(da: DifferenceAlgebra, bm: DiffBimodule, cocycle: DiffCochain) -> TwoTermDiffAInf:
    require(check_diff_algebra(da), "difference algebra check")
    require(check_diff_bimodule(da, bm), "difference bimodule check")
    if cocycle.degree != 3:
        raise DimensionError(f"expected a 3-cochain, got degree {cocycle.degree}")
    mu, chi = cocycle.f, cocycle.second()
    if not is_3_cocycle(da, bm, mu, chi):
        raise StructureError("(mu, chi) is not a 3-cocycle")
    ainf = AInf2(
        cx=TwoTermComplex(A0=da.space, A1=bm.module, delta=zero_lin(bm.module, da.space)),
        m00=da.mult,
        m01=bm.left,
        m10=bm.right,
        mu=mu,
    )
    return TwoTermDiffAInf(ainf=ainf, dop=DiffOp2(d0=da.d, d1=bm.Delta, d2=chi))


def strict_to_crossed(x: TwoTermDiffAInf) -> CrossedModule:
    if not is_strict(x):
        raise StructureError("structure is not strict: mu or d2 is nonzero")
    require(check_diff_ainf2(x), "2-term difference A-infinity check")
    a = x.ainf
    # h ⊙1 k := δ(h) ⊙ k, which (A3) makes equal to h ⊙ δ(k)
    top_mult = a.m01.precompose(0, a.delta)
    if top_mult != a.m10.precompose(1, a.delta):
        raise StructureError("δ(h)⊙k and h⊙δ(k) disagree")
    return CrossedModule(
        base=DifferenceAlgebra(alg=AssocAlgebra(space=a.A0, mult=a.m00), d=x.dop.d0),
        top=DifferenceAlgebra(alg=AssocAlgebra(space=a.A1, mult=top_mult), d=x.dop.d1),
        left=a.m01,
        right=a.m10,
        partial=a.delta,
    )


def crossed_to_strict(cm: CrossedModule) -> TwoTermDiffAInf:
    require(check_crossed_module(cm), "crossed module check")
    a0, a1 = cm.base.space, cm.top.space
    ainf = AInf2(
        cx=TwoTermComplex(A0=a0, A1=a1, delta=cm.partial),
        m00=cm.base.mult,
        m01=cm.left,
        m10=cm.right,
        mu=zero_map((a0, a0, a0), a1),
    )
    return TwoTermDiffAInf(ainf=ainf, dop=DiffOp2(d0=cm.base.d, d1=cm.top.d, d2=zero_map((a0, a0), a1)))


def identity_crossed_module(da: DifferenceAlgebra) -> CrossedModule:
    return CrossedModule(base=da, top=da, left=da.mult, right=da.mult, partial=identity(da.space))


def ideal_crossed_module(da: DifferenceAlgebra, basis: Sequence[Sequence]) -> CrossedModule:
    """The inclusion of a two-sided ideal stable under d, spanned by ``basis``."""
    a = da.space
    inc = lin_from_columns(a, basis, Space(len(basis), "I"))
    coords = left_inverse(inc)
    back = inc @ coords

    rep = Reporter("ideal")
    on_left = da.mult.precompose(1, inc)
    on_right = da.mult.precompose(0, inc)
    rep.expect("(ideal-left)", on_left.postcompose(back), on_left)
    rep.expect("(ideal-right)", on_right.postcompose(back), on_right)
    rep.expect("(ideal-d)", back @ da.d @ inc, da.d @ inc)
    require(rep.finish(), "ideal check")

    top_mult = da.mult.with_inputs(inc, inc).postcompose(coords)
    top = DifferenceAlgebra(alg=AssocAlgebra(space=inc.src, mult=top_mult, name="ideal"), d=coords @ da.d @ inc)
    return CrossedModule(
        base=da,
        top=top,
        left=on_left.postcompose(coords),
        right=on_right.postcompose(coords),
        partial=inc,
    )


def zero_crossed_module(da: DifferenceAlgebra, bm: DiffBimodule) -> CrossedModule:
    """A difference bimodule viewed as a crossed module with zero product and partial = 0."""
    m = bm.module
    top = DifferenceAlgebra(alg=AssocAlgebra(space=m, mult=zero_map((m, m), m)), d=bm.Delta)
    return CrossedModule(base=da, top=top, left=bm.left, right=bm.right, partial=zero_lin(m, da.space))
