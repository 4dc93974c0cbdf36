# filename: utils/diffainf2.py

"""Difference operators (d0, d1, d2) on 2-term A-infinity algebras and their morphisms."""

import logging

from app.schemas.models import CheckReport
from utils.ainf2 import (
    AInf2,
    AInf2Morphism,
    ainf2_shapes,
    check_ainf2,
    check_ainf2_morphism,
    compose_ainf2_morphism,
    identity_ainf2_morphism,
    morphism_shapes,
)
from utils.checking import Reporter, Structure, require, require_shape
from utils.cohom import partial_d_delta
from utils.exactlin import Lin, MultiMap, Space, identity, subset_sum, twist_slots, zero_lin, zero_map

logger = logging.getLogger(__name__)


class DiffOp2(Structure):
    d0: Lin
    d1: Lin
    d2: MultiMap


class TwoTermDiffAInf(Structure):
    ainf: AInf2
    dop: DiffOp2

    @property
    def A0(self) -> Space:
        return self.ainf.A0

    @property
    def A1(self) -> Space:
        return self.ainf.A1


class DiffAInf2Morphism(Structure):
    base: AInf2Morphism
    phi3: Lin


def diffop2_shapes(a: AInf2, dop: DiffOp2):
    require_shape("d0", dop.d0, (a.A0,), a.A0)
    require_shape("d1", dop.d1, (a.A1,), a.A1)
    require_shape("d2", dop.d2, (a.A0, a.A0), a.A1)


def check_diffop2(a: AInf2, dop: DiffOp2) -> CheckReport:
    ainf2_shapes(a)
    diffop2_shapes(a, dop)
    delta, m00, m01, m10, mu = a.delta, a.m00, a.m01, a.m10, a.mu
    d0, d1, d2 = dop.d0, dop.d1, dop.d2
    rep = Reporter("difference operator on a 2-term A-infinity algebra")
    rep.expect("(chain)", d0 @ delta, delta @ d1)
    rep.expect("(D1)", subset_sum(m00, [d0, d0]) - m00.postcompose(d0), d2.postcompose(delta))
    rep.expect("(D2)", subset_sum(m01, [d0, d1]) - m01.postcompose(d1), d2.precompose(1, delta))
    rep.expect("(D3)", subset_sum(m10, [d1, d0]) - m10.postcompose(d1), d2.precompose(0, delta))
    # (x + d0 x) ⊙ d2(y,z) - d2(xy,z) + d2(x,yz) - d2(x,y) ⊙ (z + d0 z)
    lhs = (
        twist_slots(m01, [d0, None]).insert(1, d2)
        - d2.insert(0, m00)
        + d2.insert(1, m00)
        - twist_slots(m10, [None, d0]).insert(0, d2)
    )
    rep.expect("(D4)", lhs, partial_d_delta(mu, d0, d1))
    return rep.finish()


def check_diff_ainf2(x: TwoTermDiffAInf) -> CheckReport:
    rep = Reporter("2-term difference A-infinity algebra")
    rep.include(check_ainf2(x.ainf))
    rep.include(check_diffop2(x.ainf, x.dop))
    return rep.finish()


def is_skeletal(x: TwoTermDiffAInf) -> bool:
    return x.ainf.delta.is_zero()


def is_strict(x: TwoTermDiffAInf) -> bool:
    return x.ainf.mu.is_zero() and x.dop.d2.is_zero()


def hd_eq3_rhs(a: AInf2, d0: Lin, b: AInf2, e0: Lin, e1: Lin, m: DiffAInf2Morphism) -> MultiMap:
    """What phi1 d2 - d2'(phi0, phi0) has to equal."""
    phi0, phi2, phi3 = m.base.phi0, m.base.phi2, m.phi3
    shifted = (identity(b.A0) + e0) @ phi0
    return (
        subset_sum(phi2, [d0, d0])
        - a.m00.postcompose(phi3)
        + b.m10.with_inputs(phi3, shifted)
        + b.m01.with_inputs(shifted, phi3)
        + b.m01.with_inputs(b.delta @ phi3, phi3)
        - phi2.postcompose(e1)
    )


def check_diff_morphism(src: TwoTermDiffAInf, dst: TwoTermDiffAInf, m: DiffAInf2Morphism) -> CheckReport:
    """The base A-infinity identities plus the three difference identities.

    The third one is the normal form of the square relating D2' and D2; it
    carries the phi3 ⊙' terms, which vanish when phi3 = 0.
    """
    morphism_shapes(src.ainf, dst.ainf, m.base)
    require_shape("phi3", m.phi3, (src.A0,), dst.A1)
    a, b = src.ainf, dst.ainf
    phi0, phi1, phi2, phi3 = m.base.phi0, m.base.phi1, m.base.phi2, m.phi3
    d0, d1, d2 = src.dop.d0, src.dop.d1, src.dop.d2
    e0, e1, e2 = dst.dop.d0, dst.dop.d1, dst.dop.d2
    rep = Reporter("2-term difference A-infinity morphism")
    rep.include(check_ainf2_morphism(a, b, m.base))
    rep.expect("(hd-eq1)", phi0 @ d0 - e0 @ phi0, b.delta @ phi3)
    rep.expect("(hd-eq2)", phi1 @ d1 - e1 @ phi1, phi3 @ a.delta)
    rhs = hd_eq3_rhs(a, d0, b, e0, e1, m)
    rep.expect("(hd-eq3)", d2.postcompose(phi1) - e2.with_inputs(phi0, phi0), rhs)
    return rep.finish()


def compose_diff_morphism(g: DiffAInf2Morphism, f: DiffAInf2Morphism) -> DiffAInf2Morphism:
    return DiffAInf2Morphism(
        base=compose_ainf2_morphism(g.base, f.base),
        phi3=g.phi3 @ f.base.phi0 + g.base.phi1 @ f.phi3,
    )


def identity_diff_morphism(x: TwoTermDiffAInf) -> DiffAInf2Morphism:
    return DiffAInf2Morphism(base=identity_ainf2_morphism(x.ainf), phi3=zero_lin(x.A0, x.A1))


def zero_diffop2(a: AInf2) -> DiffOp2:
    return DiffOp2(d0=zero_lin(a.A0, a.A0), d1=zero_lin(a.A1, a.A1), d2=zero_map((a.A0, a.A0), a.A1))


def require_diff_ainf2(x: TwoTermDiffAInf):
    require(check_diff_ainf2(x), "2-term difference A-infinity check")
