# filename: utils/ainf2.py

"""
2-term A-infinity algebras A1 --delta--> A0.

The product is kept as its three components: m00 on A0 x A0, m01 on A0 x A1
and m10 on A1 x A0. mu is the trilinear homotopy A0^3 -> A1.
"""

import logging

from app.schemas.models import CheckReport
from utils.checking import Reporter, Structure, require_shape
from utils.errors import DimensionError
from utils.exactlin import Lin, MultiMap, Space, identity, zero_map

logger = logging.getLogger(__name__)


class TwoTermComplex(Structure):
    A0: Space
    A1: Space
    delta: Lin


class AInf2(Structure):
    cx: TwoTermComplex
    m00: MultiMap
    m01: MultiMap
    m10: MultiMap
    mu: MultiMap

    @property
    def A0(self) -> Space:
        return self.cx.A0

    @property
    def A1(self) -> Space:
        return self.cx.A1

    @property
    def delta(self) -> Lin:
        return self.cx.delta


class AInf2Morphism(Structure):
    phi0: Lin
    phi1: Lin
    phi2: MultiMap


def ainf2_shapes(a: AInf2):
    A0, A1 = a.A0, a.A1
    require_shape("delta", a.delta, (A1,), A0)
    require_shape("m00", a.m00, (A0, A0), A0)
    require_shape("m01", a.m01, (A0, A1), A1)
    require_shape("m10", a.m10, (A1, A0), A1)
    require_shape("mu", a.mu, (A0, A0, A0), A1)


def check_ainf2(a: AInf2) -> CheckReport:
    ainf2_shapes(a)
    delta, m00, m01, m10, mu = a.delta, a.m00, a.m01, a.m10, a.mu
    rep = Reporter("2-term A-infinity algebra")
    rep.expect("(A1)", m01.postcompose(delta), m00.precompose(1, delta))
    rep.expect("(A2)", m10.postcompose(delta), m00.precompose(0, delta))
    rep.expect("(A3)", m01.precompose(0, delta), m10.precompose(1, delta))
    rep.expect("(A4)", m00.insert(1, m00) - m00.insert(0, m00), mu.postcompose(delta))
    rep.expect("(A5)", m01.insert(1, m01) - m01.insert(0, m00), mu.precompose(2, delta))
    rep.expect("(A6)", m01.insert(1, m10) - m10.insert(0, m01), mu.precompose(1, delta))
    rep.expect("(A7)", m10.insert(1, m00) - m10.insert(0, m10), mu.precompose(0, delta))
    rep.expect(
        "(A8)",
        m01.insert(1, mu) + mu.insert(1, m00) + m10.insert(0, mu),
        mu.insert(0, m00) + mu.insert(2, m00),
    )
    return rep.finish()


def morphism_shapes(src: AInf2, dst: AInf2, m: AInf2Morphism):
    require_shape("phi0", m.phi0, (src.A0,), dst.A0)
    require_shape("phi1", m.phi1, (src.A1,), dst.A1)
    require_shape("phi2", m.phi2, (src.A0, src.A0), dst.A1)


def check_ainf2_morphism(src: AInf2, dst: AInf2, m: AInf2Morphism) -> CheckReport:
    ainf2_shapes(src)
    ainf2_shapes(dst)
    morphism_shapes(src, dst, m)
    phi0, phi1, phi2 = m.phi0, m.phi1, m.phi2
    rep = Reporter("2-term A-infinity morphism")
    rep.expect("(chain)", phi0 @ src.delta, dst.delta @ phi1)
    rep.expect(
        "(hom1)",
        src.m00.postcompose(phi0) - dst.m00.with_inputs(phi0, phi0),
        phi2.postcompose(dst.delta),
    )
    rep.expect(
        "(hom2)",
        src.m01.postcompose(phi1) - dst.m01.with_inputs(phi0, phi1),
        phi2.precompose(1, src.delta),
    )
    rep.expect(
        "(hom3)",
        src.m10.postcompose(phi1) - dst.m10.with_inputs(phi1, phi0),
        phi2.precompose(0, src.delta),
    )
    rep.expect(
        "(hom4)",
        src.mu.postcompose(phi1) - dst.mu.with_inputs(phi0, phi0, phi0),
        phi2.insert(1, src.m00)
        - phi2.insert(0, src.m00)
        + dst.m01.precompose(0, phi0).insert(1, phi2)
        - dst.m10.precompose(1, phi0).insert(0, phi2),
    )
    return rep.finish()


def compose_ainf2_morphism(g: AInf2Morphism, f: AInf2Morphism) -> AInf2Morphism:
    """g after f."""
    if f.phi0.dst != g.phi0.src or f.phi1.dst != g.phi1.src:
        raise DimensionError("morphisms are not composable")
    return AInf2Morphism(
        phi0=g.phi0 @ f.phi0,
        phi1=g.phi1 @ f.phi1,
        phi2=g.phi2.with_inputs(f.phi0, f.phi0) + f.phi2.postcompose(g.phi1),
    )


def identity_ainf2_morphism(a: AInf2) -> AInf2Morphism:
    return AInf2Morphism(
        phi0=identity(a.A0),
        phi1=identity(a.A1),
        phi2=zero_map((a.A0, a.A0), a.A1),
    )
