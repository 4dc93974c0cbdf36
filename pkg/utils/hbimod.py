# filename: utils/hbimod.py

"""
2-term bimodules up to homotopy M1 --delta--> M0 over an associative algebra
and over a difference algebra, and their semidirect products.

The homotopies are kept as typed fields by slot signature: nu_aav, nu_ava
and nu_vaa for the three trilinear maps, theta_am and theta_ma for the two
bilinear ones.
"""

import logging

from app.schemas.models import CheckReport
from utils.ainf2 import AInf2, TwoTermComplex
from utils.checking import Reporter, Structure, require, require_shape
from utils.diffainf2 import DiffOp2, TwoTermDiffAInf
from utils.diffalg import AssocAlgebra, DifferenceAlgebra, check_associative, check_diff_algebra
from utils.exactlin import (
    Lin,
    MultiMap,
    Space,
    block_diag,
    direct_sum,
    injection,
    projection,
    subset_sum,
    twist_slots,
)
from utils.twoalg import DiffAss2, TwoVec

logger = logging.getLogger(__name__)


class HBimod2(Structure):
    M0: Space
    M1: Space
    delta: Lin
    left0: MultiMap
    right0: MultiMap
    left1: MultiMap
    right1: MultiMap
    nu_aav: MultiMap
    nu_ava: MultiMap
    nu_vaa: MultiMap


class DiffHBimod2(Structure):
    base: HBimod2
    Delta0: Lin
    Delta1: Lin
    theta_am: MultiMap
    theta_ma: MultiMap


def hbimod_shapes(alg: AssocAlgebra, hb: HBimod2):
    a, m0, m1 = alg.space, hb.M0, hb.M1
    require_shape("delta", hb.delta, (m1,), m0)
    require_shape("left0", hb.left0, (a, m0), m0)
    require_shape("right0", hb.right0, (m0, a), m0)
    require_shape("left1", hb.left1, (a, m1), m1)
    require_shape("right1", hb.right1, (m1, a), m1)
    require_shape("nu_aav", hb.nu_aav, (a, a, m0), m1)
    require_shape("nu_ava", hb.nu_ava, (a, m0, a), m1)
    require_shape("nu_vaa", hb.nu_vaa, (m0, a, a), m1)


def check_hbimod(alg: AssocAlgebra, hb: HBimod2) -> CheckReport:
    hbimod_shapes(alg, hb)
    mult, delta = alg.mult, hb.delta
    l0, r0, l1, r1 = hb.left0, hb.right0, hb.left1, hb.right1
    aav, ava, vaa = hb.nu_aav, hb.nu_ava, hb.nu_vaa

    rep = Reporter("2-term bimodule up to homotopy")
    rep.include(check_associative(alg), "algebra:")
    rep.expect("(equiv-l)", l1.postcompose(delta), l0.precompose(1, delta))
    rep.expect("(equiv-r)", r1.postcompose(delta), r0.precompose(0, delta))

    rep.expect("(hmt-aav)", l0.insert(1, l0) - l0.insert(0, mult), aav.postcompose(delta))
    rep.expect("(hmt-ava)", l0.insert(1, r0) - r0.insert(0, l0), ava.postcompose(delta))
    rep.expect("(hmt-vaa)", r0.insert(1, mult) - r0.insert(0, r0), vaa.postcompose(delta))
    rep.expect("(hmt-aax)", l1.insert(1, l1) - l1.insert(0, mult), aav.precompose(2, delta))
    rep.expect("(hmt-axa)", l1.insert(1, r1) - r1.insert(0, l1), ava.precompose(1, delta))
    rep.expect("(hmt-xaa)", r1.insert(1, mult) - r1.insert(0, r1), vaa.precompose(0, delta))

    rep.expect(
        "(id-nu1)",
        l1.insert(1, aav) - aav.insert(0, mult) + aav.insert(1, mult) - aav.insert(2, l0),
    )
    rep.expect(
        "(id-nu2)",
        l1.insert(1, ava) - ava.insert(0, mult) + ava.insert(1, l0) - aav.insert(2, r0) + r1.insert(0, aav),
    )
    rep.expect(
        "(id-nu3)",
        l1.insert(1, vaa) - vaa.insert(0, l0) + ava.insert(1, r0) - ava.insert(2, mult) + r1.insert(0, ava),
    )
    rep.expect(
        "(id-nu4)",
        vaa.insert(0, r0) - vaa.insert(1, mult) + vaa.insert(2, mult) - r1.insert(0, vaa),
    )
    return rep.finish()


def check_diff_hbimod(da: DifferenceAlgebra, dhb: DiffHBimod2) -> CheckReport:
    hb = dhb.base
    a, m0, m1 = da.space, hb.M0, hb.M1
    require_shape("Delta0", dhb.Delta0, (m0,), m0)
    require_shape("Delta1", dhb.Delta1, (m1,), m1)
    require_shape("theta_am", dhb.theta_am, (a, m0), m1)
    require_shape("theta_ma", dhb.theta_ma, (m0, a), m1)
    d, D0, D1, delta = da.d, dhb.Delta0, dhb.Delta1, hb.delta
    mult, l0, r0, l1, r1 = da.mult, hb.left0, hb.right0, hb.left1, hb.right1
    t_am, t_ma = dhb.theta_am, dhb.theta_ma

    rep = Reporter("2-term bimodule up to homotopy over a difference algebra")
    rep.include(check_diff_algebra(da), "algebra:")
    rep.include(check_hbimod(da.alg, hb), "base:")
    rep.expect("(chain)", D0 @ delta, delta @ D1)

    rep.expect("(condi1)", subset_sum(l0, [d, D0]) - l0.postcompose(D0), t_am.postcompose(delta))
    rep.expect("(condi2)", subset_sum(r0, [D0, d]) - r0.postcompose(D0), t_ma.postcompose(delta))
    rep.expect("(condi3)", subset_sum(l1, [d, D1]) - l1.postcompose(D1), t_am.precompose(1, delta))
    rep.expect("(condi4)", subset_sum(r1, [D1, d]) - r1.postcompose(D1), t_ma.precompose(0, delta))

    shifted_left = twist_slots(l1, [d, None])
    shifted_right = twist_slots(r1, [None, d])
    rep.expect(
        "(condi5)",
        shifted_left.insert(1, t_am) - t_am.insert(0, mult) + t_am.insert(1, l0),
        subset_sum(hb.nu_aav, [d, d, D0]) - hb.nu_aav.postcompose(D1),
    )
    rep.expect(
        "(condi6)",
        shifted_left.insert(1, t_ma) - t_ma.insert(0, l0) + t_am.insert(1, r0) - shifted_right.insert(0, t_am),
        subset_sum(hb.nu_ava, [d, D0, d]) - hb.nu_ava.postcompose(D1),
    )
    rep.expect(
        "(condi7)",
        t_ma.insert(1, mult) - t_ma.insert(0, r0) - shifted_right.insert(0, t_ma),
        subset_sum(hb.nu_vaa, [D0, d, d]) - hb.nu_vaa.postcompose(D1),
    )
    return rep.finish()


def is_skeletal_hbimod(hb: HBimod2) -> bool:
    return hb.delta.is_zero()


def is_strict_hbimod(dhb: DiffHBimod2) -> bool:
    hb = dhb.base
    return all(m.is_zero() for m in (hb.nu_aav, hb.nu_ava, hb.nu_vaa, dhb.theta_am, dhb.theta_ma))


class _Split:
    """Projections and injections of A ⊕ M0."""

    def __init__(self, a: Space, m0: Space):
        parts = [a, m0]
        self.space = direct_sum(a, m0, label=f"{a.label}⊕{m0.label}")
        self.pA, self.pM = projection(parts, 0), projection(parts, 1)
        self.iA, self.iM = injection(parts, 0), injection(parts, 1)


def _semidirect_product(alg: AssocAlgebra, hb: HBimod2, sp: _Split) -> MultiMap:
    """(a, u)(b, v) = (ab, av + ub)."""
    return (
        alg.mult.with_inputs(sp.pA, sp.pA).postcompose(sp.iA)
        + hb.left0.with_inputs(sp.pA, sp.pM).postcompose(sp.iM)
        + hb.right0.with_inputs(sp.pM, sp.pA).postcompose(sp.iM)
    )


def _semidirect_mu(hb: HBimod2, sp: _Split) -> MultiMap:
    """mu((a,u),(b,v),(c,w)) = nu(a,b,w) + nu(a,v,c) + nu(u,b,c)."""
    return (
        hb.nu_aav.with_inputs(sp.pA, sp.pA, sp.pM)
        + hb.nu_ava.with_inputs(sp.pA, sp.pM, sp.pA)
        + hb.nu_vaa.with_inputs(sp.pM, sp.pA, sp.pA)
    )


def _semidirect_d2(dhb: DiffHBimod2, sp: _Split) -> MultiMap:
    """d2((a,u),(b,v)) = theta(a,v) + theta(u,b)."""
    return dhb.theta_am.with_inputs(sp.pA, sp.pM) + dhb.theta_ma.with_inputs(sp.pM, sp.pA)


def semidirect_ainf2(alg: AssocAlgebra, hb: HBimod2) -> AInf2:
    require(check_hbimod(alg, hb), "homotopy bimodule check")
    sp = _Split(alg.space, hb.M0)
    logger.debug(f"semidirect product on A0 of dim {sp.space.dim}, A1 of dim {hb.M1.dim}")
    return AInf2(
        cx=TwoTermComplex(A0=sp.space, A1=hb.M1, delta=sp.iM @ hb.delta),
        m00=_semidirect_product(alg, hb, sp),
        m01=hb.left1.precompose(0, sp.pA),
        m10=hb.right1.precompose(1, sp.pA),
        mu=_semidirect_mu(hb, sp),
    )


def semidirect_diff(da: DifferenceAlgebra, dhb: DiffHBimod2) -> TwoTermDiffAInf:
    require(check_diff_hbimod(da, dhb), "difference homotopy bimodule check")
    ainf = semidirect_ainf2(da.alg, dhb.base)
    sp = _Split(da.space, dhb.base.M0)
    dop = DiffOp2(
        d0=block_diag(da.d, dhb.Delta0),
        d1=dhb.Delta1,
        d2=_semidirect_d2(dhb, sp),
    )
    return TwoTermDiffAInf(ainf=ainf, dop=dop)


def semidirect_2alg(da: DifferenceAlgebra, dhb: DiffHBimod2) -> DiffAss2:
    """The difference associative 2-algebra on A ⊕ M0 ⊕ M1 ⇉ A ⊕ M0, written out directly."""
    require(check_diff_hbimod(da, dhb), "difference homotopy bimodule check")
    hb = dhb.base
    a, m0, m1 = da.space, hb.M0, hb.M1
    sp = _Split(a, m0)
    arrows = [a, m0, m1]
    c1 = direct_sum(a, m0, m1, label=f"{a.label}⊕{m0.label}⊕{m1.label}")
    qA, qM, qX = (projection(arrows, k) for k in range(3))
    jA, jM, jX = (injection(arrows, k) for k in range(3))

    # s(a,u,ξ) = (a,u), t(a,u,ξ) = (a, u + δξ), i(a,u) = (a,u,0)
    s = sp.iA @ qA + sp.iM @ qM
    t = s + sp.iM @ hb.delta @ qX
    i = jA @ sp.pA + jM @ sp.pM

    bullet0 = _semidirect_product(da.alg, hb, sp)
    # (a,u,ξ)•(b,v,η) = (ab, av + ub, aη + ξb)
    bullet1 = (
        da.mult.with_inputs(qA, qA).postcompose(jA)
        + hb.left0.with_inputs(qA, qM).postcompose(jM)
        + hb.right0.with_inputs(qM, qA).postcompose(jM)
        + hb.left1.with_inputs(qA, qX).postcompose(jX)
        + hb.right1.with_inputs(qX, qA).postcompose(jX)
    )
    assoc = bullet0.insert(0, bullet0).postcompose(i) + _semidirect_mu(hb, sp).postcompose(jX)
    D0 = block_diag(da.d, dhb.Delta0)
    D1 = block_diag(da.d, dhb.Delta0, dhb.Delta1)
    Dnat = bullet0.postcompose(i @ D0) + _semidirect_d2(dhb, sp).postcompose(jX)
    return DiffAss2(
        tv=TwoVec(C0=sp.space, C1=c1, s=s, t=t, i=i),
        bullet0=bullet0,
        bullet1=bullet1,
        assoc=assoc,
        D0=D0,
        D1=D1,
        Dnat=Dnat,
    )


def direct_sum_hbimod(alg: AssocAlgebra, x: HBimod2, y: HBimod2) -> HBimod2:
    """Componentwise sum; every identity holds blockwise."""
    hbimod_shapes(alg, x)
    hbimod_shapes(alg, y)
    m0s, m1s = [x.M0, y.M0], [x.M1, y.M1]
    p0 = [projection(m0s, k) for k in range(2)]
    p1 = [projection(m1s, k) for k in range(2)]
    j0 = [injection(m0s, k) for k in range(2)]
    j1 = [injection(m1s, k) for k in range(2)]

    def summed(name: str, m0_slots: tuple[int, ...], m1_slots: tuple[int, ...], lands_in_m1: bool) -> MultiMap:
        out = None
        for k, part in enumerate((x, y)):
            piece = getattr(part, name)
            lins = [None] * piece.arity
            for slot in m0_slots:
                lins[slot] = p0[k]
            for slot in m1_slots:
                lins[slot] = p1[k]
            piece = piece.with_inputs(*lins).postcompose(j1[k] if lands_in_m1 else j0[k])
            out = piece if out is None else out + piece
        return out

    return HBimod2(
        M0=direct_sum(*m0s),
        M1=direct_sum(*m1s),
        delta=block_diag(x.delta, y.delta),
        left0=summed("left0", (1,), (), False),
        right0=summed("right0", (0,), (), False),
        left1=summed("left1", (), (1,), True),
        right1=summed("right1", (), (0,), True),
        nu_aav=summed("nu_aav", (2,), (), True),
        nu_ava=summed("nu_ava", (1,), (), True),
        nu_vaa=summed("nu_vaa", (0,), (), True),
    )


def direct_sum_diff_hbimod(da: DifferenceAlgebra, x: DiffHBimod2, y: DiffHBimod2) -> DiffHBimod2:
    base = direct_sum_hbimod(da.alg, x.base, y.base)
    m0s = [x.base.M0, y.base.M0]
    m1s = [x.base.M1, y.base.M1]
    theta_am = None
    theta_ma = None
    for k, part in enumerate((x, y)):
        p0, j1 = projection(m0s, k), injection(m1s, k)
        am = part.theta_am.precompose(1, p0).postcompose(j1)
        ma = part.theta_ma.precompose(0, p0).postcompose(j1)
        theta_am = am if theta_am is None else theta_am + am
        theta_ma = ma if theta_ma is None else theta_ma + ma
    return DiffHBimod2(
        base=base,
        Delta0=block_diag(x.Delta0, y.Delta0),
        Delta1=block_diag(x.Delta1, y.Delta1),
        theta_am=theta_am,
        theta_ma=theta_ma,
    )
