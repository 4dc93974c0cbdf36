# filename: utils/twoalg.py

"""
2-vector spaces C1 ⇉ C0, difference associative 2-algebras and their
homomorphisms, and the functors S and T relating them to 2-term difference
A-infinity algebras.

Composition in C1 is never stored. For composable f, g it is forced to be
g ∘ f = f + g - i(t(f)), so arrow parts f - i(s(f)) add under composition and
every diagram below is checked as an identity between arrow parts.
Natural transformations (assoc, Dnat, F2, F3) are stored by their value on
objects; naturality is checked on basis morphisms.
"""

import logging
from fractions import Fraction

from app.schemas.models import CheckReport
from utils.ainf2 import AInf2, AInf2Morphism, TwoTermComplex
from utils.checking import Reporter, Structure, require, require_shape
from utils.diffainf2 import DiffAInf2Morphism, DiffOp2, TwoTermDiffAInf, check_diff_ainf2, check_diff_morphism
from utils.diffalg import DifferenceAlgebra, check_diff_algebra
from utils.errors import DimensionError, StructureError
from utils.exactlin import (
    Lin,
    MultiMap,
    Space,
    block_diag,
    direct_sum,
    identity,
    injection,
    kernel_map,
    left_inverse,
    projection,
    subset_sum,
)

logger = logging.getLogger(__name__)


class TwoVec(Structure):
    C0: Space
    C1: Space
    s: Lin
    t: Lin
    i: Lin


class DiffAss2(Structure):
    tv: TwoVec
    bullet0: MultiMap
    bullet1: MultiMap
    assoc: MultiMap
    D0: Lin
    D1: Lin
    Dnat: MultiMap

    @property
    def C0(self) -> Space:
        return self.tv.C0

    @property
    def C1(self) -> Space:
        return self.tv.C1


class DiffAss2Morphism(Structure):
    F0: Lin
    F1: Lin
    F2: MultiMap
    F3: Lin


def twovec_shapes(tv: TwoVec):
    require_shape("s", tv.s, (tv.C1,), tv.C0)
    require_shape("t", tv.t, (tv.C1,), tv.C0)
    require_shape("i", tv.i, (tv.C0,), tv.C1)


def check_twovec(tv: TwoVec) -> CheckReport:
    twovec_shapes(tv)
    rep = Reporter("2-vector space")
    rep.expect("(s∘i)", tv.s @ tv.i, identity(tv.C0))
    rep.expect("(t∘i)", tv.t @ tv.i, identity(tv.C0))
    return rep.finish()


def arrow_map(tv: TwoVec) -> Lin:
    """f ↦ f - i(s(f)), the projection of C1 onto ker(s)."""
    return identity(tv.C1) - tv.i @ tv.s


def compose_arrows(tv: TwoVec, f, g) -> tuple:
    """g ∘ f for composable morphisms given as coordinate vectors."""
    if tuple(tv.t.apply(f)) != tuple(tv.s.apply(g)):
        raise DimensionError("morphisms are not composable: t(f) != s(g)")
    back = tv.i.apply(tv.t.apply(f))
    return tuple(Fraction(a) + Fraction(b) - c for a, b, c in zip(f, g, back))


def diffass2_shapes(x: DiffAss2):
    twovec_shapes(x.tv)
    c0, c1 = x.C0, x.C1
    require_shape("bullet0", x.bullet0, (c0, c0), c0)
    require_shape("bullet1", x.bullet1, (c1, c1), c1)
    require_shape("assoc", x.assoc, (c0, c0, c0), c1)
    require_shape("D0", x.D0, (c0,), c0)
    require_shape("D1", x.D1, (c1,), c1)
    require_shape("Dnat", x.Dnat, (c0, c0), c1)


def _composable_pairs(tv: TwoVec) -> tuple[Lin, Lin]:
    """Coordinates (f, g) on a basis of {(f, g) : t(f) = s(g)}."""
    pair = [tv.C1, tv.C1]
    pf, pg = projection(pair, 0), projection(pair, 1)
    k = kernel_map(tv.t @ pf - tv.s @ pg, "composable")
    return pf @ k, pg @ k


def check_diffass2(x: DiffAss2) -> CheckReport:
    diffass2_shapes(x)
    tv = x.tv
    s, t, i = tv.s, tv.t, tv.i
    b0, b1, assoc, D0, D1, Dnat = x.bullet0, x.bullet1, x.assoc, x.D0, x.D1, x.Dnat
    arrow = arrow_map(tv)
    back = i @ t

    rep = Reporter("difference associative 2-algebra")
    rep.include(check_twovec(tv))

    rep.expect("(bullet-s)", b1.postcompose(s), b0.with_inputs(s, s))
    rep.expect("(bullet-t)", b1.postcompose(t), b0.with_inputs(t, t))
    rep.expect("(bullet-i)", b1.with_inputs(i, i), b0.postcompose(i))
    # (g∘f)•(g'∘f') = (g•g')∘(f•f'); both sides are bilinear on composable pairs
    pf, pg = _composable_pairs(tv)
    composite = pf + pg - back @ pf
    ff, gg = b1.with_inputs(pf, pf), b1.with_inputs(pg, pg)
    rep.expect("(interchange)", b1.with_inputs(composite, composite), ff + gg - ff.postcompose(back))

    rep.expect("(assoc-s)", assoc.postcompose(s), b0.insert(0, b0))
    rep.expect("(assoc-t)", assoc.postcompose(t), b0.insert(1, b0))
    left_nested, right_nested = b1.insert(0, b1), b1.insert(1, b1)
    at_sources = assoc.with_inputs(s, s, s)
    rep.expect(
        "(assoc-nat)",
        left_nested + assoc.with_inputs(t, t, t) - left_nested.postcompose(back),
        at_sources + right_nested - at_sources.postcompose(back),
    )
    assoc_arrow = assoc.postcompose(arrow)
    rep.expect(
        "(pentagon)",
        assoc_arrow.insert(0, b0) + assoc_arrow.insert(2, b0),
        assoc_arrow.insert(1, b0)
        + b1.precompose(0, i).insert(1, assoc).postcompose(arrow)
        + b1.precompose(1, i).insert(0, assoc).postcompose(arrow),
    )

    rep.expect("(D-s)", s @ D1, D0 @ s)
    rep.expect("(D-t)", t @ D1, D0 @ t)
    rep.expect("(D-i)", D1 @ i, i @ D0)
    rep.expect("(Dnat-s)", Dnat.postcompose(s), b0.postcompose(D0))
    rep.expect("(Dnat-t)", Dnat.postcompose(t), subset_sum(b0, [D0, D0]))
    dn_sources = Dnat.with_inputs(s, s)
    rep.expect(
        "(Dnat-nat)",
        b1.postcompose(D1) + Dnat.with_inputs(t, t) - b1.postcompose(back @ D1),
        dn_sources + subset_sum(b1, [D1, D1]) - dn_sources.postcompose(back),
    )
    dnat_arrow = Dnat.postcompose(arrow)
    shift = i @ (identity(x.C0) + D0)
    rep.expect(
        "(2-diff)",
        b1.precompose(0, shift).insert(1, dnat_arrow) + dnat_arrow.insert(1, b0) + assoc_arrow.postcompose(D1),
        subset_sum(assoc_arrow, [D0, D0, D0]) + dnat_arrow.insert(0, b0) + b1.precompose(1, shift).insert(0, dnat_arrow),
    )
    return rep.finish()


def is_strict_2alg(x: DiffAss2) -> bool:
    arrow = arrow_map(x.tv)
    return x.assoc.postcompose(arrow).is_zero() and x.Dnat.postcompose(arrow).is_zero()


def morphism_shapes(src: DiffAss2, dst: DiffAss2, m: DiffAss2Morphism):
    require_shape("F0", m.F0, (src.C0,), dst.C0)
    require_shape("F1", m.F1, (src.C1,), dst.C1)
    require_shape("F2", m.F2, (src.C0, src.C0), dst.C1)
    require_shape("F3", m.F3, (src.C0,), dst.C1)


def check_diffass2_morphism(src: DiffAss2, dst: DiffAss2, m: DiffAss2Morphism) -> CheckReport:
    diffass2_shapes(src)
    diffass2_shapes(dst)
    morphism_shapes(src, dst, m)
    s, t, i = src.tv.s, src.tv.t, src.tv.i
    s2, t2, i2 = dst.tv.s, dst.tv.t, dst.tv.i
    F0, F1, F2, F3 = m.F0, m.F1, m.F2, m.F3
    arrow, arrow2 = arrow_map(src.tv), arrow_map(dst.tv)
    back2 = i2 @ t2

    rep = Reporter("difference associative 2-algebra homomorphism")
    rep.expect("(F-s)", s2 @ F1, F0 @ s)
    rep.expect("(F-t)", t2 @ F1, F0 @ t)
    rep.expect("(F-i)", F1 @ i, i2 @ F0)
    rep.expect("(F2-s)", F2.postcompose(s2), dst.bullet0.with_inputs(F0, F0))
    rep.expect("(F2-t)", F2.postcompose(t2), src.bullet0.postcompose(F0))
    rep.expect("(F3-s)", s2 @ F3, dst.D0 @ F0)
    rep.expect("(F3-t)", t2 @ F3, F0 @ src.D0)

    images = dst.bullet1.with_inputs(F1, F1)
    f2_sources = F2.with_inputs(s, s)
    rep.expect(
        "(F2-nat)",
        images + F2.with_inputs(t, t) - images.postcompose(back2),
        f2_sources + src.bullet1.postcompose(F1) - f2_sources.postcompose(back2),
    )
    rep.expect(
        "(F3-nat)",
        dst.D1 @ F1 + F3 @ t - back2 @ dst.D1 @ F1,
        F3 @ s + F1 @ src.D1 - back2 @ F3 @ s,
    )

    F2a = F2.postcompose(arrow2)
    F3a = arrow2 @ F3
    lifted = i2 @ F0
    rep.expect(
        "(hexagon)",
        dst.bullet1.precompose(1, lifted).insert(0, F2a) + F2a.insert(0, src.bullet0) + src.assoc.postcompose(F1 @ arrow),
        dst.assoc.with_inputs(F0, F0, F0).postcompose(arrow2)
        + dst.bullet1.precompose(0, lifted).insert(1, F2a)
        + F2a.insert(1, src.bullet0),
    )
    rep.expect(
        "(2-diff-homo)",
        dst.Dnat.with_inputs(F0, F0).postcompose(arrow2)
        + dst.bullet1.with_inputs(F3a, lifted)
        + dst.bullet1.with_inputs(lifted, F3a)
        + dst.bullet1.with_inputs(F3, F3).postcompose(arrow2)
        + subset_sum(F2a, [src.D0, src.D0]),
        F2a.postcompose(dst.D1) + src.bullet0.postcompose(F3a) + src.Dnat.postcompose(F1 @ arrow),
    )
    return rep.finish()


def compose_diffass2_morphism(g: DiffAss2Morphism, f: DiffAss2Morphism, dst: DiffAss2) -> DiffAss2Morphism:
    """g after f; ``dst`` is the target of g, whose i and t close up the composites."""
    if f.F0.dst != g.F0.src or f.F1.dst != g.F1.src:
        raise DimensionError("homomorphisms are not composable")
    back = dst.tv.i @ dst.tv.t
    first2 = g.F2.with_inputs(f.F0, f.F0)
    first3 = g.F3 @ f.F0
    return DiffAss2Morphism(
        F0=g.F0 @ f.F0,
        F1=g.F1 @ f.F1,
        F2=first2 + f.F2.postcompose(g.F1) - first2.postcompose(back),
        F3=first3 + g.F1 @ f.F3 - back @ first3,
    )


def identity_diffass2_morphism(x: DiffAss2) -> DiffAss2Morphism:
    return DiffAss2Morphism(
        F0=identity(x.C0),
        F1=identity(x.C1),
        F2=x.bullet0.postcompose(x.tv.i),
        F3=x.tv.i @ x.D0,
    )


def discrete_diffass2(da: DifferenceAlgebra) -> DiffAss2:
    """A difference algebra as a 2-algebra with only identity morphisms."""
    require(check_diff_algebra(da), "difference algebra check")
    a = da.space
    ident = identity(a)
    return DiffAss2(
        tv=TwoVec(C0=a, C1=a, s=ident, t=ident, i=ident),
        bullet0=da.mult,
        bullet1=da.mult,
        assoc=da.mult.insert(0, da.mult),
        D0=da.d,
        D1=da.d,
        Dnat=da.mult.postcompose(da.d),
    )


# -- the functors T and S -----------------------------------------------------


class _Normal:
    """C1 = A0 ⊕ A1 with morphism (x, h): x -> x + δh."""

    def __init__(self, a0: Space, a1: Space):
        parts = [a0, a1]
        self.space = direct_sum(a0, a1, label=f"{a0.label}⊕{a1.label}")
        self.p0, self.p1 = projection(parts, 0), projection(parts, 1)
        self.j0, self.j1 = injection(parts, 0), injection(parts, 1)


def functor_T(x: TwoTermDiffAInf) -> DiffAss2:
    require(check_diff_ainf2(x), "2-term difference A-infinity check")
    a = x.ainf
    n = _Normal(a.A0, a.A1)
    p0, p1, j0, j1 = n.p0, n.p1, n.j0, n.j1
    # (x,h)•(y,k) = (x⊙y, x⊙k + h⊙y + δ(h)⊙k)
    arrows = a.m01.with_inputs(p0, p1) + a.m10.with_inputs(p1, p0) + a.m01.with_inputs(a.delta @ p1, p1)
    return DiffAss2(
        tv=TwoVec(C0=a.A0, C1=n.space, s=p0, t=p0 + a.delta @ p1, i=j0),
        bullet0=a.m00,
        bullet1=a.m00.with_inputs(p0, p0).postcompose(j0) + arrows.postcompose(j1),
        assoc=a.m00.insert(0, a.m00).postcompose(j0) + a.mu.postcompose(j1),
        D0=x.dop.d0,
        D1=block_diag(x.dop.d0, x.dop.d1),
        Dnat=a.m00.postcompose(j0 @ x.dop.d0) + x.dop.d2.postcompose(j1),
    )


def functor_T_mor(src: TwoTermDiffAInf, dst: TwoTermDiffAInf, m: DiffAInf2Morphism) -> DiffAss2Morphism:
    require(check_diff_morphism(src, dst, m), "difference A-infinity morphism check")
    phi0, phi1, phi2 = m.base.phi0, m.base.phi1, m.base.phi2
    n2 = _Normal(dst.A0, dst.A1)
    return DiffAss2Morphism(
        F0=phi0,
        F1=block_diag(phi0, phi1),
        # source F0(x)•'F0(y), arrow part phi2(x, y)
        F2=dst.ainf.m00.with_inputs(phi0, phi0).postcompose(n2.j0) + phi2.postcompose(n2.j1),
        F3=n2.j0 @ dst.dop.d0 @ phi0 + n2.j1 @ m.phi3,
    )


class _Kernel:
    """ker(s) ⊂ C1 with its inclusion K, coordinates L and the arrow-part map."""

    def __init__(self, tv: TwoVec):
        self.K = kernel_map(tv.s, "ker(s)")
        self.L = left_inverse(self.K)
        self.arrow = arrow_map(tv)
        self.coords = self.L @ self.arrow


def functor_S(x: DiffAss2) -> TwoTermDiffAInf:
    require(check_diffass2(x), "difference associative 2-algebra check")
    tv = x.tv
    ker = _Kernel(tv)
    K, L = ker.K, ker.L
    if not (tv.s @ x.D1 @ K).is_zero():
        raise StructureError("D1 does not preserve ker(s)")
    a1 = K.src
    ainf = AInf2(
        cx=TwoTermComplex(A0=x.C0, A1=a1, delta=tv.t @ K),
        m00=x.bullet0,
        m01=x.bullet1.with_inputs(tv.i, K).postcompose(L),
        m10=x.bullet1.with_inputs(K, tv.i).postcompose(L),
        mu=x.assoc.postcompose(ker.coords),
    )
    dop = DiffOp2(d0=x.D0, d1=L @ x.D1 @ K, d2=x.Dnat.postcompose(ker.coords))
    return TwoTermDiffAInf(ainf=ainf, dop=dop)


def functor_S_mor(src: DiffAss2, dst: DiffAss2, m: DiffAss2Morphism) -> DiffAInf2Morphism:
    require(check_diffass2_morphism(src, dst, m), "difference 2-algebra homomorphism check")
    k_src, k_dst = _Kernel(src.tv), _Kernel(dst.tv)
    base = AInf2Morphism(
        phi0=m.F0,
        phi1=k_dst.L @ m.F1 @ k_src.K,
        phi2=m.F2.postcompose(k_dst.coords),
    )
    return DiffAInf2Morphism(base=base, phi3=k_dst.coords @ m.F3)


def alpha(x: DiffAss2) -> DiffAss2Morphism:
    """The isomorphism T(S(C)) -> C, (x, h) ↦ i_x + h."""
    ker = _Kernel(x.tv)
    n = _Normal(x.C0, ker.K.src)
    return DiffAss2Morphism(
        F0=identity(x.C0),
        F1=x.tv.i @ n.p0 + ker.K @ n.p1,
        F2=x.bullet0.postcompose(x.tv.i),
        F3=x.tv.i @ x.D0,
    )


def alpha_inverse(x: DiffAss2) -> DiffAss2Morphism:
    """C -> T(S(C)), f ↦ (s(f), arrow part of f)."""
    ker = _Kernel(x.tv)
    n = _Normal(x.C0, ker.K.src)
    return DiffAss2Morphism(
        F0=identity(x.C0),
        F1=n.j0 @ x.tv.s + n.j1 @ ker.coords,
        F2=x.bullet0.postcompose(n.j0),
        F3=n.j0 @ x.D0,
    )
