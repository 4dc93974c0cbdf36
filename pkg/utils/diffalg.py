# filename: utils/diffalg.py

"""Associative algebras, difference operators and (difference) bimodules."""

import logging

from app.schemas.models import CheckReport
from utils.checking import Reporter, Structure, require, require_shape
from utils.exactlin import Lin, MultiMap, Space, identity, subset_sum, twist_slots, zero_lin, zero_map

logger = logging.getLogger(__name__)


class AssocAlgebra(Structure):
    space: Space
    mult: MultiMap
    name: str = ""


class DifferenceAlgebra(Structure):
    alg: AssocAlgebra
    d: Lin

    @property
    def space(self) -> Space:
        return self.alg.space

    @property
    def mult(self) -> MultiMap:
        return self.alg.mult


class Bimodule(Structure):
    module: Space
    left: MultiMap
    right: MultiMap


class DiffBimodule(Structure):
    module: Space
    left: MultiMap
    right: MultiMap
    Delta: Lin

    def plain(self) -> Bimodule:
        return Bimodule(module=self.module, left=self.left, right=self.right)


def _algebra_shapes(alg: AssocAlgebra):
    require_shape("mult", alg.mult, (alg.space, alg.space), alg.space)


def _bimodule_shapes(alg: AssocAlgebra, bm):
    a, m = alg.space, bm.module
    require_shape("left", bm.left, (a, m), m)
    require_shape("right", bm.right, (m, a), m)


def check_associative(alg: AssocAlgebra) -> CheckReport:
    _algebra_shapes(alg)
    rep = Reporter(f"algebra {alg.name}".strip())
    rep.expect("(assoc)", alg.mult.insert(0, alg.mult), alg.mult.insert(1, alg.mult))
    return rep.finish()


def check_difference(alg: AssocAlgebra, d: Lin) -> CheckReport:
    """d(ab) = d(a)b + a d(b) + d(a)d(b) on every basis pair."""
    _algebra_shapes(alg)
    require_shape("d", d, (alg.space,), alg.space)
    rep = Reporter("difference operator")
    rep.expect("(Eq1)", alg.mult.postcompose(d), subset_sum(alg.mult, [d, d]))
    return rep.finish()


def check_diff_algebra(da: DifferenceAlgebra) -> CheckReport:
    rep = Reporter("difference algebra")
    rep.include(check_associative(da.alg))
    rep.include(check_difference(da.alg, da.d))
    return rep.finish()


def check_bimodule(alg: AssocAlgebra, bm: Bimodule) -> CheckReport:
    _algebra_shapes(alg)
    _bimodule_shapes(alg, bm)
    mult, left, right = alg.mult, bm.left, bm.right
    rep = Reporter("bimodule")
    rep.expect("(bimod-aau)", left.insert(0, mult), left.insert(1, left))
    rep.expect("(bimod-aua)", right.insert(0, left), left.insert(1, right))
    rep.expect("(bimod-uaa)", right.insert(0, right), right.insert(1, mult))
    return rep.finish()


def check_diff_bimodule(da: DifferenceAlgebra, bm: DiffBimodule) -> CheckReport:
    require_shape("Delta", bm.Delta, (bm.module,), bm.module)
    rep = Reporter("difference bimodule")
    rep.include(check_bimodule(da.alg, bm.plain()))
    # Δ(au) = d(a)u + aΔ(u) + d(a)Δ(u), and the mirror identity on the right
    rep.expect("(Delta-left)", bm.left.postcompose(bm.Delta), subset_sum(bm.left, [da.d, bm.Delta]))
    rep.expect("(Delta-right)", bm.right.postcompose(bm.Delta), subset_sum(bm.right, [bm.Delta, da.d]))
    return rep.finish()


def twist_bimodule(da: DifferenceAlgebra, bm: Bimodule) -> Bimodule:
    """M^d: actions shifted by a -> a + d(a)."""
    require(check_bimodule(da.alg, bm), "bimodule check")
    return Bimodule(
        module=bm.module,
        left=twist_slots(bm.left, [da.d, None]),
        right=twist_slots(bm.right, [None, da.d]),
    )


def twist_diff_bimodule(da: DifferenceAlgebra, bm: DiffBimodule) -> DiffBimodule:
    """(M^d, Delta) is again a difference bimodule since d commutes with Id + d."""
    twisted = twist_bimodule(da, bm.plain())
    return DiffBimodule(module=bm.module, left=twisted.left, right=twisted.right, Delta=bm.Delta)


def check_endomorphism(alg: AssocAlgebra, phi: Lin) -> CheckReport:
    _algebra_shapes(alg)
    require_shape("phi", phi, (alg.space,), alg.space)
    rep = Reporter("algebra endomorphism")
    rep.expect("(endo)", alg.mult.postcompose(phi), alg.mult.with_inputs(phi, phi))
    return rep.finish()


def endo_to_diff(alg: AssocAlgebra, phi: Lin) -> Lin:
    require(check_endomorphism(alg, phi), "endomorphism check")
    return phi - identity(alg.space)


def check_diff_homomorphism(src: DifferenceAlgebra, dst: DifferenceAlgebra, f: Lin) -> CheckReport:
    require_shape("f", f, (src.space,), dst.space)
    rep = Reporter("difference algebra homomorphism")
    rep.expect("(hom-mult)", src.mult.postcompose(f), dst.mult.with_inputs(f, f))
    rep.expect("(hom-d)", dst.d @ f, f @ src.d)
    return rep.finish()


def regular_bimodule(alg: AssocAlgebra) -> Bimodule:
    return Bimodule(module=alg.space, left=alg.mult, right=alg.mult)


def regular_diff_bimodule(da: DifferenceAlgebra) -> DiffBimodule:
    return DiffBimodule(module=da.space, left=da.mult, right=da.mult, Delta=da.d)


def zero_diff_bimodule(da: DifferenceAlgebra) -> DiffBimodule:
    m = Space(0, "0")
    return DiffBimodule(
        module=m,
        left=zero_map((da.space, m), m),
        right=zero_map((m, da.space), m),
        Delta=zero_lin(m, m),
    )
