# filename: utils/genkit.py

"""
Catalog of small algebras and generators of valid structures over them.

Difference operators come only from closed forms (0, -Id, phi - Id for a
catalog endomorphism phi); higher structures come from coboundaries and from
transport along invertible morphisms, so every generator is total and every
output passes its checker.
"""

import logging
import random
from fractions import Fraction
from typing import Callable, Sequence

from app.core.config import MAX_DIM, RANDOM_COEFF_BOUND
from utils.ainf2 import AInf2, AInf2Morphism, TwoTermComplex
from utils.checking import Structure, require
from utils.cohom import DiffCochain, diff_coboundary
from utils.corresp import (
    CrossedModule,
    cocycle_to_skeletal,
    identity_crossed_module,
    ideal_crossed_module,
    zero_crossed_module,
)
from utils.diffainf2 import (
    DiffAInf2Morphism,
    DiffOp2,
    TwoTermDiffAInf,
    check_diff_ainf2,
    hd_eq3_rhs,
)
from utils.diffalg import (
    AssocAlgebra,
    DiffBimodule,
    DifferenceAlgebra,
    check_diff_bimodule,
    endo_to_diff,
    regular_diff_bimodule,
    twist_diff_bimodule,
    zero_diff_bimodule,
)
from utils.errors import DimensionError
from utils.exactlin import (
    Lin,
    MultiMap,
    Space,
    block_diag,
    direct_sum,
    identity,
    injection,
    inverse,
    lin_from_rows,
    projection,
    zero_lin,
    zero_map,
)
from utils.hbimod import DiffHBimod2, HBimod2, direct_sum_diff_hbimod

logger = logging.getLogger(__name__)


class CatalogEntry(Structure):
    name: str
    params: dict[str, int] = {}
    algebra: AssocAlgebra
    endomorphisms: tuple[Lin, ...] = ()
    # bases of two-sided ideals stable under every listed endomorphism
    ideals: tuple[tuple[tuple[int, ...], ...], ...] = ()

    def difference_ops(self) -> list[Lin]:
        return gen_difference_ops(self.algebra, self.endomorphisms)


# -- the catalog ----------------------------------------------------------------


def _algebra(name: str, dim: int, table: Callable[[int, int], Sequence]) -> AssocAlgebra:
    space = Space(dim, name)
    return AssocAlgebra(space=space, mult=MultiMap.from_function((space, space), space, table), name=name)


def _unit(dim: int, k: int) -> list[int]:
    return [int(j == k) for j in range(dim)]


def _lin(space: Space, images: Sequence[Sequence]) -> Lin:
    """The linear map sending basis vector k to ``images[k]``."""
    return lin_from_rows(space, space, [[images[k][i] for k in range(space.dim)] for i in range(space.dim)])


def rationals() -> CatalogEntry:
    return CatalogEntry(name="Q", algebra=_algebra("Q", 1, lambda i, j: [1]))


def dual_numbers(scales: Sequence[int] = (2, -1)) -> CatalogEntry:
    """Q[e]/(e^2) on the basis 1, e."""
    alg = _algebra("dual", 2, lambda i, j: _unit(2, i + j) if i + j < 2 else [0, 0])
    endos = tuple(_lin(alg.space, [[1, 0], [0, c]]) for c in scales)
    return CatalogEntry(name="dual", algebra=alg, endomorphisms=endos, ideals=(((0, 1),),))


def truncated_polynomials(order: int = 3, maps: Sequence[tuple[int, int]] = ((2, 0), (1, 1))) -> CatalogEntry:
    """Q[x]/(x^order) on the monomial basis; for order 3, x -> c x + e x^2 is an endomorphism."""
    alg = _algebra(f"trunc{order}", order, lambda i, j: _unit(order, i + j) if i + j < order else [0] * order)
    endos = ()
    ideals = ()
    if order == 3:
        endos = tuple(_lin(alg.space, [[1, 0, 0], [0, c, e], [0, 0, c * c]]) for c, e in maps)
        ideals = (((0, 1, 0), (0, 0, 1)), ((0, 0, 1),))
    return CatalogEntry(name=alg.name, params={"order": order}, algebra=alg, endomorphisms=endos, ideals=ideals)


def _conjugation(u: Sequence[Sequence[int]], cells: Sequence[tuple[int, int]], space: Space) -> Lin:
    """X -> u X u^-1 on the span of the matrix units ``cells``."""
    u_lin = lin_from_rows(Space(2), Space(2), u)
    v = inverse(u_lin).rows()
    where = {cell: k for k, cell in enumerate(cells)}
    images = []
    for k, l in cells:
        image = [Fraction(0)] * len(cells)
        for i in range(2):
            for j in range(2):
                value = Fraction(u[i][k]) * v[l][j]
                if value:
                    image[where[(i, j)]] += value
        images.append(image)
    return _lin(space, images)


def _matrix_units(cells: Sequence[tuple[int, int]]) -> Callable[[int, int], list[int]]:
    where = {cell: k for k, cell in enumerate(cells)}

    def table(a: int, b: int) -> list[int]:
        (i, j), (k, l) = cells[a], cells[b]
        if j != k:
            return [0] * len(cells)
        return _unit(len(cells), where[(i, l)])

    return table


def matrices() -> CatalogEntry:
    """M2(Q) on E11, E12, E21, E22 (index 2i + j)."""
    cells = [(0, 0), (0, 1), (1, 0), (1, 1)]
    alg = _algebra("M2", 4, _matrix_units(cells))
    endos = tuple(_conjugation(u, cells, alg.space) for u in ([[1, 1], [0, 1]], [[2, 0], [0, 1]]))
    return CatalogEntry(name="M2", params={"n": 2}, algebra=alg, endomorphisms=endos)


def upper_triangular() -> CatalogEntry:
    """Upper triangular 2x2 matrices on E11, E12, E22."""
    cells = [(0, 0), (0, 1), (1, 1)]
    alg = _algebra("upper2", 3, _matrix_units(cells))
    diagonal = _lin(alg.space, [[1, 0, 0], [0, 0, 0], [0, 0, 1]])
    endos = (_conjugation([[1, 1], [0, 1]], cells, alg.space), diagonal)
    return CatalogEntry(name="upper2", algebra=alg, endomorphisms=endos, ideals=(((0, 1, 0),),))


def cyclic_group_algebra() -> CatalogEntry:
    """Q[C2] on 1, g with g g = 1."""
    alg = _algebra("QC2", 2, lambda i, j: _unit(2, (i + j) % 2))
    flip = _lin(alg.space, [[1, 0], [0, -1]])
    augment = _lin(alg.space, [[1, 0], [1, 0]])
    return CatalogEntry(name="QC2", algebra=alg, endomorphisms=(flip, augment))


def zero_algebra(dim: int = 2, seed: int = 0) -> CatalogEntry:
    """Zero multiplication: every linear map is an endomorphism."""
    alg = _algebra(f"zero{dim}", dim, lambda i, j: [0] * dim)
    rng = random.Random(seed)
    return CatalogEntry(name=alg.name, params={"dim": dim}, algebra=alg, endomorphisms=(random_lin(rng, alg.space, alg.space),))


def catalog(max_dim: int = MAX_DIM) -> list[CatalogEntry]:
    entries = [
        rationals(),
        dual_numbers(),
        truncated_polynomials(),
        matrices(),
        upper_triangular(),
        cyclic_group_algebra(),
        zero_algebra(),
    ]
    return [e for e in entries if e.algebra.space.dim <= max_dim]


def catalog_algebras(max_dim: int = MAX_DIM) -> list[AssocAlgebra]:
    return [e.algebra for e in catalog(max_dim)]


def find_entry(name: str) -> CatalogEntry:
    for entry in catalog(max_dim=10**6):
        if entry.name == name:
            return entry
    raise KeyError(f"no catalog algebra named '{name}'")


def gen_difference_ops(alg: AssocAlgebra, endomorphisms: Sequence[Lin] = ()) -> list[Lin]:
    """0, -Id and phi - Id for each endomorphism phi, without repeats."""
    space = alg.space
    ops = [zero_lin(space, space), -identity(space)]
    for phi in endomorphisms:
        d = endo_to_diff(alg, phi)
        if not any(d == seen for seen in ops):
            ops.append(d)
    return ops


def diff_algebras(max_dim: int = MAX_DIM) -> list[tuple[str, DifferenceAlgebra]]:
    """Every catalog algebra with every generated difference operator, labelled name/k."""
    out = []
    for entry in catalog(max_dim):
        for k, d in enumerate(entry.difference_ops()):
            out.append((f"{entry.name}/{k}", DifferenceAlgebra(alg=entry.algebra, d=d)))
    return out


def diff_bimodules(da: DifferenceAlgebra) -> list[tuple[str, DiffBimodule]]:
    regular = regular_diff_bimodule(da)
    return [
        ("regular", regular),
        ("twisted", twist_diff_bimodule(da, regular)),
        ("zero", zero_diff_bimodule(da)),
    ]


# -- randomness -----------------------------------------------------------------


def random_rational(rng: random.Random, bound: int = RANDOM_COEFF_BOUND) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_multimap(rng: random.Random, srcs: Sequence[Space], dst: Space) -> MultiMap:
    return MultiMap.from_function(srcs, dst, lambda *idx: [random_rational(rng) for _ in range(dst.dim)])


def random_lin(rng: random.Random, src: Space, dst: Space) -> Lin:
    return random_multimap(rng, (src,), dst)


def random_invertible(rng: random.Random, space: Space) -> Lin:
    """Unit lower triangular times upper triangular with a nonzero diagonal."""
    n = space.dim
    lower = [[1 if i == j else (random_rational(rng) if i > j else 0) for j in range(n)] for i in range(n)]
    upper = [
        [rng.choice((-2, -1, 1, 2)) if i == j else (random_rational(rng) if i < j else 0) for j in range(n)]
        for i in range(n)
    ]
    return lin_from_rows(space, space, lower) @ lin_from_rows(space, space, upper)


def random_cochain(rng: random.Random, da: DifferenceAlgebra, bm: DiffBimodule, degree: int) -> DiffCochain:
    a = da.space
    f = random_multimap(rng, (a,) * degree, bm.module)
    chi = None if degree == 0 else random_multimap(rng, (a,) * (degree - 1), bm.module)
    return DiffCochain(degree=degree, f=f, chi=chi)


# -- generated structures -------------------------------------------------------


def gen_skeletal(
    da: DifferenceAlgebra,
    bm: DiffBimodule,
    seed: int = 0,
    cochain: DiffCochain | None = None,
) -> TwoTermDiffAInf:
    """The skeletal structure whose 3-cocycle is the coboundary of a 2-cochain."""
    if cochain is None:
        cochain = random_cochain(random.Random(seed), da, bm, 2)
    if cochain.degree != 2:
        raise DimensionError(f"expected a 2-cochain, got degree {cochain.degree}")
    cocycle = diff_coboundary(da, bm, cochain)
    logger.debug(f"skeletal structure from seed {seed}: mu nonzero={not cocycle.f.is_zero()}")
    return cocycle_to_skeletal(da, bm, cocycle)


def gen_crossed_modules(da: DifferenceAlgebra, ideals: Sequence[Sequence[Sequence[int]]] = ()) -> list[CrossedModule]:
    out = [identity_crossed_module(da), zero_crossed_module(da, regular_diff_bimodule(da))]
    for basis in ideals:
        out.append(ideal_crossed_module(da, basis))
    return out


def strict_diff_hbimod(da: DifferenceAlgebra, delta_scale: int = 1) -> DiffHBimod2:
    """A over A by the regular actions, delta = c Id, no homotopies."""
    a = da.space
    mult = da.mult
    base = HBimod2(
        M0=a,
        M1=a,
        delta=delta_scale * identity(a),
        left0=mult,
        right0=mult,
        left1=mult,
        right1=mult,
        nu_aav=zero_map((a, a, a), a),
        nu_ava=zero_map((a, a, a), a),
        nu_vaa=zero_map((a, a, a), a),
    )
    return DiffHBimod2(
        base=base,
        Delta0=da.d,
        Delta1=da.d,
        theta_am=zero_map((a, a), a),
        theta_ma=zero_map((a, a), a),
    )


def skeletal_diff_hbimod(da: DifferenceAlgebra, m0: DiffBimodule, m1: DiffBimodule, seed: int = 0) -> DiffHBimod2:
    """delta = 0, with nu and theta read off a coboundary over A ⋉ M0.

    M1 is a module over B = A ⋉ M0 through B -> A. The coboundary of a random
    2-cochain of B with values in M1 is a 3-cocycle; the Hochschild and
    difference differentials keep the number of M0 arguments fixed, so its
    components with exactly one M0 argument satisfy the homotopy bimodule
    identities on their own.
    """
    require(check_diff_bimodule(da, m0), "difference bimodule check")
    require(check_diff_bimodule(da, m1), "difference bimodule check")
    a, v = da.space, m0.module
    parts = [a, v]
    pA, pM = projection(parts, 0), projection(parts, 1)
    iA, iM = injection(parts, 0), injection(parts, 1)
    b_space = direct_sum(a, v, label=f"{a.label}⋉{v.label}")
    b_mult = (
        da.mult.with_inputs(pA, pA).postcompose(iA)
        + m0.left.with_inputs(pA, pM).postcompose(iM)
        + m0.right.with_inputs(pM, pA).postcompose(iM)
    )
    b = DifferenceAlgebra(alg=AssocAlgebra(space=b_space, mult=b_mult), d=block_diag(da.d, m0.Delta))
    over_b = DiffBimodule(
        module=m1.module,
        left=m1.left.precompose(0, pA),
        right=m1.right.precompose(1, pA),
        Delta=m1.Delta,
    )
    cocycle = diff_coboundary(b, over_b, random_cochain(random.Random(seed), b, over_b, 2))
    mu, chi = cocycle.f, cocycle.second()
    base = HBimod2(
        M0=v,
        M1=m1.module,
        delta=zero_lin(m1.module, v),
        left0=m0.left,
        right0=m0.right,
        left1=m1.left,
        right1=m1.right,
        nu_aav=mu.with_inputs(iA, iA, iM),
        nu_ava=mu.with_inputs(iA, iM, iA),
        nu_vaa=mu.with_inputs(iM, iA, iA),
    )
    return DiffHBimod2(
        base=base,
        Delta0=m0.Delta,
        Delta1=m1.Delta,
        theta_am=chi.with_inputs(iA, iM),
        theta_ma=chi.with_inputs(iM, iA),
    )


def gen_diff_hbimods(da: DifferenceAlgebra, seed: int = 0) -> list[DiffHBimod2]:
    """Strict, skeletal and mixed difference homotopy bimodules over ``da``."""
    regular = regular_diff_bimodule(da)
    strict = strict_diff_hbimod(da)
    skeletal = skeletal_diff_hbimod(da, regular, regular, seed)
    return [
        strict,
        strict_diff_hbimod(da, delta_scale=0),
        skeletal,
        skeletal_diff_hbimod(da, regular, twist_diff_bimodule(da, regular), seed + 1),
        direct_sum_diff_hbimod(da, strict, skeletal),
    ]


def gen_hbimods(alg: AssocAlgebra, seed: int = 0) -> list[HBimod2]:
    """Plain homotopy bimodules: the underlying data of those over (alg, 0)."""
    da = DifferenceAlgebra(alg=alg, d=zero_lin(alg.space, alg.space))
    return [dhb.base for dhb in gen_diff_hbimods(da, seed)]


def transport_diff_ainf2(
    x: TwoTermDiffAInf,
    phi0: Lin,
    phi1: Lin,
    phi2: MultiMap,
    phi3: Lin,
) -> tuple[TwoTermDiffAInf, DiffAInf2Morphism]:
    """Move ``x`` along invertible phi0, phi1; phi2 and phi3 are arbitrary.

    Each morphism identity is solved for the target operation it contains,
    in the order delta', the three products, mu', d0', d1', d2'.
    """
    require(check_diff_ainf2(x), "2-term difference A-infinity check")
    a, dop = x.ainf, x.dop
    psi0, psi1 = inverse(phi0), inverse(phi1)
    b0, b1 = phi0.dst, phi1.dst
    delta = phi0 @ a.delta @ psi1
    m00 = (a.m00.postcompose(phi0) - phi2.postcompose(delta)).with_inputs(psi0, psi0)
    m01 = (a.m01.postcompose(phi1) - phi2.precompose(1, a.delta)).with_inputs(psi0, psi1)
    m10 = (a.m10.postcompose(phi1) - phi2.precompose(0, a.delta)).with_inputs(psi1, psi0)
    mu = (
        a.mu.postcompose(phi1)
        - phi2.insert(1, a.m00)
        + phi2.insert(0, a.m00)
        - m01.precompose(0, phi0).insert(1, phi2)
        + m10.precompose(1, phi0).insert(0, phi2)
    ).with_inputs(psi0, psi0, psi0)
    ainf = AInf2(cx=TwoTermComplex(A0=b0, A1=b1, delta=delta), m00=m00, m01=m01, m10=m10, mu=mu)

    morphism = DiffAInf2Morphism(base=AInf2Morphism(phi0=phi0, phi1=phi1, phi2=phi2), phi3=phi3)
    d0 = (phi0 @ dop.d0 - delta @ phi3) @ psi0
    d1 = (phi1 @ dop.d1 - phi3 @ a.delta) @ psi1
    rhs = hd_eq3_rhs(a, dop.d0, ainf, d0, d1, morphism)
    d2 = (dop.d2.postcompose(phi1) - rhs).with_inputs(psi0, psi0)
    return TwoTermDiffAInf(ainf=ainf, dop=DiffOp2(d0=d0, d1=d1, d2=d2)), morphism


def random_transport(x: TwoTermDiffAInf, seed: int = 0) -> tuple[TwoTermDiffAInf, DiffAInf2Morphism]:
    rng = random.Random(seed)
    a0, a1 = x.A0, x.A1
    return transport_diff_ainf2(
        x,
        random_invertible(rng, a0),
        random_invertible(rng, a1),
        random_multimap(rng, (a0, a0), a1),
        random_lin(rng, a0, a1),
    )
