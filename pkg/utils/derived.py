# filename: utils/derived.py

"""
Derived brackets in the ungraded case.

V = Ā ⊕ A carries (ā, x) * (b̄, y) = (ab, ay + xb + xy). Viewing * as a
2-cochain π on V, the brackets l1(f) = P[π, f] and l2(f, g) = P[[π, f], g]
on maps Ā -> A turn difference operators into Maurer-Cartan elements:
l1(d) + ½ l2(d, d) is exactly the residual d(a)b + a d(b) + d(a)d(b) - d(ab).
Higher brackets vanish, so nothing beyond l2 is built.
"""

import logging
from fractions import Fraction

from app.core.config import ARITY_CAP
from app.schemas.models import CheckReport, McReport
from utils.checking import Reporter, Structure, require_shape
from utils.diffalg import AssocAlgebra, check_associative, check_difference
from utils.errors import DimensionError
from utils.exactlin import Lin, MultiMap, Space, direct_sum, injection, projection

logger = logging.getLogger(__name__)

# a map V^k -> V for some k >= 1; the maps Ā^k -> A form the abelian subalgebra
ArityMap = MultiMap


class StarAlgebra(Structure):
    base: AssocAlgebra
    carrier: Space
    mult: MultiMap


class _Halves:
    """Ā ⊕ A with Ā first."""

    def __init__(self, a: Space):
        parts = [a, a]
        self.space = direct_sum(a, a, label=f"{a.label}̄⊕{a.label}")
        self.p_bar, self.p = projection(parts, 0), projection(parts, 1)
        self.i_bar, self.i = injection(parts, 0), injection(parts, 1)
        self.e_bar = self.i_bar @ self.p_bar
        self.e = self.i @ self.p


def build_star(alg: AssocAlgebra) -> StarAlgebra:
    require_shape("mult", alg.mult, (alg.space, alg.space), alg.space)
    h = _Halves(alg.space)
    m = alg.mult
    star = (
        m.with_inputs(h.p_bar, h.p_bar).postcompose(h.i_bar)
        + (m.with_inputs(h.p_bar, h.p) + m.with_inputs(h.p, h.p_bar) + m.with_inputs(h.p, h.p)).postcompose(h.i)
    )
    return StarAlgebra(base=alg, carrier=h.space, mult=star)


def check_star(sa: StarAlgebra) -> CheckReport:
    return check_associative(AssocAlgebra(space=sa.carrier, mult=sa.mult, name="Ā⊕A"))


def _insertion(f: ArityMap, g: ArityMap) -> ArityMap:
    """Σ_i (-1)^{i(l-1)} f(x1, .., g(x_i, ..), ..) with slots counted from 0."""
    l = g.arity
    out = None
    for slot in range(f.arity):
        term = f.insert(slot, g)
        if slot * (l - 1) % 2:
            term = -term
        out = term if out is None else out + term
    return out


def gerstenhaber(f: ArityMap, g: ArityMap) -> ArityMap:
    k, l = f.arity, g.arity
    if k < 1 or l < 1:
        raise DimensionError("bracket arguments need arity at least 1")
    if k + l - 1 > ARITY_CAP:
        raise DimensionError(f"bracket of arities {k} and {l} exceeds the arity cap {ARITY_CAP}")
    sign = -1 if (k - 1) * (l - 1) % 2 else 1
    forward = _insertion(f, g)
    backward = _insertion(g, f)
    return forward + backward if sign < 0 else forward - backward


def embed_h(alg: AssocAlgebra, f: Lin) -> ArityMap:
    """A map A -> A as the arity-1 element of V reading Ā and writing A."""
    require_shape("f", f, (alg.space,), alg.space)
    h = _Halves(alg.space)
    return h.i @ f @ h.p_bar


def project(alg: AssocAlgebra, F: ArityMap) -> ArityMap:
    """P: keep the component Ā^k -> A, zero everything else."""
    h = _Halves(alg.space)
    return F.with_inputs(*([h.e_bar] * F.arity)).postcompose(h.e)


def l1(alg: AssocAlgebra, f: Lin) -> ArityMap:
    pi = build_star(alg).mult
    return project(alg, gerstenhaber(pi, embed_h(alg, f)))


def l2(alg: AssocAlgebra, f: Lin, g: Lin) -> ArityMap:
    pi = build_star(alg).mult
    return project(alg, gerstenhaber(gerstenhaber(pi, embed_h(alg, f)), embed_h(alg, g)))


def mc_residual(alg: AssocAlgebra, d: Lin) -> MultiMap:
    """l1(d) + ½ l2(d, d), read back as a bilinear map A x A -> A."""
    h = _Halves(alg.space)
    total = l1(alg, d) + Fraction(1, 2) * l2(alg, d, d)
    return total.with_inputs(h.i_bar, h.i_bar).postcompose(h.p)


def mc_check(alg: AssocAlgebra, d: Lin) -> bool:
    return mc_residual(alg, d).is_zero()


def graph_subalgebra_report(alg: AssocAlgebra, d: Lin) -> CheckReport:
    """Products of elements (a, d a) stay on the graph of d."""
    require_shape("d", d, (alg.space,), alg.space)
    h = _Halves(alg.space)
    graph = h.i_bar + h.i @ d
    products = build_star(alg).mult.with_inputs(graph, graph)
    rep = Reporter("graph of d")
    rep.expect("(graph)", products.postcompose(h.p), alg.mult.postcompose(d))
    return rep.finish()


def graph_subalgebra_check(alg: AssocAlgebra, d: Lin) -> bool:
    return graph_subalgebra_report(alg, d).ok


def mc_report(alg: AssocAlgebra, d: Lin) -> McReport:
    difference = check_difference(alg, d).ok
    graph = graph_subalgebra_check(alg, d)
    residual = mc_residual(alg, d)
    mc = residual.is_zero()
    agree = difference == graph == mc
    if not agree:
        logger.error(f"verdicts disagree: difference={difference} graph={graph} mc={mc}")
    return McReport(
        difference_identity=difference,
        graph_criterion=graph,
        maurer_cartan=mc,
        residual=[(list(index), str(value)) for index, value in residual.nonzero_entries()],
        agree=agree,
    )
