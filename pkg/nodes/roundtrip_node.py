# filename: nodes/roundtrip_node.py

from pocketflow import Node
from app.schemas.models import RoundtripReport, RoundtripStep
from utils.checking import same_maps
from utils.codec import CochainData, DiffHBimodData, decode, dumps, encode, loads
from utils.corresp import (
    CrossedModule,
    cocycle_to_skeletal,
    crossed_to_strict,
    skeletal_to_cocycle,
    strict_to_crossed,
)
from utils.diffainf2 import TwoTermDiffAInf, check_diff_ainf2, is_skeletal, is_strict
from utils.errors import AlgebraError, exit_code_for
from utils.exactlin import identity
from utils.hbimod import is_skeletal_hbimod, is_strict_hbimod, semidirect_2alg, semidirect_diff
from utils.twoalg import (
    DiffAss2,
    alpha,
    alpha_inverse,
    check_diffass2_morphism,
    functor_S,
    functor_T,
    is_strict_2alg,
)
import logging

logger = logging.getLogger(__name__)


def _step(name: str, ok: bool, detail: str = "") -> RoundtripStep:
    return RoundtripStep(name=name, ok=bool(ok), detail=detail)


def _ainf_steps(x: TwoTermDiffAInf) -> list[RoundtripStep]:
    if not check_diff_ainf2(x).ok:
        return [_step("input check", False, "structure violates its identities")]
    t = functor_T(x)
    steps = [
        _step("S(T(x)) = x", same_maps(functor_S(t), x)),
        _step("T keeps strictness", is_strict(x) == is_strict_2alg(t)),
    ]
    if is_skeletal(x):
        da, bm, cocycle = skeletal_to_cocycle(x)
        steps.append(_step("skeletal -> cocycle -> skeletal", same_maps(cocycle_to_skeletal(da, bm, cocycle), x)))
    if is_strict(x):
        steps.append(_step("strict -> crossed module -> strict", same_maps(crossed_to_strict(strict_to_crossed(x)), x)))
    return steps


def _two_algebra_steps(c: DiffAss2) -> list[RoundtripStep]:
    x = functor_S(c)
    back = functor_T(x)
    there, home = alpha(c), alpha_inverse(c)
    arrows_there = there.F1 @ home.F1
    arrows_home = home.F1 @ there.F1
    return [
        _step("comparison T(S(C)) -> C", check_diffass2_morphism(back, c, there).ok),
        _step("comparison C -> T(S(C))", check_diffass2_morphism(c, back, home).ok),
        _step(
            "comparisons invert each other",
            arrows_there == identity(c.C1) and arrows_home == identity(back.C1),
        ),
        _step("S keeps strictness", is_strict_2alg(c) == is_strict(x)),
    ]


def roundtrip_report(kind: str, obj, sf) -> RoundtripReport:
    """Applies every correspondence that fits the structure and records whether it came back."""
    canonical = dumps(encode(obj))
    note = "" if canonical == dumps(sf) else "input was not in canonical form"
    steps = [_step("file -> structure -> file", dumps(encode(decode(loads(canonical)))) == canonical, note)]
    if isinstance(obj, TwoTermDiffAInf):
        steps.extend(_ainf_steps(obj))
    elif isinstance(obj, DiffAss2):
        steps.extend(_two_algebra_steps(obj))
    elif isinstance(obj, CrossedModule):
        x = crossed_to_strict(obj)
        steps.append(_step("crossed module -> strict -> crossed module", same_maps(strict_to_crossed(x), obj)))
    elif isinstance(obj, CochainData) and obj.cochain.degree == 3:
        x = cocycle_to_skeletal(obj.algebra, obj.module, obj.cochain)
        _, _, cocycle = skeletal_to_cocycle(x)
        steps.append(_step("cocycle -> skeletal -> cocycle", same_maps(cocycle.f, obj.cochain.f) and same_maps(cocycle.second(), obj.cochain.second())))
    elif isinstance(obj, DiffHBimodData):
        x = semidirect_diff(obj.algebra, obj.hbimod)
        hb = obj.hbimod
        steps.append(_step("semidirect product passes its checks", check_diff_ainf2(x).ok))
        steps.append(_step("semidirect 2-algebra = T(semidirect product)", same_maps(semidirect_2alg(obj.algebra, hb), functor_T(x))))
        if is_skeletal_hbimod(hb.base):
            steps.append(_step("skeletal stays skeletal", is_skeletal(x)))
        if is_strict_hbimod(hb):
            steps.append(_step("strict stays strict", is_strict(x)))
    return RoundtripReport(kind=kind, steps=steps)


class RoundtripNode(Node):
    def prep(self, shared: dict):
        logger.info("RoundtripNode: Preparing...")
        return shared.get("loaded", [])

    def exec(self, loaded: list) -> dict:
        logger.info("RoundtripNode: Executing...")
        reports = []
        for item in loaded:
            try:
                report = roundtrip_report(item["kind"], item["structure"], item["file"])
            except AlgebraError as e:
                logger.error(f"RoundtripNode: {item['label']}: {e}")
                return {"status": "error", "error_message": f"{item['label']}: {e}", "exit_code": exit_code_for(e)}
            reports.append((item["label"], report))
        return {"status": "success", "reports": reports}

    def post(self, shared: dict, prep_res, exec_res: dict) -> str:
        logger.info("RoundtripNode: Post-processing...")
        if exec_res.get("status") == "error":
            shared["error_message"] = exec_res["error_message"]
            shared["exit_code"] = exec_res["exit_code"]
            return "error"

        shared["roundtrip_reports"] = exec_res["reports"]
        shared["exit_code"] = 0 if all(r.ok for _, r in exec_res["reports"]) else 1
        return "default"
