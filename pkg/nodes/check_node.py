# filename: nodes/check_node.py

from pocketflow import Node
from app.core.config import MAX_COCHAIN_DEGREE
from app.schemas.models import CheckReport
from utils.ainf2 import AInf2, check_ainf2
from utils.checking import Reporter
from utils.codec import BimoduleData, CochainData, DiffHBimodData, HBimodData, MorphismData
from utils.cohom import diff_coboundary
from utils.corresp import CrossedModule, check_crossed_module
from utils.diffainf2 import TwoTermDiffAInf, check_diff_ainf2, check_diff_morphism
from utils.diffalg import (
    AssocAlgebra,
    DifferenceAlgebra,
    check_associative,
    check_diff_algebra,
    check_diff_bimodule,
)
from utils.errors import AlgebraError, exit_code_for
from utils.hbimod import check_diff_hbimod, check_hbimod
from utils.twoalg import DiffAss2, check_diffass2
import logging

logger = logging.getLogger(__name__)


def _check_cochain(data: CochainData) -> CheckReport:
    rep = Reporter(f"degree-{data.cochain.degree} cochain")
    rep.include(check_diff_algebra(data.algebra), "algebra:")
    rep.include(check_diff_bimodule(data.algebra, data.module), "module:")
    structure = rep.finish()
    if not structure.ok or data.cochain.degree >= MAX_COCHAIN_DEGREE:
        return structure
    image = diff_coboundary(data.algebra, data.module, data.cochain)
    rep.expect("(cocycle-f)", image.f)
    rep.expect("(cocycle-chi)", image.second())
    return rep.finish()


def _check_morphism(data: MorphismData) -> CheckReport:
    rep = Reporter("morphism of 2-term difference A-infinity algebras")
    rep.include(check_diff_ainf2(data.src), "src:")
    rep.include(check_diff_ainf2(data.dst), "dst:")
    rep.include(check_diff_morphism(data.src, data.dst, data.morphism))
    return rep.finish()


def _check_bimodule(data: BimoduleData) -> CheckReport:
    rep = Reporter("difference bimodule")
    rep.include(check_diff_algebra(data.algebra), "algebra:")
    rep.include(check_diff_bimodule(data.algebra, data.module))
    return rep.finish()


def check_structure(obj) -> CheckReport:
    """Runs the checker belonging to the decoded structure's kind."""
    if isinstance(obj, AssocAlgebra):
        return check_associative(obj)
    if isinstance(obj, DifferenceAlgebra):
        return check_diff_algebra(obj)
    if isinstance(obj, BimoduleData):
        return _check_bimodule(obj)
    if isinstance(obj, AInf2):
        return check_ainf2(obj)
    if isinstance(obj, TwoTermDiffAInf):
        return check_diff_ainf2(obj)
    if isinstance(obj, MorphismData):
        return _check_morphism(obj)
    if isinstance(obj, CochainData):
        return _check_cochain(obj)
    if isinstance(obj, CrossedModule):
        return check_crossed_module(obj)
    if isinstance(obj, HBimodData):
        return check_hbimod(obj.algebra, obj.hbimod)
    if isinstance(obj, DiffHBimodData):
        return check_diff_hbimod(obj.algebra, obj.hbimod)
    if isinstance(obj, DiffAss2):
        return check_diffass2(obj)
    raise TypeError(f"no checker for {type(obj).__name__}")


class CheckNode(Node):
    def prep(self, shared: dict):
        logger.info("CheckNode: Preparing...")
        return shared.get("loaded", [])

    def exec(self, loaded: list) -> dict:
        logger.info("CheckNode: Executing...")
        reports = []
        for item in loaded:
            try:
                report = check_structure(item["structure"])
            except AlgebraError as e:
                logger.error(f"CheckNode: {item['label']}: {e}")
                return {"status": "error", "error_message": f"{item['label']}: {e}", "exit_code": exit_code_for(e)}
            logger.info(f"CheckNode: {item['label']}: {report.summary()}")
            reports.append((item["label"], report))
        return {"status": "success", "reports": reports}

    def post(self, shared: dict, prep_res, exec_res: dict) -> str:
        logger.info("CheckNode: Post-processing...")
        if exec_res.get("status") == "error":
            shared["error_message"] = exec_res["error_message"]
            shared["exit_code"] = exec_res["exit_code"]
            return "error"

        shared["reports"] = exec_res["reports"]
        shared["report"] = exec_res["reports"][0][1] if exec_res["reports"] else None
        shared["exit_code"] = 0 if all(r.ok for _, r in exec_res["reports"]) else 1
        return "default"
