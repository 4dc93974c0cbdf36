# filename: nodes/construct_node.py

from pocketflow import Node
from utils.codec import CochainData, DiffHBimodData, HBimodData, encode
from utils.corresp import (
    CrossedModule,
    cocycle_to_skeletal,
    crossed_to_strict,
    skeletal_to_cocycle,
    strict_to_crossed,
)
from utils.diffainf2 import TwoTermDiffAInf, is_skeletal, is_strict
from utils.errors import AlgebraError, FormatError, exit_code_for
from utils.hbimod import semidirect_2alg, semidirect_ainf2, semidirect_diff
from utils.twoalg import is_strict_2alg
import logging

logger = logging.getLogger(__name__)


def _from_cocycle(obj: CochainData):
    x = cocycle_to_skeletal(obj.algebra, obj.module, obj.cochain)
    return x, "skeletal 2-term difference A-infinity algebra"


def _to_cocycle(obj: TwoTermDiffAInf):
    da, bm, cocycle = skeletal_to_cocycle(obj)
    return CochainData(algebra=da, module=bm, cochain=cocycle), "3-cocycle"


def _from_crossed_module(obj: CrossedModule):
    return crossed_to_strict(obj), "strict 2-term difference A-infinity algebra"


def _to_crossed_module(obj: TwoTermDiffAInf):
    return strict_to_crossed(obj), "crossed module of difference algebras"


def _semidirect(obj: HBimodData):
    return semidirect_ainf2(obj.algebra, obj.hbimod), "2-term A-infinity algebra"


def _semidirect_diff(obj: DiffHBimodData):
    x = semidirect_diff(obj.algebra, obj.hbimod)
    flags = [name for name, holds in (("skeletal", is_skeletal(x)), ("strict", is_strict(x))) if holds]
    return x, " ".join(flags + ["2-term difference A-infinity algebra"])


def _semidirect_2alg(obj: DiffHBimodData):
    c = semidirect_2alg(obj.algebra, obj.hbimod)
    return c, ("strict " if is_strict_2alg(c) else "") + "difference associative 2-algebra"


# recipe -> (input kind, builder)
RECIPES = {
    "from-cocycle": ("cochain", _from_cocycle),
    "to-cocycle": ("diff_ainf2", _to_cocycle),
    "from-crossed-module": ("crossed_module", _from_crossed_module),
    "to-crossed-module": ("diff_ainf2", _to_crossed_module),
    "semidirect": ("hbimod", _semidirect),
    "semidirect-diff": ("diff_hbimod", _semidirect_diff),
    "semidirect-2alg": ("diff_hbimod", _semidirect_2alg),
}


def construct(recipe: str, kind: str, obj):
    """Runs a recipe; returns the built structure and a one-line description."""
    if recipe not in RECIPES:
        raise FormatError(f"unknown recipe '{recipe}', expected one of {sorted(RECIPES)}")
    wanted, builder = RECIPES[recipe]
    if kind != wanted:
        raise FormatError(f"recipe '{recipe}' takes a {wanted} file, got {kind}")
    return builder(obj)


class ConstructNode(Node):
    def prep(self, shared: dict):
        logger.info("ConstructNode: Preparing...")
        return shared.get("recipe"), shared.get("kind"), shared.get("structure")

    def exec(self, prep_res) -> dict:
        logger.info("ConstructNode: Executing...")
        recipe, kind, obj = prep_res
        try:
            built, description = construct(recipe, kind, obj)
            sf = encode(built)
        except AlgebraError as e:
            logger.error(f"ConstructNode: {recipe}: {e}")
            return {"status": "error", "error_message": f"{recipe}: {e}", "exit_code": exit_code_for(e)}
        logger.info(f"ConstructNode: {recipe} built a {description}.")
        return {"status": "success", "file": sf, "description": description}

    def post(self, shared: dict, prep_res, exec_res: dict) -> str:
        logger.info("ConstructNode: Post-processing...")
        if exec_res.get("status") == "error":
            shared["error_message"] = exec_res["error_message"]
            shared["exit_code"] = exec_res["exit_code"]
            return "error"

        shared["outputs"] = [(prep_res[0], exec_res["file"])]
        shared["messages"] = [f"built: {exec_res['description']}"]
        shared["exit_code"] = 0
        return "default"
