# filename: nodes/convert_node.py

from pocketflow import Node
from app.schemas.models import ConvertResponse
from utils.checking import require, same_maps
from utils.codec import encode
from utils.diffainf2 import TwoTermDiffAInf, is_skeletal, is_strict, require_diff_ainf2
from utils.errors import AlgebraError, FormatError, exit_code_for
from utils.twoalg import (
    DiffAss2,
    alpha,
    alpha_inverse,
    check_diffass2,
    check_diffass2_morphism,
    functor_S,
    functor_T,
    is_strict_2alg,
)
import logging

logger = logging.getLogger(__name__)

TARGETS = ("2alg", "ainf")


def convert_structure(obj, target: str) -> ConvertResponse:
    """T towards 2-algebras, S back; the response says how the way back compares."""
    if target not in TARGETS:
        raise FormatError(f"unknown target '{target}', expected one of {TARGETS}")
    if target == "2alg":
        if not isinstance(obj, TwoTermDiffAInf):
            raise FormatError("conversion to a 2-algebra needs a diff_ainf2 structure")
        require_diff_ainf2(obj)
        out = functor_T(obj)
        relation = "identical" if same_maps(functor_S(out), obj) else "converted"
        notes = []
        if is_skeletal(obj):
            notes.append("skeletal input: t = s")
        if is_strict(obj) and is_strict_2alg(out):
            notes.append("strict input: associator and difference arrows are identities")
        return ConvertResponse(file=encode(out), relation=relation, note="; ".join(notes))

    if not isinstance(obj, DiffAss2):
        raise FormatError("conversion to a 2-term structure needs a diffass2 structure")
    require(check_diffass2(obj), "difference associative 2-algebra check")
    out = functor_S(obj)
    back = functor_T(out)
    if same_maps(back, obj):
        return ConvertResponse(file=encode(out), relation="identical", note="input was already in normal form")
    there, home = alpha(obj), alpha_inverse(obj)
    require(check_diffass2_morphism(back, obj, there), "comparison morphism check")
    require(check_diffass2_morphism(obj, back, home), "inverse comparison morphism check")
    return ConvertResponse(
        file=encode(out),
        relation="alpha-isomorphic",
        note="converting back gives the normal form, isomorphic to the input through an invertible comparison morphism",
    )


class ConvertNode(Node):
    def prep(self, shared: dict):
        logger.info("ConvertNode: Preparing...")
        return shared.get("structure"), shared.get("target", "2alg")

    def exec(self, prep_res) -> dict:
        logger.info("ConvertNode: Executing...")
        obj, target = prep_res
        try:
            response = convert_structure(obj, target)
        except AlgebraError as e:
            logger.error(f"ConvertNode: {e}")
            return {"status": "error", "error_message": str(e), "exit_code": exit_code_for(e)}
        logger.info(f"ConvertNode: Converted towards {target} ({response.relation}).")
        return {"status": "success", "response": response}

    def post(self, shared: dict, prep_res, exec_res: dict) -> str:
        logger.info("ConvertNode: Post-processing...")
        if exec_res.get("status") == "error":
            shared["error_message"] = exec_res["error_message"]
            shared["exit_code"] = exec_res["exit_code"]
            return "error"

        response = exec_res["response"]
        shared["convert_response"] = response
        shared["outputs"] = [("converted", response.file)]
        shared["messages"] = [f"relation: {response.relation}"] + ([response.note] if response.note else [])
        shared["exit_code"] = 0
        return "default"
