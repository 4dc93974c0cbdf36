# filename: nodes/mc_node.py

from pocketflow import Node
from utils.derived import mc_report
from utils.diffalg import DifferenceAlgebra
from utils.errors import EXIT_DISAGREEMENT, EXIT_INPUT, EXIT_OK, EXIT_VIOLATION, AlgebraError, exit_code_for
import logging

logger = logging.getLogger(__name__)


class McNode(Node):
    """Three verdicts on one operator: the difference identity, the graph test and the MC equation."""

    def prep(self, shared: dict):
        logger.info("McNode: Preparing...")
        return shared.get("structure")

    def exec(self, da) -> dict:
        logger.info("McNode: Executing...")
        if not isinstance(da, DifferenceAlgebra):
            return {"status": "error", "error_message": "mc takes a diff_algebra file", "exit_code": EXIT_INPUT}
        try:
            report = mc_report(da.alg, da.d)
        except AlgebraError as e:
            logger.error(f"McNode: {e}")
            return {"status": "error", "error_message": str(e), "exit_code": exit_code_for(e)}
        return {"status": "success", "report": report}

    def post(self, shared: dict, prep_res, exec_res: dict) -> str:
        logger.info("McNode: Post-processing...")
        if exec_res.get("status") == "error":
            shared["error_message"] = exec_res["error_message"]
            shared["exit_code"] = exec_res["exit_code"]
            return "error"

        report = exec_res["report"]
        shared["mc_report"] = report
        if not report.agree:
            shared["exit_code"] = EXIT_DISAGREEMENT
        else:
            shared["exit_code"] = EXIT_OK if report.maurer_cartan else EXIT_VIOLATION
        return "default"
