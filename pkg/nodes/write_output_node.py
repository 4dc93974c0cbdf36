# filename: nodes/write_output_node.py

from pathlib import Path
import sys

from pocketflow import Node
from utils.codec import dumps
from utils.errors import EXIT_INPUT
import logging

logger = logging.getLogger(__name__)


def _file_name(name: str) -> str:
    return "".join(c if c.isalnum() or c in "-_." else "_" for c in name) + ".json"


class WriteOutputNode(Node):
    """Writes produced structure files to disk, or the single one to stdout."""

    def prep(self, shared: dict):
        logger.info("WriteOutputNode: Preparing...")
        return shared.get("outputs", []), shared.get("output_path"), shared.get("emit", True), shared.get("messages", [])

    def exec(self, prep_res) -> dict:
        logger.info("WriteOutputNode: Executing...")
        outputs, output_path, emit, messages = prep_res
        if not emit:
            return {"status": "success", "written": []}
        if output_path is None:
            if len(outputs) != 1:
                return {
                    "status": "error",
                    "error_message": f"{len(outputs)} structures produced; pass -o DIR to write them",
                    "exit_code": EXIT_INPUT,
                }
            for message in messages:
                print(message, file=sys.stderr)
            sys.stdout.write(dumps(outputs[0][1]))
            return {"status": "success", "written": ["<stdout>"]}

        target = Path(output_path)
        written = []
        try:
            if len(outputs) == 1 and not target.is_dir():
                target.parent.mkdir(parents=True, exist_ok=True)
                target.write_text(dumps(outputs[0][1]), encoding="utf-8")
                written.append(str(target))
            else:
                target.mkdir(parents=True, exist_ok=True)
                for name, sf in outputs:
                    path = target / _file_name(name)
                    path.write_text(dumps(sf), encoding="utf-8")
                    written.append(str(path))
        except OSError as e:
            logger.error(f"WriteOutputNode: {e}")
            return {"status": "error", "error_message": str(e), "exit_code": EXIT_INPUT}
        for message in messages:
            print(message)
        for path in written:
            print(f"wrote {path}")
        return {"status": "success", "written": written}

    def post(self, shared: dict, prep_res, exec_res: dict) -> str:
        logger.info("WriteOutputNode: Post-processing...")
        if exec_res.get("status") == "error":
            shared["error_message"] = exec_res["error_message"]
            shared["exit_code"] = exec_res["exit_code"]
            return "error"

        shared["written"] = exec_res["written"]
        return "default"
