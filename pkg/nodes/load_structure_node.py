# filename: nodes/load_structure_node.py

from pocketflow import Node
from pydantic import ValidationError
from app.core.config import MAX_DIM
from app.schemas.models import StructureFile
from utils.codec import decode, read_structure_file
from utils.errors import EXIT_INPUT, AlgebraError, exit_code_for
import logging

logger = logging.getLogger(__name__)


class LoadStructureNode(Node):
    """Reads structure files (or takes already parsed ones) and decodes them."""

    def prep(self, shared: dict):
        logger.info("LoadStructureNode: Preparing...")
        sources = []
        if shared.get("structure_file") is not None:
            sources.append(("<request>", shared["structure_file"]))
        for path in shared.get("paths") or ([shared["path"]] if shared.get("path") else []):
            sources.append((str(path), None))
        max_dim = shared.get("max_dim") or MAX_DIM
        return sources, max_dim

    def exec(self, prep_res) -> dict:
        logger.info("LoadStructureNode: Executing...")
        sources, max_dim = prep_res
        if not sources:
            return {"status": "error", "error_message": "no structure given", "exit_code": EXIT_INPUT}
        loaded = []
        for label, sf in sources:
            try:
                if sf is None:
                    sf = read_structure_file(label)
                elif not isinstance(sf, StructureFile):
                    sf = StructureFile.model_validate(sf)
                loaded.append({"label": label, "kind": sf.kind, "file": sf, "structure": decode(sf, max_dim)})
            except AlgebraError as e:
                logger.error(f"LoadStructureNode: {label}: {e}")
                return {"status": "error", "error_message": f"{label}: {e}", "exit_code": exit_code_for(e)}
            except ValidationError as e:
                logger.error(f"LoadStructureNode: {label}: {e}")
                return {"status": "error", "error_message": f"{label}: not a structure file", "exit_code": EXIT_INPUT}
        logger.info(f"LoadStructureNode: Loaded {len(loaded)} structure(s).")
        return {"status": "success", "loaded": loaded}

    def post(self, shared: dict, prep_res, exec_res: dict) -> str:
        logger.info("LoadStructureNode: Post-processing...")
        if exec_res.get("status") == "error":
            shared["error_message"] = exec_res["error_message"]
            shared["exit_code"] = exec_res["exit_code"]
            return "error"

        loaded = exec_res["loaded"]
        shared["loaded"] = loaded
        shared["structure_file"] = loaded[0]["file"]
        shared["kind"] = loaded[0]["kind"]
        shared["structure"] = loaded[0]["structure"]
        return "default"
