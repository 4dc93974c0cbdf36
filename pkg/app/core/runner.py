# filename: app/core/runner.py

from fastapi import HTTPException, status
from pocketflow import Flow
from app.schemas.models import StructureFile
from utils.errors import EXIT_DISAGREEMENT, EXIT_INPUT, EXIT_VIOLATION
import logging

logger = logging.getLogger(__name__)

_HTTP_STATUS = {
    EXIT_INPUT: status.HTTP_422_UNPROCESSABLE_ENTITY,
    EXIT_VIOLATION: status.HTTP_400_BAD_REQUEST,
    EXIT_DISAGREEMENT: status.HTTP_500_INTERNAL_SERVER_ERROR,
}


def run_flow(flow: Flow, body: StructureFile, tolerated=(0,), **params) -> dict:
    """
    Runs a flow on a request body without printing anything and returns the shared store.
    Exit codes outside `tolerated` become an HTTPException.
    """
    shared = {"structure_file": body, "emit": False, **params}
    flow.run(shared)
    code = shared.get("exit_code", 0)
    if code in tolerated:
        return shared
    detail = shared.get("error_message") or f"flow ended with exit status {code}"
    logger.warning(f"Request on {body.kind} rejected ({code}): {detail}")
    raise HTTPException(status_code=_HTTP_STATUS.get(code, status.HTTP_500_INTERNAL_SERVER_ERROR), detail=detail)
