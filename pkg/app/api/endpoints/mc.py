# filename: app/api/endpoints/mc.py

from fastapi import APIRouter, Body, status
from app.core.runner import run_flow
from app.flows import create_mc_flow
from app.schemas.models import McReport, StructureFile
import logging

router = APIRouter()
logger = logging.getLogger(__name__)


@router.post("/mc", response_model=McReport, status_code=status.HTTP_200_OK)
def maurer_cartan(body: StructureFile = Body(...)):
    """
    Difference identity, graph criterion and Maurer-Cartan equation for a diff_algebra.
    The three verdicts disagreeing is a server fault and answers 500.
    """
    logger.info("Maurer-Cartan check requested")
    shared = run_flow(create_mc_flow(), body, tolerated=(0, 1))
    return shared["mc_report"]
