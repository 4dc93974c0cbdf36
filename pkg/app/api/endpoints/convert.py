# filename: app/api/endpoints/convert.py

from typing import Literal

from fastapi import APIRouter, Body, Query, status
from app.core.runner import run_flow
from app.flows import create_convert_flow
from app.schemas.models import ConvertResponse, StructureFile
import logging

router = APIRouter()
logger = logging.getLogger(__name__)


@router.post("/convert", response_model=ConvertResponse, status_code=status.HTTP_200_OK)
def convert_structure(
    body: StructureFile = Body(...),
    target: Literal["2alg", "ainf"] = Query(..., description="2alg: diff_ainf2 -> diffass2, ainf: diffass2 -> diff_ainf2"),
):
    logger.info(f"Conversion of a {body.kind} structure to {target} requested")
    shared = run_flow(create_convert_flow(), body, target=target)
    return shared["convert_response"]
