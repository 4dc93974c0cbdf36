# filename: app/api/endpoints/construct.py

from fastapi import APIRouter, Body, HTTPException, status
from app.core.runner import run_flow
from app.flows import create_construct_flow
from app.schemas.models import StructureFile
from nodes.construct_node import RECIPES
import logging

router = APIRouter()
logger = logging.getLogger(__name__)


@router.post("/construct/{recipe}", response_model=StructureFile, status_code=status.HTTP_200_OK)
def construct_structure(recipe: str, body: StructureFile = Body(...)):
    """Runs one construction recipe; the input kind must match the recipe."""
    if recipe not in RECIPES:
        logger.warning(f"Unknown recipe requested: {recipe}")
        raise HTTPException(
            status_code=status.HTTP_404_NOT_FOUND,
            detail=f"unknown recipe '{recipe}', expected one of {sorted(RECIPES)}",
        )
    shared = run_flow(create_construct_flow(), body, recipe=recipe)
    return shared["outputs"][0][1]
