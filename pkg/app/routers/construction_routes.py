"""
Construction Routes for OrientLab

The verified reversal sequence of C_n^2 and the per-n verification report.
"""

import logging
from typing import Optional

from fastapi import APIRouter, HTTPException, Query

from app.services.reports import construction_document
from core.constructions import verify_theorems
from core.errors import ConstructionError, GraphError, VerificationFailure
from core.schemas import SequenceDocument, VerificationReport

logger = logging.getLogger(__name__)

router = APIRouter(
    tags=["Constructions"],
    responses={
        400: {"description": "n is outside the constructions' range (n >= 7)"},
        409: {"description": "The dependent-arc oracle disagrees with a construction"},
    }
)


@router.get("/constructions/{n}", response_model=SequenceDocument)
def get_construction(n: int):
    """Orientations of C_n^2 realising every d from ceil(n/2) + 1 to n + 1."""
    try:
        return construction_document(n)
    except GraphError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except (VerificationFailure, ConstructionError) as e:
        logger.error(f"Construction for n={n} rejected: {e}")
        raise HTTPException(status_code=409, detail=str(e))


@router.get("/verify/{n}", response_model=VerificationReport)
def get_verification(n: int, budget: Optional[int] = Query(default=None, gt=0)):
    """
    Check the minimum deletion set, d_min and full orientability of C_n^2.
    Enumeration is skipped when it exceeds the budget.
    """
    try:
        return verify_theorems(n, budget=budget)
    except GraphError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except VerificationFailure as e:
        detail = e.report.model_dump() if e.report is not None else str(e)
        raise HTTPException(status_code=409, detail=detail)
    except ConstructionError as e:
        logger.error(f"Verification for n={n} rejected: {e}")
        raise HTTPException(status_code=409, detail=str(e))
