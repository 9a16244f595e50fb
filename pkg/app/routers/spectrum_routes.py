"""
Spectrum Routes for OrientLab

Dependency spectra of family members and the alpha probe over C_n^k.
"""

import logging

from fastapi import APIRouter, HTTPException

from app.models.requests import ProbeAlphaRequest, SpectrumRequest
from app.services.reports import build_graph, probe_alpha, spectrum_document
from core.errors import BudgetExceeded, GraphError
from core.schemas import ProbeTable, SpectrumDocument

logger = logging.getLogger(__name__)

router = APIRouter(
    tags=["Spectrum"],
    responses={
        400: {"description": "Invalid graph parameters"},
        413: {"description": "Enumeration exceeds the budget"},
    }
)


@router.post("/spectrum", response_model=SpectrumDocument)
def compute_spectrum(request: SpectrumRequest):
    """
    Enumerate the acyclic orientations of one graph and report every
    achievable number of dependent arcs, the gaps, and pi_T.
    """
    try:
        g = build_graph(
            request.family, request.n, request.k, request.r, strategy=request.strategy, budget=request.budget,
        )
        return spectrum_document(g, strategy=request.strategy, budget=request.budget)
    except GraphError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except BudgetExceeded as e:
        logger.warning(f"Spectrum refused: {e}")
        raise HTTPException(status_code=413, detail=str(e))


@router.post("/probe-alpha", response_model=ProbeTable)
def compute_probe_alpha(request: ProbeAlphaRequest):
    """
    Full orientability of C_n^k for each n in [n_min, n_max]. Rows with
    n = 2k + 2 are marked; over-budget rows are reported as skipped.
    """
    try:
        return probe_alpha(
            request.k,
            range(request.n_min, request.n_max + 1),
            strategy=request.strategy,
            budget=request.budget,
        )
    except GraphError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except BudgetExceeded as e:
        raise HTTPException(status_code=413, detail=str(e))
