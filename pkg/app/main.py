"""
OrientLab Backend - Main Application

HTTP access to dependency spectra of acyclic orientations, the constructions
on the square of a cycle, and their verification. The same services back the
command line in app.cli.
"""

import logging

from fastapi import FastAPI

from app.config import settings
from app.routers import construction_routes, spectrum_routes

logging.basicConfig(
    level=settings.log_level.upper(),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
)
logger = logging.getLogger(__name__)

app = FastAPI(
    title=settings.app_name,
    description="""
    **OrientLab** - dependent arcs of acyclic orientations.

    - **Spectrum** (`POST /spectrum`) - every achievable number of dependent arcs of a graph
    - **Constructions** (`GET /constructions/{n}`) - orientations of C_n^2 realising each d
    - **Verify** (`GET /verify/{n}`) - check the C_n^2 claims for one n
    - **Probe** (`POST /probe-alpha`) - full orientability of C_n^k over a range of n
    """,
    version=settings.app_version,
    debug=settings.debug_mode,
)

app.include_router(spectrum_routes.router)
app.include_router(construction_routes.router)


@app.get("/health")
async def health_check():
    return {
        "status": "ok",
        "app": settings.app_name,
        "version": settings.app_version,
        "default_budget": settings.default_budget,
        "workers": settings.workers,
    }


if __name__ == "__main__":
    import uvicorn

    uvicorn.run(
        "app.main:app",
        host=settings.host,
        port=settings.port,
        reload=settings.debug_mode,
        log_level=settings.log_level.lower(),
    )
