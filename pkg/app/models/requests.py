"""
Pydantic request bodies for the OrientLab API
"""

from typing import Optional

from pydantic import BaseModel, Field, model_validator

from app.services.reports import Family
from core.spectrum import Strategy


class SpectrumRequest(BaseModel):
    """Request the dependency spectrum of one family member"""

    family: Family = Field(..., description="Graph family")
    n: int = Field(..., ge=1, description="Vertex count (part size for multipartite)")
    k: Optional[int] = Field(default=None, ge=1, description="Power for cycle-power")
    r: Optional[int] = Field(default=None, ge=2, description="Number of parts for multipartite")
    strategy: Strategy = Field(default=Strategy.AUTO, description="Enumeration strategy")
    budget: Optional[int] = Field(default=None, gt=0, description="Enumeration budget")

    model_config = {
        "json_schema_extra": {
            "example": {"family": "cycle-power", "n": 6, "k": 2, "strategy": "auto"}
        }
    }


class ProbeAlphaRequest(BaseModel):
    """Probe full orientability of C_n^k for n_min <= n <= n_max"""

    k: int = Field(..., ge=2)
    n_min: int = Field(..., ge=3)
    n_max: int = Field(..., ge=3)
    strategy: Strategy = Field(default=Strategy.AUTO)
    budget: Optional[int] = Field(default=None, gt=0)

    @model_validator(mode="after")
    def range_not_empty(self):
        if self.n_max < self.n_min:
            raise ValueError("n_max must be >= n_min")
        return self

    model_config = {
        "json_schema_extra": {
            "example": {"k": 2, "n_min": 6, "n_max": 9}
        }
    }
