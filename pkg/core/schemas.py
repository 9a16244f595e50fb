"""
Pydantic documents for OrientLab results

These models define the JSON shapes written by the CLI and returned by the
HTTP API: spectra, verification reports, reversal sequences and the
alpha-probe table.
"""

from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field


class GraphInfo(BaseModel):
    """The graph a result was computed on"""

    family: str = Field(..., description="Generator family (cycle, cycle-power, complete, multipartite, file, ...)")
    params: Dict[str, int] = Field(default_factory=dict, description="Generator parameters")
    n: int = Field(..., ge=0, description="Number of vertices")
    m: int = Field(..., ge=0, description="Number of edges")


class GraphDocument(GraphInfo):
    """A graph with its edge list, as written by gen --format json"""

    edges: List[List[int]] = Field(default_factory=list)


class SpectrumDocument(BaseModel):
    """Dependency spectrum of one graph"""

    graph: GraphInfo
    strategy: str
    enumerated: int = Field(..., description="Distinct acyclic orientations seen")
    achievable: List[int] = Field(..., description="Achievable d values, ascending")
    counts: Dict[int, int] = Field(..., description="Acyclic orientations per d (orders strategy: distinct orientations)")
    d_min: int
    d_max: int
    d_max_formula: int = Field(..., description="|E| - |V| + c")
    pi_t: Optional[int] = Field(default=None, description="Minimum triangle edge-deletion size, None when skipped")
    fully_orientable: bool
    gaps: List[int] = Field(default_factory=list, description="Missing d values between d_min and d_max")
    elapsed_ms: float = 0.0

    model_config = {
        "json_schema_extra": {
            "example": {
                "graph": {"family": "cycle-power", "params": {"n": 6, "k": 2}, "n": 6, "m": 12},
                "strategy": "orders",
                "enumerated": 426,
                "achievable": [4, 6, 7],
                "d_min": 4,
                "d_max": 7,
                "d_max_formula": 7,
                "pi_t": 4,
                "fully_orientable": False,
                "gaps": [5],
                "elapsed_ms": 12.5,
            }
        }
    }


class ClauseResult(BaseModel):
    """Outcome of one verification clause"""

    name: str
    status: Literal["pass", "fail"]
    witness: Any = None
    detail: str = ""


class VerificationReport(BaseModel):
    """Per-n verification of the C_n^2 claims"""

    n: int
    clauses: List[ClauseResult] = Field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return bool(self.clauses) and all(c.status == "pass" for c in self.clauses)


class SequenceEntryDocument(BaseModel):
    index: int
    label: str
    target_d: int
    d: int
    predecessor: Optional[int] = None
    reversed_arcs: List[List[int]] = Field(default_factory=list)
    dependent_arcs: List[List[int]] = Field(default_factory=list)
    arcs: List[List[int]] = Field(default_factory=list)


class SequenceDocument(BaseModel):
    """The verified reversal sequence for C_n^2"""

    n: int
    targets: List[int]
    entries: List[SequenceEntryDocument]


class ProbeRow(BaseModel):
    """One row of the alpha-probe table (G = C_n^k)"""

    n: int
    k: int
    status: Literal["ok", "skipped"]
    fully_orientable: Optional[bool] = None
    achievable: Optional[List[int]] = None
    d_min: Optional[int] = None
    d_max: Optional[int] = None
    gaps: Optional[List[int]] = None
    marked: bool = Field(default=False, description="n = 2k + 2, where full orientability is expected to fail")
    note: Optional[str] = Field(default=None, description="Isomorphism check against K_(k+1)(2) on marked rows")
    reason: Optional[str] = None


class ProbeTable(BaseModel):
    k: int
    rows: List[ProbeRow] = Field(default_factory=list)


class SurveyRow(BaseModel):
    """Fully-orientable verdict for one member of a family"""

    graph: GraphInfo
    status: Literal["ok", "skipped"]
    fully_orientable: Optional[bool] = None
    d_min: Optional[int] = None
    d_max: Optional[int] = None
    d_max_formula: int = Field(..., description="|E| - |V| + c")
    pi_t: Optional[int] = None
    gaps: Optional[List[int]] = None
    reason: Optional[str] = None
