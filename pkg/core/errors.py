"""
Exception hierarchy for OrientLab

Every failure the library can signal derives from OrientationLabError so the
CLI and the HTTP surface can map them onto exit codes and status codes.
"""

from typing import Any, Optional


class OrientationLabError(Exception):
    """Base class for all OrientLab errors."""
    pass


class GraphError(OrientationLabError, ValueError):
    """Raised when a graph or a graph-family parameter is invalid."""
    pass


class CyclicOrientationError(OrientationLabError):
    """Raised when dependence is requested on an orientation with a directed cycle."""
    pass


class ArcError(OrientationLabError, ValueError):
    """Raised when an arc is absent from an orientation or points the other way."""
    pass


class ConstructionError(OrientationLabError, AssertionError):
    """An explicit construction does not describe what it claims to describe."""
    pass


class BudgetExceeded(OrientationLabError):
    """
    Raised when an exhaustive search would exceed its work budget.

    Attributes:
        budget: The budget that was exceeded
        subsets_work: 2^|E| for the edge-subset strategy (None if not relevant or above 2^4096)
        orders_work: |V|! for the linear-order strategy (None if not relevant or above 2^4096)
        triangles: Triangle count for the exact triangle-deletion search (if relevant)
    """

    def __init__(
        self,
        message: str,
        budget: int,
        subsets_work: Optional[int] = None,
        orders_work: Optional[int] = None,
        triangles: Optional[int] = None,
    ):
        super().__init__(message)
        self.budget = budget
        self.subsets_work = subsets_work
        self.orders_work = orders_work
        self.triangles = triangles


class VerificationFailure(OrientationLabError):
    """
    Raised when the oracle disagrees with a claimed property.

    Attributes:
        clause: Name of the failing clause or construction step
        witness: Whatever pinpoints the disagreement (arcs, d values, ...)
        report: Partial verification report, when one was being assembled
    """

    def __init__(self, clause: str, message: str, witness: Any = None, report: Any = None):
        super().__init__(f"{clause}: {message}")
        self.clause = clause
        self.message = message
        self.witness = witness
        self.report = report
