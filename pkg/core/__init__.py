"""
Core modules for OrientLab

Graph model and generators, acyclic orientations and their dependent arcs,
dependency spectra by exhaustive enumeration, and the explicit constructions
on the square of a cycle.
"""

from .errors import (
    ArcError,
    BudgetExceeded,
    ConstructionError,
    CyclicOrientationError,
    GraphError,
    OrientationLabError,
    VerificationFailure,
)
from .graph_core import (
    SimpleGraph,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    cycle_power,
    enumerate_triangles,
    graph_power,
)
from .orientation import Orientation, dependent_arcs, from_linear_order, is_acyclic, reverse_arcs
from .spectrum import (
    SpectrumResult,
    Strategy,
    d_max_closed_form,
    dependency_spectrum,
    full_orientability,
    min_triangle_edge_deletion,
)
from .constructions import (
    construct_d0,
    construct_dmax_orientation,
    construct_reversal_sequence,
    lemma2_deletion_set,
    verify_theorems,
)

__all__ = [
    'ArcError',
    'BudgetExceeded',
    'ConstructionError',
    'CyclicOrientationError',
    'GraphError',
    'OrientationLabError',
    'VerificationFailure',
    'SimpleGraph',
    'complete_graph',
    'complete_multipartite',
    'cycle_graph',
    'cycle_power',
    'enumerate_triangles',
    'graph_power',
    'Orientation',
    'dependent_arcs',
    'from_linear_order',
    'is_acyclic',
    'reverse_arcs',
    'SpectrumResult',
    'Strategy',
    'd_max_closed_form',
    'dependency_spectrum',
    'full_orientability',
    'min_triangle_edge_deletion',
    'construct_d0',
    'construct_dmax_orientation',
    'construct_reversal_sequence',
    'lemma2_deletion_set',
    'verify_theorems',
]
