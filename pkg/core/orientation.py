"""
Orientations of a SimpleGraph and their dependent arcs.

An orientation stores one direction bit per edge index: bit i clear means edge
(u, v), u < v, is directed u -> v; bit i set means v -> u. All bits live in one
Python int so orientations hash and compare cheaply.

An arc u -> v of an acyclic orientation is dependent iff its reversal creates a
directed cycle, i.e. iff a directed path of length >= 2 leads from u to v. The
non-dependent arcs (covers) form the transitive reduction.

Reachability uses per-vertex descendant bitsets built in reverse topological
order: u -> v is dependent iff v is a descendant of some out-neighbour of u.
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from core.errors import ArcError, ConstructionError, CyclicOrientationError, GraphError
from core.graph_core import SimpleGraph

logger = logging.getLogger(__name__)

Arc = Tuple[int, int]


@dataclass(frozen=True)
class Orientation:
    """
    An orientation D of a host graph.

    Attributes:
        host: The underlying undirected graph
        bits: Direction bit per edge index (bit i set = edge i points high -> low)
    """
    host: SimpleGraph
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.host.n_edges:
            raise GraphError(
                f"Direction bits {self.bits:#x} do not fit {self.host.n_edges} edges"
            )

    @property
    def direction(self) -> Tuple[int, ...]:
        return tuple(self.bits >> i & 1 for i in range(self.host.n_edges))

    def arc(self, index: int) -> Arc:
        u, v = self.host.edges[index]
        return (v, u) if self.bits >> index & 1 else (u, v)

    def arcs(self) -> List[Arc]:
        """All arcs as (tail, head) pairs, in edge-index order."""
        return [self.arc(i) for i in range(self.host.n_edges)]

    def out_masks(self) -> List[int]:
        return out_masks(self.host, self.bits)


@dataclass(frozen=True)
class DependencyReport:
    """R(D), the cover arcs, and d(D) = |R(D)|."""
    dependent: FrozenSet[Arc]
    covers: FrozenSet[Arc]

    @property
    def d(self) -> int:
        return len(self.dependent)


def out_masks(g: SimpleGraph, bits: int) -> List[int]:
    """Out-neighbourhood bitmask of every vertex under the given direction bits."""
    out = [0] * g.n_vertices
    for i, (u, v) in enumerate(g.edges):
        if bits >> i & 1:
            out[v] |= 1 << u
        else:
            out[u] |= 1 << v
    return out


def _topological_order(out: Sequence[int]) -> Optional[List[int]]:
    n = len(out)
    indeg = [0] * n
    for mask in out:
        while mask:
            low = mask & -mask
            indeg[low.bit_length() - 1] += 1
            mask ^= low
    order = [v for v in range(n) if indeg[v] == 0]
    for u in order:
        mask = out[u]
        while mask:
            low = mask & -mask
            w = low.bit_length() - 1
            indeg[w] -= 1
            if indeg[w] == 0:
                order.append(w)
            mask ^= low
    return order if len(order) == n else None


def _through_masks(out: Sequence[int]) -> List[int]:
    """
    For every vertex u, the vertices reachable from u by a path of length >= 2.

    Raises:
        CyclicOrientationError: If the digraph has a directed cycle
    """
    order = _topological_order(out)
    if order is None:
        raise CyclicOrientationError("Dependent arcs are undefined for a cyclic orientation")
    n = len(out)
    reach = [0] * n
    through = [0] * n
    for u in reversed(order):
        mask = out[u]
        deep = 0
        while mask:
            low = mask & -mask
            deep |= reach[low.bit_length() - 1]
            mask ^= low
        through[u] = deep
        reach[u] = deep | out[u]
    return through


def count_dependent(out: Sequence[int]) -> int:
    """d(D) straight from out-neighbourhood masks."""
    through = _through_masks(out)
    return sum((mask & deep).bit_count() for mask, deep in zip(out, through))


def from_linear_order(g: SimpleGraph, order: Sequence[int]) -> Orientation:
    """
    Direct every edge from the endpoint earlier in `order` to the later one.

    Raises:
        GraphError: If order is not a permutation of 0..n-1
    """
    if sorted(order) != list(range(g.n_vertices)):
        raise GraphError(f"Order {list(order)} is not a permutation of 0..{g.n_vertices - 1}")
    position = [0] * g.n_vertices
    for rank, v in enumerate(order):
        position[v] = rank
    bits = 0
    for i, (u, v) in enumerate(g.edges):
        if position[v] < position[u]:
            bits |= 1 << i
    return Orientation(g, bits)


def from_arcs(g: SimpleGraph, arcs: Iterable[Arc]) -> Orientation:
    """
    Build an orientation from an explicit arc list naming every edge exactly once.

    Raises:
        ConstructionError: If an edge is missing, repeated, or absent from g
    """
    bits = 0
    covered = 0
    for tail, head in arcs:
        if not g.has_edge(tail, head):
            raise ConstructionError(f"Arc {tail}->{head} has no underlying edge")
        i = g.edge_index(tail, head)
        if covered >> i & 1:
            raise ConstructionError(f"Edge {g.edges[i]} is oriented twice")
        covered |= 1 << i
        if tail > head:
            bits |= 1 << i
    if covered != (1 << g.n_edges) - 1:
        missing = [g.edges[i] for i in range(g.n_edges) if not covered >> i & 1]
        raise ConstructionError(f"Edges left unoriented: {missing}")
    return Orientation(g, bits)


def is_acyclic(o: Orientation) -> bool:
    return _topological_order(o.out_masks()) is not None


def topological_order(o: Orientation) -> List[int]:
    order = _topological_order(o.out_masks())
    if order is None:
        raise CyclicOrientationError("A cyclic orientation has no topological order")
    return order


def dependent_arcs(o: Orientation) -> DependencyReport:
    """
    Compute R(D) and the cover arcs of an acyclic orientation.

    Raises:
        CyclicOrientationError: If o has a directed cycle
    """
    out = o.out_masks()
    through = _through_masks(out)
    dependent = []
    covers = []
    for tail, head in o.arcs():
        if through[tail] >> head & 1:
            dependent.append((tail, head))
        else:
            covers.append((tail, head))
    return DependencyReport(frozenset(dependent), frozenset(covers))


def dependent_count(o: Orientation) -> int:
    return count_dependent(o.out_masks())


def reverse_arcs(o: Orientation, arcs: Iterable[Arc]) -> Orientation:
    """
    Flip exactly the listed arcs. The result may be cyclic; callers re-check.

    Raises:
        ArcError: If an arc is absent or currently points the other way
    """
    bits = o.bits
    for tail, head in arcs:
        if not o.host.has_edge(tail, head):
            raise ArcError(f"Arc {tail}->{head} does not exist in the host graph")
        i = o.host.edge_index(tail, head)
        if o.arc(i) != (tail, head):
            raise ArcError(f"Arc {tail}->{head} is currently directed {head}->{tail}")
        bits ^= 1 << i
    return Orientation(o.host, bits)


def reversal_creates_cycle(o: Orientation, arc: Arc) -> bool:
    """The literal definition of dependence: reverse one arc and look for a cycle."""
    return not is_acyclic(reverse_arcs(o, [arc]))


def relabel(o: Orientation, permutation: Sequence[int]) -> Orientation:
    """Carry o along the vertex map v -> permutation[v] onto the relabelled host."""
    g = o.host
    edges = sorted(
        (min(permutation[u], permutation[v]), max(permutation[u], permutation[v]))
        for u, v in g.edges
    )
    image = SimpleGraph(g.n_vertices, tuple(edges), family=g.family, params=g.params)
    return from_arcs(image, [(permutation[t], permutation[h]) for t, h in o.arcs()])


def orientation_to_dot(o: Orientation, name: str = "D") -> str:
    """
    DOT digraph with dependent arcs drawn bold and tagged class=dependent.
    Arcs are listed in (tail, head) order.
    """
    report = dependent_arcs(o)
    lines = [f"digraph {name} {{"]
    lines.extend(f"  {v};" for v in range(o.host.n_vertices))
    for tail, head in sorted(o.arcs()):
        if (tail, head) in report.dependent:
            lines.append(f"  {tail} -> {head} [style=bold, class=dependent];")
        else:
            lines.append(f"  {tail} -> {head};")
    lines.append("}")
    return "\n".join(lines) + "\n"
