"""
Dependency spectra by exhaustive enumeration.

Two enumeration strategies walk the acyclic orientations of a graph:

- EdgeSubsets: depth-first over the 2^|E| direction vectors, edge by edge,
  pruning any partial assignment that already closes a directed cycle.
- LinearOrders: every permutation of the vertices induces an acyclic
  orientation; duplicates are removed by their direction-bit key.

The search space is split into deterministic contiguous chunks (fixed prefixes
of edge bits, or fixed permutation prefixes). Chunks can run in a
multiprocessing pool; their partial results merge into the same SpectrumResult
whatever the chunk count.
"""

import itertools
import logging
import math
import multiprocessing
import time
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple, Union

from app.config import settings
from core.errors import BudgetExceeded
from core.graph_core import Edge, SimpleGraph, component_count, enumerate_triangles
from core.orientation import Orientation, count_dependent

logger = logging.getLogger(__name__)


class Strategy(str, Enum):
    """Enumeration strategies for acyclic orientations"""
    EDGE_SUBSETS = "subsets"
    LINEAR_ORDERS = "orders"
    AUTO = "auto"


@dataclass(frozen=True)
class SpectrumResult:
    """
    The dependency spectrum of a graph.

    Attributes:
        achievable: Sorted d values realised by some acyclic orientation
        counts: d -> number of distinct acyclic orientations with that d
        d_min: Smallest achievable d
        d_max: Largest achievable d
        fully_orientable: True iff every value in [d_min, d_max] is achievable
        gaps: Sorted values of [d_min, d_max] that no orientation achieves
        strategy: The enumeration strategy actually used
        enumerated: Number of distinct acyclic orientations seen
    """
    achievable: Tuple[int, ...]
    counts: Dict[int, int]
    d_min: int
    d_max: int
    fully_orientable: bool
    gaps: Tuple[int, ...]
    strategy: Strategy
    enumerated: int


@dataclass(frozen=True)
class TriangleCover:
    """pi_T(G) and one optimal edge set whose deletion leaves G triangle-free."""
    pi_t: int
    deletion_set: FrozenSet[Edge]


def d_max_closed_form(g: SimpleGraph) -> int:
    """d_max(G) = |E| - |V| + c."""
    return g.n_edges - g.n_vertices + component_count(g)


def estimate_work(g: SimpleGraph) -> Tuple[int, int]:
    """Work estimates (2^|E|, |V|!) for the two strategies."""
    return 2 ** g.n_edges, math.factorial(g.n_vertices)


# Estimates wider than this many bits are compared by magnitude only.
_EXACT_BITS = 4096


def check_budget(
    n_vertices: int,
    n_edges: int,
    strategy: Strategy = Strategy.AUTO,
    budget: Optional[int] = None,
    label: Optional[str] = None,
) -> Strategy:
    """
    Resolve AUTO to the cheaper strategy and check the budget from the graph's
    size alone, so a caller can refuse a graph before generating it.

    Estimates above 2^4096 are never materialised: they count as over any budget.

    Raises:
        BudgetExceeded: If the selected strategy's estimate exceeds the budget
    """
    budget = settings.default_budget if budget is None else budget
    subsets_bits = float(n_edges)
    orders_bits = math.lgamma(n_vertices + 1) / math.log(2)
    subsets_work = 2 ** n_edges if subsets_bits <= _EXACT_BITS else None
    orders_work = math.factorial(n_vertices) if orders_bits <= _EXACT_BITS else None

    strategy = Strategy(strategy)
    if strategy is Strategy.AUTO:
        if subsets_work is not None and orders_work is not None:
            cheaper = subsets_work <= orders_work
        else:
            cheaper = subsets_bits <= orders_bits
        strategy = Strategy.EDGE_SUBSETS if cheaper else Strategy.LINEAR_ORDERS
    work = subsets_work if strategy is Strategy.EDGE_SUBSETS else orders_work
    if work is None or work > budget:
        label = label or f"a graph with {n_vertices} vertices and {n_edges} edges"
        raise BudgetExceeded(
            f"Enumerating {label} needs 2^{n_edges} (edge subsets) or {n_vertices}! (linear orders) "
            f"checks, budget is {budget}",
            budget=budget,
            subsets_work=subsets_work,
            orders_work=orders_work,
        )
    return strategy


def select_strategy(g: SimpleGraph, strategy: Strategy = Strategy.AUTO, budget: Optional[int] = None) -> Strategy:
    """
    Resolve AUTO to the cheaper strategy and check the budget.

    Raises:
        BudgetExceeded: If the selected strategy's estimate exceeds the budget
    """
    return check_budget(g.n_vertices, g.n_edges, strategy, budget, label=repr(g))


def _reaches(out: List[int], src: int, dst: int) -> bool:
    if src == dst:
        return True
    seen = frontier = 1 << src
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= out[low.bit_length() - 1]
            frontier ^= low
        if nxt >> dst & 1:
            return True
        frontier = nxt & ~seen
        seen |= nxt
    return False


def _walk_subsets(edges: Sequence[Edge], out: List[int], start: int, bits: int) -> Iterator[int]:
    # `out` mirrors the assignment of edges[:start]; it is complete at every yield
    if start == len(edges):
        yield bits
        return
    u, v = edges[start]
    if not _reaches(out, v, u):
        out[u] |= 1 << v
        yield from _walk_subsets(edges, out, start + 1, bits)
        out[u] &= ~(1 << v)
    if not _reaches(out, u, v):
        out[v] |= 1 << u
        yield from _walk_subsets(edges, out, start + 1, bits | 1 << start)
        out[v] &= ~(1 << u)


def _subset_prefix(g: SimpleGraph, width: int, prefix: int) -> Optional[List[int]]:
    """Out-masks after fixing the first `width` edge bits to `prefix`; None if cyclic."""
    out = [0] * g.n_vertices
    for i in range(width):
        u, v = g.edges[i]
        tail, head = (v, u) if prefix >> i & 1 else (u, v)
        if _reaches(out, head, tail):
            return None
        out[tail] |= 1 << head
    return out


def _order_bits(g: SimpleGraph, order: Sequence[int]) -> int:
    position = [0] * g.n_vertices
    for rank, v in enumerate(order):
        position[v] = rank
    bits = 0
    for i, (u, v) in enumerate(g.edges):
        if position[v] < position[u]:
            bits |= 1 << i
    return bits


def _orders_with_prefix(n: int, prefix: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
    rest = [v for v in range(n) if v not in prefix]
    for tail in itertools.permutations(rest):
        yield prefix + tail


def _plan_chunks(g: SimpleGraph, strategy: Strategy, chunks: int) -> List[Tuple]:
    """Deterministic contiguous chunks covering the whole search space."""
    if strategy is Strategy.EDGE_SUBSETS:
        width = 0
        while (1 << width) < chunks and width < g.n_edges:
            width += 1
        return [(width, prefix) for prefix in range(1 << width)]
    n = g.n_vertices
    depth = 0
    while depth < n and math.perm(n, depth) < chunks:
        depth += 1
    return [tuple(p) for p in itertools.permutations(range(n), depth)]


def _scan_chunk(task: Tuple[SimpleGraph, Strategy, Tuple]) -> Union[Counter, Dict[int, int]]:
    """
    Scan one chunk. EdgeSubsets chunks are disjoint and return a Counter d -> count;
    LinearOrders chunks overlap in orientations and return a map key -> d.
    """
    g, strategy, chunk = task
    if strategy is Strategy.EDGE_SUBSETS:
        width, prefix = chunk
        counts: Counter = Counter()
        out = _subset_prefix(g, width, prefix)
        if out is None:
            return counts
        for _ in _walk_subsets(g.edges, out, width, prefix):
            counts[count_dependent(out)] += 1
        return counts
    seen: Dict[int, int] = {}
    for order in _orders_with_prefix(g.n_vertices, chunk):
        key = _order_bits(g, order)
        if key not in seen:
            seen[key] = count_dependent(_out_from_order(g, order))
    return seen


def _out_from_order(g: SimpleGraph, order: Sequence[int]) -> List[int]:
    position = [0] * g.n_vertices
    for rank, v in enumerate(order):
        position[v] = rank
    out = [0] * g.n_vertices
    for u, v in g.edges:
        if position[u] < position[v]:
            out[u] |= 1 << v
        else:
            out[v] |= 1 << u
    return out


def enumerate_acyclic_orientations(
    g: SimpleGraph,
    strategy: Strategy = Strategy.AUTO,
    budget: Optional[int] = None,
) -> Iterator[Orientation]:
    """
    Yield every acyclic orientation of g exactly once, in a fixed order per strategy.

    Raises:
        BudgetExceeded: If the strategy's work estimate exceeds the budget
    """
    strategy = select_strategy(g, strategy, budget)
    if strategy is Strategy.EDGE_SUBSETS:
        for bits in _walk_subsets(g.edges, [0] * g.n_vertices, 0, 0):
            yield Orientation(g, bits)
        return
    seen = set()
    for order in itertools.permutations(range(g.n_vertices)):
        key = _order_bits(g, order)
        if key not in seen:
            seen.add(key)
            yield Orientation(g, key)


def _summarise(counts: Counter, strategy: Strategy) -> SpectrumResult:
    achievable = tuple(sorted(counts))
    d_min, d_max = achievable[0], achievable[-1]
    gaps = tuple(d for d in range(d_min, d_max + 1) if d not in counts)
    return SpectrumResult(
        achievable=achievable,
        counts={d: counts[d] for d in achievable},
        d_min=d_min,
        d_max=d_max,
        fully_orientable=not gaps,
        gaps=gaps,
        strategy=strategy,
        enumerated=sum(counts.values()),
    )


def dependency_spectrum(
    g: SimpleGraph,
    budget: Optional[int] = None,
    strategy: Strategy = Strategy.AUTO,
    workers: Optional[int] = None,
    chunks: Optional[int] = None,
) -> SpectrumResult:
    """
    Aggregate d(D) over every acyclic orientation of g.

    Args:
        g: The graph
        budget: Work budget (default: settings.default_budget)
        strategy: Enumeration strategy, AUTO picks the cheaper one
        workers: Worker processes (default: settings.workers)
        chunks: Number of chunks to split the search into (default: one per worker)

    Returns:
        The SpectrumResult

    Raises:
        BudgetExceeded: If the enumeration would exceed the budget
    """
    strategy = select_strategy(g, strategy, budget)
    workers = max(1, settings.workers if workers is None else workers)
    chunks = max(1, chunks or settings.chunks or workers)
    tasks = [(g, strategy, chunk) for chunk in _plan_chunks(g, strategy, chunks)]

    logger.info(f"Enumerating {g!r} with {strategy.value} in {len(tasks)} chunk(s), {workers} worker(s)")
    started = time.perf_counter()
    if workers > 1 and len(tasks) > 1:
        with multiprocessing.Pool(processes=min(workers, len(tasks))) as pool:
            partials = pool.map(_scan_chunk, tasks)
    else:
        partials = list(map(_scan_chunk, tasks))

    counts: Counter = Counter()
    if strategy is Strategy.EDGE_SUBSETS:
        for partial in partials:
            counts.update(partial)
    else:
        merged: Dict[int, int] = {}
        for partial in partials:
            merged.update(partial)
        counts.update(merged.values())

    result = _summarise(counts, strategy)
    logger.info(
        f"Spectrum of {g!r}: {list(result.achievable)} over {result.enumerated} orientations "
        f"in {time.perf_counter() - started:.3f}s"
    )
    return result


def full_orientability(
    g: SimpleGraph,
    budget: Optional[int] = None,
    strategy: Strategy = Strategy.AUTO,
    workers: Optional[int] = None,
) -> Tuple[bool, SpectrumResult]:
    result = dependency_spectrum(g, budget=budget, strategy=strategy, workers=workers)
    return result.fully_orientable, result


def _disjoint_packing(uncovered: Sequence[Tuple[int, int, int]]) -> int:
    """Greedy edge-disjoint triangle packing, a lower bound on any hitting set."""
    used = set()
    packed = 0
    for tri in uncovered:
        if used.isdisjoint(tri):
            used.update(tri)
            packed += 1
    return packed


def _greedy_hitting_set(triangles: Sequence[Tuple[int, int, int]]) -> List[int]:
    remaining = list(triangles)
    chosen = []
    while remaining:
        load = Counter(e for tri in remaining for e in tri)
        best = min(load, key=lambda e: (-load[e], e))
        chosen.append(best)
        remaining = [tri for tri in remaining if best not in tri]
    return chosen


def min_triangle_edge_deletion(g: SimpleGraph, triangle_budget: Optional[int] = None) -> TriangleCover:
    """
    Exact pi_T(G) by branch-and-bound over the edges of an uncovered triangle,
    bounded below by an edge-disjoint triangle packing.

    Raises:
        BudgetExceeded: If g has more triangles than the triangle budget
    """
    limit = settings.triangle_budget if triangle_budget is None else triangle_budget
    triangles = [t.edges for t in enumerate_triangles(g)]
    if len(triangles) > limit:
        raise BudgetExceeded(
            f"{g!r} has {len(triangles)} triangles, exact search is limited to {limit}",
            budget=limit,
            triangles=len(triangles),
        )

    best = _greedy_hitting_set(triangles)

    def search(chosen: List[int], uncovered: List[Tuple[int, int, int]]) -> None:
        nonlocal best
        if not uncovered:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        if len(chosen) + _disjoint_packing(uncovered) >= len(best):
            return
        for e in uncovered[0]:
            chosen.append(e)
            search(chosen, [tri for tri in uncovered if e not in tri])
            chosen.pop()

    search([], triangles)
    logger.debug(f"pi_T of {g!r} is {len(best)} over {len(triangles)} triangles")
    return TriangleCover(pi_t=len(best), deletion_set=frozenset(g.edges[e] for e in best))
