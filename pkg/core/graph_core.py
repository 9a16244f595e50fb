"""
Graph Core - Undirected Simple Graphs for OrientLab

Builds and interrogates the graphs whose orientations we study: cycles, cycle
powers, complete and complete multipartite graphs. Vertices are the integers
0..n-1 (vertex i is the cycle vertex v_i), every edge is stored as (u, v) with
u < v, and edges carry a stable index in generator order. Orientations refer
to edges by that index.

Text format (read and write):
    first line "n m", then m lines "u v" with 0 <= u < v < n;
    anything after '#' on a line is a comment.
"""

import itertools
import logging
import math
import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx

from app.config import settings
from core.errors import BudgetExceeded, GraphError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True, eq=False)
class SimpleGraph:
    """
    An immutable undirected simple graph on vertices 0..n_vertices-1.

    Equality and hashing depend only on the vertex count and the edge set;
    edge order and the family label are presentation details.

    Attributes:
        n_vertices: Number of vertices
        edges: Edges as (u, v) pairs with u < v, indexed by position
        family: Name of the generator that produced the graph
        params: Generator parameters as (name, value) pairs
    """
    n_vertices: int
    edges: Tuple[Edge, ...]
    family: str = field(default="custom")
    params: Tuple[Tuple[str, int], ...] = field(default=())

    def __post_init__(self):
        if self.n_vertices < 0:
            raise GraphError(f"Vertex count must be non-negative, got {self.n_vertices}")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"Loop at vertex {u} is not allowed in a simple graph")
            if not (0 <= u < v < self.n_vertices):
                raise GraphError(
                    f"Edge ({u}, {v}) must satisfy 0 <= u < v < {self.n_vertices}"
                )
            if (u, v) in seen:
                raise GraphError(f"Duplicate edge ({u}, {v})")
            seen.add((u, v))

    def __eq__(self, other):
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.n_vertices == other.n_vertices and self.edge_set == other.edge_set

    def __hash__(self):
        return hash((self.n_vertices, self.edge_set))

    def __repr__(self):
        return f"SimpleGraph(family={self.family!r}, n={self.n_vertices}, m={self.n_edges})"

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_set(self) -> FrozenSet[Edge]:
        return frozenset(self.edges)

    @cached_property
    def index(self) -> Dict[Edge, int]:
        """Edge (u, v) with u < v -> edge index."""
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def adjacency(self) -> Tuple[int, ...]:
        """Neighbourhood of every vertex as a bitmask."""
        adj = [0] * self.n_vertices
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.index

    def edge_index(self, u: int, v: int) -> int:
        """Index of the edge joining u and v (in either order)."""
        try:
            return self.index[(min(u, v), max(u, v))]
        except KeyError:
            raise GraphError(f"No edge between {u} and {v}") from None

    def neighbors(self, v: int) -> List[int]:
        mask = self.adjacency[v]
        return [w for w in range(self.n_vertices) if mask >> w & 1]

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def describe(self) -> Dict[str, int]:
        return dict(self.params)


@dataclass(frozen=True)
class Triangle:
    """A 3-clique: sorted vertex labels and the indices of its three edges."""
    vertices: Tuple[int, int, int]
    edges: Tuple[int, int, int]


def _labelled(n_vertices: int, edges: Iterable[Edge], family: str, **params: int) -> SimpleGraph:
    return SimpleGraph(n_vertices, tuple(edges), family=family, params=tuple(params.items()))


def cycle_graph(n: int) -> SimpleGraph:
    """
    The cycle C_n = v_0 v_1 ... v_{n-1} v_0.

    Args:
        n: Number of vertices, at least 3

    Returns:
        A graph whose edge i joins i and (i + 1) mod n
    """
    if n < 3:
        raise GraphError(f"A cycle needs at least 3 vertices, got {n}")
    edges = [(min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)]
    return _labelled(n, edges, "cycle", n=n)


def complete_graph(n: int) -> SimpleGraph:
    if n < 1:
        raise GraphError(f"A complete graph needs at least 1 vertex, got {n}")
    return _labelled(n, itertools.combinations(range(n), 2), "complete", n=n)


def complete_multipartite(r: int, n: int) -> SimpleGraph:
    """
    K_{r(n)}: r partite blocks of n vertices each, vertices u and v adjacent
    iff they lie in different blocks (block of v is v // n).
    """
    if r < 2:
        raise GraphError(f"A complete multipartite graph needs r >= 2 parts, got {r}")
    if n < 1:
        raise GraphError(f"Partite sets need at least 1 vertex, got {n}")
    total = r * n
    edges = [(u, v) for u, v in itertools.combinations(range(total), 2) if u // n != v // n]
    return _labelled(total, edges, "multipartite", r=r, n=n)


def bfs_distances(g: SimpleGraph, source: int) -> List[Optional[int]]:
    """Shortest-path distances from source; None for unreachable vertices."""
    dist: List[Optional[int]] = [None] * g.n_vertices
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if dist[w] is None:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def component_count(g: SimpleGraph) -> int:
    """Number of connected components (isolated vertices count as components)."""
    seen = 0
    components = 0
    for v in range(g.n_vertices):
        if seen >> v & 1:
            continue
        components += 1
        frontier = 1 << v
        seen |= frontier
        while frontier:
            nxt = 0
            while frontier:
                low = frontier & -frontier
                nxt |= g.adjacency[low.bit_length() - 1]
                frontier ^= low
            frontier = nxt & ~seen
            seen |= frontier
    return components


def is_connected(g: SimpleGraph) -> bool:
    return component_count(g) <= 1


def graph_power(g: SimpleGraph, m: int) -> SimpleGraph:
    """
    The m-th power of a connected graph: u ~ v iff 1 <= dist_g(u, v) <= m.

    Args:
        g: A connected graph
        m: Power, at least 1

    Returns:
        A graph on the same vertices with edges in lexicographic order
    """
    if m < 1:
        raise GraphError(f"Graph power must be at least 1, got {m}")
    if not is_connected(g):
        raise GraphError("Graph powers are defined for connected graphs only")
    edges = []
    for u in range(g.n_vertices):
        dist = bfs_distances(g, u)
        edges.extend((u, v) for v in range(u + 1, g.n_vertices) if dist[v] <= m)
    params = dict(g.params)
    params["power"] = m
    return SimpleGraph(g.n_vertices, tuple(edges), family=f"{g.family}-power", params=tuple(params.items()))


def cycle_power(n: int, k: int) -> SimpleGraph:
    """C_n^k labelled as the cycle-power family."""
    power = graph_power(cycle_graph(n), k)
    return _labelled(n, power.edges, "cycle-power", n=n, k=k)


def remove_edges(g: SimpleGraph, edges: Iterable[Edge]) -> SimpleGraph:
    doomed = set()
    for u, v in edges:
        doomed.add(g.edges[g.edge_index(u, v)])
    kept = tuple(e for e in g.edges if e not in doomed)
    return SimpleGraph(g.n_vertices, kept, family=g.family, params=g.params)


def enumerate_triangles(g: SimpleGraph) -> List[Triangle]:
    """Every 3-clique exactly once, in lexicographic order of its vertices."""
    triangles = []
    adj = g.adjacency
    for u, v in sorted(g.edges):
        common = adj[u] & adj[v] & ~((1 << (v + 1)) - 1)
        while common:
            low = common & -common
            w = low.bit_length() - 1
            common ^= low
            triangles.append(Triangle(
                vertices=(u, v, w),
                edges=(g.edge_index(u, v), g.edge_index(u, w), g.edge_index(v, w)),
            ))
    return triangles


def canonical_form(g: SimpleGraph, limit: Optional[int] = None) -> Tuple[int, Tuple[Edge, ...]]:
    """
    Canonical form by exhaustive relabelling: the lexicographically smallest
    sorted edge tuple over all vertex permutations.
    """
    limit = settings.canonical_form_limit if limit is None else limit
    n = g.n_vertices
    if n > limit:
        raise BudgetExceeded(
            f"Canonical form refuses {n} vertices (limit {limit})",
            budget=math.factorial(limit),
        )
    best = None
    for perm in itertools.permutations(range(n)):
        relabelled = tuple(sorted(
            (min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in g.edges
        ))
        if best is None or relabelled < best:
            best = relabelled
    return n, best or ()


def are_isomorphic(g: SimpleGraph, h: SimpleGraph, limit: Optional[int] = None) -> bool:
    if g.n_vertices != h.n_vertices or g.n_edges != h.n_edges:
        return False
    if sorted(map(g.degree, range(g.n_vertices))) != sorted(map(h.degree, range(h.n_vertices))):
        return False
    return canonical_form(g, limit) == canonical_form(h, limit)


def random_graph(n: int, m: int, seed: int = 0) -> SimpleGraph:
    """A pseudo-random simple graph with n vertices and m edges (reproducible per seed)."""
    pairs = list(itertools.combinations(range(n), 2))
    if m > len(pairs):
        raise GraphError(f"Cannot place {m} edges on {n} vertices")
    chosen = random.Random(seed).sample(pairs, m)
    return _labelled(n, sorted(chosen), "random", n=n, m=m, seed=seed)


def format_graph(g: SimpleGraph) -> str:
    lines = [f"# {g.family} {' '.join(f'{k}={v}' for k, v in g.params)}".rstrip()]
    lines.append(f"{g.n_vertices} {g.n_edges}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> SimpleGraph:
    """
    Parse the graph text format.

    Raises:
        GraphError: On a malformed header, a wrong edge count, or an invalid edge
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise GraphError("Empty graph text: expected a header line 'n m'")

    def ints(lineno: int, tokens: Sequence[str]) -> Tuple[int, int]:
        if len(tokens) != 2:
            raise GraphError(f"Line {lineno}: expected two integers, got {' '.join(tokens)!r}")
        try:
            return int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphError(f"Line {lineno}: expected two integers, got {' '.join(tokens)!r}") from None

    n, m = ints(*rows[0])
    body = [ints(lineno, tokens) for lineno, tokens in rows[1:]]
    if len(body) != m:
        raise GraphError(f"Header announces {m} edges but {len(body)} edge lines follow")
    return SimpleGraph(n, tuple(body), family="file")


def read_graph(path: Union[str, Path]) -> SimpleGraph:
    """
    Raises:
        GraphError: If the file cannot be read, is not UTF-8 text, or is malformed
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise GraphError(f"Cannot read graph file {str(path)!r}: {e.strerror or e}") from e
    except UnicodeDecodeError as e:
        raise GraphError(f"Graph file {str(path)!r} is not UTF-8 text: {e.reason}") from e
    return parse_graph(text)


def write_graph(g: SimpleGraph, path: Union[str, Path]) -> None:
    Path(path).write_text(format_graph(g), encoding="utf-8")


def graph_to_dot(g: SimpleGraph) -> str:
    lines = ["graph G {"]
    lines.extend(f"  {v};" for v in range(g.n_vertices))
    lines.extend(f"  {u} -- {v};" for u, v in sorted(g.edges))
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_networkx(g: SimpleGraph) -> nx.Graph:
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n_vertices))
    nxg.add_edges_from(g.edges)
    return nxg
