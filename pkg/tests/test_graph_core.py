"""
Graph Core Tests

Validates the graph generators, powers, triangle listing, isomorphism and
the graph text format.
"""

import itertools
import pytest
import sys
import os

# Add parent directory to path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import networkx as nx

from core.errors import BudgetExceeded, GraphError
from core.graph_core import (
    SimpleGraph,
    are_isomorphic,
    bfs_distances,
    canonical_form,
    complete_graph,
    complete_multipartite,
    component_count,
    cycle_graph,
    cycle_power,
    enumerate_triangles,
    format_graph,
    graph_power,
    graph_to_dot,
    is_connected,
    parse_graph,
    random_graph,
    read_graph,
    remove_edges,
    to_networkx,
    write_graph,
)


def test_cycle_graph_edges_follow_the_cycle():
    """
    Validates:
    - Edge i joins i and i+1 (mod n), stored low endpoint first
    - Small cycles are rejected
    """
    g = cycle_graph(5)
    assert g.n_vertices == 5
    assert g.edges == ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4))
    assert g.family == "cycle"
    assert g.describe() == {"n": 5}

    with pytest.raises(GraphError):
        cycle_graph(2)

    print("✓ Cycle generator produces C_n in cycle order")


def test_complete_and_multipartite_sizes():
    assert complete_graph(1).n_edges == 0
    assert complete_graph(6).n_edges == 15

    k32 = complete_multipartite(3, 2)
    assert k32.n_vertices == 6
    assert k32.n_edges == 12
    assert not k32.has_edge(0, 1)
    assert not k32.has_edge(4, 5)
    assert k32.has_edge(1, 2)

    with pytest.raises(GraphError):
        complete_multipartite(1, 3)
    with pytest.raises(GraphError):
        complete_multipartite(3, 0)

    print("✓ Complete and multipartite generators have the expected sizes")


def test_simple_graph_rejects_invalid_edges():
    with pytest.raises(GraphError):
        SimpleGraph(3, ((1, 1),))
    with pytest.raises(GraphError):
        SimpleGraph(3, ((0, 3),))
    with pytest.raises(GraphError):
        SimpleGraph(3, ((1, 0),))
    with pytest.raises(GraphError):
        SimpleGraph(3, ((0, 1), (0, 1)))
    with pytest.raises(GraphError):
        SimpleGraph(-1, ())

    print("✓ Loops, out-of-range and duplicate edges are rejected")


def test_edge_lookup():
    g = cycle_graph(5)
    assert g.edge_index(4, 0) == 4
    assert g.edge_index(0, 4) == 4
    assert g.has_edge(2, 1)
    assert not g.has_edge(0, 2)
    assert g.neighbors(0) == [1, 4]
    assert g.degree(3) == 2

    with pytest.raises(GraphError):
        g.edge_index(0, 2)

    print("✓ Edge indices resolve in either direction")


def test_equality_ignores_edge_order_and_label():
    a = SimpleGraph(3, ((0, 1), (1, 2)), family="a")
    b = SimpleGraph(3, ((1, 2), (0, 1)), family="b")
    assert a == b
    assert hash(a) == hash(b)
    assert a != SimpleGraph(4, ((0, 1), (1, 2)))

    print("✓ Equality is by vertex count and edge set")


def test_bfs_and_components():
    assert bfs_distances(cycle_graph(6), 0) == [0, 1, 2, 3, 2, 1]

    split = SimpleGraph(5, ((0, 1), (2, 3)))
    assert bfs_distances(split, 0) == [0, 1, None, None, None]
    assert component_count(split) == 3
    assert not is_connected(split)
    assert is_connected(cycle_graph(4))

    print("✓ BFS distances and component counts are correct")


@pytest.mark.parametrize("n,k", [(5, 1), (6, 2), (7, 2), (9, 2), (8, 3), (10, 4), (12, 2)])
def test_cycle_power_matches_networkx(n, k):
    """The cycle power agrees with networkx's graph power."""
    g = cycle_power(n, k)
    expected = nx.power(nx.cycle_graph(n), k)
    assert g.edge_set == {(min(u, v), max(u, v)) for u, v in expected.edges()}
    assert list(g.edges) == sorted(g.edges)
    assert g.family == "cycle-power"
    assert g.describe() == {"n": n, "k": k}

    print(f"✓ C_{n}^{k} matches networkx")


def test_cycle_square_sizes():
    for n in range(5, 15):
        assert cycle_power(n, 2).n_edges == 2 * n
    assert not cycle_power(6, 2).has_edge(0, 3)

    print("✓ C_n^2 has 2n edges for n >= 5")


def test_graph_power_edge_cases():
    g = cycle_graph(7)
    assert graph_power(g, 1) == g
    assert graph_power(g, 3) == complete_graph(7)
    assert graph_power(g, 2).family == "cycle-power"

    with pytest.raises(GraphError):
        graph_power(g, 0)
    with pytest.raises(GraphError):
        graph_power(SimpleGraph(4, ((0, 1), (2, 3))), 2)

    print("✓ Graph power handles m = 1, saturation and invalid input")


def test_triangles_of_cycle_square():
    """
    Validates:
    - C_7^2 has only the 7 consecutive triangles, listed lexicographically
    - C_6^2 (the octahedron) has 8
    - Triangle edge indices point at the right edges
    """
    g = cycle_power(7, 2)
    triangles = enumerate_triangles(g)
    assert [t.vertices for t in triangles] == [
        (0, 1, 2), (0, 1, 6), (0, 5, 6), (1, 2, 3), (2, 3, 4), (3, 4, 5), (4, 5, 6),
    ]
    for t in triangles:
        a, b, c = t.vertices
        assert {g.edges[i] for i in t.edges} == {(a, b), (a, c), (b, c)}

    assert len(enumerate_triangles(cycle_power(6, 2))) == 8
    assert len(enumerate_triangles(complete_graph(5))) == 10
    assert enumerate_triangles(cycle_graph(5)) == []

    print("✓ Triangles are listed once each in lexicographic order")


def test_remove_edges():
    g = complete_graph(4)
    h = remove_edges(g, [(1, 0), (2, 3)])
    assert h.n_edges == 4
    assert not h.has_edge(0, 1)
    assert enumerate_triangles(h) == []

    with pytest.raises(GraphError):
        remove_edges(cycle_graph(5), [(0, 2)])

    print("✓ Edge removal keeps the remaining edges")


def test_isomorphism_of_c8_cube_and_cocktail_party():
    """C_8^3 is the complete 4-partite graph with parts of size 2."""
    assert are_isomorphic(cycle_power(8, 3), complete_multipartite(4, 2))
    assert nx.is_isomorphic(to_networkx(cycle_power(8, 3)), to_networkx(complete_multipartite(4, 2)))
    assert are_isomorphic(cycle_power(6, 2), complete_multipartite(3, 2))
    assert not are_isomorphic(cycle_power(8, 2), complete_multipartite(4, 2))

    # relabelling does not change the canonical form
    rotated = SimpleGraph(5, tuple(sorted(
        (min((u + 2) % 5, (v + 2) % 5), max((u + 2) % 5, (v + 2) % 5)) for u, v in ((0, 1), (1, 2), (1, 3))
    )))
    assert canonical_form(rotated) == canonical_form(SimpleGraph(5, ((0, 1), (1, 2), (1, 3))))

    print("✓ Canonical forms identify isomorphic graphs")


def test_canonical_form_limit():
    with pytest.raises(BudgetExceeded):
        canonical_form(cycle_graph(6), limit=5)

    print("✓ Canonical form refuses graphs above its limit")


def test_random_graph_is_reproducible():
    a = random_graph(7, 10, seed=3)
    b = random_graph(7, 10, seed=3)
    assert a == b
    assert a.n_edges == 10

    with pytest.raises(GraphError):
        random_graph(4, 7)

    print("✓ Random graphs are reproducible per seed")


def test_text_format_round_trip(tmp_path):
    """
    Validates:
    - parse(format(g)) == g
    - Comments and blank lines are ignored
    - Files round-trip through write_graph/read_graph
    """
    g = cycle_power(9, 2)
    text = format_graph(g)
    assert text.startswith("# cycle-power n=9 k=2\n9 18\n")
    assert parse_graph(text) == g

    parsed = parse_graph("# a path\n3 2\n\n0 1  # first\n1 2\n")
    assert parsed == SimpleGraph(3, ((0, 1), (1, 2)))
    assert parsed.family == "file"

    path = tmp_path / "c9sq.txt"
    write_graph(g, path)
    assert read_graph(path) == g

    print("✓ Graph text format round-trips")


@pytest.mark.parametrize("text", ["", "3\n", "3 2\n0 1\n", "3 1\n0 x\n", "3 1\n0 1 2\n", "2 1\n0 5\n"])
def test_parse_graph_rejects_malformed_input(text):
    with pytest.raises(GraphError):
        parse_graph(text)


def test_graph_to_dot():
    dot = graph_to_dot(cycle_graph(4))
    assert dot.startswith("graph G {")
    assert "  0 -- 3;" in dot
    assert "  2 -- 3;" in dot
    assert dot.rstrip().endswith("}")

    print("✓ DOT export lists every edge")


def _small_graphs():
    graphs = [cycle_graph(n) for n in range(3, 11)]
    graphs += [complete_graph(n) for n in range(1, 9)]
    graphs += [cycle_power(n, k) for n in range(5, 11) for k in (2, 3)]
    graphs += [complete_multipartite(2, 3), complete_multipartite(3, 2), complete_multipartite(3, 3)]
    for seed in range(40):
        n = 3 + seed % 8
        graphs.append(random_graph(n, min(1 + seed % 20, n * (n - 1) // 2), seed=seed))
    return graphs


SMALL_GRAPHS = _small_graphs()


def test_every_generator_records_its_parameters():
    assert complete_graph(4).describe() == {"n": 4}
    assert complete_multipartite(3, 2).describe() == {"r": 3, "n": 2}
    assert cycle_power(7, 2).describe() == {"n": 7, "k": 2}
    assert random_graph(5, 4, seed=1).describe() == {"n": 5, "m": 4, "seed": 1}
    assert cycle_power(7, 2).n_vertices == 7

    print("✓ Generators label their graphs with family parameters")


@pytest.mark.parametrize("g", SMALL_GRAPHS, ids=repr)
def test_triangles_match_a_scan_of_all_vertex_triples(g):
    expected = [
        (a, b, c) for a, b, c in itertools.combinations(range(g.n_vertices), 3)
        if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)
    ]
    assert [t.vertices for t in enumerate_triangles(g)] == expected


@pytest.mark.parametrize("g", [g for g in SMALL_GRAPHS if is_connected(g)], ids=repr)
def test_graph_powers_only_gain_edges(g):
    previous = g
    assert graph_power(g, 1) == g
    for m in range(2, g.n_vertices + 1):
        current = graph_power(g, m)
        assert previous.edge_set <= current.edge_set
        previous = current
    assert previous == complete_graph(g.n_vertices)


def test_read_graph_reports_unreadable_files(tmp_path):
    with pytest.raises(GraphError):
        read_graph(tmp_path / "missing.txt")

    binary = tmp_path / "binary.txt"
    binary.write_bytes(b"\xff\xfe\x00")
    with pytest.raises(GraphError) as excinfo:
        read_graph(binary)
    assert "UTF-8" in str(excinfo.value)

    with pytest.raises(GraphError):
        read_graph(tmp_path)

    print("✓ Unreadable graph files raise GraphError")
