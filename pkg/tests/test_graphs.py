"""Graph parsing and structural predicates."""

from itertools import product
from random import Random

import pytest

from iasi import (
    Graph,
    GraphFormatError,
    bipartition_of,
    complete_bipartite_graph,
    complete_graph,
    connected_components,
    cycle_graph,
    disjoint_union,
    is_clique,
    parse_edge_list,
    path_graph,
)
from helpers import graphs_without_isolated


class TestParseEdgeList:
    def test_path(self):
        g = parse_edge_list("0 1\n1 2")
        assert g.vertex_count == 3
        assert g.edges == ((0, 1), (1, 2))

    def test_triangle(self):
        g = parse_edge_list("0 1\n1 2\n2 0")
        assert g == complete_graph(3)

    def test_comments_and_blanks(self):
        g = parse_edge_list("# a path\n\n0 1\n\n# tail\n1 2\n")
        assert g == path_graph(3)

    def test_self_loop_rejected(self):
        with pytest.raises(GraphFormatError, match="self-loop"):
            parse_edge_list("0 0")

    def test_duplicate_edge_rejected(self):
        with pytest.raises(GraphFormatError, match="duplicate"):
            parse_edge_list("0 1\n1 0")

    def test_gap_in_ids_reported_as_isolated(self):
        with pytest.raises(GraphFormatError, match=r"isolated vertices: \[1\]"):
            parse_edge_list("0 2")

    def test_malformed_line(self):
        with pytest.raises(GraphFormatError, match="line 2"):
            parse_edge_list("0 1\n0 1 2")

    def test_non_integer(self):
        with pytest.raises(GraphFormatError):
            parse_edge_list("0 x")

    def test_empty_input(self):
        with pytest.raises(GraphFormatError):
            parse_edge_list("# nothing\n")


class TestBipartition:
    def test_even_cycle(self):
        bp = bipartition_of(cycle_graph(4))
        assert bp.side_x == {0, 2}
        assert bp.side_y == {1, 3}

    def test_triangle_has_none(self):
        assert bipartition_of(complete_graph(3)) is None

    def test_k33(self):
        bp = bipartition_of(complete_bipartite_graph(3, 3))
        assert sorted(map(len, (bp.side_x, bp.side_y))) == [3, 3]

    def test_lowest_id_goes_to_side_x(self):
        g = disjoint_union(path_graph(2), path_graph(3))
        bp = bipartition_of(g)
        assert 0 in bp.side_x
        assert 2 in bp.side_x  # lowest id of the second component

    def test_none_exactly_when_odd_cycle_exists(self):
        # oracle: exhaustive 2-coloring over all assignments
        for n in range(2, 6):
            for edges in graphs_without_isolated(n):
                g = Graph(n, edges)
                two_colorable = any(
                    all(colors[u] != colors[v] for u, v in edges)
                    for colors in product((0, 1), repeat=n)
                )
                assert (bipartition_of(g) is not None) == two_colorable

    def test_random_eight_vertex_graphs_against_coloring_oracle(self):
        rng = Random(0x1F)
        all_edges = [(i, j) for i in range(8) for j in range(i + 1, 8)]
        checked = 0
        while checked < 120:
            edges = [e for e in all_edges if rng.random() < 0.25]
            if {v for e in edges for v in e} != set(range(8)):
                continue
            g = Graph(8, edges)
            two_colorable = any(
                all(colors[u] != colors[v] for u, v in edges)
                for colors in product((0, 1), repeat=8)
            )
            assert (bipartition_of(g) is not None) == two_colorable
            checked += 1


class TestConnectedComponents:
    def test_path_single_component(self):
        assert connected_components(path_graph(3)) == [frozenset({0, 1, 2})]

    def test_two_disjoint_edges(self):
        g = Graph(4, [(0, 1), (2, 3)])
        assert connected_components(g) == [frozenset({0, 1}), frozenset({2, 3})]

    def test_triangle_plus_edge(self):
        g = disjoint_union(complete_graph(3), path_graph(2))
        assert len(connected_components(g)) == 2

    def test_is_a_partition_with_no_crossing_edges(self):
        rng = Random(0x2E)
        for _ in range(30):
            n = rng.randint(2, 10)
            edges = {
                (i, j)
                for i in range(n)
                for j in range(i + 1, n)
                if rng.random() < 0.3
            }
            covered = {v for e in edges for v in e}
            for v in range(n):
                if v not in covered:
                    u = (v + 1) % n
                    edges.add((min(u, v), max(u, v)))
            g = Graph(n, edges)
            comps = connected_components(g)
            union = set()
            for c in comps:
                assert not (union & c)
                union |= c
            assert union == set(range(n))
            which = {v: i for i, c in enumerate(comps) for v in c}
            assert all(which[u] == which[v] for u, v in g.edges)


class TestIsClique:
    def test_triangle(self):
        assert is_clique(complete_graph(3), [0, 1, 2])

    def test_path_is_not(self):
        assert not is_clique(path_graph(3), [0, 1, 2])

    def test_singleton_vacuous(self):
        assert is_clique(path_graph(3), [1])

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            is_clique(path_graph(3), [0, 5])


def test_graph_invariants_enforced():
    with pytest.raises(GraphFormatError):
        Graph(3, [(0, 0), (1, 2)])
    with pytest.raises(GraphFormatError):
        Graph(2, [(0, 3)])
    with pytest.raises(GraphFormatError):
        Graph(3, [(0, 1)])  # vertex 2 isolated
