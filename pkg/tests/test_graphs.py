import random

from hypothesis import given, settings
from hypothesis import strategies as st

from flatland import (
    SimpleGraph,
    common_neighbor_graph,
    graph_shape,
    graphs_isomorphic,
    skeleton_graph,
)
from tests.conftest import fam


def shape_of(name: str, c: int) -> str:
    return str(graph_shape(common_neighbor_graph(skeleton_graph(fam(name)), c)))


class TestCommonNeighborGraph:
    def test_complete_graph_counts(self):
        k3 = SimpleGraph.complete(3)
        assert common_neighbor_graph(k3, 1).edges == k3.edges
        assert not common_neighbor_graph(k3, 0).edges

    def test_g4_of_t1214_is_3k4_with_mod3_classes(self):
        # Edges {i, j} with i = j (mod 3) under 1-based labels.
        g = common_neighbor_graph(skeleton_graph(fam("T(12,1,4)")), 4)
        expected = {
            (a, b)
            for a in range(12)
            for b in range(a + 1, 12)
            if (a - b) % 3 == 0
        }
        assert set(g.edges) == expected

    def test_g4_of_t1413_is_7k2(self):
        assert shape_of("T(14,1,3)", 4) == "7K_2"

    def test_edge_count_partition(self):
        g = skeleton_graph(fam("T(9,1,2)"))
        total = sum(
            len(common_neighbor_graph(g, c).edges) for c in range(g.n)
        )
        assert total == g.n * (g.n - 1) // 2

    @given(st.integers(0, 2**32), st.integers(0, 6))
    @settings(max_examples=25, deadline=None)
    def test_commutes_with_relabeling(self, seed, c):
        g = skeleton_graph(fam("B(3,3)"))
        perm = list(range(g.n))
        random.Random(seed).shuffle(perm)
        relabeled = SimpleGraph(
            g.n,
            frozenset(
                (min(perm[a], perm[b]), max(perm[a], perm[b])) for a, b in g.edges
            ),
        )
        lhs = common_neighbor_graph(relabeled, c)
        rhs = common_neighbor_graph(g, c)
        mapped = frozenset(
            (min(perm[a], perm[b]), max(perm[a], perm[b])) for a, b in rhs.edges
        )
        assert lhs.edges == mapped


class TestGraphShape:
    def test_cycles_for_small_twist_two(self):
        for n in range(11, 16):
            assert shape_of(f"T({n},1,2)", 4) == f"C_{n}"

    def test_null_shapes(self):
        assert shape_of("T(15,1,3)", 4) == "null_15"
        assert str(graph_shape(SimpleGraph.null(5))) == "null_5"

    def test_mixed_union_rendering(self):
        assert shape_of("B(4,3)", 4) == "K_4+C_8"
        assert shape_of("B(3,5)", 4) == "4C_3+null_3"
        assert shape_of("Q(5,3)", 4) == "2C_5+null_5"

    def test_triangle_component_renders_as_cycle(self):
        assert str(graph_shape(SimpleGraph.complete(3))) == "C_3"

    def test_klein_bottle_shapes_from_proofs(self):
        assert shape_of("B(3,4)", 4) == "4C_3"
        assert shape_of("K(3,4)", 4) == "3K_4"
        assert shape_of("B(5,3)", 4) == "C_10+C_5"


class TestGraphsIsomorphic:
    def test_shuffled_cycle(self):
        c6 = SimpleGraph.cycle(range(6))
        perm = [3, 5, 0, 2, 4, 1]
        shuffled = SimpleGraph.from_edges(
            6, [(perm[a], perm[b]) for a, b in c6.edges]
        )
        assert graphs_isomorphic(c6, shuffled)

    def test_degree_sequence_mismatch(self):
        g = common_neighbor_graph(skeleton_graph(fam("T(12,1,4)")), 4)  # 3K_4
        h = SimpleGraph.cycle(range(12))
        assert not graphs_isomorphic(g, h)

    def test_both_twelve_cycles(self):
        a = common_neighbor_graph(skeleton_graph(fam("T(12,1,2)")), 4)
        b = common_neighbor_graph(skeleton_graph(fam("T(12,1,3)")), 4)
        assert graphs_isomorphic(a, b)

    def test_same_shape_string_different_graph(self):
        assert not graphs_isomorphic(SimpleGraph.cycle(range(6)), SimpleGraph.null(6))
