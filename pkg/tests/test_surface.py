import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flatland import (
    Cycle,
    Disconnected,
    NotAManifold,
    build_triangulation,
    degree_profile,
    euler_characteristic,
    link_cycle,
    manifold_report,
    orientability,
    relabel,
    skeleton_graph,
    surface_type,
)
from tests.conftest import TETRAHEDRON, fam, shuffled


class TestBuildTriangulation:
    def test_tetrahedron_is_a_sphere(self, tetrahedron):
        assert euler_characteristic(tetrahedron) == 2
        assert surface_type(tetrahedron).kind == "sphere"
        assert degree_profile(tetrahedron) == ((3, 3, 3, 3), 3)

    def test_seven_vertex_torus(self):
        t = fam("T(7,1,2)")
        assert (t.f0, t.f1, t.f2) == (7, 21, 14)
        assert euler_characteristic(t) == 0
        assert surface_type(t).kind == "torus"

    def test_single_face_is_rejected(self):
        with pytest.raises(NotAManifold, match=r"edge \(0, 1\)"):
            build_triangulation(3, [(0, 1, 2)])

    def test_isolated_vertex_is_rejected(self):
        n, faces = TETRAHEDRON
        with pytest.raises(NotAManifold, match="vertex 4"):
            build_triangulation(5, faces)

    def test_repeated_vertex_in_face_is_rejected(self):
        with pytest.raises(NotAManifold):
            build_triangulation(4, [(0, 1, 1), (0, 1, 2), (0, 2, 3)])

    def test_out_of_range_vertex_is_rejected(self):
        with pytest.raises(ValueError, match="out of range"):
            build_triangulation(3, [(0, 1, 5)])

    def test_pinched_link_is_rejected(self):
        # Two tetrahedra glued at vertex 0: every edge is fine but lk(0)
        # consists of two disjoint triangles.
        faces = [
            (0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3),
            (0, 4, 5), (0, 4, 6), (0, 5, 6), (4, 5, 6),
        ]
        with pytest.raises(NotAManifold, match="link of vertex 0"):
            build_triangulation(7, faces)

    def test_disconnected_is_rejected(self):
        faces = [
            (0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3),
            (4, 5, 6), (4, 5, 7), (4, 6, 7), (5, 6, 7),
        ]
        with pytest.raises(Disconnected):
            build_triangulation(8, faces)

    def test_round_trip_identity(self):
        t = fam("T(12,1,3)")
        assert build_triangulation(t.n, t.faces) == t

    def test_duplicate_faces_are_dropped(self, tetrahedron):
        n, faces = TETRAHEDRON
        assert build_triangulation(n, faces + [faces[0]]) == tetrahedron


class TestLinkCycle:
    def test_cyclic_band_link_formula(self):
        # lk(i) = C_6(i+k, n+i-1, n+i-k-1, n+i-k, i+1, i+k+1) at i=1, n=7,
        # k=2 gives C_6(3, 7, 5, 6, 2, 4) in 1-based labels.
        t = fam("T(7,1,2)")
        assert link_cycle(t, 0) == Cycle((2, 6, 4, 5, 1, 3))

    def test_tetrahedron_link(self, tetrahedron):
        assert link_cycle(tetrahedron, 0) == Cycle((1, 2, 3))

    def test_b33_links_are_six_cycles(self):
        t = fam("B(3,3)")
        for v in range(t.n):
            assert len(link_cycle(t, v)) == 6

    def test_link_length_equals_degree(self, double_pyramid):
        degrees, _ = degree_profile(double_pyramid)
        for v in range(double_pyramid.n):
            assert len(link_cycle(double_pyramid, v)) == degrees[v]


class TestCycle:
    def test_equality_up_to_rotation_and_reflection(self):
        assert Cycle((1, 2, 3, 4)) == Cycle((3, 4, 1, 2)) == Cycle((4, 3, 2, 1))
        assert Cycle((1, 2, 3, 4)) != Cycle((1, 3, 2, 4))

    def test_degenerate_rejected(self):
        with pytest.raises(ValueError):
            Cycle((1, 2))
        with pytest.raises(ValueError):
            Cycle((1, 2, 1))


class TestInvariants:
    def test_euler_characteristic_zero_families(self):
        assert euler_characteristic(fam("T(12,1,3)")) == 0
        assert euler_characteristic(fam("Q(5,2)")) == 0

    def test_degree_profile_mixed(self, double_pyramid):
        degrees, regular = degree_profile(double_pyramid)
        assert sorted(degrees) == [3, 3, 4, 4, 4]
        assert regular is None

    def test_degree_profile_regular(self):
        degrees, regular = degree_profile(fam("T(14,1,3)"))
        assert regular == 6 and set(degrees) == {6}

    def test_orientability(self, tetrahedron):
        assert orientability(fam("T(6,2,2)"))
        assert not orientability(fam("B(3,4)"))
        assert orientability(tetrahedron)

    def test_surface_type(self, tetrahedron):
        assert surface_type(fam("T(15,1,5)")).kind == "torus"
        assert surface_type(fam("K(3,4)")).kind == "klein_bottle"
        assert surface_type(tetrahedron).kind == "sphere"

    def test_two_f1_equals_three_f2(self):
        for name in ("T(7,1,2)", "B(3,3)", "Q(5,2)", "K(3,4)"):
            t = fam(name)
            assert 2 * t.f1 == 3 * t.f2

    @given(st.integers(0, 2**32))
    @settings(max_examples=25, deadline=None)
    def test_orientability_is_relabeling_invariant(self, seed):
        for name in ("T(6,2,2)", "B(3,3)"):
            t = fam(name)
            assert orientability(shuffled(t, seed)) == orientability(t)


class TestSkeletonGraph:
    def test_neg_of_t912_is_the_expected_nine_cycle(self):
        # NEG(T_{9,1,2}) = C_9(1, 5, 9, 4, 8, 3, 7, 2, 6) in 1-based labels.
        g = skeleton_graph(fam("T(9,1,2)"), complement=True)
        labels = [1, 5, 9, 4, 8, 3, 7, 2, 6]
        expected = set()
        for i in range(9):
            a, b = labels[i] - 1, labels[(i + 1) % 9] - 1
            expected.add((min(a, b), max(a, b)))
        assert set(g.edges) == expected

    def test_eg_of_t712_is_complete(self):
        g = skeleton_graph(fam("T(7,1,2)"))
        assert len(g.edges) == 21

    def test_tetrahedron_neg_is_null(self, tetrahedron):
        assert not skeleton_graph(tetrahedron, complement=True).edges

    def test_complementarity(self):
        t = fam("T(9,1,2)")
        eg, neg = skeleton_graph(t), skeleton_graph(t, complement=True)
        assert not (set(eg.edges) & set(neg.edges))
        assert len(eg.edges) + len(neg.edges) == t.n * (t.n - 1) // 2


class TestManifoldReport:
    def test_valid_report(self):
        n, faces = fam("T(7,1,2)").n, fam("T(7,1,2)").faces
        report = manifold_report(n, faces)
        assert report.ok and not report.diagnostics
        assert report.euler == 0 and report.regular_degree == 6
        assert report.surface.kind == "torus"

    def test_invalid_report_never_raises(self):
        report = manifold_report(4, [(0, 1, 2)])
        assert not report.ok and report.diagnostics
        assert report.surface.kind == "invalid"


def test_relabel_round_trip():
    t = fam("B(3,4)")
    perm = list(reversed(range(t.n)))
    back = relabel(relabel(t, perm), perm)
    assert back == t
