import itertools
import unittest

import networkx as nx

from fourtree.core.gen import crown, prism, random_triangulation, wheel
from fourtree.core.plane_graph import (
    build_plane_graph,
    check_roots,
    default_roots,
    dual,
    find_separator,
    is_sigma_internally_3_connected,
    separating_pairs,
    suspend,
    suspended_dual,
)
from fourtree.domain.errors import (
    Disconnected,
    InconsistentRotation,
    NonSimple,
    NotGenusZero,
    NotInternally3Connected,
    RootsNotClockwise,
    RootsNotOnOuterFace,
)

# K4 drawn with 0 in the middle and 1, 2, 3 clockwise around it
K4 = [[1, 2, 3], [2, 0, 3], [3, 0, 1], [1, 0, 2]]


class TestPlaneGraph(unittest.TestCase):
    def setUp(self):
        self.g = build_plane_graph(K4, outer=[1, 2, 3])

    def test_counts(self):
        self.assertEqual(self.g.n_vertices, 4)
        self.assertEqual(self.g.n_edges, 6)
        self.assertEqual(self.g.n_faces, 4)
        self.assertEqual(self.g.n_darts, 12)

    def test_darts_and_twins(self):
        for d in range(self.g.n_darts):
            self.assertEqual(self.g.tail(d ^ 1), self.g.head(d))
            self.assertEqual(self.g.edge_of(d), d >> 1)
        d = self.g.dart(0, 1)
        self.assertEqual(self.g.tail(d), 0)
        self.assertEqual(self.g.head(d), 1)
        self.assertEqual(self.g.dart(1, 0), d ^ 1)
        self.assertEqual(self.g.edge_between(0, 1), self.g.edge_between(1, 0))

    def test_rotation_order(self):
        self.assertEqual(self.g.neighbors(0), [1, 2, 3])
        d = self.g.dart(0, 1)
        self.assertEqual(self.g.head(self.g.cw_next(d)), 2)
        self.assertEqual(self.g.head(self.g.cw_prev(d)), 3)

    def test_outer_face_is_clockwise_walk(self):
        self.assertEqual(self.g.outer_boundary(), [1, 2, 3])
        self.assertEqual(self.g.left_face(self.g.dart(1, 2)), self.g.outer_face_id)

    def test_inner_faces_are_triangles(self):
        for f in self.g.faces:
            self.assertEqual(len(f), 3)
            self.assertEqual(len(set(self.g.face_vertices(f.id))), 3)

    def test_left_and_right_face(self):
        d = self.g.dart(1, 2)
        self.assertEqual(self.g.right_face(d), self.g.left_face(d ^ 1))
        self.assertNotEqual(self.g.left_face(d), self.g.right_face(d))

    def test_mapping_input(self):
        g = build_plane_graph({v: r for v, r in enumerate(K4)}, outer=[1, 2, 3])
        self.assertEqual(g.rotations, self.g.rotations)

    def test_to_networkx(self):
        graph = self.g.to_networkx()
        self.assertTrue(nx.is_isomorphic(graph, nx.complete_graph(4)))

    def test_unknown_dart_raises_key_error(self):
        g = wheel(4).graph
        self.assertFalse(g.has_edge(1, 3))
        with self.assertRaises(KeyError):
            g.dart(1, 3)


class TestBuildErrors(unittest.TestCase):
    def test_loop(self):
        with self.assertRaises(NonSimple):
            build_plane_graph([[0, 1], [0]])

    def test_parallel_edges(self):
        with self.assertRaises(NonSimple):
            build_plane_graph([[1, 1], [0, 0]])

    def test_one_sided_edge(self):
        with self.assertRaises(InconsistentRotation):
            build_plane_graph([[1, 2], [0], [1]])

    def test_unknown_neighbour(self):
        with self.assertRaises(InconsistentRotation):
            build_plane_graph([[5], [0]])

    def test_disconnected(self):
        with self.assertRaises(Disconnected):
            build_plane_graph([[1], [0], [3], [2]])

    def test_toroidal_rotation(self):
        # vertex 0 of K4 listed counterclockwise
        rot = [[1, 3, 2], [2, 0, 3], [3, 0, 1], [1, 0, 2]]
        with self.assertRaises(NotGenusZero):
            build_plane_graph(rot)

    def test_outer_not_a_face(self):
        with self.assertRaises(InconsistentRotation):
            build_plane_graph(K4, outer=[1, 3, 2])


class TestRoots(unittest.TestCase):
    def setUp(self):
        self.g = wheel(5).graph

    def test_default_roots(self):
        self.assertEqual(default_roots(self.g), (1, 2, 3))

    def test_check_roots(self):
        self.assertEqual(check_roots(self.g, (1, 3, 5)), (1, 3, 5))
        with self.assertRaises(RootsNotClockwise):
            check_roots(self.g, (1, 5, 3))
        with self.assertRaises(RootsNotOnOuterFace):
            check_roots(self.g, (0, 1, 2))
        with self.assertRaises(RootsNotOnOuterFace):
            check_roots(self.g, (1, 1, 2))

    def test_suspension_half_edges(self):
        susp = suspend(self.g, (1, 2, 3))
        self.assertEqual(susp.roots, (1, 2, 3))
        self.assertEqual(susp.root_index(2), 2)
        self.assertEqual(susp.root_index(0), 0)
        self.assertEqual(len(set(susp.half_edges)), 3)
        for v in susp.roots:
            self.assertEqual(len(susp.extended_rotation(v)), self.g.degree(v) + 1)


class TestConnectivity(unittest.TestCase):
    def test_three_connected_families_pass(self):
        for inst in (wheel(6), prism(5), random_triangulation(15, seed=3)):
            with self.subTest(inst.name):
                self.assertTrue(is_sigma_internally_3_connected(inst.graph, inst.roots))
                self.assertIsNone(find_separator(inst.graph, inst.roots))

    def test_crown_fails_for_every_root_triple(self):
        for k in (4, 5):
            g = crown(k).graph
            walk = g.outer_boundary()
            for a, b, c in itertools.combinations(range(len(walk)), 3):
                roots = (walk[a], walk[b], walk[c])
                with self.subTest(k=k, roots=roots):
                    self.assertFalse(is_sigma_internally_3_connected(g, roots))

    def test_separator_agrees_with_brute_force(self):
        cases = [crown(4), wheel(5), prism(4)]
        for inst in cases:
            with self.subTest(inst.name):
                fast = find_separator(inst.graph, inst.roots) is None
                slow = not separating_pairs(inst.graph, inst.roots)
                self.assertEqual(fast, slow)

    def test_suspend_rejects_crown(self):
        inst = crown(4)
        with self.assertRaises(NotInternally3Connected):
            suspend(inst.graph, inst.roots)
        susp = suspend(inst.graph, inst.roots, check=False)
        self.assertEqual(susp.roots, inst.roots)


class TestDuals(unittest.TestCase):
    def test_dual_counts(self):
        g = prism(4).graph
        dm = dual(g)
        self.assertEqual(dm.dual_graph.n_vertices, g.n_faces)
        self.assertEqual(dm.dual_graph.n_edges, g.n_edges)
        self.assertEqual(dm.dual_graph.n_faces, g.n_vertices)
        for e in range(g.n_edges):
            a, b = dm.dual_graph.endpoints(dm.dual_edge(e))
            self.assertEqual({a, b}, {g.left_face(2 * e), g.right_face(2 * e)})

    def test_double_dual_reverses_darts(self):
        for inst in (prism(5), wheel(6), random_triangulation(25, seed=4)):
            with self.subTest(inst.name):
                g = inst.graph
                dm = dual(g)
                dd = dual(dm.dual_graph).dual_graph
                self.assertEqual((dd.n_vertices, dd.n_edges), (g.n_vertices, g.n_edges))
                faces = [dm.vertex_face(v) for v in range(g.n_vertices)]
                self.assertEqual(sorted(faces), list(range(g.n_vertices)))
                for d in range(g.n_darts):
                    self.assertEqual(dd.head(d), faces[g.tail(d)])
                    self.assertEqual(dd.tail(d), faces[g.head(d)])

    def test_dual_of_crown_has_parallel_edges(self):
        g = crown(4).graph
        dg = dual(g).dual_graph
        self.assertTrue(dg.allow_multi)
        graph = dg.to_networkx()
        self.assertEqual(graph.number_of_edges(), g.n_edges)
        self.assertLess(nx.Graph(graph).number_of_edges(), g.n_edges)

    def test_suspended_dual(self):
        inst = wheel(5)
        susp = suspend(inst.graph, inst.roots)
        sd = suspended_dual(susp)
        g = inst.graph
        self.assertEqual(sd.graph.n_vertices, g.n_faces - 1 + 3)
        self.assertEqual(sd.graph.n_edges, g.n_edges + 3)
        for i in (1, 2, 3):
            self.assertTrue(sd.is_triangle_edge(sd.triangle_edge(i)))
        self.assertFalse(sd.is_triangle_edge(0))
        self.assertEqual(sd.suspension.roots, sd.b)


if __name__ == "__main__":
    unittest.main()
