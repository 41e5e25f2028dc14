import math
import unittest

from fourtree.core.cotree4 import build_tree_pair
from fourtree.core.gen import crown, platonic, random_triangulation, sample10, wheel
from fourtree.core.plane_graph import build_plane_graph, dual, suspend
from fourtree.core.verify import (
    check_cut_cycle,
    check_degree_bound,
    check_dual_degree_lower_bound,
    check_root_degrees,
    co_tree_of,
    count_spanning_trees,
    is_spanning_tree,
    log_spanning_tree_count,
    oracle_best_pair,
    outer_face_edge,
    verify_tree_pair,
)
from fourtree.domain.entities import CertificateKind
from fourtree.domain.errors import NotATree, TooManyTrees

K4 = [[1, 2, 3], [2, 0, 3], [3, 0, 1], [1, 0, 2]]


def edges(g, *pairs):
    return {g.edge_between(u, w) for u, w in pairs}


class TestSpanningTrees(unittest.TestCase):
    def setUp(self):
        self.g = build_plane_graph(K4, outer=[1, 2, 3])

    def test_valid_tree(self):
        cert = is_spanning_tree(self.g, edges(self.g, (0, 1), (1, 3), (2, 3)))
        self.assertTrue(cert.passed)
        self.assertEqual(cert.kind, CertificateKind.SPANNING_TREE)

    def test_cycle_is_witnessed(self):
        triangle = edges(self.g, (1, 2), (2, 3), (3, 1))
        cert = is_spanning_tree(self.g, triangle | edges(self.g, (0, 1)))
        self.assertFalse(cert.passed)
        self.assertEqual(set(cert.witness), triangle)

    def test_missed_vertices_are_witnessed(self):
        cert = is_spanning_tree(self.g, edges(self.g, (0, 1), (1, 2)))
        self.assertFalse(cert.passed)
        self.assertEqual(cert.witness, (3,))

    def test_unknown_edge(self):
        cert = is_spanning_tree(self.g, [0, 1, 99])
        self.assertFalse(cert.passed)
        self.assertEqual(cert.witness, (99,))

    def test_co_tree_of(self):
        dm = dual(self.g)
        tree = edges(self.g, (0, 1), (1, 3), (2, 3))
        co = co_tree_of(self.g, dm, tree)
        self.assertEqual(len(co), self.g.n_faces - 1)
        self.assertTrue(is_spanning_tree(dm.dual_graph, co).passed)
        with self.assertRaises(NotATree):
            co_tree_of(self.g, dm, edges(self.g, (1, 2), (2, 3), (3, 1)))

    def test_cycles_are_dual_cuts(self):
        dm = dual(self.g)
        for edge_set in (edges(self.g, (1, 2), (2, 3), (3, 1)), edges(self.g, (0, 1)), set()):
            self.assertTrue(check_cut_cycle(self.g, dm, edge_set).passed)

    def test_degree_bound(self):
        g = wheel(5).graph
        spokes = edges(g, *((0, v) for v in range(1, 6)))
        cert = check_degree_bound(g, spokes)
        self.assertFalse(cert.passed)
        self.assertEqual(cert.witness, (0,))
        self.assertTrue(check_degree_bound(g, spokes, bound=5).passed)


class TestCounting(unittest.TestCase):
    def test_known_counts(self):
        expected = {
            "tetrahedron": 16,
            "cube": 384,
            "octahedron": 384,
            "icosahedron": 5184000,
            "dodecahedron": 5184000,
        }
        for name, count in expected.items():
            with self.subTest(name):
                self.assertEqual(count_spanning_trees(platonic(name).graph), count)

    def test_crown_count(self):
        for k in (4, 5, 6):
            with self.subTest(k=k):
                self.assertEqual(count_spanning_trees(crown(k).graph), k * 2 * 3 ** (k - 1))

    def test_count_beyond_float_range(self):
        g = random_triangulation(2000).graph
        log_count = log_spanning_tree_count(g)
        self.assertGreater(log_count, 710)
        count = count_spanning_trees(g)
        self.assertLessEqual(abs(count.bit_length() - log_count / math.log(2)), 1.5)

    def test_log_count(self):
        g = build_plane_graph(K4, outer=[1, 2, 3])
        self.assertAlmostEqual(log_spanning_tree_count(g), math.log(16))


class TestOracle(unittest.TestCase):
    def test_tetrahedron(self):
        result = oracle_best_pair(build_plane_graph(K4, outer=[1, 2, 3]))
        self.assertEqual(result.optimum, 2)
        self.assertEqual(result.tree_count, 16)
        self.assertEqual(result.pairs_within_four, 16)
        self.assertTrue(result.has_three_three)
        self.assertEqual(len(result.valid_pairs), 16)
        self.assertEqual(len(result.witness), 3)
        self.assertEqual(
            set(result.to_dict()),
            {
                "optimum",
                "witness",
                "dual_optimum",
                "tree_count",
                "pairs_within_four",
                "has_three_three",
            },
        )

    def test_enumeration_matches_count(self):
        g = platonic("cube").graph
        self.assertEqual(oracle_best_pair(g).tree_count, count_spanning_trees(g))

    def test_limit(self):
        g = platonic("octahedron").graph
        with self.assertRaises(TooManyTrees) as ctx:
            oracle_best_pair(g, tree_limit=100)
        self.assertEqual(ctx.exception.limit, 100)
        self.assertEqual(round(ctx.exception.count), 384)

    def test_limit_on_huge_instance(self):
        with self.assertRaises(TooManyTrees) as ctx:
            oracle_best_pair(random_triangulation(2000).graph)
        self.assertEqual(ctx.exception.count, math.inf)
        self.assertIn("about 10^", str(ctx.exception))

    def test_crown_dual_optimum(self):
        for k in (4, 5, 6, 7):
            with self.subTest(k=k):
                g = crown(k).graph
                result = oracle_best_pair(g, keep_valid_pairs_limit=0)
                self.assertEqual(result.dual_optimum, k // 2 + 1)
                self.assertTrue(check_dual_degree_lower_bound(g, k // 2 + 1).passed)

    def test_crown_lower_bound_failure(self):
        cert = check_dual_degree_lower_bound(crown(5).graph, 4)
        self.assertFalse(cert.passed)
        self.assertEqual(cert.kind, CertificateKind.DUAL_DEGREE_LOWER_BOUND)

    def test_pipeline_pair_is_among_valid_pairs(self):
        inst = sample10()
        pair = build_tree_pair(suspend(inst.graph, inst.roots))
        result = oracle_best_pair(inst.graph)
        self.assertIn(frozenset(pair.tree), result.valid_pairs)
        self.assertLessEqual(result.optimum, max(pair.max_degree, pair.co_max_degree))


class TestVerifyTreePair(unittest.TestCase):
    def setUp(self):
        self.g = build_plane_graph(K4, outer=[1, 2, 3])
        # r1 = 1 is a leaf, r3 = 3 has degree 2, the outer edge 1-2 is left out
        self.tree = edges(self.g, (2, 3), (3, 1), (0, 2))

    def test_all_checks_pass(self):
        certs = verify_tree_pair(self.g, self.tree)
        self.assertEqual(len(certs), 5)
        self.assertTrue(all(c.passed for c in certs))

    def test_with_roots(self):
        certs = verify_tree_pair(self.g, self.tree, roots=(1, 2, 3))
        self.assertEqual(certs[-1].kind, CertificateKind.ROOT_DEGREES)
        self.assertTrue(certs[-1].passed, str(certs[-1]))

    def test_root_degree_failure(self):
        tree = edges(self.g, (0, 1), (0, 2), (0, 3))
        cert = check_root_degrees(self.g, (1, 2, 3), tree, None)
        self.assertFalse(cert.passed)
        self.assertEqual(outer_face_edge(self.g, 1), self.g.edge_between(1, 2))

    def test_wrong_co_tree(self):
        certs = verify_tree_pair(self.g, self.tree, co_tree=set())
        kinds = {c.kind for c in certs if not c.passed}
        self.assertIn(CertificateKind.CO_TREE_DUALITY, kinds)

    def test_not_a_tree(self):
        certs = verify_tree_pair(self.g, edges(self.g, (1, 2), (2, 3), (3, 1)))
        self.assertFalse(certs[0].passed)
        self.assertNotIn(CertificateKind.ROOT_DEGREES, {c.kind for c in certs})


if __name__ == "__main__":
    unittest.main()
