import os
import unittest

from fourtree.core.completion import compute_wood, minimize
from fourtree.core.cotree4 import (
    MAX_CANDIDATE_DEGREE,
    build_tree_pair,
    candidate,
    index_maximal_oracle,
    index_maximal_subpaths,
    minimal_covering_paths,
    run_pipeline,
    select,
)
from fourtree.core.gen import corpus, platonic, sample10, wheel
from fourtree.core.opp import compatible_opp, extension_edges
from fourtree.core.plane_graph import dual, suspend
from fourtree.core.verify import (
    count_spanning_trees,
    degrees,
    oracle_best_pair,
    pair_certificates,
)
from fourtree.domain.entities import CertificateKind, Rule
from fourtree.domain.errors import NotMinimalWood
from fourtree.utils.constants import SAMPLE10_WOOD_PATH
from fourtree.utils.graph_io import read_wood


class TestCandidateGraph(unittest.TestCase):
    def setUp(self):
        inst = platonic("icosahedron")
        self.g = inst.graph
        self.wood = minimize(compute_wood(suspend(inst.graph, inst.roots)))
        self.h = candidate(self.wood)

    def test_degree_and_outer_edges(self):
        self.assertLessEqual(self.h.max_degree(), MAX_CANDIDATE_DEGREE)
        for e in self.g.face_edges(self.g.outer_face_id):
            self.assertIn(e, self.h)
        self.assertEqual(self.h.edges, frozenset(self.wood.bidirected_edges()))

    def test_networkx_view(self):
        graph = self.h.to_networkx()
        self.assertEqual(graph.number_of_nodes(), self.g.n_vertices)
        self.assertEqual(graph.number_of_edges(), len(self.h.edges))
        e = next(iter(self.h.edges))
        fewer = self.h.to_networkx(frozenset([e]))
        self.assertEqual(fewer.number_of_edges(), len(self.h.edges) - 1)

    def test_needs_minimal_wood(self):
        inst = sample10()
        stored = read_wood(SAMPLE10_WOOD_PATH, suspend(inst.graph, inst.roots))
        with self.assertRaises(NotMinimalWood):
            candidate(stored)


class TestIndexMaximalPaths(unittest.TestCase):
    def test_sweep_agrees_with_cycle_enumeration(self):
        for inst in corpus("small"):
            with self.subTest(inst.name):
                wood = minimize(compute_wood(suspend(inst.graph, inst.roots)))
                h = candidate(wood)
                opp = compatible_opp(wood, 2)
                pmax = index_maximal_subpaths(h, opp)
                self.assertEqual(pmax, index_maximal_oracle(h, opp))
                self.assertIn(opp.s, pmax)

    def test_covering_paths_come_later(self):
        inst = wheel(7)
        wood = minimize(compute_wood(suspend(inst.graph, inst.roots)))
        h = candidate(wood)
        opp = compatible_opp(wood, 2)
        pmax = index_maximal_subpaths(h, opp)
        covering = minimal_covering_paths(inst.graph, opp, pmax)
        self.assertEqual(set(covering), pmax - {opp.s})
        for t, c in covering.items():
            self.assertGreater(c, t)
            covered = set(opp.covered_edges[c])
            self.assertTrue(any(e in covered for e in extension_edges(inst.graph, opp, t)))


class TestSelection(unittest.TestCase):
    def setUp(self):
        inst = sample10()
        self.g = inst.graph
        self.wood = minimize(compute_wood(suspend(inst.graph, inst.roots)))
        self.selection = select(self.wood, self.g.n_edges)

    def test_certificates_pass(self):
        kinds = {c.kind for c in self.selection.certificates}
        self.assertEqual(
            kinds,
            {
                CertificateKind.FOREST,
                CertificateKind.NON_BRIDGE,
                CertificateKind.ONE_PER_EXTENSION,
                CertificateKind.FACE_DEGREE,
                CertificateKind.NO_LATE_ADDITIONS,
            },
        )
        for cert in self.selection.certificates:
            self.assertTrue(cert.passed, str(cert))

    def test_outer_face_edge_goes_first(self):
        first = self.selection.deletions.records[0]
        self.assertIs(first.rule, Rule.OUTER_FACE)
        self.assertEqual(first.stage, 0)
        self.assertIn(first.edge, self.g.face_edges(self.g.outer_face_id))

    def test_deletions_come_from_candidate(self):
        deletions = self.selection.deletions
        self.assertEqual(len(deletions.edge_set()), len(deletions))
        for e in deletions.edges:
            self.assertIn(e, self.selection.candidate)
            self.assertEqual(deletions.record_of(e).edge, e)


class TestPipeline(unittest.TestCase):
    def test_small_corpus(self):
        for inst in corpus("small"):
            with self.subTest(inst.name):
                g = inst.graph
                result = run_pipeline(suspend(g, inst.roots))
                pair = result.pair
                self.assertLessEqual(pair.max_degree, 4)
                self.assertLessEqual(pair.co_max_degree, 4)
                self.assertEqual(len(pair.tree), g.n_vertices - 1)
                self.assertEqual(len(pair.co_tree), g.n_faces - 1)
                self.assertEqual(set(pair.tree) | set(pair.co_tree), set(range(g.n_edges)))
                kinds = {c.kind for c in pair.certificates}
                self.assertIn(CertificateKind.ROOT_DEGREES, kinds)
                for cert in pair_certificates(pair, g, inst.roots):
                    self.assertTrue(cert.passed, str(cert))

    def check_against_oracle(self, bound):
        checked = 0
        for inst in corpus("small"):
            g = inst.graph
            if count_spanning_trees(g) > bound:
                continue
            with self.subTest(inst.name):
                pair = build_tree_pair(suspend(g, inst.roots))
                result = oracle_best_pair(g, tree_limit=bound, keep_valid_pairs_limit=bound)
                self.assertLessEqual(result.optimum, 4)
                self.assertIn(frozenset(pair.tree), result.valid_pairs)
            checked += 1
        return checked

    def test_small_corpus_against_oracle(self):
        self.assertGreaterEqual(self.check_against_oracle(20_000), 8)

    @unittest.skipUnless(os.environ.get("FOURTREE_SLOW") == "1", "set FOURTREE_SLOW=1 to run")
    def test_small_corpus_against_oracle_up_to_two_million(self):
        self.check_against_oracle(2_000_000)

    def test_degrees_match_reported_maxima(self):
        inst = platonic("dodecahedron")
        pair = build_tree_pair(suspend(inst.graph, inst.roots))
        self.assertEqual(pair.max_degree, max(degrees(inst.graph, pair.tree)))
        dg = dual(inst.graph).dual_graph
        self.assertEqual(pair.co_max_degree, max(degrees(dg, pair.co_tree)))

    def test_deterministic(self):
        inst = wheel(6)
        a = build_tree_pair(suspend(inst.graph, inst.roots))
        b = build_tree_pair(suspend(inst.graph, inst.roots))
        self.assertEqual(a.tree, b.tree)
        self.assertEqual(a.deletions.edges, b.deletions.edges)

    def test_primal_and_dual_candidates_are_complementary(self):
        inst = sample10()
        result = run_pipeline(suspend(inst.graph, inst.roots), validate_every_flip=False)
        n_edges = inst.graph.n_edges
        primal = result.primal.candidate.edges
        dual_side = {e for e in result.dual.candidate.edges if e < n_edges}
        self.assertEqual(primal | dual_side, set(range(n_edges)))
        self.assertFalse(primal & dual_side)
        self.assertIs(result.wood, result.primal.wood)

    @unittest.skipUnless(os.environ.get("FOURTREE_SLOW") == "1", "set FOURTREE_SLOW=1 to run")
    def test_medium_corpus(self):
        for inst in corpus("medium"):
            with self.subTest(inst.name):
                pair = build_tree_pair(
                    suspend(inst.graph, inst.roots, check=False), validate_every_flip=False
                )
                for cert in pair_certificates(pair, inst.graph, inst.roots):
                    self.assertTrue(cert.passed, str(cert))


if __name__ == "__main__":
    unittest.main()
