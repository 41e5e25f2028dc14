import unittest

import networkx as nx

from fourtree.config import make_spec
from fourtree.config.models import RunConfig
from fourtree.core.gen import (
    antiprism,
    corpus,
    crown,
    generate,
    platonic,
    prism,
    random_triangulation,
    sample10,
    wheel,
)
from fourtree.core.plane_graph import is_sigma_internally_3_connected
from fourtree.domain.errors import BadParameters


def counts(inst):
    g = inst.graph
    return g.n_vertices, g.n_edges, g.n_faces


class TestFamilies(unittest.TestCase):
    def test_wheel(self):
        inst = wheel(6)
        self.assertEqual(counts(inst), (7, 12, 7))
        self.assertEqual(inst.graph.degree(0), 6)
        self.assertEqual(sorted(inst.graph.outer_boundary()), [1, 2, 3, 4, 5, 6])
        self.assertEqual(inst.name, "wheel-6")

    def test_prism(self):
        self.assertEqual(counts(prism(5)), (10, 15, 7))

    def test_antiprism(self):
        inst = antiprism(5)
        self.assertEqual(counts(inst), (10, 20, 12))
        self.assertTrue(all(inst.graph.degree(v) == 4 for v in range(10)))

    def test_platonic_solids(self):
        expected = {
            "tetrahedron": ((4, 6, 4), nx.tetrahedral_graph()),
            "cube": ((8, 12, 6), nx.cubical_graph()),
            "octahedron": ((6, 12, 8), nx.octahedral_graph()),
            "icosahedron": ((12, 30, 20), nx.icosahedral_graph()),
            "dodecahedron": ((20, 30, 12), nx.dodecahedral_graph()),
        }
        for name, (sizes, reference) in expected.items():
            with self.subTest(name):
                inst = platonic(name)
                self.assertEqual(inst.name, name)
                self.assertEqual(counts(inst), sizes)
                self.assertTrue(nx.is_isomorphic(inst.graph.to_networkx(), reference))

    def test_unknown_platonic(self):
        with self.assertRaises(BadParameters):
            platonic("hypercube")

    def test_crown(self):
        inst = crown(5)
        self.assertEqual(counts(inst), (10, 15, 7))
        self.assertEqual(len(inst.graph.outer_boundary()), 10)
        for p in range(5, 10):
            self.assertEqual(inst.graph.degree(p), 2)

    def test_sample10(self):
        inst = sample10()
        self.assertEqual(counts(inst), (10, 15, 7))
        self.assertEqual(inst.roots, (0, 1, 2))
        self.assertTrue(is_sigma_internally_3_connected(inst.graph, inst.roots))

    def test_random_triangulation(self):
        inst = random_triangulation(30, seed=5)
        g = inst.graph
        self.assertEqual(counts(inst), (30, 84, 56))
        self.assertTrue(all(len(f) == 3 for f in g.faces))
        self.assertEqual(inst.roots, (0, 2, 1))

    def test_random_triangulation_is_seeded(self):
        a = random_triangulation(25, seed=11).graph
        b = random_triangulation(25, seed=11).graph
        c = random_triangulation(25, seed=12).graph
        self.assertEqual(a.rotations, b.rotations)
        self.assertNotEqual(a.rotations, c.rotations)

    def test_random_triangulation_too_small(self):
        with self.assertRaises(BadParameters):
            random_triangulation(3)

    def test_positions_exposed(self):
        inst = prism(4)
        self.assertEqual(set(inst.positions), set(range(8)))
        self.assertIsNone(random_triangulation(6).positions)


class TestGenerate(unittest.TestCase):
    def test_generate_dispatch(self):
        self.assertEqual(generate(make_spec(family="wheel", k=5)).name, "wheel-5")
        self.assertEqual(generate(make_spec(family="crown", k=4)).name, "crown-4")
        self.assertEqual(generate(make_spec(family="sample10")).name, "sample10")
        inst = generate(make_spec(family="random", n=12, seed=4))
        self.assertEqual(inst.name, make_spec(family="random", n=12, seed=4).label)

    def test_spec_validation(self):
        with self.assertRaises(BadParameters):
            make_spec(family="wheel")
        with self.assertRaises(BadParameters):
            make_spec(family="wheel", k=2)
        with self.assertRaises(BadParameters):
            make_spec(family="random", n=3)
        with self.assertRaises(BadParameters):
            make_spec(family="platonic")
        with self.assertRaises(BadParameters):
            make_spec(family="torus", k=4)


class TestCorpus(unittest.TestCase):
    def setUp(self):
        self.config = RunConfig()

    def test_small(self):
        instances = corpus("small", self.config)
        self.assertEqual(len(instances), 25)
        self.assertEqual(len({i.name for i in instances}), 25)
        for inst in instances:
            with self.subTest(inst.name):
                self.assertTrue(is_sigma_internally_3_connected(inst.graph, inst.roots))

    def test_negative(self):
        instances = corpus("negative", self.config)
        self.assertEqual([i.name for i in instances], ["crown-4", "crown-5", "crown-6", "crown-7"])
        for inst in instances:
            self.assertFalse(is_sigma_internally_3_connected(inst.graph, inst.roots))

    def test_medium_uses_sizes(self):
        config = RunConfig.model_validate(
            {"corpus": {"medium_sizes": [20, 30], "medium_per_size": 2}}
        )
        instances = corpus("medium", config)
        self.assertEqual([i.graph.n_vertices for i in instances], [20, 20, 30, 30])
        self.assertEqual(len({i.name for i in instances}), 4)

    def test_bench_uses_schedule(self):
        config = RunConfig.model_validate({"bench": {"schedule": [40, 80]}})
        self.assertEqual([i.graph.n_vertices for i in corpus("bench", config)], [40, 80])

    def test_unknown_profile(self):
        with self.assertRaises(BadParameters):
            corpus("huge", self.config)


if __name__ == "__main__":
    unittest.main()
