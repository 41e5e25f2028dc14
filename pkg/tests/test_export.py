import math
import unittest

from fourtree.core.cotree4 import run_pipeline
from fourtree.core.gen import prism, sample10, wheel
from fourtree.core.plane_graph import suspend
from fourtree.export import render_dot, render_svg, tutte_layout
from fourtree.export.layout import dual_edge_route, face_points


class TestLayout(unittest.TestCase):
    def test_outer_vertices_on_circle(self):
        g = prism(5).graph
        pos = tutte_layout(g, radius=2.0)
        self.assertEqual(set(pos), set(range(g.n_vertices)))
        for v in g.outer_boundary():
            self.assertAlmostEqual(math.hypot(*pos[v]), 2.0)
        for v in set(range(g.n_vertices)) - set(g.outer_boundary()):
            self.assertLess(math.hypot(*pos[v]), 2.0)

    def test_wheel_hub_at_centre(self):
        pos = tutte_layout(wheel(6).graph)
        self.assertAlmostEqual(pos[0][0], 0.0)
        self.assertAlmostEqual(pos[0][1], 0.0)

    def test_dual_routes(self):
        g = wheel(5).graph
        pos = tutte_layout(g)
        faces = face_points(g, pos)
        self.assertEqual(len(faces), g.n_faces - 1)
        for e in range(g.n_edges):
            route = dual_edge_route(g, pos, faces, e)
            self.assertEqual(len(route), 3)
            u, w = g.endpoints(e)
            self.assertAlmostEqual(route[1][0], (pos[u][0] + pos[w][0]) / 2)


class TestRenderers(unittest.TestCase):
    def setUp(self):
        inst = sample10()
        self.g = inst.graph
        result = run_pipeline(suspend(inst.graph, inst.roots))
        self.wood, self.pair = result.wood, result.pair

    def test_dot_bare_graph(self):
        text = render_dot(self.g, name="bare")
        self.assertTrue(text.startswith('digraph "bare" {'))
        self.assertEqual(text.count('dir="none"'), self.g.n_edges)
        self.assertNotIn("subgraph dual", text)

    def test_dot_with_wood_and_pair(self):
        text = render_dot(self.g, self.wood, self.pair)
        for colour in ("red", "green", "blue"):
            self.assertIn(f'color="{colour}"', text)
        self.assertIn("subgraph dual", text)
        self.assertIn("f_outer", text)
        self.assertEqual(text.count('style="dashed"'), len(self.pair.co_tree))

    def test_svg(self):
        text = render_svg(self.g, self.wood, self.pair)
        self.assertTrue(text.startswith("<svg"))
        self.assertTrue(text.rstrip().endswith("</svg>"))
        self.assertIn('id="arrow-red"', text)
        self.assertEqual(text.count("<polyline"), len(self.pair.co_tree))
        self.assertEqual(text.count('r="9"'), self.g.n_vertices)

    def test_svg_bare_graph(self):
        text = render_svg(self.g)
        self.assertNotIn("<polyline", text)


if __name__ == "__main__":
    unittest.main()
