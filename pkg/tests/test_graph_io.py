import os
import shutil
import tempfile
import unittest

from fourtree.core.gen import wheel
from fourtree.core.plane_graph import suspend
from fourtree.core.schnyder import check_wood
from fourtree.domain.errors import ParseError
from fourtree.utils.constants import SAMPLE10_GRAPH_PATH, SAMPLE10_WOOD_PATH
from fourtree.utils.graph_io import (
    format_edges,
    format_graph,
    parse_graph,
    parse_tree,
    read_graph,
    read_wood,
    write_graph,
    write_wood,
)

K4_TEXT = """\
# tetrahedron
planar 4
outer 1 2 3
roots 1 2 3
0: 1 2 3
1: 2 0 3
2: 3 0 1
3: 1 0 2
"""


class TestParseGraph(unittest.TestCase):
    def test_parse(self):
        parsed = parse_graph(K4_TEXT.splitlines())
        self.assertEqual(parsed.graph.n_vertices, 4)
        self.assertEqual(parsed.graph.n_edges, 6)
        self.assertEqual(parsed.roots, (1, 2, 3))
        self.assertEqual(parsed.graph.outer_boundary(), [1, 2, 3])

    def test_roots_are_optional(self):
        text = K4_TEXT.replace("roots 1 2 3\n", "")
        self.assertIsNone(parse_graph(text.splitlines()).roots)

    def test_format_then_parse_keeps_rotations(self):
        g = wheel(7).graph
        again = parse_graph(format_graph(g, (1, 2, 3))).graph
        self.assertEqual(again.rotations, g.rotations)
        self.assertEqual(again.outer_boundary(), g.outer_boundary())

    def test_errors_name_the_line(self):
        cases = {
            "graph 4\n": "line 1",
            "planar 4\nouter 1 2 x\n": "line 2",
            "planar 2\n0: 1\n0: 1\n": "line 3",
            "planar 2\n0: 1\n5: 0\n": "line 3",
            "planar 3\nroots 0 1\n": "line 2",
            "planar 2\nhello\n": "line 2",
        }
        for text, where in cases.items():
            with self.subTest(text=text):
                with self.assertRaises(ParseError) as ctx:
                    parse_graph(text.splitlines())
                self.assertIn(where, str(ctx.exception))

    def test_missing_rotation(self):
        with self.assertRaises(ParseError):
            parse_graph(["planar 3", "0: 1", "1: 0"])

    def test_empty(self):
        with self.assertRaises(ParseError):
            parse_graph(["# nothing", ""])


class TestFiles(unittest.TestCase):
    def setUp(self):
        self.test_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.test_dir)

    def test_write_and_read_graph(self):
        g = wheel(5).graph
        path = os.path.join(self.test_dir, "wheel.graph")
        write_graph(path, g, (1, 2, 3))
        parsed = read_graph(path)
        self.assertEqual(parsed.graph.rotations, g.rotations)
        self.assertEqual(parsed.roots, (1, 2, 3))

    def test_sample10_wood(self):
        parsed = read_graph(SAMPLE10_GRAPH_PATH)
        susp = suspend(parsed.graph, parsed.roots)
        wood = read_wood(SAMPLE10_WOOD_PATH, susp)
        self.assertEqual(check_wood(wood), [])

        path = os.path.join(self.test_dir, "sample10.wood")
        write_wood(path, wood)
        self.assertEqual(read_wood(path, susp).out_color, wood.out_color)


class TestTrees(unittest.TestCase):
    def setUp(self):
        self.g = parse_graph(K4_TEXT.splitlines()).graph

    def test_parse_tree(self):
        edges = parse_tree(self.g, "2-3 3-1\n0-1")
        self.assertEqual(len(edges), 3)
        self.assertEqual(format_edges(self.g, edges), "0-1 1-3 2-3")

    def test_parse_tree_errors(self):
        for text in ("0-1 1_2", "0-1 1-x", "0-7", "1-1"):
            with self.subTest(text=text):
                with self.assertRaises(ParseError):
                    parse_tree(self.g, text)


if __name__ == "__main__":
    unittest.main()
