import unittest

import networkx as nx

from fourtree.core.completion import compute_wood, minimize
from fourtree.core.gen import platonic, random_triangulation, sample10, wheel
from fourtree.core.plane_graph import suspend, suspended_dual
from fourtree.core.schnyder import (
    Bidirected,
    SchnyderWood,
    Unidirected,
    check_wood,
    double_dual_colors,
    dual_wood,
    format_wood,
    parse_wood,
    tree_union_is_acyclic,
    trees,
)
from fourtree.domain.errors import InvalidWood
from fourtree.utils.constants import SAMPLE10_WOOD_PATH, next_color, prev_color
from fourtree.utils.graph_io import read_wood


class TestSample10Wood(unittest.TestCase):
    def setUp(self):
        inst = sample10()
        self.susp = suspend(inst.graph, inst.roots)
        self.wood = read_wood(SAMPLE10_WOOD_PATH, self.susp)
        self.g = inst.graph

    def test_is_valid(self):
        self.assertEqual(check_wood(self.wood), [])

    def test_trees_span_and_point_to_roots(self):
        for i in (1, 2, 3):
            with self.subTest(color=i):
                arcs = trees(self.wood, i)
                self.assertEqual(len(arcs), self.g.n_vertices - 1)
                tree = nx.DiGraph(arcs)
                root = self.wood.roots[i - 1]
                self.assertEqual(tree.out_degree(root), 0)
                for v in range(self.g.n_vertices):
                    self.assertTrue(v == root or nx.has_path(tree, v, root))

    def test_tree_unions_are_acyclic(self):
        for i in (1, 2, 3):
            self.assertTrue(tree_union_is_acyclic(self.wood, i))

    def test_union_contracts_edges_coloured_both_other_ways(self):
        both_ways = 0
        for i in (1, 2, 3):
            others = {prev_color(i), next_color(i)}
            both_ways += sum(
                {self.wood.out_color[2 * e], self.wood.out_color[2 * e + 1]} == others
                for e in range(self.g.n_edges)
            )
            self.assertTrue(tree_union_is_acyclic(self.wood, i))
        self.assertGreater(both_ways, 0)

    def test_dual_wood_twice_reverses_darts(self):
        dd = dual_wood(dual_wood(self.wood))
        self.assertEqual(check_wood(dd), [])
        self.assertEqual(double_dual_colors(dd, self.g.n_edges), self.wood.out_color)

    def test_every_vertex_has_three_outgoing_colours(self):
        for v in range(self.g.n_vertices):
            self.assertEqual(sorted(self.wood.outgoing(v)), [1, 2, 3])

    def test_labels(self):
        for e in range(self.g.n_edges):
            label = self.wood.label(e)
            self.assertIsInstance(label, (Unidirected, Bidirected))
            self.assertEqual(isinstance(label, Bidirected), self.wood.is_bidirected(e))

    def test_format_and_parse(self):
        again = parse_wood(self.susp, format_wood(self.wood))
        self.assertEqual(again.out_color, self.wood.out_color)

    def test_dual_wood_is_valid(self):
        sd = suspended_dual(self.susp)
        dwood = dual_wood(self.wood, sd)
        self.assertEqual(dwood.roots, sd.b)
        self.assertEqual(check_wood(dwood), [])

    def test_bidirected_edges_become_unidirected_in_the_dual(self):
        dwood = dual_wood(self.wood)
        for e in range(self.g.n_edges):
            self.assertNotEqual(self.wood.is_bidirected(e), dwood.is_bidirected(e))


class TestBrokenWoods(unittest.TestCase):
    def setUp(self):
        inst = wheel(5)
        self.susp = suspend(inst.graph, inst.roots)
        self.wood = compute_wood(self.susp)

    def test_reversed_edge_is_reported(self):
        e = 0
        label = self.wood.label(e)
        u, v = self.susp.base.endpoints(e)
        if isinstance(label, Unidirected):
            other = u if label.toward == v else v
            broken = self.wood.with_label(e, Unidirected(other, label.color))
        else:
            broken = self.wood.with_label(
                e, Bidirected(label.color_toward_v, label.color_toward_u)
            )
        self.assertNotEqual(check_wood(broken), [])

    def test_unlabelled_edge(self):
        colors = list(self.wood.out_color)
        colors[0] = colors[1] = 0
        broken = SchnyderWood(self.susp, tuple(colors))
        conditions = {v.condition for v in check_wood(broken)}
        self.assertIn(0, conditions)
        with self.assertRaises(InvalidWood):
            broken.label(0)

    def test_wrong_half_edge_colours(self):
        broken = SchnyderWood(self.susp, self.wood.out_color, (2, 3, 1))
        self.assertIn(2, {v.condition for v in check_wood(broken)})

    def test_dual_of_invalid_wood_raises(self):
        colors = list(self.wood.out_color)
        colors[0] = colors[1] = 0
        with self.assertRaises(InvalidWood):
            dual_wood(SchnyderWood(self.susp, tuple(colors)))

    def test_two_way_edge_of_one_colour_is_a_cycle(self):
        colors = list(self.wood.out_color)
        colors[0] = colors[1] = 1
        broken = SchnyderWood(self.susp, tuple(colors))
        self.assertFalse(tree_union_is_acyclic(broken, 1))

    def test_parse_errors(self):
        for lines in (["0 1 sideways 1 2"], ["0 1 uni"], ["1 3 uni 3 1"]):
            with self.subTest(lines=lines):
                with self.assertRaises(InvalidWood):
                    parse_wood(self.susp, lines)


class TestComputedWoods(unittest.TestCase):
    def test_minimal_woods_are_valid(self):
        for name in ("tetrahedron", "cube", "octahedron", "icosahedron", "dodecahedron"):
            with self.subTest(name):
                inst = platonic(name)
                susp = suspend(inst.graph, inst.roots)
                wood = minimize(compute_wood(susp))
                self.assertEqual(check_wood(wood), [])
                self.assertEqual(check_wood(dual_wood(wood)), [])
                for i in (1, 2, 3):
                    self.assertEqual(len(trees(wood, i)), inst.graph.n_vertices - 1)

    def test_dual_wood_is_an_involution(self):
        names = ("tetrahedron", "cube", "octahedron", "icosahedron", "dodecahedron")
        instances = [platonic(name) for name in names]
        instances += [random_triangulation(n, seed=n) for n in (12, 30, 60)]
        for inst in instances:
            with self.subTest(inst.name):
                wood = minimize(compute_wood(suspend(inst.graph, inst.roots)))
                dd = dual_wood(dual_wood(wood))
                self.assertEqual(check_wood(dd), [])
                self.assertEqual(double_dual_colors(dd, inst.graph.n_edges), wood.out_color)


if __name__ == "__main__":
    unittest.main()
