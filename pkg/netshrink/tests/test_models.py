import pickle
import unittest
from unittest import TestCase

import networkx as nx

from netshrink import models
from netshrink.config import CONFIG
from netshrink.errors import DomainError, EdgeListError


def complete(n):
	return models.Graph(range(n), [(u, v) for u in range(n)
	                               for v in range(u + 1, n)])


class TestFromEdgeList(TestCase):
	def setUp(self):
		CONFIG.reset_defaults()

	def test_duplicates_and_self_loops(self):
		g = models.from_edge_list([(0, 1), (1, 0), (2, 2), (1, 2)])
		self.assertEqual(g.n, 3)
		self.assertEqual(g.m, 2)
		self.assertTupleEqual(g.edges(), ((0, 1), (1, 2)))

	def test_self_loop_keeps_node(self):
		g = models.from_edge_list([(5, 5)])
		self.assertEqual(g.n, 1)
		self.assertEqual(g.m, 0)

	def test_order_independent(self):
		a = models.from_edge_list([(3, 1), (1, 2), (2, 3)])
		b = models.from_edge_list([(2, 1), (3, 2), (1, 3)])
		self.assertEqual(a, b)

	def test_digit_strings(self):
		g = models.from_edge_list([('7', '12')])
		self.assertTupleEqual(g.nodes, (7, 12))

	def test_negative_label(self):
		with self.assertRaises(EdgeListError) as ctx:
			models.from_edge_list([(0, 1), (1, -2)])
		self.assertEqual(ctx.exception.line, 2)

	def test_non_integer_label(self):
		self.assertRaises(EdgeListError, models.from_edge_list, [('a', 1)])
		self.assertRaises(EdgeListError, models.from_edge_list, [(1.5, 1)])

	def test_bad_pair(self):
		self.assertRaises(EdgeListError, models.from_edge_list, [(1, 2, 3)])

	def test_empty(self):
		g = models.from_edge_list([])
		self.assertEqual(g.n, 0)
		self.assertEqual(g.m, 0)


class TestGraph(TestCase):
	def setUp(self):
		CONFIG.reset_defaults()
		self.g = models.Graph(edges=[(4, 2), (2, 9), (9, 4), (9, 11)])

	def test_neighbors_sorted(self):
		self.assertTupleEqual(self.g.neighbors(9), (2, 4, 11))

	def test_degree(self):
		self.assertEqual(self.g.degree(9), 3)
		self.assertDictEqual(self.g.degrees(), {2: 2, 4: 2, 9: 3, 11: 1})

	def test_subgraph_keeps_labels(self):
		sub = self.g.subgraph([9, 11, 100])
		self.assertTupleEqual(sub.nodes, (9, 11))
		self.assertTupleEqual(sub.edges(), ((9, 11),))

	def test_relabel_compact(self):
		compact, mapping = self.g.relabel_compact()
		self.assertTupleEqual(compact.nodes, (0, 1, 2, 3))
		self.assertDictEqual(mapping, {2: 0, 4: 1, 9: 2, 11: 3})
		self.assertTrue(compact.has_edge(2, 3))

	def test_indexed(self):
		labels, index, neighbors = self.g.indexed()
		self.assertTupleEqual(labels, (2, 4, 9, 11))
		self.assertEqual(index[9], 2)
		self.assertListEqual(neighbors[2], [0, 1, 3])

	def test_frozen_view(self):
		self.assertRaises(nx.NetworkXError, self.g.nx.add_edge, 1, 2)

	def test_to_networkx_is_copy(self):
		copy = self.g.to_networkx()
		copy.remove_edge(2, 4)
		self.assertTrue(self.g.has_edge(2, 4))

	def test_pickle(self):
		restored = pickle.loads(pickle.dumps(self.g))
		self.assertEqual(restored, self.g)
		self.assertTupleEqual(restored.neighbors(9), (2, 4, 11))

	def test_check_invariants(self):
		self.assertTrue(self.g.check_invariants())

	def test_contains(self):
		self.assertIn(11, self.g)
		self.assertNotIn(3, self.g)


class TestAverageDegree(TestCase):
	def setUp(self):
		CONFIG.reset_defaults()

	def test_complete(self):
		self.assertEqual(models.average_degree(complete(4)), 3.0)

	def test_isolated(self):
		self.assertEqual(models.average_degree(models.Graph([1, 2, 3])), 0.0)

	def test_empty(self):
		self.assertRaises(DomainError, models.average_degree, models.Graph())


class TestComponents(TestCase):
	def setUp(self):
		CONFIG.reset_defaults()

	def test_order(self):
		g = models.Graph(edges=[(7, 8), (1, 2), (2, 3), (4, 5)])
		self.assertListEqual(models.connected_components(g),
		                     [(1, 2, 3), (4, 5), (7, 8)])

	def test_lcc_tie_goes_to_smaller_label(self):
		g = models.Graph(edges=[(10, 11), (3, 20)])
		lcc = models.largest_connected_component(g)
		self.assertTupleEqual(lcc.nodes, (3, 20))

	def test_lcc_of_connected_graph_is_same(self):
		g = complete(5)
		self.assertIs(models.largest_connected_component(g), g)

	def test_is_connected(self):
		self.assertTrue(models.is_connected(complete(3)))
		self.assertTrue(models.is_connected(models.Graph([0])))
		self.assertFalse(models.is_connected(models.Graph([0, 1])))


class TestHeterogeneityIndex(TestCase):
	def setUp(self):
		CONFIG.reset_defaults()

	def test_regular(self):
		self.assertEqual(models.heterogeneity_index(complete(6)), 0.0)
		ring = models.Graph(edges=[(i, (i + 1) % 10) for i in range(10)])
		self.assertEqual(models.heterogeneity_index(ring), 0.0)

	def test_star(self):
		star = models.Graph(edges=[(0, 1), (0, 2), (0, 3)])
		self.assertAlmostEqual(models.heterogeneity_index(star), 0.25)

	def test_path(self):
		path = models.Graph(edges=[(0, 1), (1, 2)])
		self.assertAlmostEqual(models.heterogeneity_index(path), 1.0 / 6)

	def test_no_edges(self):
		self.assertEqual(models.heterogeneity_index(models.Graph([0, 1])), 0.0)

	def test_bounds(self):
		g = models.Graph.from_networkx(nx.barabasi_albert_graph(300, 2, seed=3))
		self.assertTrue(0 < models.heterogeneity_index(g) < 1)

	def test_single_node(self):
		self.assertRaises(DomainError, models.heterogeneity_index,
		                  models.Graph([0]))


class TestSummarize(TestCase):
	def setUp(self):
		CONFIG.reset_defaults()

	def test_summary(self):
		g = models.Graph(edges=[(0, 1), (1, 2), (2, 0), (5, 6)])
		summary = models.summarize(g)
		self.assertEqual(summary.n, 5)
		self.assertEqual(summary.m, 4)
		self.assertAlmostEqual(summary.avg_degree, 1.6)
		self.assertEqual(summary.n_lcc, 3)
		self.assertAlmostEqual(summary.s_lcc, 0.6)


if __name__ == '__main__':
	unittest.main()
