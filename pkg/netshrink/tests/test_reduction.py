import unittest
from unittest import TestCase

import networkx as nx

from netshrink import reduction
from netshrink.config import CONFIG
from netshrink.errors import ConfigurationError, DomainError, PreconditionError
from netshrink.models import Graph, average_degree, is_connected


def complete(n):
	return Graph(range(n), [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(leaves):
	return Graph(edges=[(0, leaf) for leaf in range(1, leaves + 1)])


def from_nx(graph):
	return Graph.from_networkx(graph)


class TestReductionParams(TestCase):
	def setUp(self):
		CONFIG.reset_defaults()

	def test_level_to_q(self):
		self.assertEqual(reduction.level_to_q(0), 0.0)
		self.assertEqual(reduction.level_to_q(1), 0.5)
		self.assertEqual(reduction.level_to_q(3), 0.875)
		self.assertRaises(ConfigurationError, reduction.level_to_q, -1)

	def test_defaults_from_config(self):
		CONFIG.k_min = 5
		params = reduction.ReductionParams.from_level(2)
		self.assertEqual(params.q, 0.75)
		self.assertEqual(params.k_min, 5)
		self.assertEqual(params.degree_tolerance, 0.1)
		self.assertFalse(params.lcc_fallback)

	def test_invalid(self):
		self.assertRaises(ConfigurationError, reduction.ReductionParams, q=1.0)
		self.assertRaises(ConfigurationError, reduction.ReductionParams, q=-0.1)
		self.assertRaises(ConfigurationError, reduction.ReductionParams, k_min=0)
		self.assertRaises(ConfigurationError, reduction.ReductionParams,
		                  degree_tolerance=0)

	def test_removal_count(self):
		self.assertEqual(reduction.removal_count(5000, 0.875), 4375)
		self.assertEqual(reduction.removal_count(10, 0.35), 3)


class TestNrdc(TestCase):
	def setUp(self):
		CONFIG.reset_defaults()

	def test_q_zero_is_identity(self):
		g = complete(5)
		sub, trace = reduction.nrdc(g, reduction.ReductionParams(q=0.0))
		self.assertEqual(sub, g)
		self.assertListEqual(trace.removed_nodes, [])
		self.assertListEqual(trace.pruned_edges, [])

	def test_star(self):
		sub, trace = reduction.nrdc(star(5), reduction.ReductionParams(q=0.5))
		self.assertListEqual(trace.removed_nodes, [1, 2, 3])
		self.assertTupleEqual(sub.nodes, (0, 4, 5))
		self.assertAlmostEqual(average_degree(sub), 4.0 / 3)
		self.assertAlmostEqual(trace.avg_degree_after, 4.0 / 3)
		self.assertTrue(trace.connected_after)

	def test_exact_count_and_labels(self):
		g = from_nx(nx.barabasi_albert_graph(200, 3, seed=7))
		sub, trace = reduction.nrdc(g, reduction.ReductionParams.from_level(2))
		self.assertEqual(sub.n, 200 - 150)
		self.assertEqual(len(trace.removed_nodes), 150)
		self.assertTrue(set(sub.nodes).isdisjoint(trace.removed_nodes))
		for u, v in sub.edges():
			self.assertTrue(g.has_edge(u, v))

	def test_lowest_degree_removed(self):
		g = from_nx(nx.barabasi_albert_graph(300, 2, seed=1))
		sub, trace = reduction.nrdc(g, reduction.ReductionParams(q=0.5))
		kept = min(g.degree(u) for u in sub.nodes)
		removed = max(g.degree(u) for u in trace.removed_nodes)
		self.assertLessEqual(removed, kept)

	def test_nested_survivors(self):
		g = from_nx(nx.gnp_random_graph(120, 0.05, seed=3))
		previous = None
		for q in (0.0, 0.25, 0.5, 0.75):
			sub, _ = reduction.nrdc(g, reduction.ReductionParams(q=q))
			if previous is not None:
				self.assertTrue(set(sub.nodes) <= previous)
			previous = set(sub.nodes)

	def test_lcc_fallback(self):
		# connector 0 of degree 2 joins the triangles 1-2-3 and 4-5-6
		g = Graph(edges=[(0, 1), (0, 4), (1, 2), (2, 3), (3, 1),
		                 (4, 5), (5, 6), (6, 4)])
		sub, trace = reduction.nrdc(g, reduction.ReductionParams(q=0.15))
		self.assertFalse(is_connected(sub))
		self.assertFalse(trace.connected_after)
		params = reduction.ReductionParams(q=0.15, lcc_fallback=True)
		sub, trace = reduction.nrdc(g, params)
		self.assertTupleEqual(sub.nodes, (1, 2, 3))
		self.assertListEqual(trace.removed_nodes, [0, 4, 5, 6])
		self.assertTrue(trace.lcc_applied)
		self.assertTrue(trace.connected_after)

	def test_too_small_q(self):
		self.assertRaises(ConfigurationError, reduction.nrdc, complete(3),
		                  reduction.ReductionParams(q=0.2))

	def test_single_node(self):
		self.assertRaises(DomainError, reduction.nrdc, Graph([0]),
		                  reduction.ReductionParams(q=0.0))

	def test_deterministic(self):
		g = from_nx(nx.barabasi_albert_graph(150, 2, seed=2))
		params = reduction.ReductionParams.from_level(1)
		a = reduction.nrdc(g, params)
		b = reduction.nrdc(g, params)
		self.assertEqual(a[0], b[0])
		self.assertDictEqual(a[1].to_dict(), b[1].to_dict())


class TestEdgePrune(TestCase):
	def setUp(self):
		CONFIG.reset_defaults()

	def test_k4_trace(self):
		pruned, trace = reduction.edge_prune(complete(4), 2.1, k_min=2)
		self.assertListEqual(trace.pruned_edges, [(0, 1), (0, 2)])
		self.assertEqual(average_degree(pruned), 2.0)
		self.assertTrue(trace.connected_after)
		self.assertFalse(trace.stalled)
		self.assertEqual(trace.sweeps, 1)

	def test_not_denser_is_unchanged(self):
		g = complete(4)
		pruned, trace = reduction.edge_prune(g, 3.0, k_min=2)
		self.assertIs(pruned, g)
		self.assertListEqual(trace.pruned_edges, [])
		self.assertFalse(trace.pruning_applied)

	def test_disconnected(self):
		self.assertRaises(PreconditionError, reduction.edge_prune,
		                  Graph(edges=[(0, 1), (2, 3)]), 0.5)

	def test_stall_on_tree(self):
		path = Graph(edges=[(0, 1), (1, 2), (2, 3)])
		pruned, trace = reduction.edge_prune(path, 0.0, k_min=1)
		self.assertEqual(pruned, path)
		self.assertTrue(trace.stalled)
		self.assertEqual(trace.sweeps, 1)

	def test_random_graph_postconditions(self):
		g = from_nx(nx.barabasi_albert_graph(400, 6, seed=5))
		target = 5.0
		pruned, trace = reduction.edge_prune(g, target, k_min=2)
		self.assertTrue(is_connected(pruned))
		self.assertEqual(pruned.nodes, g.nodes)
		self.assertEqual(g.m - pruned.m, len(trace.pruned_edges))
		if not trace.stalled:
			self.assertLess(average_degree(pruned) - target, 0.1)
		for u, v in trace.pruned_edges:
			self.assertFalse(pruned.has_edge(u, v))

	def test_input_untouched(self):
		g = complete(5)
		reduction.edge_prune(g, 2.0, k_min=2)
		self.assertEqual(g.m, 10)


class TestNrdcPrime(TestCase):
	def setUp(self):
		CONFIG.reset_defaults()

	def test_q_zero(self):
		g = from_nx(nx.barabasi_albert_graph(100, 2, seed=4))
		sub, trace = reduction.nrdc_prime(g, reduction.ReductionParams(q=0.0))
		self.assertEqual(sub, g)
		self.assertListEqual(trace.pruned_edges, [])

	def test_heterogeneous_graph_is_pruned(self):
		# K10 core, every peripheral node tied to two core nodes
		edges = [(u, v) for u in range(10) for v in range(u + 1, 10)]
		for leaf in range(10, 100):
			edges.extend([(leaf, leaf % 10), (leaf, (leaf + 1) % 10)])
		g = Graph(edges=edges)
		k0 = average_degree(g)
		sub, trace = reduction.nrdc_prime(g, reduction.ReductionParams(q=0.75))
		self.assertEqual(sub.n, 25)
		self.assertTrue(trace.pruning_applied)
		self.assertTrue(is_connected(sub))
		self.assertGreater(len(trace.pruned_edges), 0)
		self.assertTrue(trace.stalled or average_degree(sub) - k0 < 0.1)
		self.assertEqual(75 - sub.m, len(trace.pruned_edges))

	def test_homogeneous_graph_skips_pruning(self):
		g = from_nx(nx.gnp_random_graph(1000, 0.01, seed=6))
		g = g.subgraph(max(nx.connected_components(g.nx), key=len))
		sub, trace = reduction.nrdc_prime(g, reduction.ReductionParams(q=0.5))
		self.assertFalse(trace.pruning_applied)
		self.assertLess(average_degree(sub), average_degree(g))

	def test_disconnected_dense_result_keeps_lcc(self):
		# K6 on 0-5 with ten leaves on node 0, K4 on 6-9, bridge node 20
		edges = [(u, v) for u in range(6) for v in range(u + 1, 6)]
		edges += [(u, v) for u in range(6, 10) for v in range(u + 1, 10)]
		edges += [(0, 20), (20, 6)]
		edges += [(0, leaf) for leaf in range(21, 31)]
		g = Graph(edges=edges)
		params = reduction.ReductionParams(q=0.53)
		sub, _ = reduction.nrdc(g, params)
		self.assertEqual(sub.n, 10)
		self.assertFalse(is_connected(sub))
		self.assertGreater(average_degree(sub), average_degree(g))

		sub, trace = reduction.nrdc_prime(g, params)
		self.assertTrue(trace.lcc_applied)
		self.assertTupleEqual(sub.nodes, (0, 1, 2, 3, 4, 5))
		self.assertListEqual(trace.removed_nodes[-4:], [6, 7, 8, 9])
		self.assertTrue(trace.pruning_applied)
		self.assertTrue(is_connected(sub))
		self.assertEqual(15 - sub.m, len(trace.pruned_edges))
		self.assertTrue(trace.stalled or
		                average_degree(sub) - average_degree(g) < 0.1)

	def test_disconnected_input(self):
		self.assertRaises(PreconditionError, reduction.nrdc_prime,
		                  Graph(edges=[(0, 1), (2, 3)]),
		                  reduction.ReductionParams(q=0.5))

	def test_dispatch(self):
		g = star(7)
		self.assertRaises(ConfigurationError, reduction.reduce_graph, g,
		                  reduction.ReductionParams(), 'kcore')


class TestDegreeEvolution(TestCase):
	def setUp(self):
		CONFIG.reset_defaults()

	def test_first_row(self):
		g = from_nx(nx.barabasi_albert_graph(200, 2, seed=9))
		rows = reduction.degree_evolution(g, [0.0, 0.5])
		self.assertEqual(rows[0], (0.0, 1.0, 1.0))
		self.assertEqual(rows[1].q, 0.5)

	def test_q_range(self):
		self.assertRaises(ConfigurationError, reduction.degree_evolution,
		                  complete(4), [0.95])

	def test_no_edges(self):
		self.assertRaises(DomainError, reduction.degree_evolution,
		                  Graph([0, 1, 2]), [0.0])

	def test_average(self):
		a = [reduction.EvolutionRow(0.0, 1.0, 1.0),
		     reduction.EvolutionRow(0.5, 0.8, 0.6)]
		b = [reduction.EvolutionRow(0.0, 1.0, 1.0),
		     reduction.EvolutionRow(0.5, 1.0, 1.0)]
		mean = reduction.average_evolution([a, b])
		self.assertAlmostEqual(mean[1].degree_ratio, 0.9)
		self.assertAlmostEqual(mean[1].s_lcc, 0.8)
		self.assertRaises(ConfigurationError, reduction.average_evolution,
		                  [a, b[:1]])


if __name__ == '__main__':
	unittest.main()
