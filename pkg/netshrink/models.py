"""
CORE DATA MODELS
================
Contains the graph model every algorithm in netshrink operates on, and the
structural statistics reported for a network: average degree, connected
components, the heterogeneity index and the one-line network summary.

Graphs are undirected and simple. Node labels are non-negative integers and
are kept as-is by every operation returning a subgraph, so the same node can
be followed across reduction levels. All "for each node" iteration happens in
ascending label order.
"""

import logging
import operator
from collections import namedtuple

import networkx as nx
import numpy as np

from .errors import DomainError, EdgeListError


logger = logging.getLogger(__name__)


NetworkSummary = namedtuple(
	'NetworkSummary', 'n m avg_degree heterogeneity s_lcc n_lcc')
NetworkSummary.__doc__ = """
Table-style topology summary of a network.

n, m: node and edge counts. avg_degree: 2m/n. heterogeneity: the degree
heterogeneity index in [0, 1]. s_lcc: relative size n_lcc/n of the largest
connected component.
"""


def _to_label(token, line):
	"""
	Convert one edge-list token to a node label.

	:param token: int or string token.
	:param int line: 1-based position used in the error message.
	:return: non-negative int label.
	"""
	if isinstance(token, bool):
		raise EdgeListError(line, 'boolean %r is not a node label' % token)
	if isinstance(token, str):
		token = token.strip()
		if not token.isdigit():
			raise EdgeListError(line, '%r is not a non-negative integer' % token)
		return int(token)
	try:
		label = operator.index(token)
	except TypeError:
		raise EdgeListError(line, '%r is not an integer label' % (token,))
	if label < 0:
		raise EdgeListError(line, 'negative label %d' % label)
	return label


class Graph(object):
	"""
	Immutable undirected simple graph with stable integer node labels.

	The graph is stored in a frozen networkx.Graph whose nodes and edges were
	inserted in ascending order, so adjacency iteration is deterministic.
	Self-loops are dropped and parallel or reversed duplicate edges are
	collapsed on construction. Mutating algorithms work on the private copy
	returned by to_networkx().

	>>> g = Graph(edges=[(0, 1), (1, 2)])
	>>> g.n, g.m, g.neighbors(1)
	(3, 2, (0, 2))
	"""

	def __init__(self, nodes=(), edges=()):
		"""
		:param nodes: iterable of node labels (isolated nodes allowed).
		:param edges: iterable of (label, label) pairs.
		"""
		node_set = set(nodes)
		edge_set = set()
		for u, v in edges:
			node_set.add(u)
			node_set.add(v)
			if u == v:
				continue
			edge_set.add((u, v) if u < v else (v, u))
		graph = nx.Graph()
		graph.add_nodes_from(sorted(node_set))
		graph.add_edges_from(sorted(edge_set))
		self._graph = nx.freeze(graph)
		self._nodes = tuple(sorted(node_set))
		self._edges = tuple(sorted(edge_set))
		self._neighbors = {}
		self._indexed = None

	@classmethod
	def from_networkx(cls, graph):
		""" Build a Graph from any networkx graph, ignoring attributes. """
		return cls(graph.nodes(), graph.edges())

	def __getstate__(self):
		return {'nodes': self._nodes, 'edges': self._edges}

	def __setstate__(self, state):
		self.__init__(state['nodes'], state['edges'])

	def __repr__(self):
		return 'Graph(n=%d, m=%d)' % (self.n, self.m)

	def __len__(self):
		return len(self._nodes)

	def __iter__(self):
		return iter(self._nodes)

	def __contains__(self, label):
		return label in self._graph

	def __eq__(self, other):
		if not isinstance(other, Graph):
			return NotImplemented
		return self._nodes == other._nodes and self._edges == other._edges

	def __ne__(self, other):
		result = self.__eq__(other)
		if result is NotImplemented:
			return result
		return not result

	def __hash__(self):
		return hash((self._nodes, self._edges))

	@property
	def n(self):
		""" Number of nodes. """
		return len(self._nodes)

	@property
	def m(self):
		""" Number of edges. """
		return len(self._edges)

	edge_count = m

	@property
	def nodes(self):
		""" Tuple of node labels in ascending order. """
		return self._nodes

	node_ids = nodes

	@property
	def nx(self):
		""" The frozen (read-only) networkx view of this graph. """
		return self._graph

	def edges(self):
		""" Tuple of (u, v) edges with u < v, in ascending order. """
		return self._edges

	def degree(self, label):
		return self._graph.degree[label]

	def degrees(self):
		""" Dict of label -> degree in ascending label order. """
		return dict((u, self._graph.degree[u]) for u in self._nodes)

	def neighbors(self, label):
		""" Sorted tuple of the neighbors of label. """
		try:
			return self._neighbors[label]
		except KeyError:
			result = tuple(sorted(self._graph.adj[label]))
			self._neighbors[label] = result
			return result

	def has_edge(self, u, v):
		return self._graph.has_edge(u, v)

	def subgraph(self, nodes):
		"""
		Induced subgraph on the given labels. Labels not in the graph are
		ignored; original labels are kept.

		:param nodes: iterable of labels to keep.
		:return: a new Graph.
		"""
		keep = set(label for label in nodes if label in self._graph)
		return Graph(keep, self._graph.subgraph(keep).edges())

	def to_networkx(self):
		""" Mutable networkx copy with the same insertion order. """
		graph = nx.Graph()
		graph.add_nodes_from(self._nodes)
		graph.add_edges_from(self._edges)
		return graph

	def indexed(self):
		"""
		Compact index form used by the simulation loops.

		:return: (labels, index, neighbor_index) where labels is the sorted
		         label tuple, index maps label -> position and
		         neighbor_index[i] is a list of neighbor positions of node i.
		"""
		if self._indexed is None:
			index = dict((label, i) for i, label in enumerate(self._nodes))
			neighbor_index = [
				[index[v] for v in self.neighbors(u)] for u in self._nodes]
			self._indexed = (self._nodes, index, neighbor_index)
		return self._indexed

	def relabel_compact(self):
		"""
		Export copy with labels re-compacted to 0..n-1 in ascending order of
		the original labels.

		:return: (Graph, dict old_label -> new_label)
		"""
		mapping = dict((label, i) for i, label in enumerate(self._nodes))
		edges = [(mapping[u], mapping[v]) for u, v in self._edges]
		return Graph(range(self.n), edges), mapping

	def check_invariants(self):
		"""
		Full scan of the structural invariants. Raises AssertionError when
		one does not hold.
		"""
		degree_sum = 0
		for u in self._nodes:
			nbrs = self._graph.adj[u]
			assert u not in nbrs, 'self-loop at %d' % u
			for v in nbrs:
				assert u in self._graph.adj[v], 'asymmetric edge %d-%d' % (u, v)
			degree_sum += len(nbrs)
		assert degree_sum == 2 * self.m, 'degree sum %d != 2*%d' % (
			degree_sum, self.m)
		return True


def from_edge_list(pairs):
	"""
	Build a Graph from a sequence of label pairs. Self-loops are dropped,
	duplicate and reversed-duplicate edges collapse, and the order of the
	pairs does not matter.

	>>> from_edge_list([(0, 1), (1, 0), (2, 2), (1, 2)])
	Graph(n=3, m=2)

	:param pairs: sequence of 2-item sequences of labels (ints or digit
	              strings).
	:return: Graph
	"""
	edges = []
	for line, pair in enumerate(pairs, 1):
		try:
			u, v = pair
		except (TypeError, ValueError):
			raise EdgeListError(line, 'expected two labels, got %r' % (pair,))
		edges.append((_to_label(u, line), _to_label(v, line)))
	return Graph(edges=edges)


def _require_nodes(g, minimum=1):
	if g.n < minimum:
		raise DomainError('operation needs a graph with at least %d node(s), '
		                  'got %d' % (minimum, g.n))


def average_degree(g):
	""" Average degree 2M/N of a non-empty graph. """
	_require_nodes(g)
	return 2.0 * g.m / g.n


def connected_components(g):
	"""
	Connected components ordered by size (largest first), ties broken by the
	smallest minimum label.

	:return: list of sorted label tuples.
	"""
	components = [tuple(sorted(c)) for c in nx.connected_components(g.nx)]
	components.sort(key=lambda c: (-len(c), c[0]))
	return components


def largest_connected_component(g):
	"""
	Induced subgraph on the largest connected component. Ties between equally
	large components go to the one holding the smaller minimum label. A
	connected graph is returned unchanged.
	"""
	_require_nodes(g)
	largest = connected_components(g)[0]
	if len(largest) == g.n:
		return g
	return g.subgraph(largest)


def is_connected(g):
	""" True if g consists of a single connected component. """
	_require_nodes(g)
	return nx.is_connected(g.nx)


def heterogeneity_index(g):
	"""
	Degree heterogeneity index taken from the Lorenz curve of the degree
	sequence: with degrees sorted ascending as k_1 <= ... <= k_N,

	    H = sum_i (2i - N - 1) k_i / (N * sum_i k_i)

	which is 0 for any regular graph, grows with the spread of the degree
	distribution and stays below 1. A graph without edges is regular (H = 0).
	Integer arithmetic keeps the regular case exact.

	:return: float in [0, 1)
	"""
	_require_nodes(g, 2)
	k = np.sort(np.fromiter((g.degree(u) for u in g.nodes), dtype=np.int64,
	                        count=g.n))
	total = int(k.sum())
	if total == 0:
		return 0.0
	weights = 2 * np.arange(1, g.n + 1, dtype=np.int64) - g.n - 1
	return int(np.dot(weights, k)) / float(g.n * total)


def summarize(g):
	""" NetworkSummary of g (needs at least two nodes). """
	_require_nodes(g, 2)
	n_lcc = len(connected_components(g)[0])
	return NetworkSummary(
		n=g.n, m=g.m, avg_degree=average_degree(g),
		heterogeneity=heterogeneity_index(g), s_lcc=n_lcc / float(g.n),
		n_lcc=n_lcc)
