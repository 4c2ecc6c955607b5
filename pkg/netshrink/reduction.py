"""
REDUCTION
=========
Network reduction by node removal and edge pruning.

NRDC removes the floor(qN) nodes of lowest degree centrality. The ranking is
computed once on the original graph, ties going to the smaller label, so the
survivor sets of increasing q values are nested. When the survivors are
denser than the original network, NRDC' follows up with edge pruning: nodes
are swept in ascending label order, and each node above the k_min floor
drops the edge to its lowest-degree neighbor unless that disconnects the
graph, until the average degree is within the tolerance of the target.

>>> sub, trace = nrdc_prime(g, ReductionParams.from_level(3))
"""
import logging
import math
from collections import namedtuple

import networkx as nx

from .config import CONFIG as cfg
from .errors import ConfigurationError, DomainError, PreconditionError
from .models import (
	Graph, average_degree, connected_components, is_connected,
	largest_connected_component)


logger = logging.getLogger(__name__)

EvolutionRow = namedtuple('EvolutionRow', 'q degree_ratio s_lcc')

# guards float products such as 0.875 * 5000 against rounding down
_FLOOR_EPS = 1e-9


def level_to_q(level):
	""" Removal ratio q = 1 - 1/2^l of reduction level l. """
	if not isinstance(level, int) or level < 0:
		raise ConfigurationError('level must be a non-negative integer, got %r'
		                         % (level,))
	return 1.0 - 1.0 / 2 ** level


def removal_count(n, q):
	""" Number of nodes removed at ratio q: floor(q * n). """
	return int(math.floor(q * n + _FLOOR_EPS))


class ReductionParams(object):
	"""
	Controls NRDC and NRDC'.

	:param float q: node removal ratio in [0, 1).
	:param int k_min: nodes of degree <= k_min are never swept by pruning.
	:param float degree_tolerance: pruning stops once <k> - target falls
	                               below this value.
	:param bool lcc_fallback: replace a disconnected NRDC result by its
	                          largest connected component.
	:param int level: when given, overrides q with 1 - 1/2^level.
	"""

	def __init__(self, q=0.0, k_min=None, degree_tolerance=None,
	             lcc_fallback=None, level=None):
		if level is not None:
			q = level_to_q(level)
		self.level = level
		self.q = q
		self.k_min = cfg.k_min if k_min is None else k_min
		self.degree_tolerance = cfg.degree_tolerance \
			if degree_tolerance is None else degree_tolerance
		self.lcc_fallback = cfg.lcc_fallback \
			if lcc_fallback is None else bool(lcc_fallback)
		self.validate()

	@classmethod
	def from_level(cls, level, **kwargs):
		return cls(level=level, **kwargs)

	def __repr__(self):
		return ('ReductionParams(q=%r, k_min=%d, degree_tolerance=%r, '
		        'lcc_fallback=%s)' % (self.q, self.k_min,
		                              self.degree_tolerance, self.lcc_fallback))

	def validate(self):
		if not 0.0 <= self.q < 1.0:
			raise ConfigurationError('q must lie in [0, 1), got %r' % (self.q,))
		if not isinstance(self.k_min, int) or self.k_min < 1:
			raise ConfigurationError('k_min must be an integer >= 1, got %r'
			                         % (self.k_min,))
		if not self.degree_tolerance > 0:
			raise ConfigurationError('degree_tolerance must be > 0, got %r'
			                         % (self.degree_tolerance,))

	def to_dict(self):
		return {'q': self.q, 'level': self.level, 'k_min': self.k_min,
		        'degree_tolerance': self.degree_tolerance,
		        'lcc_fallback': self.lcc_fallback}


class ReductionTrace(object):
	"""
	Audit record of one reduction. removed_nodes lists labels in removal
	order (nodes dropped by the LCC fallback come last, ascending);
	pruned_edges lists (u, v) pairs with u < v in pruning order.
	"""

	def __init__(self, avg_degree_before=float('nan')):
		self.removed_nodes = []
		self.pruned_edges = []
		self.avg_degree_before = avg_degree_before
		self.avg_degree_after = avg_degree_before
		self.connected_after = None
		self.lcc_applied = False
		self.pruning_applied = False
		self.stalled = False
		self.sweeps = 0

	def __repr__(self):
		return ('ReductionTrace(removed=%d, pruned=%d, avg_degree %.4f -> '
		        '%.4f, connected=%s, stalled=%s)' % (
		            len(self.removed_nodes), len(self.pruned_edges),
		            self.avg_degree_before, self.avg_degree_after,
		            self.connected_after, self.stalled))

	def finish(self, graph):
		""" Record the after-state from the output graph. """
		self.avg_degree_after = average_degree(graph)
		self.connected_after = is_connected(graph)
		return self

	def to_dict(self):
		return {
			'removed_nodes': list(self.removed_nodes),
			'pruned_edges': [list(edge) for edge in self.pruned_edges],
			'avg_degree_before': self.avg_degree_before,
			'avg_degree_after': self.avg_degree_after,
			'connected_after': self.connected_after,
			'lcc_applied': self.lcc_applied,
			'pruning_applied': self.pruning_applied,
			'stalled': self.stalled,
			'sweeps': self.sweeps,
		}


def degree_ranking(g):
	""" Labels in ascending (degree, label) order. """
	return sorted(g.nodes, key=lambda u: (g.degree(u), u))


def nrdc(g, params):
	"""
	Node removal by degree centrality.

	Removes exactly floor(q N) nodes, lowest degree first (degrees of the
	original graph, ties by ascending label), and returns the induced
	subgraph on the survivors. With params.lcc_fallback a disconnected result
	is replaced by its largest connected component.

	:param Graph g: graph with at least 2 nodes.
	:param ReductionParams params: q, lcc_fallback.
	:return: (Graph, ReductionTrace)
	"""
	params.validate()
	if g.n < 2:
		raise DomainError('nrdc needs at least 2 nodes, got %d' % g.n)
	count = removal_count(g.n, params.q)
	if params.q > 0 and count < 1:
		raise ConfigurationError(
			'q=%r removes no node of a %d-node graph' % (params.q, g.n))
	trace = ReductionTrace(average_degree(g))
	if count == 0:
		return g, trace.finish(g)

	ranking = degree_ranking(g)
	trace.removed_nodes = ranking[:count]
	sub = g.subgraph(ranking[count:])
	logger.info('NRDC q=%.4f: removed %d of %d nodes, <k> %.4f -> %.4f' % (
		params.q, count, g.n, trace.avg_degree_before, average_degree(sub)))

	if params.lcc_fallback and not is_connected(sub):
		sub = _keep_lcc(sub, trace)
	return sub, trace.finish(sub)


def _keep_lcc(sub, trace):
	""" LCC of sub; the dropped labels are appended to trace.removed_nodes. """
	lcc = largest_connected_component(sub)
	dropped = sorted(set(sub.nodes).difference(lcc.nodes))
	trace.removed_nodes.extend(dropped)
	trace.lcc_applied = True
	logger.warning('NRDC result is disconnected, keeping its LCC of %d '
	               'nodes (dropped %d)' % (lcc.n, len(dropped)))
	return lcc


def edge_prune(g_sub, target_avg_degree, k_min=None, degree_tolerance=None):
	"""
	Edge pruning toward a target average degree.

	Sweeps the nodes in ascending label order. A node u with degree above
	k_min removes the edge to its lowest-degree neighbor v (ties by label);
	the edge is put back when u can no longer reach v. Only u's degree is
	checked against k_min. After each candidate the average degree is
	compared with the target and pruning stops as soon as
	<k> - target < degree_tolerance. A full sweep without any removal stops
	pruning as well and marks the trace as stalled.

	:param Graph g_sub: connected graph.
	:param float target_avg_degree: the average degree to approach.
	:param int k_min: minimum degree eligible for pruning.
	:param float degree_tolerance: stopping tolerance.
	:return: (Graph, ReductionTrace); the input graph when it is not denser
	         than the target.
	"""
	if k_min is None:
		k_min = cfg.k_min
	if degree_tolerance is None:
		degree_tolerance = cfg.degree_tolerance
	if g_sub.n == 0:
		raise DomainError('edge_prune needs a non-empty graph')
	if not is_connected(g_sub):
		raise PreconditionError('edge_prune needs a connected graph, got %d '
		                        'components' % len(connected_components(g_sub)))
	trace = ReductionTrace(average_degree(g_sub))
	if trace.avg_degree_before - target_avg_degree < degree_tolerance:
		return g_sub, trace.finish(g_sub)

	trace.pruning_applied = True
	work = g_sub.to_networkx()
	degree = work.degree
	n = g_sub.n
	m = g_sub.m
	finished = False
	while not finished:
		trace.sweeps += 1
		removed = 0
		for u in g_sub.nodes:
			if degree[u] <= k_min:
				continue
			v = min(work.adj[u], key=lambda w: (degree[w], w))
			work.remove_edge(u, v)
			if nx.has_path(work, u, v):
				m -= 1
				removed += 1
				trace.pruned_edges.append((u, v) if u < v else (v, u))
			else:
				work.add_edge(u, v)
			if 2.0 * m / n - target_avg_degree < degree_tolerance:
				finished = True
				break
		logger.debug('Pruning sweep %d removed %d edges, <k>=%.4f' % (
			trace.sweeps, removed, 2.0 * m / n))
		if not finished and removed == 0:
			trace.stalled = True
			logger.warning('Edge pruning stalled at <k>=%.4f (target %.4f): '
			               'no removable edge left' % (
			                   2.0 * m / n, target_avg_degree))
			break

	pruned = Graph(g_sub.nodes, work.edges())
	return pruned, trace.finish(pruned)


def nrdc_prime(g, params):
	"""
	NRDC followed by edge pruning toward the original average degree when
	the reduced graph is denser than the original. Homogeneous networks,
	whose average degree does not grow under node removal, skip pruning. A
	disconnected reduced graph that needs pruning is first replaced by its
	largest connected component, whatever params.lcc_fallback says.

	:param Graph g: connected graph.
	:param ReductionParams params: q, k_min, degree_tolerance, lcc_fallback.
	:return: (Graph, ReductionTrace)
	"""
	if g.n < 2:
		raise DomainError('nrdc_prime needs at least 2 nodes, got %d' % g.n)
	if not is_connected(g):
		raise PreconditionError('nrdc_prime needs a connected input graph')
	target = average_degree(g)
	sub, trace = nrdc(g, params)
	if average_degree(sub) > target:
		if not is_connected(sub):
			sub = _keep_lcc(sub, trace)
		sub, pruning = edge_prune(
			sub, target, params.k_min, params.degree_tolerance)
		trace.pruned_edges = pruning.pruned_edges
		trace.pruning_applied = pruning.pruning_applied
		trace.stalled = pruning.stalled
		trace.sweeps = pruning.sweeps
		logger.info('NRDC\' pruned %d edges, <k> -> %.4f (target %.4f)' % (
			len(trace.pruned_edges), average_degree(sub), target))
	return sub, trace.finish(sub)


def reduce_graph(g, params, method='nrdc'):
	""" Dispatch on method: 'nrdc' or 'nrdc-prime'. """
	if method == 'nrdc':
		return nrdc(g, params)
	if method in ('nrdc-prime', 'nrdc_prime'):
		return nrdc_prime(g, params)
	raise ConfigurationError('unknown reduction method %r' % (method,))


def degree_evolution(g, q_grid):
	"""
	Relative average degree <k>_s/<k>_0 and relative LCC size of the NRDC
	subgraph (without LCC fallback) for each removal ratio.

	:param Graph g: graph with at least one edge.
	:param q_grid: removal ratios in [0, 0.9].
	:return: list of EvolutionRow(q, degree_ratio, s_lcc)
	"""
	q_values = [float(q) for q in q_grid]
	for q in q_values:
		if not 0.0 <= q <= 0.9:
			raise ConfigurationError('q grid values must lie in [0, 0.9], '
			                         'got %r' % q)
	k0 = average_degree(g)
	if k0 == 0:
		raise DomainError('degree_evolution needs a graph with edges')
	ranking = degree_ranking(g)
	rows = []
	for q in q_values:
		sub = g.subgraph(ranking[removal_count(g.n, q):])
		n_lcc = len(connected_components(sub)[0])
		rows.append(EvolutionRow(
			q, average_degree(sub) / k0, n_lcc / float(sub.n)))
	return rows


def average_evolution(tables):
	"""
	Pointwise mean of several degree_evolution tables sharing one q grid,
	e.g. over independent realizations of a synthetic network.
	"""
	tables = list(tables)
	if not tables:
		raise ConfigurationError('no evolution tables to average')
	q_grid = [row.q for row in tables[0]]
	for table in tables[1:]:
		if [row.q for row in table] != q_grid:
			raise ConfigurationError('evolution tables use different q grids')
	count = float(len(tables))
	return [
		EvolutionRow(
			q,
			sum(table[i].degree_ratio for table in tables) / count,
			sum(table[i].s_lcc for table in tables) / count)
		for i, q in enumerate(q_grid)]
