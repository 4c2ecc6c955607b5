"""
GENERATORS
==========
Synthetic networks with deterministic seeding: Erdos-Renyi G(n, p) random
graphs and Barabasi-Albert preferential-attachment graphs. The reference
configuration is N = 5000 with average degree 10, i.e. p = 10/4999 for ER
and m = 5 for BA.
"""
import logging

import networkx as nx
import numpy as np

from .errors import ConfigurationError
from .models import Graph


logger = logging.getLogger(__name__)

MODELS = ('er', 'ba')


class GeneratorSpec(object):
	"""
	Parameters of a synthetic network.

	:param str model: 'er' or 'ba' (case-insensitive).
	:param int n: node count, at least 2.
	:param float target_avg_degree: expected average degree (ER only),
	                                0 <= value <= n - 1.
	:param int m: edges attached per new node (BA only), 1 <= m < n.
	:param int seed: non-negative 64-bit seed.
	"""

	def __init__(self, model, n, target_avg_degree=None, m=None, seed=0):
		self.model = str(model).lower()
		self.n = n
		self.target_avg_degree = target_avg_degree
		self.m = m
		self.seed = seed
		self.validate()

	def __repr__(self):
		if self.model == 'er':
			return 'GeneratorSpec(er, n=%d, avg_degree=%s, seed=%d)' % (
				self.n, self.target_avg_degree, self.seed)
		return 'GeneratorSpec(ba, n=%d, m=%d, seed=%d)' % (
			self.n, self.m, self.seed)

	def __eq__(self, other):
		return isinstance(other, GeneratorSpec) and \
			self.to_dict() == other.to_dict()

	def validate(self):
		if self.model not in MODELS:
			raise ConfigurationError('unknown model %r, expected one of %s' % (
				self.model, ', '.join(MODELS)))
		if not isinstance(self.n, int) or self.n < 2:
			raise ConfigurationError('n must be an integer >= 2, got %r' % (
				self.n,))
		if not isinstance(self.seed, int) or not 0 <= self.seed < 2 ** 64:
			raise ConfigurationError('seed must be a 64-bit non-negative '
			                         'integer, got %r' % (self.seed,))
		if self.model == 'er':
			k = self.target_avg_degree
			if k is None or not 0 <= k <= self.n - 1:
				raise ConfigurationError(
					'ER average degree must lie in [0, n-1], got %r' % (k,))
		else:
			if not isinstance(self.m, int) or not 1 <= self.m < self.n:
				raise ConfigurationError(
					'BA m must be an integer in [1, n), got %r' % (self.m,))

	@property
	def p(self):
		""" ER edge probability <k>/(n-1). """
		return float(self.target_avg_degree) / (self.n - 1)

	def to_dict(self):
		data = {'model': self.model, 'n': self.n, 'seed': self.seed}
		if self.model == 'er':
			data['avg_degree'] = self.target_avg_degree
		else:
			data['m'] = self.m
		return data

	@classmethod
	def from_dict(cls, data):
		try:
			return cls(data['model'], data['n'],
			           target_avg_degree=data.get('avg_degree'),
			           m=data.get('m'), seed=data.get('seed', 0))
		except KeyError as exc:
			raise ConfigurationError('generator spec misses %s' % exc)


def erdos_renyi(spec):
	"""
	G(n, p) random graph with p = target_avg_degree / (n - 1). Every one of
	the n(n-1)/2 possible edges is present independently with probability p.

	:param GeneratorSpec spec: an 'er' spec.
	:return: Graph on labels 0..n-1
	"""
	spec.validate()
	if spec.model != 'er':
		raise ConfigurationError('erdos_renyi needs an ER spec, got %r' % spec)
	graph = nx.fast_gnp_random_graph(spec.n, spec.p, seed=spec.seed)
	logger.info('Generated %r: m=%d' % (spec, graph.number_of_edges()))
	return Graph(range(spec.n), graph.edges())


def barabasi_albert(spec):
	"""
	Preferential-attachment graph. Starts from a complete graph on nodes
	0..m-1; every later node t attaches m edges to distinct earlier nodes
	chosen by degree-proportional draws, rejecting duplicates. The result is
	connected and has exactly C(m, 2) + m(n - m) edges.

	:param GeneratorSpec spec: a 'ba' spec.
	:return: Graph on labels 0..n-1
	"""
	spec.validate()
	if spec.model != 'ba':
		raise ConfigurationError('barabasi_albert needs a BA spec, got %r' % spec)
	rng = np.random.default_rng(spec.seed)
	m = spec.m
	edges = [(u, v) for u in range(m) for v in range(u + 1, m)]
	# each node appears once per unit of degree
	repeated = [u for edge in edges for u in edge]
	for new in range(m, spec.n):
		targets = set()
		while len(targets) < m:
			if repeated:
				targets.add(repeated[int(rng.integers(len(repeated)))])
			else:
				targets.add(int(rng.integers(new)))
		for target in sorted(targets):
			edges.append((target, new))
			repeated.extend((target, new))
	logger.info('Generated %r: m=%d' % (spec, len(edges)))
	return Graph(range(spec.n), edges)


def generate(spec):
	""" Dispatch on spec.model. """
	if spec.model == 'er':
		return erdos_renyi(spec)
	return barabasi_albert(spec)
