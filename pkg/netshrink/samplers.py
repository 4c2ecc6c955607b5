"""
SAMPLERS
========
Baseline subgraph extraction: uniform random node sampling (RDN), the
Metropolis-Hastings random walk (MHRW) and a common-neighbor-aware random
walk (CNARW). Every sampler returns the subgraph induced on the ceil(sr N)
sampled nodes and is deterministic for a given seed.

The walk samplers run on the largest connected component when the input is
disconnected, and stop collecting at the size of that component.
"""
import logging
import math

import numpy as np

from .errors import ConfigurationError, DomainError, PreconditionError
from .models import is_connected, largest_connected_component


logger = logging.getLogger(__name__)

METHODS = ('rdn', 'mhrw', 'cnarw')

# positive floor on CNARW weights so the walk never stalls
CN_WEIGHT_FLOOR = 1e-6


class SamplerSpec(object):
	"""
	:param str method: 'rdn', 'mhrw' or 'cnarw' (case-insensitive).
	:param float sr: sampling rate in (0, 1].
	:param int seed: non-negative 64-bit seed.
	:param int burn_in: walk steps taken before collecting nodes.
	"""

	def __init__(self, method, sr, seed=0, burn_in=0):
		self.method = str(method).lower()
		self.sr = sr
		self.seed = seed
		self.burn_in = burn_in
		self.validate()

	def __repr__(self):
		return 'SamplerSpec(%s, sr=%r, seed=%d, burn_in=%d)' % (
			self.method, self.sr, self.seed, self.burn_in)

	def validate(self):
		if self.method not in METHODS:
			raise ConfigurationError('unknown sampler %r, expected one of %s'
			                         % (self.method, ', '.join(METHODS)))
		if not 0 < self.sr <= 1:
			raise ConfigurationError('sr must lie in (0, 1], got %r' % (self.sr,))
		if not isinstance(self.seed, int) or not 0 <= self.seed < 2 ** 64:
			raise ConfigurationError('seed must be a 64-bit non-negative integer, '
			                         'got %r' % (self.seed,))
		if not isinstance(self.burn_in, int) or self.burn_in < 0:
			raise ConfigurationError('burn_in must be a non-negative integer, '
			                         'got %r' % (self.burn_in,))

	def to_dict(self):
		return {'method': self.method, 'sr': self.sr, 'seed': self.seed,
		        'burn_in': self.burn_in}


def sample_size(n, sr):
	""" ceil(sr * n), rounded first so 1/8 * 5000 stays 625. """
	return int(math.ceil(round(sr * n, 9)))


def random_node_sample(g, spec):
	"""
	Uniform sample of ceil(sr N) nodes without replacement.

	:param Graph g: non-empty graph.
	:param SamplerSpec spec: sampling rate and seed.
	:return: induced subgraph on the sampled nodes.
	"""
	spec.validate()
	if g.n == 0:
		raise DomainError('cannot sample from an empty graph')
	k = sample_size(g.n, spec.sr)
	rng = np.random.default_rng(spec.seed)
	picks = rng.choice(g.n, size=k, replace=False)
	nodes = g.nodes
	return g.subgraph(nodes[int(i)] for i in picks)


class _Walker(object):
	""" Random walk over the compact index form of a graph. """

	def __init__(self, g, rng):
		self.labels, self.index, self.neighbors = g.indexed()
		self.rng = rng

	def step(self, i):
		raise NotImplementedError

	def walk(self, start, steps):
		""" Visit sequence of length steps + 1 as labels. """
		try:
			current = self.index[start]
		except KeyError:
			raise PreconditionError('start node %r is not in the graph' % (start,))
		visits = [current]
		for _ in range(steps):
			current = self.step(current)
			visits.append(current)
		return [self.labels[i] for i in visits]

	def collect(self, target, burn_in):
		""" Walk from a uniform start until target distinct nodes are seen. """
		current = int(self.rng.integers(len(self.labels)))
		for _ in range(burn_in):
			current = self.step(current)
		seen = {current}
		while len(seen) < target:
			current = self.step(current)
			seen.add(current)
		return [self.labels[i] for i in seen]


class MetropolisWalker(_Walker):
	"""
	Uniform neighbor proposal accepted with probability min(1, du/dv), which
	makes the stationary distribution uniform over the nodes.
	"""

	def step(self, i):
		nbrs = self.neighbors[i]
		if not nbrs:
			return i
		j = nbrs[int(self.rng.integers(len(nbrs)))]
		if self.rng.random() * len(self.neighbors[j]) < len(nbrs):
			return j
		return i


class CommonNeighborWalker(_Walker):
	"""
	Next hop from u drawn proportionally to 1 - |CN(u, v)| / min(du, dv),
	floored at CN_WEIGHT_FLOOR. Cumulative weights are cached per node.
	"""

	def __init__(self, g, rng):
		super(CommonNeighborWalker, self).__init__(g, rng)
		self._sets = {}
		self._cumulative = {}

	def _neighbor_set(self, i):
		try:
			return self._sets[i]
		except KeyError:
			result = self._sets[i] = frozenset(self.neighbors[i])
			return result

	def weights(self, i):
		""" Transition weights from node position i, one per neighbor. """
		own = self._neighbor_set(i)
		du = len(own)
		result = np.empty(du)
		for pos, j in enumerate(self.neighbors[i]):
			other = self._neighbor_set(j)
			common = len(own & other)
			result[pos] = max(1.0 - common / float(min(du, len(other))),
			                  CN_WEIGHT_FLOOR)
		return result

	def step(self, i):
		nbrs = self.neighbors[i]
		if not nbrs:
			return i
		try:
			cumulative = self._cumulative[i]
		except KeyError:
			cumulative = self._cumulative[i] = np.cumsum(self.weights(i))
		pos = int(np.searchsorted(
			cumulative, self.rng.random() * cumulative[-1], side='right'))
		return nbrs[min(pos, len(nbrs) - 1)]


def _rng(rng):
	if isinstance(rng, np.random.Generator):
		return rng
	return np.random.default_rng(rng)


def metropolis_walk(g, start, steps, rng=None):
	"""
	Raw MHRW visit sequence.

	:param Graph g: graph to walk on.
	:param int start: label of the start node.
	:param int steps: number of steps.
	:param rng: numpy Generator or seed.
	:return: list of steps + 1 labels.
	"""
	return MetropolisWalker(g, _rng(rng)).walk(start, steps)


def common_neighbor_walk(g, start, steps, rng=None):
	""" Raw CNARW visit sequence, see metropolis_walk. """
	return CommonNeighborWalker(g, _rng(rng)).walk(start, steps)


def _walk_sample(g, spec, walker_cls):
	spec.validate()
	if g.n == 0:
		raise DomainError('cannot sample from an empty graph')
	k = sample_size(g.n, spec.sr)
	work = g
	if not is_connected(g):
		work = largest_connected_component(g)
		logger.warning('%s walks on the LCC (%d of %d nodes) of a disconnected '
		               'graph' % (spec.method.upper(), work.n, g.n))
	walker = walker_cls(work, np.random.default_rng(spec.seed))
	nodes = walker.collect(min(k, work.n), spec.burn_in)
	return g.subgraph(nodes)


def mhrw_sample(g, spec):
	"""
	Metropolis-Hastings random walk sample of ceil(sr N) distinct nodes.

	:param Graph g: graph; the walk uses its LCC when disconnected.
	:param SamplerSpec spec: sampling rate, seed and burn-in.
	:return: induced subgraph on the visited nodes.
	"""
	return _walk_sample(g, spec, MetropolisWalker)


def cnarw_sample(g, spec):
	"""
	Common-neighbor-aware random walk sample of ceil(sr N) distinct nodes.

	:param Graph g: graph; the walk uses its LCC when disconnected.
	:param SamplerSpec spec: sampling rate, seed and burn-in.
	:return: induced subgraph on the visited nodes.
	"""
	return _walk_sample(g, spec, CommonNeighborWalker)


SAMPLERS = {
	'rdn': random_node_sample,
	'mhrw': mhrw_sample,
	'cnarw': cnarw_sample,
}


def sample(g, spec):
	""" Dispatch on spec.method. """
	return SAMPLERS[spec.method](g, spec)
