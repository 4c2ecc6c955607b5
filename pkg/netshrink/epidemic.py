"""
EPIDEMIC
========
Continuous-time SIR dynamics on networks.

Each run is an exact event-driven simulation: when a node gets infected it
draws its recovery time, and for every neighbor an exponential transmission
delay at rate beta. Transmissions landing before the recovery are queued in a
heap and fire in time order; a transmission to a node that is no longer
susceptible is dropped. The run ends when the queue is empty, i.e. when no
infected node is left.

Run r of an ensemble draws from its own numpy stream seeded with
SeedSequence([seed, r]), so results never depend on the execution order or on
the number of worker processes.
"""
import heapq
import logging
import math
import multiprocessing
from collections import namedtuple

import numpy as np

from .config import CONFIG as cfg
from .errors import ConfigurationError, DomainError, UsageError


logger = logging.getLogger(__name__)

INFECTION = 'I'
RECOVERY = 'R'

SirEvent = namedtuple('SirEvent', 'time kind node')
CurveError = namedtuple('CurveError', 'r i')

_SUSCEPTIBLE, _INFECTED, _RECOVERED = 0, 1, 2


def _check_time_grid(grid):
	grid = np.asarray(grid, dtype=float)
	if grid.ndim != 1 or grid.size < 1:
		raise ConfigurationError('time grid must be a non-empty sequence')
	if grid[0] != 0.0:
		raise ConfigurationError('time grid must start at t=0, got %r' % grid[0])
	if np.any(np.diff(grid) <= 0):
		raise ConfigurationError('time grid must be strictly increasing')
	return grid


class SirParams(object):
	"""
	SIR parameters. Unset values come from the [sir] config section.

	:param float beta: per-edge infection rate, >= 0.
	:param float gamma: per-node recovery rate, > 0.
	:param float init_frac: fraction of top-degree nodes infected at t=0.
	:param int runs: ensemble size.
	:param int seed: non-negative 64-bit seed.
	:param time_grid: strictly increasing times starting at 0, or None for
	                  the adaptive default grid.
	"""

	def __init__(self, beta=1.0, gamma=None, init_frac=None, runs=None,
	             seed=0, time_grid=None):
		self.beta = beta
		self.gamma = cfg.gamma if gamma is None else gamma
		self.init_frac = cfg.init_frac if init_frac is None else init_frac
		self.runs = cfg.runs if runs is None else runs
		self.seed = seed
		self.time_grid = None if time_grid is None else _check_time_grid(time_grid)
		self.validate()

	def __repr__(self):
		return 'SirParams(beta=%r, gamma=%r, init_frac=%r, runs=%d, seed=%d)' % (
			self.beta, self.gamma, self.init_frac, self.runs, self.seed)

	def validate(self):
		if not self.beta >= 0:
			raise ConfigurationError('beta must be >= 0, got %r' % (self.beta,))
		if not self.gamma > 0:
			raise ConfigurationError('gamma must be > 0, got %r' % (self.gamma,))
		if not 0 < self.init_frac < 1:
			raise ConfigurationError('init_frac must lie in (0, 1), got %r'
			                         % (self.init_frac,))
		if not isinstance(self.runs, int) or self.runs < 1:
			raise ConfigurationError('runs must be an integer >= 1, got %r'
			                         % (self.runs,))
		if not isinstance(self.seed, int) or not 0 <= self.seed < 2 ** 64:
			raise ConfigurationError('seed must be a 64-bit non-negative integer, '
			                         'got %r' % (self.seed,))

	def replace(self, **changes):
		""" Copy with some fields changed. """
		values = {'beta': self.beta, 'gamma': self.gamma,
		          'init_frac': self.init_frac, 'runs': self.runs,
		          'seed': self.seed, 'time_grid': self.time_grid}
		values.update(changes)
		return SirParams(**values)

	def to_dict(self):
		return {'beta': self.beta, 'gamma': self.gamma,
		        'init_frac': self.init_frac, 'runs': self.runs,
		        'seed': self.seed}


class SirTrajectory(object):
	"""
	One simulated run: the initially infected labels and the time-ordered
	infection and recovery events that followed. Iterating yields SirEvent
	tuples.
	"""

	def __init__(self, n, seeds, events):
		self.n = n
		self.seeds = tuple(seeds)
		self.events = list(events)

	def __iter__(self):
		return iter(self.events)

	def __len__(self):
		return len(self.events)

	def __repr__(self):
		return 'SirTrajectory(n=%d, seeds=%d, events=%d, end_time=%.4f)' % (
			self.n, len(self.seeds), len(self.events), self.end_time)

	@property
	def end_time(self):
		""" Time of the last event, 0 for a run without events. """
		return self.events[-1].time if self.events else 0.0

	def counts(self):
		"""
		Compartment counts as step functions.

		:return: (times, s, i, r) arrays; times[0] is 0 and the counts at
		         position j hold from times[j] until the next event.
		"""
		size = len(self.events) + 1
		times = np.zeros(size)
		infections = np.zeros(size, dtype=np.int64)
		recoveries = np.zeros(size, dtype=np.int64)
		for j, event in enumerate(self.events, 1):
			times[j] = event.time
			if event.kind == INFECTION:
				infections[j] = 1
			else:
				recoveries[j] = 1
		s = self.n - len(self.seeds) - np.cumsum(infections)
		r = np.cumsum(recoveries)
		return times, s, self.n - s - r, r

	def sample(self, time_grid):
		"""
		Right-continuous (i, r) counts on a time grid; the state after the
		last event extends to infinity.
		"""
		times, _, i, r = self.counts()
		idx = np.searchsorted(times, time_grid, side='right') - 1
		return i[idx], r[idx]

	@property
	def final_recovered(self):
		return sum(1 for event in self.events if event.kind == RECOVERY)

	@property
	def final_recovered_fraction(self):
		return self.final_recovered / float(self.n)


def seed_count(n, frac):
	""" ceil(frac * n), rounded first so 0.1 * 5000 stays 500. """
	return int(math.ceil(round(frac * n, 9)))


def initial_infected(g, frac=None):
	"""
	The ceil(frac N) highest-degree nodes, ties by ascending label.

	:return: list of labels, highest degree first.
	"""
	if frac is None:
		frac = cfg.init_frac
	if g.n == 0:
		raise DomainError('cannot seed an epidemic on an empty graph')
	ranked = sorted(g.nodes, key=lambda u: (-g.degree(u), u))
	return ranked[:seed_count(g.n, frac)]


def simulate_sir(g, params, run_index=0):
	"""
	One continuous-time SIR run.

	:param Graph g: non-empty graph.
	:param SirParams params: rates, seed fraction and seed.
	:param int run_index: selects the random stream of the run.
	:return: SirTrajectory
	"""
	if g.n == 0:
		raise DomainError('cannot simulate SIR on an empty graph')
	labels, index, neighbors = g.indexed()
	rng = np.random.default_rng(np.random.SeedSequence([params.seed, run_index]))
	beta = float(params.beta)
	gamma = float(params.gamma)
	state = bytearray(g.n)
	queue = []
	push = heapq.heappush

	def infect(i, now):
		state[i] = _INFECTED
		recovery_time = now + rng.standard_exponential() / gamma
		push(queue, (recovery_time, 1, i))
		nbrs = neighbors[i]
		if beta > 0 and nbrs:
			delays = rng.standard_exponential(len(nbrs)) / beta
			for j, delay in zip(nbrs, delays):
				when = now + delay
				if when < recovery_time and state[j] == _SUSCEPTIBLE:
					push(queue, (when, 0, j))

	seeds = initial_infected(g, params.init_frac)
	for i in sorted(index[u] for u in seeds):
		infect(i, 0.0)

	events = []
	while queue:
		now, recovery, i = heapq.heappop(queue)
		if recovery:
			state[i] = _RECOVERED
			events.append(SirEvent(now, RECOVERY, labels[i]))
		elif state[i] == _SUSCEPTIBLE:
			infect(i, now)
			events.append(SirEvent(now, INFECTION, labels[i]))
	return SirTrajectory(g.n, seeds, events)


# Graph handed to each pool worker by the initializer.
_WORKER_GRAPH = None


def _init_worker(g):
	global _WORKER_GRAPH
	_WORKER_GRAPH = g


def _worker_call(task):
	func, args = task
	return func(_WORKER_GRAPH, *args)


def _run_tasks(g, tasks, threads=None):
	"""
	Evaluate func(g, *args) for each (func, args) task, in task order. Uses a
	process pool when more than one worker is configured.
	"""
	if threads is None:
		threads = cfg.threads
	tasks = list(tasks)
	if threads > 1 and len(tasks) > 1:
		processes = min(threads, len(tasks))
		logger.debug('Running %d tasks on %d processes' % (len(tasks), processes))
		with multiprocessing.Pool(processes=processes, initializer=_init_worker,
		                          initargs=(g,)) as pool:
			return pool.map(_worker_call, tasks)
	return [func(g, *args) for func, args in tasks]


def _end_time(g, params, run_index):
	return simulate_sir(g, params, run_index).end_time


def _grid_counts(g, params, time_grid, run_index):
	return simulate_sir(g, params, run_index).sample(time_grid)


def _final_recovered(g, params, run_index):
	return simulate_sir(g, params, run_index).final_recovered


def default_time_grid(g, params, grid_points=None, pilot_runs=None,
                      end_quantile=None):
	"""
	Uniform grid on [0, T], T being the end_quantile of the end times of
	pilot_runs pilot simulations.
	"""
	grid_points = cfg.grid_points if grid_points is None else grid_points
	pilot_runs = cfg.pilot_runs if pilot_runs is None else pilot_runs
	end_quantile = cfg.end_quantile if end_quantile is None else end_quantile
	if grid_points < 2 or pilot_runs < 1:
		raise ConfigurationError('time grid needs >= 2 points and >= 1 pilot run')
	ends = _run_tasks(g, [(_end_time, (params, r)) for r in range(pilot_runs)])
	horizon = float(np.quantile(ends, end_quantile))
	if horizon <= 0:
		horizon = 1.0
	logger.info('Adaptive SIR time grid: %d points on [0, %.4f]' % (
		grid_points, horizon))
	return np.linspace(0.0, horizon, grid_points)


class SirCurve(object):
	"""
	Ensemble-averaged compartment fractions on a time grid.
	"""

	def __init__(self, time_grid, i_mean, r_mean, s_mean=None):
		self.time_grid = np.asarray(time_grid, dtype=float)
		self.i_mean = np.asarray(i_mean, dtype=float)
		self.r_mean = np.asarray(r_mean, dtype=float)
		if s_mean is None:
			s_mean = 1.0 - self.i_mean - self.r_mean
		self.s_mean = np.asarray(s_mean, dtype=float)
		size = self.time_grid.shape
		if self.i_mean.shape != size or self.r_mean.shape != size or \
				self.s_mean.shape != size:
			raise UsageError('curve arrays must match the time grid length')

	def __repr__(self):
		return 'SirCurve(points=%d, t_end=%.4f, r_end=%.4f)' % (
			self.time_grid.size, self.time_grid[-1], self.r_mean[-1])

	def __len__(self):
		return self.time_grid.size

	def resample(self, time_grid):
		""" Piecewise-linear resampling; values are held beyond the ends. """
		time_grid = np.asarray(time_grid, dtype=float)
		return SirCurve(
			time_grid,
			np.interp(time_grid, self.time_grid, self.i_mean),
			np.interp(time_grid, self.time_grid, self.r_mean),
			np.interp(time_grid, self.time_grid, self.s_mean))


def ensemble_curve(g, params):
	"""
	Average of params.runs runs sampled on params.time_grid (the adaptive
	default grid when unset).

	:param Graph g: non-empty graph.
	:param SirParams params: simulation parameters.
	:return: SirCurve
	"""
	params.validate()
	if g.n == 0:
		raise DomainError('cannot simulate SIR on an empty graph')
	if params.time_grid is None:
		time_grid = default_time_grid(g, params)
	else:
		time_grid = _check_time_grid(params.time_grid)
	logger.info('SIR ensemble: n=%d, beta=%r, %d runs' % (
		g.n, params.beta, params.runs))
	results = _run_tasks(g, [(_grid_counts, (params, time_grid, r))
	                         for r in range(params.runs)])
	i_total = np.zeros(time_grid.size, dtype=np.int64)
	r_total = np.zeros(time_grid.size, dtype=np.int64)
	for i_counts, r_counts in results:
		i_total += i_counts
		r_total += r_counts
	scale = float(g.n * params.runs)
	s_total = g.n * params.runs - i_total - r_total
	return SirCurve(time_grid, i_total / scale, r_total / scale,
	                s_total / scale)


class SpreadingProfile(object):
	"""
	Saturation recovered fraction rho_r per infection rate.
	"""

	def __init__(self, beta_grid, rho_r, rho_stderr=None):
		self.beta_grid = np.asarray(beta_grid, dtype=float)
		self.rho_r = np.asarray(rho_r, dtype=float)
		if rho_stderr is None:
			rho_stderr = np.zeros_like(self.rho_r)
		self.rho_stderr = np.asarray(rho_stderr, dtype=float)
		if self.rho_r.shape != self.beta_grid.shape:
			raise UsageError('rho_r must match the beta grid length')

	def __repr__(self):
		return 'SpreadingProfile(points=%d, rho_r %.4f..%.4f)' % (
			self.beta_grid.size, self.rho_r[0], self.rho_r[-1])


def default_beta_grid(beta_min=None, beta_max=None, beta_steps=None):
	beta_min = cfg.beta_min if beta_min is None else beta_min
	beta_max = cfg.beta_max if beta_max is None else beta_max
	beta_steps = cfg.beta_steps if beta_steps is None else beta_steps
	return np.linspace(beta_min, beta_max, beta_steps)


def check_beta_grid(beta_grid):
	beta_grid = np.asarray(beta_grid, dtype=float)
	if beta_grid.ndim != 1 or beta_grid.size < 2:
		raise ConfigurationError('beta grid needs at least 2 points')
	if beta_grid[0] < 0 or beta_grid[-1] > 2:
		raise ConfigurationError('beta grid must lie in [0, 2]')
	if np.any(np.diff(beta_grid) <= 0):
		raise ConfigurationError('beta grid must be strictly increasing')
	return beta_grid


def spreading_profile(g, beta_grid, params):
	"""
	Mean final recovered fraction over params.runs runs for each beta.
	Run r uses the same random stream at every beta.

	:param Graph g: non-empty graph.
	:param beta_grid: increasing values in [0, 2], at least 2.
	:param SirParams params: everything but beta.
	:return: SpreadingProfile
	"""
	params.validate()
	beta_grid = check_beta_grid(beta_grid)
	if g.n == 0:
		raise DomainError('cannot simulate SIR on an empty graph')
	logger.info('Spreading profile: n=%d, %d beta values x %d runs' % (
		g.n, beta_grid.size, params.runs))
	tasks = []
	for beta in beta_grid:
		run_params = params.replace(beta=float(beta))
		tasks.extend((_final_recovered, (run_params, r))
		             for r in range(params.runs))
	finals = np.asarray(_run_tasks(g, tasks), dtype=float)
	finals = finals.reshape(beta_grid.size, params.runs) / g.n
	rho_r = finals.mean(axis=1)
	if params.runs > 1:
		stderr = finals.std(axis=1, ddof=1) / math.sqrt(params.runs)
	else:
		stderr = np.zeros(beta_grid.size)
	return SpreadingProfile(beta_grid, rho_r, stderr)


def curve_mae(a, b, resample=False):
	"""
	Mean absolute error between two curves on the same time grid.

	:param SirCurve a: reference curve.
	:param SirCurve b: compared curve.
	:param bool resample: resample b onto a's grid instead of failing when
	                      the grids differ.
	:return: CurveError(r, i)
	"""
	if not np.array_equal(a.time_grid, b.time_grid):
		if not resample:
			raise UsageError('curves use different time grids; resample first')
		b = b.resample(a.time_grid)
	return CurveError(
		float(np.mean(np.abs(a.r_mean - b.r_mean))),
		float(np.mean(np.abs(a.i_mean - b.i_mean))))
