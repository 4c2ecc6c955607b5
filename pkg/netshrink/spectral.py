"""
SPECTRAL
========
Information-flow observables of the graph Laplacian L = D - A: the partition
function Z = Tr exp(-tau L), the spectral entropy of the density matrix
exp(-tau L)/Z and the free energy -ln(Z)/tau. Logarithms are natural.

Two spectrum representations answer the same trace(func) protocol, i.e. an
estimate of Tr func(L):

* LaplacianSpectrum holds every eigenvalue from a dense symmetric solve and
  is exact up to rounding. Graphs above the dense cap are refused.
* StochasticSpectrum is a stochastic Lanczos quadrature: Rademacher probes
  with the constant vector of every connected component projected out, a
  few Lanczos steps per probe, and the Gauss quadrature nodes and weights
  of the resulting tridiagonal matrices. The null space is accounted for
  exactly, since every component contributes func(0) once.
"""
import logging
import math

import networkx as nx
import numpy as np
from scipy.linalg import eigh_tridiagonal, eigvalsh
from scipy.special import xlogy

from .config import CONFIG as cfg
from .errors import CapabilityError, DomainError, UsageError
from .models import connected_components


logger = logging.getLogger(__name__)


def laplacian(g):
	""" Sparse float Laplacian in ascending label order. """
	return nx.laplacian_matrix(g.nx, nodelist=g.nodes).astype(float)


class LaplacianSpectrum(object):
	""" Ascending Laplacian eigenvalues of a graph. """

	def __init__(self, eigenvalues):
		self.eigenvalues = np.sort(np.asarray(eigenvalues, dtype=float))
		self.eigenvalues.setflags(write=False)

	def __repr__(self):
		return 'LaplacianSpectrum(n=%d, lambda_max=%.4f)' % (
			self.n, self.eigenvalues[-1] if self.n else 0.0)

	@property
	def n(self):
		return self.eigenvalues.size

	def trace(self, func):
		""" sum_i func(lambda_i), summed exactly from the smallest value. """
		return math.fsum(np.asarray(func(self.eigenvalues), dtype=float))


def laplacian_eigenvalues(g, dense_cap=None):
	"""
	Full Laplacian spectrum by dense symmetric eigendecomposition. Rounding
	negatives are clamped to 0.

	:param Graph g: non-empty graph with at most dense_cap nodes.
	:param int dense_cap: largest accepted node count, defaults to the
	                      [spectral] dense_cap setting.
	:return: LaplacianSpectrum
	"""
	if dense_cap is None:
		dense_cap = cfg.dense_cap
	if g.n == 0:
		raise DomainError('the Laplacian spectrum needs a non-empty graph')
	if g.n > dense_cap:
		raise CapabilityError(
			'dense eigendecomposition is capped at %d nodes, got %d; use the '
			'stochastic estimator instead' % (dense_cap, g.n))
	eigenvalues = eigvalsh(laplacian(g).toarray())
	eigenvalues[eigenvalues < 0] = 0.0
	return LaplacianSpectrum(eigenvalues)


class StochasticSpectrum(object):
	"""
	Quadrature estimate of the Laplacian spectral measure.

	:param int n: node count.
	:param int components: number of connected components (zero modes).
	:param nodes: quadrature nodes pooled over the probes.
	:param weights: matching weights, already divided by the probe count.
	"""

	def __init__(self, n, components, nodes, weights):
		self.n = n
		self.components = components
		self.nodes = np.asarray(nodes, dtype=float)
		self.weights = np.asarray(weights, dtype=float)

	def __repr__(self):
		return 'StochasticSpectrum(n=%d, components=%d, nodes=%d)' % (
			self.n, self.components, self.nodes.size)

	def trace(self, func):
		zero_mode = float(np.asarray(func(np.zeros(1)), dtype=float)[0])
		values = np.asarray(func(self.nodes), dtype=float)
		return self.components * zero_mode + math.fsum(self.weights * values)


def _lanczos(matrix, start, steps):
	"""
	Lanczos tridiagonalization with full reorthogonalization.

	:return: (alpha, beta) diagonals of the tridiagonal matrix.
	"""
	basis = np.zeros((steps, start.size))
	alpha = []
	beta = []
	q = start / np.linalg.norm(start)
	for j in range(steps):
		basis[j] = q
		w = matrix @ q
		alpha.append(float(q @ w))
		w -= basis[:j + 1].T @ (basis[:j + 1] @ w)
		w -= basis[:j + 1].T @ (basis[:j + 1] @ w)
		norm = float(np.linalg.norm(w))
		if j == steps - 1 or norm < 1e-10:
			break
		beta.append(norm)
		q = w / norm
	return np.array(alpha), np.array(beta)


def stochastic_spectrum(g, probes=None, steps=None, seed=0):
	"""
	Stochastic Lanczos quadrature of the Laplacian spectrum, usable beyond
	the dense cap.

	:param Graph g: non-empty graph.
	:param int probes: Rademacher probe vectors.
	:param int steps: Lanczos steps per probe.
	:param int seed: seed of the probe vectors.
	:return: StochasticSpectrum
	"""
	probes = cfg.probes if probes is None else probes
	steps = cfg.lanczos_steps if steps is None else steps
	if g.n == 0:
		raise DomainError('the Laplacian spectrum needs a non-empty graph')
	components = connected_components(g)
	position = dict((u, i) for i, u in enumerate(g.nodes))
	membership = np.empty(g.n, dtype=np.int64)
	for c, component in enumerate(components):
		membership[[position[u] for u in component]] = c
	sizes = np.bincount(membership)
	rank = g.n - len(components)
	steps = min(steps, rank)
	if steps == 0:
		return StochasticSpectrum(g.n, len(components), [], [])

	matrix = laplacian(g).tocsr()
	rng = np.random.default_rng(seed)
	nodes = []
	weights = []
	for _ in range(probes):
		z = rng.choice((-1.0, 1.0), size=g.n)
		z -= (np.bincount(membership, weights=z) / sizes)[membership]
		norm2 = float(z @ z)
		if norm2 == 0.0:
			continue
		alpha, beta = _lanczos(matrix, z, steps)
		theta, vectors = eigh_tridiagonal(alpha, beta[:alpha.size - 1])
		nodes.append(np.clip(theta, 0.0, None))
		weights.append(norm2 * vectors[0] ** 2 / probes)
	logger.info('Stochastic spectrum: n=%d, %d probes x %d Lanczos steps' % (
		g.n, probes, steps))
	if not nodes:
		return StochasticSpectrum(g.n, len(components), [], [])
	return StochasticSpectrum(
		g.n, len(components), np.concatenate(nodes), np.concatenate(weights))


def _check_tau(tau):
	if not tau >= 0:
		raise DomainError('tau must be >= 0, got %r' % (tau,))


def partition_function(spec, tau):
	""" Z = sum_i exp(-tau lambda_i); equals N at tau = 0. """
	_check_tau(tau)
	return spec.trace(lambda lam: np.exp(-tau * lam))


def spectral_entropy(spec, tau):
	"""
	Shannon entropy -sum_i p_i ln p_i of the weights
	p_i = exp(-tau lambda_i)/Z.
	"""
	z = partition_function(spec, tau)
	entropy = -spec.trace(lambda lam: xlogy(np.exp(-tau * lam) / z,
	                                        np.exp(-tau * lam) / z))
	return max(entropy, 0.0)


def free_energy(spec, tau):
	""" F = -ln(Z)/tau, defined for tau > 0. """
	if not tau > 0:
		raise DomainError('free energy needs tau > 0, got %r' % (tau,))
	return -math.log(partition_function(spec, tau)) / tau


def default_tau_grid(tau_min=None, tau_max=None, tau_steps=None):
	""" Log-spaced tau grid from the [spectral] settings. """
	tau_min = cfg.tau_min if tau_min is None else tau_min
	tau_max = cfg.tau_max if tau_max is None else tau_max
	tau_steps = cfg.tau_steps if tau_steps is None else tau_steps
	if not 0 < tau_min < tau_max or tau_steps < 2:
		raise DomainError('tau grid needs 0 < tau_min < tau_max and >= 2 steps')
	return np.logspace(math.log10(tau_min), math.log10(tau_max), tau_steps)


class SpectralSummary(object):
	""" Z, Z/N, entropy and free energy on a tau grid. """

	def __init__(self, tau_grid, z, z_norm, entropy, free_energy):
		self.tau_grid = np.asarray(tau_grid, dtype=float)
		self.z = np.asarray(z, dtype=float)
		self.z_norm = np.asarray(z_norm, dtype=float)
		self.entropy = np.asarray(entropy, dtype=float)
		self.free_energy = np.asarray(free_energy, dtype=float)

	def __repr__(self):
		return 'SpectralSummary(points=%d, tau %.4g..%.4g)' % (
			self.tau_grid.size, self.tau_grid[0], self.tau_grid[-1])


def spectral_summary(g, tau_grid=None, estimator='dense', seed=0):
	"""
	Every observable on a grid of positive tau values.

	:param Graph g: non-empty graph.
	:param tau_grid: positive tau values, defaults to default_tau_grid().
	:param str estimator: 'dense' or 'stochastic'.
	:param int seed: probe seed of the stochastic estimator.
	:return: SpectralSummary
	"""
	tau_grid = default_tau_grid() if tau_grid is None \
		else np.asarray(tau_grid, dtype=float)
	if tau_grid.ndim != 1 or tau_grid.size == 0 or np.any(tau_grid <= 0):
		raise DomainError('tau grid must hold positive values')
	if estimator == 'dense':
		spec = laplacian_eigenvalues(g)
	elif estimator == 'stochastic':
		spec = stochastic_spectrum(g, seed=seed)
	else:
		raise UsageError('unknown estimator %r' % (estimator,))
	z = np.array([partition_function(spec, tau) for tau in tau_grid])
	entropy = np.array([spectral_entropy(spec, tau) for tau in tau_grid])
	free = -np.log(z) / tau_grid
	return SpectralSummary(tau_grid, z, z / g.n, entropy, free)


def z_norm_mae(a, b):
	""" Mean absolute difference of two normalized partition curves. """
	if not np.array_equal(a.tau_grid, b.tau_grid):
		raise UsageError('spectral summaries use different tau grids')
	return float(np.mean(np.abs(a.z_norm - b.z_norm)))
