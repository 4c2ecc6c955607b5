"""
METRICS
=======
Overlap score between two spreading-ability curves and the interpolation
and quadrature helpers behind it.

f_overlap interpolates both rho_r(beta) curves onto a fine uniform grid,
integrates their absolute difference with the composite Simpson rule and
returns 1/(1 + S_delta), so identical curves score exactly 1.
"""
import logging
from collections import namedtuple

import numpy as np
from scipy.interpolate import interp1d

from .config import CONFIG as cfg
from .errors import DomainError, UsageError


logger = logging.getLogger(__name__)

OverlapReport = namedtuple('OverlapReport', 'f_overlap s_delta fine_grid_points')

INTERPOLATION_KINDS = ('linear', 'cubic')


def linear_interpolate(xs, ys, x_new, kind='linear'):
	"""
	Interpolate tabulated values. Exact at the knots.

	:param xs: strictly increasing knots, at least 2.
	:param ys: values at the knots.
	:param x_new: query points inside [xs[0], xs[-1]].
	:param str kind: 'linear' or 'cubic' (cubic needs 4 knots).
	:return: numpy array of interpolated values.
	"""
	xs = np.asarray(xs, dtype=float)
	ys = np.asarray(ys, dtype=float)
	x_new = np.asarray(x_new, dtype=float)
	if xs.shape != ys.shape or xs.ndim != 1:
		raise UsageError('xs and ys must be 1-d arrays of equal length')
	if xs.size < 2:
		raise UsageError('interpolation needs at least 2 knots')
	if np.any(np.diff(xs) <= 0):
		raise UsageError('xs must be strictly increasing')
	if x_new.size and (x_new.min() < xs[0] or x_new.max() > xs[-1]):
		raise DomainError('cannot extrapolate outside [%r, %r]' % (xs[0], xs[-1]))
	if kind == 'linear':
		return np.interp(x_new, xs, ys)
	if kind == 'cubic':
		if xs.size < 4:
			raise UsageError('cubic interpolation needs at least 4 knots')
		return interp1d(xs, ys, kind='cubic')(x_new)
	raise UsageError('unknown interpolation %r, expected one of %s' % (
		kind, ', '.join(INTERPOLATION_KINDS)))


def _basic_simpson(y, dx):
	""" Composite Simpson rule over an odd number of points. """
	return float(np.sum(y[0:-2:2] + 4.0 * y[1:-1:2] + y[2::2]) * dx / 3.0)


def simpson_integrate(ys, xs, full_output=False):
	"""
	Composite Simpson integral of samples on a uniform grid. With an even
	number of points the last interval is integrated by the trapezoid rule.

	:param ys: sample values.
	:param xs: uniformly spaced abscissae, at least 2.
	:param bool full_output: also return an info dict.
	:return: the integral, or (integral, info) where info['trapezoid_tail']
	         tells whether the trapezoid correction was used.
	"""
	ys = np.asarray(ys, dtype=float)
	xs = np.asarray(xs, dtype=float)
	if xs.shape != ys.shape or xs.ndim != 1:
		raise UsageError('xs and ys must be 1-d arrays of equal length')
	if xs.size < 2:
		raise UsageError('integration needs at least 2 points')
	steps = np.diff(xs)
	dx = (xs[-1] - xs[0]) / (xs.size - 1)
	if dx <= 0 or not np.allclose(steps, dx, rtol=1e-9, atol=0.0):
		raise UsageError('xs must be increasing and uniformly spaced')

	tail = xs.size % 2 == 0
	if tail:
		value = 0.5 * dx * (ys[-2] + ys[-1])
		if xs.size > 2:
			value += _basic_simpson(ys[:-1], dx)
	else:
		value = _basic_simpson(ys, dx)
	if full_output:
		return value, {'trapezoid_tail': tail, 'points': int(xs.size), 'dx': dx}
	return value


def f_overlap(beta, rho0, rhol, fine_grid_points=None, kind=None):
	"""
	Overlap score of two spreading-ability curves.

	:param beta: strictly increasing beta values.
	:param rho0: reference curve rho_r^0(beta).
	:param rhol: compared curve rho_r^l(beta).
	:param int fine_grid_points: size of the uniform integration grid.
	:param str kind: interpolation kind, defaults to the [overlap] setting.
	:return: OverlapReport
	"""
	if fine_grid_points is None:
		fine_grid_points = cfg.fine_grid_points
	if kind is None:
		kind = cfg.interpolation
	beta = np.asarray(beta, dtype=float)
	rho0 = np.asarray(rho0, dtype=float)
	rhol = np.asarray(rhol, dtype=float)
	if not beta.shape == rho0.shape == rhol.shape:
		raise UsageError('beta, rho0 and rhol must have equal lengths, got '
		                 '%d, %d, %d' % (beta.size, rho0.size, rhol.size))
	if fine_grid_points < 3:
		raise UsageError('fine grid needs at least 3 points')
	fine = np.linspace(beta[0], beta[-1], fine_grid_points)
	delta = np.abs(linear_interpolate(beta, rho0, fine, kind) -
	               linear_interpolate(beta, rhol, fine, kind))
	s_delta = simpson_integrate(delta, fine)
	return OverlapReport(1.0 / (1.0 + s_delta), s_delta, fine_grid_points)


def profile_overlap(base, other, fine_grid_points=None, kind=None):
	""" f_overlap of two SpreadingProfiles sharing a beta grid. """
	if not np.array_equal(base.beta_grid, other.beta_grid):
		raise UsageError('profiles use different beta grids')
	return f_overlap(base.beta_grid, base.rho_r, other.rho_r,
	                 fine_grid_points, kind)
