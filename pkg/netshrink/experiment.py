"""
EXPERIMENT
==========
Orchestration of complete reduction studies.

An experiment loads or generates one network, reduces it at every requested
level (l = 0 is always included as the reference), and for each level writes
the reduced graph, its topology summary, SIR curves at the configured beta
values, the spreading profile rho_r(beta) and the spectral summary. The
overlap score and curve MAEs of every level against level 0 close the run.

Output tree under config.output_dir::

	config.json             resolved configuration and derived seeds
	summary.csv             one topology row per level
	overlap.csv             f_overlap, MAE and z_norm MAE per level
	level<l>/graph.txt      reduced edge list (original labels)
	level<l>/trace.json     reduction audit trail
	level<l>/sir_beta<b>.csv
	level<l>/profile.csv
	level<l>/spectral.csv
	timings.json            wall-clock seconds per stage
	errors.json             stage failures

Everything but timings.json is a pure function of the configuration, so two
runs with the same master seed give byte-identical CSV trees. A failing stage
is logged, recorded in errors.json and skipped; the other stages still run.
"""
import hashlib
import logging
import os
import time
from collections import OrderedDict, namedtuple

import numpy as np

from .config import CONFIG as cfg
from .epidemic import (
	SirParams, check_beta_grid, curve_mae, default_beta_grid,
	default_time_grid, ensemble_curve, spreading_profile)
from .errors import ConfigurationError, NetshrinkError, UsageError
from .generators import GeneratorSpec, generate
from .metrics import profile_overlap
from .models import is_connected, largest_connected_component, summarize
from .parsing import (
	read_edge_list, read_json, read_profile_csv, scan_dir, write_curve_csv,
	write_edge_list, write_json, write_profile_csv, write_rows_csv,
	write_spectral_csv)
from .reduction import ReductionParams, nrdc_prime, reduce_graph
from .samplers import SamplerSpec, sample
from .spectral import default_tau_grid, spectral_summary, z_norm_mae


logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
REDUCTION_METHODS = ('nrdc', 'nrdc-prime')
SAMPLING_METHODS = ('rdn', 'mhrw', 'cnarw')
METHODS = REDUCTION_METHODS + SAMPLING_METHODS
TABLE2_METHODS = ('rdn', 'cnarw', 'mhrw', 'nrdc', 'nrdc-prime')
STAGES = ('curves', 'profile', 'spectral')
ESTIMATORS = ('dense', 'stochastic')
SIR_KEYS = ('gamma', 'init_frac', 'runs')

SUMMARY_COLUMNS = ('level', 'n', 'm', 'avg_degree', 'heterogeneity', 's_lcc',
                   'n_lcc', 'removed_nodes', 'pruned_edges')

ManifestRow = namedtuple('ManifestRow', 'name n m avg_degree heterogeneity error')
KminRow = namedtuple('KminRow', 'k_min mae_r mae_i n avg_degree stalled')


def derive_seed(master_seed, stage, level=0, run_index=0):
	"""
	64-bit seed of one stage, level and run: the first 8 bytes of
	sha256('<master>:<stage>:<level>:<run>').
	"""
	key = ('%d:%s:%d:%d' % (master_seed, stage, level, run_index)).encode('utf-8')
	return int.from_bytes(hashlib.sha256(key).digest()[:8], 'big')


def _grid_from_value(value, default, name):
	"""
	A grid is either an explicit list, a {"min", "max", "steps"} object or
	missing (default grid).
	"""
	if value is None:
		return np.asarray(default(), dtype=float)
	if isinstance(value, dict):
		try:
			return np.asarray(default(value['min'], value['max'], value['steps']),
			                  dtype=float)
		except KeyError as exc:
			raise ConfigurationError('%s misses %s' % (name, exc))
	try:
		return np.asarray([float(x) for x in value])
	except (TypeError, ValueError):
		raise ConfigurationError('%s must be a list of numbers' % name)


class ExperimentConfig(object):
	"""
	Validated experiment description, usually read from a JSON document::

		{
		  "schema_version": 1,
		  "name": "ba5000",
		  "network": {"generator": {"model": "ba", "n": 5000, "m": 5}},
		  "reduction": {"method": "nrdc", "k_min": 2, "lcc_fallback": false},
		  "levels": [1, 2, 3],
		  "sir": {"gamma": 1.0, "init_frac": 0.1, "runs": 100},
		  "curve_betas": [1.0],
		  "beta_grid": {"min": 0.0, "max": 2.0, "steps": 21},
		  "tau_grid": {"min": 0.01, "max": 1000.0, "steps": 60},
		  "spectral": {"estimator": "dense"},
		  "output_dir": "out/ba5000",
		  "master_seed": 7
		}

	An edge-list network reads {"edge_list": PATH, "largest_component": bool}
	instead of a generator; relative paths are taken from the config file's
	directory.
	"""

	def __init__(self, data, base_dir=None):
		if not isinstance(data, dict):
			raise ConfigurationError('experiment config must be a JSON object')
		version = data.get('schema_version', SCHEMA_VERSION)
		if version != SCHEMA_VERSION:
			raise ConfigurationError('unsupported schema_version %r' % (version,))
		self.base_dir = base_dir or os.getcwd()
		self.master_seed = data.get('master_seed', 0)
		if not isinstance(self.master_seed, int) or \
				not 0 <= self.master_seed < 2 ** 64:
			raise ConfigurationError('master_seed must be a 64-bit non-negative '
			                         'integer')
		self.name = str(data.get('name', 'experiment'))

		network = data.get('network')
		if not isinstance(network, dict):
			raise ConfigurationError('network must be an object')
		self.generator = None
		self.edge_list = None
		self.largest_component = bool(network.get('largest_component', False))
		if 'generator' in network:
			generator = dict(network['generator'])
			generator.setdefault('seed', derive_seed(self.master_seed, 'network'))
			self.generator = GeneratorSpec.from_dict(generator)
		elif 'edge_list' in network:
			self.edge_list = os.path.join(
				self.base_dir, os.path.expanduser(network['edge_list']))
		else:
			raise ConfigurationError('network needs a generator or an edge_list')

		reduction = data.get('reduction', {})
		self.method = str(reduction.get('method', 'nrdc')).lower()
		if self.method not in METHODS:
			raise ConfigurationError('unknown method %r, expected one of %s' % (
				self.method, ', '.join(METHODS)))
		self.k_min = reduction.get('k_min', cfg.k_min)
		self.degree_tolerance = reduction.get(
			'degree_tolerance', cfg.degree_tolerance)
		self.lcc_fallback = bool(reduction.get('lcc_fallback', cfg.lcc_fallback))
		self.burn_in = reduction.get('burn_in', 0)
		# raises on invalid reduction parameters
		ReductionParams(k_min=self.k_min, degree_tolerance=self.degree_tolerance)

		levels = data.get('levels')
		if not levels or not all(isinstance(l, int) and l >= 0 for l in levels):
			raise ConfigurationError('levels must be a non-empty list of '
			                         'non-negative integers')
		self.levels = sorted(set([0] + list(levels)))

		sir = dict(data.get('sir', {}))
		unknown = set(sir).difference(SIR_KEYS)
		if unknown:
			raise ConfigurationError(
				'unknown sir settings: %s' % ', '.join(sorted(unknown)))
		self.sir = SirParams(beta=1.0, seed=0, **sir)
		self.curve_betas = [float(b) for b in data.get('curve_betas', [1.0])]
		self.beta_grid = check_beta_grid(_grid_from_value(
			data.get('beta_grid'), default_beta_grid, 'beta_grid'))
		self.tau_grid = _grid_from_value(
			data.get('tau_grid'), default_tau_grid, 'tau_grid')
		self.estimator = data.get('spectral', {}).get('estimator', 'dense')
		if self.estimator not in ESTIMATORS:
			raise ConfigurationError('unknown estimator %r' % (self.estimator,))
		self.stages = list(data.get('stages', STAGES))
		for stage in self.stages:
			if stage not in STAGES:
				raise ConfigurationError('unknown stage %r' % (stage,))
		self.output_dir = os.path.join(
			self.base_dir, os.path.expanduser(data.get('output_dir', self.name)))

	def __repr__(self):
		return 'ExperimentConfig(%s, method=%s, levels=%s)' % (
			self.name, self.method, self.levels)

	@classmethod
	def from_dict(cls, data, base_dir=None):
		return cls(data, base_dir)

	@classmethod
	def from_json(cls, path):
		path = os.path.abspath(os.path.expanduser(path))
		return cls(read_json(path), os.path.dirname(path))

	def to_dict(self):
		if self.generator is not None:
			network = {'generator': self.generator.to_dict()}
		else:
			network = {'edge_list': self.edge_list,
			           'largest_component': self.largest_component}
		return {
			'schema_version': SCHEMA_VERSION,
			'name': self.name,
			'network': network,
			'reduction': {'method': self.method, 'k_min': self.k_min,
			              'degree_tolerance': self.degree_tolerance,
			              'lcc_fallback': self.lcc_fallback,
			              'burn_in': self.burn_in},
			'levels': list(self.levels),
			'sir': {'gamma': self.sir.gamma, 'init_frac': self.sir.init_frac,
			        'runs': self.sir.runs},
			'curve_betas': list(self.curve_betas),
			'beta_grid': [float(b) for b in self.beta_grid],
			'tau_grid': [float(t) for t in self.tau_grid],
			'spectral': {'estimator': self.estimator},
			'stages': list(self.stages),
			'output_dir': self.output_dir,
			'master_seed': self.master_seed,
		}

	def seed(self, stage, level=0, run_index=0):
		return derive_seed(self.master_seed, stage, level, run_index)


def load_network(config):
	""" The level-0 network of an experiment. """
	if config.generator is not None:
		g = generate(config.generator)
	else:
		g = read_edge_list(config.edge_list)
	if config.largest_component and not is_connected(g):
		lcc = largest_connected_component(g)
		logger.info('Using the LCC of %s: %d of %d nodes' % (
			config.name, lcc.n, g.n))
		g = lcc
	return g


def reduce_level(g, config, level):
	"""
	Reduced network of one level: NRDC or NRDC' at q = 1 - 1/2^l, or a
	baseline sample at sr = 1/2^l. Disconnected samples are replaced by their
	largest connected component.

	:return: (Graph, trace dict)
	"""
	if level == 0:
		return g, {'method': config.method, 'level': 0}
	if config.method in REDUCTION_METHODS:
		params = ReductionParams.from_level(
			level, k_min=config.k_min, degree_tolerance=config.degree_tolerance,
			lcc_fallback=config.lcc_fallback)
		sub, trace = reduce_graph(g, params, config.method)
		info = trace.to_dict()
		info.update({'method': config.method, 'level': level, 'q': params.q})
		return sub, info
	spec = SamplerSpec(config.method, 1.0 / 2 ** level,
	                   seed=config.seed('sample', level), burn_in=config.burn_in)
	sub = sample(g, spec)
	info = spec.to_dict()
	info.update({'level': level, 'sampled_nodes': sub.n, 'lcc_applied': False})
	if sub.n and not is_connected(sub):
		sub = largest_connected_component(sub)
		info['lcc_applied'] = True
	return sub, info


class LevelResult(object):
	""" Everything computed for one reduction level. """

	def __init__(self, level):
		self.level = level
		self.graph = None
		self.trace = None
		self.summary = None
		self.curves = OrderedDict()
		self.profile = None
		self.spectral = None
		self.overlap = None
		self.mae = OrderedDict()
		self.z_norm_mae = None


class ExperimentResult(object):
	"""
	Outcome of run_experiment: LevelResult per level (ordered), the stage
	failures and wall-clock timings, and the paths of the written files.
	"""

	def __init__(self, config):
		self.config = config
		self.output_dir = config.output_dir
		self.levels = OrderedDict()
		self.errors = []
		self.timings = OrderedDict()
		self.files = []

	def __repr__(self):
		return 'ExperimentResult(%s, levels=%s, errors=%d)' % (
			self.config.name, list(self.levels), len(self.errors))

	def overlap(self, level):
		return self.levels[level].overlap


def _fmt_beta(beta):
	return ('%g' % beta).replace('.', 'p')


class _ExperimentRunner(object):

	def __init__(self, config):
		self.config = config
		self.result = ExperimentResult(config)
		self.time_grids = OrderedDict()

	def stage(self, name, level, func, *args):
		""" Run one stage, recording its failure instead of raising. """
		start = time.perf_counter()
		try:
			return func(*args)
		except NetshrinkError as exc:
			logger.warning('Stage %s failed at level %s: %s' % (name, level, exc))
			self.result.errors.append({
				'stage': name, 'level': level,
				'error': type(exc).__name__, 'message': str(exc)})
			return None
		finally:
			self.result.timings['%s/level%s' % (name, level)] = \
				time.perf_counter() - start

	def path(self, *parts):
		path = os.path.join(self.config.output_dir, *parts)
		self.result.files.append(path)
		return path

	def sir_params(self, stage, level, beta=1.0, time_grid=None):
		return self.config.sir.replace(
			beta=beta, seed=self.config.seed(stage, level), time_grid=time_grid)

	def run(self):
		config = self.config
		os.makedirs(config.output_dir, exist_ok=True)
		logger.info('Running %r into %s' % (config, config.output_dir))
		g = self.stage('load', 0, load_network, config)
		if g is not None:
			if 'curves' in config.stages:
				for beta in config.curve_betas:
					self.time_grids[beta] = self.stage(
						'time_grid', 0, default_time_grid, g,
						self.sir_params('pilot', 0, beta))
			for level in config.levels:
				self.run_level(g, level)
			self.compare()
			self.write_tables()
		self.write_json_files()
		return self.result

	def run_level(self, g, level):
		config = self.config
		res = LevelResult(level)
		self.result.levels[level] = res
		reduced = self.stage('reduce', level, reduce_level, g, config, level)
		if reduced is None:
			return
		res.graph, res.trace = reduced
		os.makedirs(os.path.join(config.output_dir, 'level%d' % level),
		            exist_ok=True)
		write_edge_list(res.graph, self.path('level%d' % level, 'graph.txt'))
		write_json(res.trace, self.path('level%d' % level, 'trace.json'))
		res.summary = self.stage('summary', level, summarize, res.graph)
		logger.info('Level %d: %r' % (level, res.summary))

		if 'curves' in config.stages:
			for beta, grid in self.time_grids.items():
				if grid is None:
					continue
				curve = self.stage('curves', level, ensemble_curve, res.graph,
				                   self.sir_params('sir', level, beta, grid))
				if curve is not None:
					res.curves[beta] = curve
					write_curve_csv(curve, self.path(
						'level%d' % level, 'sir_beta%s.csv' % _fmt_beta(beta)))
		if 'profile' in config.stages:
			res.profile = self.stage(
				'profile', level, spreading_profile, res.graph, config.beta_grid,
				self.sir_params('profile', level))
			if res.profile is not None:
				write_profile_csv(res.profile,
				                  self.path('level%d' % level, 'profile.csv'))
		if 'spectral' in config.stages:
			res.spectral = self.stage(
				'spectral', level, spectral_summary, res.graph, config.tau_grid,
				config.estimator, config.seed('spectral', level))
			if res.spectral is not None:
				write_spectral_csv(res.spectral,
				                   self.path('level%d' % level, 'spectral.csv'))

	def compare(self):
		base = self.result.levels.get(0)
		if base is None:
			return
		for level, res in self.result.levels.items():
			if base.profile is not None and res.profile is not None:
				res.overlap = self.stage(
					'overlap', level, profile_overlap, base.profile, res.profile)
			for beta, curve in res.curves.items():
				if beta in base.curves:
					res.mae[beta] = self.stage(
						'mae', level, curve_mae, base.curves[beta], curve)
			if base.spectral is not None and res.spectral is not None:
				res.z_norm_mae = self.stage(
					'z_norm_mae', level, z_norm_mae, base.spectral, res.spectral)

	def write_tables(self):
		summary_rows = []
		overlap_rows = []
		for level, res in self.result.levels.items():
			if res.summary is not None:
				trace = res.trace or {}
				summary_rows.append([
					level, res.summary.n, res.summary.m, res.summary.avg_degree,
					res.summary.heterogeneity, res.summary.s_lcc,
					res.summary.n_lcc, len(trace.get('removed_nodes', ())),
					len(trace.get('pruned_edges', ()))])
			row = [level]
			row.extend(('', '') if res.overlap is None
			           else (res.overlap.f_overlap, res.overlap.s_delta))
			for beta in self.config.curve_betas:
				error = res.mae.get(beta)
				row.extend(('', '') if error is None else (error.r, error.i))
			row.append('' if res.z_norm_mae is None else res.z_norm_mae)
			overlap_rows.append(row)
		write_rows_csv(self.path('summary.csv'), SUMMARY_COLUMNS, summary_rows)
		header = ['level', 'f_overlap', 's_delta']
		for beta in self.config.curve_betas:
			header.extend(('mae_r_beta%s' % _fmt_beta(beta),
			               'mae_i_beta%s' % _fmt_beta(beta)))
		header.append('z_norm_mae')
		write_rows_csv(self.path('overlap.csv'), header, overlap_rows)

	def write_json_files(self):
		config = self.config
		resolved = config.to_dict()
		resolved['seeds'] = dict(
			('level%d' % level, {
				'sample': config.seed('sample', level),
				'sir': config.seed('sir', level),
				'profile': config.seed('profile', level),
				'spectral': config.seed('spectral', level)})
			for level in config.levels)
		write_json(resolved, self.path('config.json'))
		write_json(self.result.timings, self.path('timings.json'))
		write_json(self.result.errors, self.path('errors.json'))


def run_experiment(config):
	"""
	Run a complete study and write its output tree.

	:param ExperimentConfig config: validated configuration.
	:return: ExperimentResult
	"""
	return _ExperimentRunner(config).run()


def dataset_manifest(path, include_exts=None, exclude_exts=None):
	"""
	Topology statistics of every edge list in a directory. A file that
	cannot be read yields a row holding only its name and the error.

	:param str path: directory of edge lists.
	:return: list of ManifestRow, sorted by file name.
	"""
	rows = []
	for filepath in scan_dir(path, include_exts, exclude_exts):
		name = os.path.splitext(os.path.basename(filepath))[0]
		try:
			summary = summarize(read_edge_list(filepath))
		except NetshrinkError as exc:
			logger.warning('Skipping %s: %s' % (filepath, exc))
			rows.append(ManifestRow(name, None, None, None, None, str(exc)))
			continue
		rows.append(ManifestRow(name, summary.n, summary.m, summary.avg_degree,
		                        summary.heterogeneity, ''))
	return rows


def write_manifest(rows, path):
	write_rows_csv(path, ManifestRow._fields, (
		['' if value is None else value for value in row] for row in rows))


def table2_report(configs, out_path=None):
	"""
	f_overlap matrix of several experiments, one row per network, level and
	master seed with one column per method.

	:param configs: ExperimentConfig list sharing beta grid and SIR settings.
	:param str out_path: optional CSV destination.
	:return: (header, rows)
	"""
	configs = list(configs)
	if not configs:
		raise UsageError('table2_report needs at least one configuration')
	first = configs[0]
	for config in configs[1:]:
		if not np.array_equal(config.beta_grid, first.beta_grid):
			raise UsageError('%s uses a different beta grid than %s' % (
				config.name, first.name))
		if config.sir.to_dict() != first.sir.to_dict():
			raise UsageError('%s uses different SIR settings than %s' % (
				config.name, first.name))

	cells = OrderedDict()
	for config in configs:
		if 'profile' not in config.stages:
			raise UsageError('%s does not compute spreading profiles' % config.name)
		result = run_experiment(config)
		for level in config.levels:
			key = (config.name, level, config.master_seed)
			row = cells.setdefault(key, {'k_min': config.k_min})
			res = result.levels.get(level)
			if res is not None and res.overlap is not None:
				row[config.method] = res.overlap.f_overlap

	header = ['name', 'level', 'seed', 'k_min'] + list(TABLE2_METHODS)
	rows = []
	for (name, level, seed), row in cells.items():
		rows.append([name, level, seed, row['k_min']] +
		            [row.get(method, '') for method in TABLE2_METHODS])
	if out_path:
		write_rows_csv(out_path, header, rows)
	return header, rows


def kmin_sweep(g, level, k_min_values, sir_params, degree_tolerance=None,
               lcc_fallback=None):
	"""
	r- and i-curve MAE of NRDC' subgraphs against the original network for
	several k_min values, the usual way of picking k_min.

	:param Graph g: connected network.
	:param int level: reduction level.
	:param k_min_values: k_min candidates.
	:param SirParams sir_params: curve settings; the adaptive grid of g is
	                             used when no time grid is set.
	:return: list of KminRow
	"""
	if sir_params.time_grid is None:
		sir_params = sir_params.replace(
			time_grid=default_time_grid(g, sir_params))
	base = ensemble_curve(g, sir_params)
	rows = []
	for k_min in k_min_values:
		params = ReductionParams.from_level(
			level, k_min=k_min, degree_tolerance=degree_tolerance,
			lcc_fallback=lcc_fallback)
		sub, trace = nrdc_prime(g, params)
		error = curve_mae(base, ensemble_curve(sub, sir_params))
		logger.info('k_min=%d: MAE r=%.4f i=%.4f' % (k_min, error.r, error.i))
		rows.append(KminRow(k_min, error.r, error.i, sub.n,
		                    trace.avg_degree_after, trace.stalled))
	return rows


def overlap_from_files(base_path, other_path, fine_grid_points=None, kind=None):
	""" f_overlap of two stored profile CSV files. """
	return profile_overlap(read_profile_csv(base_path),
	                       read_profile_csv(other_path), fine_grid_points, kind)
