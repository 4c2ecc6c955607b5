"""
CONFIGURATION
=============
The configuration file setup module for netshrink. The CONFIG variable
contains the initialized NsConfig instance which has either the default
attributes, or values found in a ~/.netshrink.conf file if one was
available. The NETSHRINK_THREADS environment variable, when set, caps the
number of worker processes regardless of the file.

GLOBALS
-------
CONFIG

"""
import configparser
import logging
import os

logger = logging.getLogger()
logging.basicConfig()

THREADS_ENV = 'NETSHRINK_THREADS'


class NsConfig(object):
	"""
	This class sets up a default configuration, and then tries to overload
	all the attributes with the values from a user configuration file. All
	available config options are accessible as instance attributes.
	"""
	def __init__(self):
		"""
		Init the default parser, and then overload with values found in a
		local config file.
		"""
		self.default_config = {
			'global': {
				'threads': '1',
				'log_level': 'WARNING',
			},
			'reduction': {
				'k_min': '2',
				'degree_tolerance': '0.1',
				'lcc_fallback': 'false',
			},
			'sir': {
				'gamma': '1.0',
				'init_frac': '0.10',
				'runs': '100',
				'grid_points': '101',
				'pilot_runs': '10',
				'end_quantile': '0.99',
			},
			'profile': {
				'beta_min': '0.0',
				'beta_max': '2.0',
				'beta_steps': '21',
			},
			'spectral': {
				'tau_min': '0.01',
				'tau_max': '1000.0',
				'tau_steps': '60',
				'dense_cap': '6000',
				'probes': '120',
				'lanczos_steps': '60',
			},
			'overlap': {
				'fine_grid_points': '401',
				'interpolation': 'linear',
			},
			'manifest': {
				'include_exts': 'txt edges el tsv',
				'exclude_exts': '',
			},
		}
		self.user_config_file = os.path.expanduser('~/.netshrink.conf')
		self.default_parser = configparser.RawConfigParser()
		self.default_parser.read_dict(self.default_config)

		self._load_config(self.default_parser)
		self._load_user_config()
		self._load_environment()

	def __repr__(self):
		return (
			'Config(threads={0}, k_min={1}, runs={2}, beta_steps={3}, '
			'tau_steps={4}, fine_grid_points={5})'.format(
				self.threads, self.k_min, self.runs, self.beta_steps,
				self.tau_steps, self.fine_grid_points))

	def _load_config(self, cfgparser):
		"""
		Assign all config values to Config instance attributes.

		:param cfgparser: the ConfigParser object to load values from
		"""
		self.threads = cfgparser.getint('global', 'threads')
		self.log_level = cfgparser.get('global', 'log_level').upper()
		self.k_min = cfgparser.getint('reduction', 'k_min')
		self.degree_tolerance = cfgparser.getfloat(
			'reduction', 'degree_tolerance')
		self.lcc_fallback = cfgparser.getboolean('reduction', 'lcc_fallback')
		self.gamma = cfgparser.getfloat('sir', 'gamma')
		self.init_frac = cfgparser.getfloat('sir', 'init_frac')
		self.runs = cfgparser.getint('sir', 'runs')
		self.grid_points = cfgparser.getint('sir', 'grid_points')
		self.pilot_runs = cfgparser.getint('sir', 'pilot_runs')
		self.end_quantile = cfgparser.getfloat('sir', 'end_quantile')
		self.beta_min = cfgparser.getfloat('profile', 'beta_min')
		self.beta_max = cfgparser.getfloat('profile', 'beta_max')
		self.beta_steps = cfgparser.getint('profile', 'beta_steps')
		self.tau_min = cfgparser.getfloat('spectral', 'tau_min')
		self.tau_max = cfgparser.getfloat('spectral', 'tau_max')
		self.tau_steps = cfgparser.getint('spectral', 'tau_steps')
		self.dense_cap = cfgparser.getint('spectral', 'dense_cap')
		self.probes = cfgparser.getint('spectral', 'probes')
		self.lanczos_steps = cfgparser.getint('spectral', 'lanczos_steps')
		self.fine_grid_points = cfgparser.getint('overlap', 'fine_grid_points')
		self.interpolation = cfgparser.get('overlap', 'interpolation')
		self.include_exts = cfgparser.get('manifest', 'include_exts').split()
		self.exclude_exts = cfgparser.get('manifest', 'exclude_exts').split()
		logger.setLevel(self.log_level)

	def _load_user_config(self):
		""" Check for user config file and overload instance attributes. """
		if os.path.exists(self.user_config_file):
			cfgparser = configparser.RawConfigParser()
			cfgparser.read_dict(self.default_config)
			cfgparser.read(self.user_config_file)
			self._load_config(cfgparser)

	def _load_environment(self):
		""" NETSHRINK_THREADS wins over both the defaults and the file. """
		value = os.environ.get(THREADS_ENV)
		if not value:
			return
		try:
			self.threads = max(1, int(value))
		except ValueError:
			logger.warning('Ignoring %s=%r, not an integer.' % (
				THREADS_ENV, value))

	def reset_defaults(self):
		""" Defaults without the user file; NETSHRINK_THREADS still applies. """
		self._load_config(self.default_parser)
		self._load_environment()

	def write_user_config(self):
		""" Save a user config file with the default values. """
		with open(self.user_config_file, 'w') as f:
			self.default_parser.write(f)
		print('Made user config file at %s' % self.user_config_file)


CONFIG = NsConfig()
