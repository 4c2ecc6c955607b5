"""
netshrink
=========
This module is the command-line utility entry-point. It parses the command-
line for a verb and its arguments, and overrides any pre-loaded configs with
those arguments. The order of option loading is:

# Load default config defined in the netshrink.config.NsConfig class the
CONFIG instance
# Check for ~/.netshrink.conf and overload all parameters in the CONFIG
instance
# Apply NETSHRINK_THREADS from the environment
# Parse command line and overwrite any options present to CONFIG

Errors raised by the library end the program with their exit code: 2 for
configuration and usage errors, 3 for data and domain errors, 4 when a
computation exceeds a capability cap.
"""
import argparse
import logging
import sys

import numpy as np

from netshrink.config import CONFIG as cfg
from netshrink.epidemic import (
	SirParams, default_beta_grid, ensemble_curve, spreading_profile)
from netshrink.errors import DataError, NetshrinkError
from netshrink.experiment import (
	ExperimentConfig, dataset_manifest, kmin_sweep, overlap_from_files,
	run_experiment, table2_report, write_manifest)
from netshrink.generators import GeneratorSpec, generate
from netshrink.parsing import (
	read_edge_list, write_curve_csv, write_edge_list, write_json,
	write_profile_csv, write_rows_csv, write_spectral_csv)
from netshrink.reduction import ReductionParams, degree_evolution, reduce_graph
from netshrink.samplers import METHODS as SAMPLER_METHODS
from netshrink.samplers import SamplerSpec, sample
from netshrink.spectral import default_tau_grid, spectral_summary
from netshrink.version import __version__, NAME


logger = logging.getLogger(__name__)


class UserConfig(argparse.Action):
	"""
	A custom class which allows an operation-and-exit style behaviour like
	with --help or --version, but for the case of writing a config file.
	"""
	def __init__(self,
				 option_strings,
				 dest=argparse.SUPPRESS,
				 default=argparse.SUPPRESS,
				 help_="make a local config file in user home dir and exit"):
		super(UserConfig, self).__init__(
			option_strings=option_strings,
			dest=dest,
			default=default,
			nargs=0,
			help=help_)

	def __call__(self, parser, namespace, values, option_string=None):
		cfg.write_user_config()
		parser.exit()


def cmd_generate(args):
	spec = GeneratorSpec(args.model, args.n, target_avg_degree=args.avg_degree,
	                     m=args.m, seed=args.seed)
	write_edge_list(generate(spec), args.out)


def cmd_reduce(args):
	params = ReductionParams(q=args.q, level=args.level, k_min=args.k_min,
	                         degree_tolerance=args.tolerance,
	                         lcc_fallback=args.lcc_fallback or None)
	sub, trace = reduce_graph(read_edge_list(args.input), params, args.method)
	write_edge_list(sub, args.out, compact=args.compact)
	if args.trace:
		write_json(trace.to_dict(), args.trace)
	print(trace)


def cmd_sample(args):
	spec = SamplerSpec(args.method, args.sr, seed=args.seed,
	                   burn_in=args.burn_in)
	write_edge_list(sample(read_edge_list(args.input), spec), args.out,
	                compact=args.compact)


def _sir_params(args, beta=1.0):
	return SirParams(beta=beta, gamma=args.gamma, init_frac=args.init_frac,
	                 runs=args.runs, seed=args.seed)


def cmd_sir(args):
	if args.grid:
		cfg.grid_points = args.grid
	curve = ensemble_curve(read_edge_list(args.input),
	                       _sir_params(args, args.beta))
	write_curve_csv(curve, args.out)


def cmd_profile(args):
	beta_grid = default_beta_grid(args.beta_min, args.beta_max, args.beta_steps)
	profile = spreading_profile(read_edge_list(args.input), beta_grid,
	                            _sir_params(args))
	write_profile_csv(profile, args.out)


def cmd_spectral(args):
	tau_grid = default_tau_grid(args.tau_min, args.tau_max, args.tau_steps)
	summary = spectral_summary(read_edge_list(args.input), tau_grid,
	                           args.estimator, args.seed)
	write_spectral_csv(summary, args.out)


def cmd_overlap(args):
	report = overlap_from_files(args.base, args.other, args.fine_grid_points,
	                            args.interpolation)
	write_json(report._asdict(), args.out)
	print('f_overlap=%.6f s_delta=%.6f' % (report.f_overlap, report.s_delta))


def cmd_experiment(args):
	result = run_experiment(ExperimentConfig.from_json(args.config))
	for level, res in result.levels.items():
		if res.overlap is not None:
			print('level %d: f_overlap=%.4f' % (level, res.overlap.f_overlap))
	if result.errors:
		logger.warning('%d stage(s) failed, see %s/errors.json' % (
			len(result.errors), result.output_dir))


def cmd_manifest(args):
	rows = dataset_manifest(args.dir, args.include, args.exclude)
	if args.out:
		write_manifest(rows, args.out)
	for row in rows:
		if row.error:
			print('%s\terror: %s' % (row.name, row.error))
		else:
			print('%s\t%d\t%d\t%.2f\t%.4f' % (
				row.name, row.n, row.m, row.avg_degree, row.heterogeneity))


def cmd_table2(args):
	table2_report([ExperimentConfig.from_json(path) for path in args.config],
	              args.out)


def cmd_evolution(args):
	q_grid = np.linspace(0.0, 0.9, args.q_steps)
	rows = degree_evolution(read_edge_list(args.input), q_grid)
	write_rows_csv(args.out, ('q', 'degree_ratio', 's_lcc'), rows)


def cmd_kmin(args):
	rows = kmin_sweep(read_edge_list(args.input), args.level, args.k_min,
	                  _sir_params(args, args.beta),
	                  lcc_fallback=args.lcc_fallback or None)
	write_rows_csv(args.out, rows[0]._fields if rows else (), rows)


def _add_input(parser):
	parser.add_argument('--in', dest='input', required=True,
						help='edge-list file to read')


def _add_out(parser, required=True):
	parser.add_argument('--out', required=required, help='output path')


def _add_sir(parser):
	parser.add_argument('--gamma', type=float, help='recovery rate')
	parser.add_argument('--init-frac', type=float,
						help='fraction of top-degree nodes infected at t=0')
	parser.add_argument('--runs', type=int, help='runs per ensemble')
	parser.add_argument('--seed', type=int, default=0)


def get_args(argv=None):
	""" Parse the command line args and return an argparser object. """
	parser = argparse.ArgumentParser(prog=NAME)

	parser.add_argument('-v', '--version',
						action='version',
						version='%s v%s' % (NAME, __version__)
						)

	parser.add_argument('--make-config',
						action=UserConfig,
						)

	parser.add_argument('-I', '--ignore-config',
						action='store_true',
						help='ignore the user config file if it exists'
						)

	parser.add_argument('--log-level',
						type=str.upper,
						choices=('DEBUG', 'INFO', 'WARNING', 'ERROR'),
						help='logging verbosity'
						)

	parser.add_argument('--threads',
						type=int,
						help='worker processes for SIR ensembles'
						)

	verbs = parser.add_subparsers(dest='verb', metavar='verb')
	verbs.required = True

	sub = verbs.add_parser('generate', help='generate an ER or BA network')
	sub.add_argument('--model', choices=('er', 'ba'), required=True)
	sub.add_argument('--n', type=int, required=True)
	sub.add_argument('--avg-degree', type=float, help='ER average degree')
	sub.add_argument('--m', type=int, help='BA edges per new node')
	sub.add_argument('--seed', type=int, default=0)
	_add_out(sub)
	sub.set_defaults(func=cmd_generate)

	sub = verbs.add_parser('reduce', help='NRDC or NRDC\' reduction')
	_add_input(sub)
	sub.add_argument('--method', choices=('nrdc', 'nrdc-prime'), default='nrdc')
	level = sub.add_mutually_exclusive_group(required=True)
	level.add_argument('--q', type=float, default=0.0, help='removal ratio')
	level.add_argument('--level', type=int, help='level l, q = 1 - 1/2^l')
	sub.add_argument('--k-min', type=int)
	sub.add_argument('--tolerance', type=float, help='pruning tolerance')
	sub.add_argument('--lcc-fallback', action='store_true',
					 help='keep the largest component of a split result')
	sub.add_argument('--compact', action='store_true',
					 help='re-label the output to 0..n-1')
	sub.add_argument('--trace', help='JSON file for the reduction trace')
	_add_out(sub)
	sub.set_defaults(func=cmd_reduce)

	sub = verbs.add_parser('sample', help='baseline subgraph sampling')
	_add_input(sub)
	sub.add_argument('--method', choices=SAMPLER_METHODS, required=True)
	sub.add_argument('--sr', type=float, required=True, help='sampling rate')
	sub.add_argument('--seed', type=int, default=0)
	sub.add_argument('--burn-in', type=int, default=0)
	sub.add_argument('--compact', action='store_true')
	_add_out(sub)
	sub.set_defaults(func=cmd_sample)

	sub = verbs.add_parser('sir', help='ensemble SIR curves (t,s,i,r)')
	_add_input(sub)
	sub.add_argument('--beta', type=float, default=1.0)
	_add_sir(sub)
	sub.add_argument('--grid', type=int, help='time grid points')
	_add_out(sub)
	sub.set_defaults(func=cmd_sir)

	sub = verbs.add_parser('profile', help='spreading profile (beta,rho_r)')
	_add_input(sub)
	sub.add_argument('--beta-min', type=float)
	sub.add_argument('--beta-max', type=float)
	sub.add_argument('--beta-steps', type=int)
	_add_sir(sub)
	_add_out(sub)
	sub.set_defaults(func=cmd_profile)

	sub = verbs.add_parser('spectral', help='Laplacian spectral summary')
	_add_input(sub)
	sub.add_argument('--tau-min', type=float)
	sub.add_argument('--tau-max', type=float)
	sub.add_argument('--tau-steps', type=int)
	sub.add_argument('--estimator', choices=('dense', 'stochastic'),
					 default='dense')
	sub.add_argument('--seed', type=int, default=0)
	_add_out(sub)
	sub.set_defaults(func=cmd_spectral)

	sub = verbs.add_parser('overlap', help='f_overlap of two profiles')
	sub.add_argument('--base', required=True, help='reference profile CSV')
	sub.add_argument('--other', required=True, help='compared profile CSV')
	sub.add_argument('--fine-grid-points', type=int)
	sub.add_argument('--interpolation', choices=('linear', 'cubic'))
	_add_out(sub)
	sub.set_defaults(func=cmd_overlap)

	sub = verbs.add_parser('experiment', help='run an experiment config')
	sub.add_argument('--config', required=True, help='JSON experiment config')
	sub.set_defaults(func=cmd_experiment)

	sub = verbs.add_parser('manifest', help='topology table of a directory')
	sub.add_argument('--dir', required=True)
	sub.add_argument('-i', '--include', type=str, nargs='+',
					 help='list of file extensions without preceding dot '
						  'to include')
	sub.add_argument('-e', '--exclude', type=str, nargs='+',
					 help='list of file extensions without preceding dot '
						  'to exclude')
	_add_out(sub, required=False)
	sub.set_defaults(func=cmd_manifest)

	sub = verbs.add_parser('table2', help='f_overlap matrix of experiments')
	sub.add_argument('--config', nargs='+', required=True)
	_add_out(sub)
	sub.set_defaults(func=cmd_table2)

	sub = verbs.add_parser('evolution', help='degree and LCC evolution')
	_add_input(sub)
	sub.add_argument('--q-steps', type=int, default=19)
	_add_out(sub)
	sub.set_defaults(func=cmd_evolution)

	sub = verbs.add_parser('kmin', help='k_min sweep of NRDC\'')
	_add_input(sub)
	sub.add_argument('--level', type=int, required=True)
	sub.add_argument('--k-min', type=int, nargs='+', required=True)
	sub.add_argument('--beta', type=float, default=1.0)
	sub.add_argument('--lcc-fallback', action='store_true')
	_add_sir(sub)
	_add_out(sub)
	sub.set_defaults(func=cmd_kmin)

	return parser.parse_args(argv)


def main(argv=None):
	""" Set up the args, apply them to CONFIG and run the verb. """
	args = get_args(argv)

	if args.ignore_config:
		cfg.reset_defaults()
	if args.log_level:
		cfg.log_level = args.log_level
		logging.getLogger().setLevel(args.log_level)
	if args.threads:
		cfg.threads = max(1, args.threads)

	try:
		args.func(args)
	except NetshrinkError as exc:
		logger.error(exc)
		return exc.exit_code
	except OSError as exc:
		# unreadable or unwritable paths count as data errors
		logger.error(exc)
		return DataError.exit_code
	return 0


if __name__ == '__main__':
	sys.exit(main())
