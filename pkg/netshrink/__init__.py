# -*- coding: utf-8 -*-
"""
NETSHRINK
=========
** Shrink complex networks and check that they still behave alike. **

License: MIT

--------------------------------------------------

netshrink reduces a network by removing its lowest-degree nodes (NRDC) and,
when the survivors end up denser than the original, by pruning edges toward
low-degree neighbors without disconnecting the graph (NRDC'). It then checks
how faithfully a reduced network reproduces the original:

* SIR epidemics: ensemble i(t) and r(t) curves, their mean absolute error,
  and the spreading profile rho_r(beta) compared through the f_overlap score.
* Information flow: the partition function, spectral entropy and free energy
  of the graph Laplacian.

Random node sampling and two random-walk samplers serve as baselines, and an
experiment harness writes every result as plot-ready CSV.

>>> from netshrink import barabasi_albert, GeneratorSpec, nrdc, ReductionParams
>>> g = barabasi_albert(GeneratorSpec('ba', 5000, m=5, seed=1))
>>> sub, trace = nrdc(g, ReductionParams.from_level(3))
>>> sub.n
625
"""
from netshrink.models import (
	Graph, NetworkSummary, from_edge_list, average_degree,
	connected_components, largest_connected_component, is_connected,
	heterogeneity_index, summarize)
from netshrink.generators import (
	GeneratorSpec, erdos_renyi, barabasi_albert, generate)
from netshrink.reduction import (
	ReductionParams, ReductionTrace, level_to_q, nrdc, edge_prune, nrdc_prime,
	degree_evolution, average_evolution)
from netshrink.samplers import (
	SamplerSpec, random_node_sample, mhrw_sample, cnarw_sample, sample)
from netshrink.epidemic import (
	SirParams, SirCurve, SpreadingProfile, simulate_sir, ensemble_curve,
	spreading_profile, curve_mae, default_beta_grid)
from netshrink.spectral import (
	LaplacianSpectrum, SpectralSummary, laplacian_eigenvalues,
	stochastic_spectrum, partition_function, spectral_entropy, free_energy,
	spectral_summary)
from netshrink.metrics import (
	OverlapReport, linear_interpolate, simpson_integrate, f_overlap,
	profile_overlap)
from netshrink.experiment import (
	ExperimentConfig, ExperimentResult, run_experiment, dataset_manifest,
	table2_report)
from netshrink.parsing import read_edge_list, write_edge_list, scan_dir
from netshrink.version import __version__

__all__ = [
	'Graph', 'NetworkSummary', 'from_edge_list', 'average_degree',
	'connected_components', 'largest_connected_component', 'is_connected',
	'heterogeneity_index', 'summarize', 'GeneratorSpec', 'erdos_renyi',
	'barabasi_albert', 'generate', 'ReductionParams', 'ReductionTrace',
	'level_to_q', 'nrdc', 'edge_prune', 'nrdc_prime', 'degree_evolution',
	'average_evolution', 'SamplerSpec', 'random_node_sample', 'mhrw_sample',
	'cnarw_sample', 'sample', 'SirParams', 'SirCurve', 'SpreadingProfile',
	'simulate_sir', 'ensemble_curve', 'spreading_profile', 'curve_mae',
	'default_beta_grid',
	'LaplacianSpectrum', 'SpectralSummary', 'laplacian_eigenvalues',
	'stochastic_spectrum', 'partition_function', 'spectral_entropy',
	'free_energy', 'spectral_summary', 'OverlapReport', 'linear_interpolate',
	'simpson_integrate', 'f_overlap', 'profile_overlap', 'ExperimentConfig',
	'ExperimentResult',
	'run_experiment', 'dataset_manifest', 'table2_report', 'read_edge_list',
	'write_edge_list', 'scan_dir'
	]
