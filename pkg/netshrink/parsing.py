"""
PARSING
=======
This module contains functions for reading and writing the files netshrink
works with: plain-text edge lists, directories of edge lists, and the CSV
and JSON artifacts written by the experiment harness. Every writer has a
matching reader so artifacts round-trip.

Edge-list format: one edge per line, two whitespace-separated non-negative
integers. Blank lines and lines starting with '#' or '%' are ignored. A
self-loop line "u u" declares node u without adding an edge; isolated nodes
are written that way. Files are UTF-8.
"""
import csv
import json
import logging
import os

import numpy as np

from .config import CONFIG as cfg
from .errors import DataError, EdgeListError
from .models import Graph, _to_label


logger = logging.getLogger(__name__)

COMMENT_CHARS = ('#', '%')


def parse_edge_lines(lines):
	"""
	Parse edge-list text lines into label pairs.

	:param lines: iterable of text lines.
	:return: list of (int, int) pairs.
	"""
	pairs = []
	for number, line in enumerate(lines, 1):
		text = line.strip()
		if not text or text.startswith(COMMENT_CHARS):
			continue
		tokens = text.split()
		if len(tokens) < 2:
			raise EdgeListError(number, 'expected two labels, got %r' % text)
		# extra columns (weights, timestamps) are ignored
		pairs.append((_to_label(tokens[0], number), _to_label(tokens[1], number)))
	return pairs


def read_edge_list(path):
	"""
	Read an edge-list file into a Graph.

	:param str path: path to the edge list.
	:return: Graph
	"""
	path = os.path.expanduser(path)
	if not os.path.isfile(path):
		raise DataError('%s is not a valid filepath.' % path)
	with open(path, 'r', encoding='utf-8') as edge_file:
		pairs = parse_edge_lines(edge_file)
	graph = Graph(edges=pairs)
	logger.info('Read %s: n=%d, m=%d' % (path, graph.n, graph.m))
	return graph


def write_edge_list(g, path, compact=False):
	"""
	Write a Graph as an edge list. Isolated nodes follow the edges as "u u"
	lines, so the file reads back as the same graph.

	:param Graph g: graph to write.
	:param str path: output path.
	:param bool compact: re-label nodes to 0..n-1 before writing.
	"""
	if compact:
		g = g.relabel_compact()[0]
	with open(os.path.expanduser(path), 'w', encoding='utf-8') as out:
		out.write('# n=%d m=%d\n' % (g.n, g.m))
		for u, v in g.edges():
			out.write('%d %d\n' % (u, v))
		for u in g.nodes:
			if not g.degree(u):
				out.write('%d %d\n' % (u, u))


def scan_dir(path, include_exts=None, exclude_exts=None):
	"""
	Lists the candidate edge-list files of a directory (no recursion),
	filtered by extension.

	:param str path: The directory to scan.
	:param list include_exts: extensions to accept, defaults to
	                          cfg.include_exts. Empty accepts all.
	:param list exclude_exts: extensions to reject, defaults to
	                          cfg.exclude_exts.
	:return: sorted list of file paths.
	"""
	if include_exts is None:
		include_exts = cfg.include_exts
	if exclude_exts is None:
		exclude_exts = cfg.exclude_exts
	include_exts = set(ext.lower() for ext in include_exts)
	exclude_exts = set(ext.lower() for ext in exclude_exts)

	path = os.path.expanduser(path)
	if not os.path.isdir(path):
		raise DataError('%s is not an available directory.' % path)
	file_list = []
	for name in sorted(os.listdir(path)):
		abspath = os.path.join(path, name)
		if not os.path.isfile(abspath):
			continue
		ext = os.path.splitext(name)[1].lstrip('.').lower()
		if include_exts and ext not in include_exts or ext in exclude_exts:
			logger.debug('Skipping %s' % abspath)
			continue
		file_list.append(abspath)
	return file_list


def _fmt(value):
	""" Shortest round-trip float text so outputs are byte-stable. """
	if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
		return str(int(value))
	if isinstance(value, (float, np.floating)):
		return repr(float(value))
	return str(value)


def write_rows_csv(path, header, rows):
	"""
	Write a header plus rows to a CSV file.

	:param str path: output path.
	:param list header: column names.
	:param rows: iterable of row sequences.
	"""
	with open(path, 'w', newline='', encoding='utf-8') as out:
		writer = csv.writer(out, lineterminator='\n')
		writer.writerow(header)
		for row in rows:
			writer.writerow([_fmt(value) for value in row])


def read_rows_csv(path):
	"""
	Read a CSV file written by write_rows_csv.

	:return: (header list, list of row lists of strings)
	"""
	if not os.path.isfile(path):
		raise DataError('%s is not a valid filepath.' % path)
	with open(path, 'r', newline='', encoding='utf-8') as src:
		reader = csv.reader(src)
		try:
			header = next(reader)
		except StopIteration:
			raise DataError('%s is empty.' % path)
		return header, [row for row in reader if row]


def _read_columns(path, expected):
	header, rows = read_rows_csv(path)
	if header != list(expected):
		raise DataError('%s: expected columns %s, found %s' % (
			path, ','.join(expected), ','.join(header)))
	try:
		data = np.array([[float(x) for x in row] for row in rows], dtype=float)
	except ValueError as exc:
		raise DataError('%s: %s' % (path, exc))
	return data.reshape(-1, len(expected))


CURVE_COLUMNS = ('t', 's', 'i', 'r')
PROFILE_COLUMNS = ('beta', 'rho_r')
SPECTRAL_COLUMNS = ('tau', 'z', 'z_norm', 'entropy', 'free_energy')


def write_curve_csv(curve, path):
	""" Write a SirCurve as t,s,i,r. """
	write_rows_csv(path, CURVE_COLUMNS, zip(
		curve.time_grid, curve.s_mean, curve.i_mean, curve.r_mean))


def read_curve_csv(path):
	""" Read a t,s,i,r file back into a SirCurve. """
	from .epidemic import SirCurve
	data = _read_columns(path, CURVE_COLUMNS)
	return SirCurve(data[:, 0], data[:, 2], data[:, 3], data[:, 1])


def write_profile_csv(profile, path):
	""" Write a SpreadingProfile as beta,rho_r. """
	write_rows_csv(path, PROFILE_COLUMNS, zip(profile.beta_grid, profile.rho_r))


def read_profile_csv(path):
	""" Read a beta,rho_r file back into a SpreadingProfile. """
	from .epidemic import SpreadingProfile
	data = _read_columns(path, PROFILE_COLUMNS)
	return SpreadingProfile(data[:, 0], data[:, 1])


def write_spectral_csv(summary, path):
	""" Write a SpectralSummary as tau,z,z_norm,entropy,free_energy. """
	write_rows_csv(path, SPECTRAL_COLUMNS, zip(
		summary.tau_grid, summary.z, summary.z_norm, summary.entropy,
		summary.free_energy))


def read_spectral_csv(path):
	""" Read a spectral CSV back into a SpectralSummary. """
	from .spectral import SpectralSummary
	data = _read_columns(path, SPECTRAL_COLUMNS)
	return SpectralSummary(
		data[:, 0], data[:, 1], data[:, 2], data[:, 3], data[:, 4])


def write_json(obj, path):
	""" Write obj as indented JSON with sorted keys. """
	with open(path, 'w', encoding='utf-8') as out:
		json.dump(obj, out, indent=2, sort_keys=True)
		out.write('\n')


def read_json(path):
	path = os.path.expanduser(path)
	if not os.path.isfile(path):
		raise DataError('%s is not a valid filepath.' % path)
	with open(path, 'r', encoding='utf-8') as src:
		try:
			return json.load(src)
		except ValueError as exc:
			raise DataError('%s: invalid JSON (%s)' % (path, exc))
