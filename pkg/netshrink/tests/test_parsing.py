import os
import shutil
import tempfile
import unittest
from unittest import TestCase
from unittest.mock import patch

import numpy as np

from netshrink import parsing
from netshrink.config import CONFIG
from netshrink.epidemic import SirCurve, SpreadingProfile
from netshrink.errors import DataError, EdgeListError
from netshrink.generators import GeneratorSpec, generate
from netshrink.models import Graph
from netshrink.reduction import ReductionParams, nrdc
from netshrink.spectral import SpectralSummary


DATA_DIR = os.path.join(os.path.dirname(__file__), 'data')


class TestParseEdgeLines(TestCase):
	def setUp(self):
		CONFIG.reset_defaults()

	def test_comments_and_blank_lines(self):
		lines = ['# header', '% other', '', '  1 2  ', '2\t3']
		self.assertListEqual(parsing.parse_edge_lines(lines), [(1, 2), (2, 3)])

	def test_extra_columns_ignored(self):
		self.assertListEqual(parsing.parse_edge_lines(['4 5 0.25 1999']),
		                     [(4, 5)])

	def test_single_token(self):
		with self.assertRaises(EdgeListError) as ctx:
			parsing.parse_edge_lines(['1 2', '3'])
		self.assertEqual(ctx.exception.line, 2)

	def test_bad_token_reports_line(self):
		with self.assertRaises(EdgeListError) as ctx:
			parsing.parse_edge_lines(['# c', '1 2', 'x 3'])
		self.assertEqual(ctx.exception.line, 3)
		self.assertIn('line 3', str(ctx.exception))


class TestEdgeListFiles(TestCase):
	def setUp(self):
		CONFIG.reset_defaults()
		self.tmp = tempfile.mkdtemp()

	def tearDown(self):
		shutil.rmtree(self.tmp)

	def test_read_fixture(self):
		g = parsing.read_edge_list(os.path.join(DATA_DIR, 'two_triangles.txt'))
		self.assertEqual(g.n, 8)
		self.assertEqual(g.m, 8)
		self.assertTrue(g.has_edge(2, 3))
		self.assertTrue(g.has_edge(10, 11))

	def test_missing_file(self):
		self.assertRaises(DataError, parsing.read_edge_list,
		                  os.path.join(self.tmp, 'nope.txt'))

	def test_write_keeps_labels(self):
		g = Graph(edges=[(10, 30), (30, 20)])
		path = os.path.join(self.tmp, 'g.txt')
		parsing.write_edge_list(g, path)
		self.assertEqual(parsing.read_edge_list(path), g)

	def test_write_keeps_isolated_nodes(self):
		g = Graph(nodes=[5, 40], edges=[(10, 30), (30, 20)])
		path = os.path.join(self.tmp, 'g.txt')
		parsing.write_edge_list(g, path)
		restored = parsing.read_edge_list(path)
		self.assertEqual(restored, g)
		self.assertEqual(restored.n, 5)
		self.assertEqual(restored.m, 2)
		self.assertEqual(restored.degree(40), 0)

	def test_reduced_graph_round_trip(self):
		g = generate(GeneratorSpec('er', 400, target_avg_degree=4, seed=2))
		sub, _ = nrdc(g, ReductionParams.from_level(2))
		path = os.path.join(self.tmp, 'sub.txt')
		parsing.write_edge_list(sub, path)
		self.assertEqual(parsing.read_edge_list(path).n, 400 - 300)
		parsing.write_edge_list(sub, path, compact=True)
		self.assertEqual(parsing.read_edge_list(path).n, sub.n)

	def test_write_compact(self):
		g = Graph(edges=[(10, 30), (30, 20)])
		path = os.path.join(self.tmp, 'g.txt')
		parsing.write_edge_list(g, path, compact=True)
		self.assertTupleEqual(parsing.read_edge_list(path).edges(),
		                      ((0, 2), (1, 2)))


class TestScanDir(TestCase):
	def setUp(self):
		CONFIG.reset_defaults()
		self.files = ['b.txt', 'a.edges', 'notes.md', 'c.TXT', 'subdir']

	@patch('os.path.isdir')
	@patch('os.path.isfile')
	@patch('os.listdir')
	def test_default_extensions(self, mock_listdir, mock_isfile, mock_isdir):
		mock_isdir.return_value = True
		mock_listdir.return_value = self.files
		mock_isfile.side_effect = lambda path: not path.endswith('subdir')
		result = parsing.scan_dir('/data')
		expected = [os.path.join('/data', name)
		            for name in ('a.edges', 'b.txt', 'c.TXT')]
		self.assertListEqual(result, expected)

	@patch('os.path.isdir')
	@patch('os.path.isfile')
	@patch('os.listdir')
	def test_exclude(self, mock_listdir, mock_isfile, mock_isdir):
		mock_isdir.return_value = True
		mock_isfile.return_value = True
		mock_listdir.return_value = self.files
		result = parsing.scan_dir('/data', include_exts=[],
		                          exclude_exts=['txt', 'md'])
		expected = [os.path.join('/data', name) for name in ('a.edges', 'subdir')]
		self.assertListEqual(result, expected)

	@patch('os.path.isdir')
	@patch('os.path.isfile')
	@patch('os.listdir')
	def test_config_extensions(self, mock_listdir, mock_isfile, mock_isdir):
		CONFIG.include_exts = ['md']
		mock_isdir.return_value = True
		mock_isfile.return_value = True
		mock_listdir.return_value = self.files
		self.assertListEqual(parsing.scan_dir('/data'),
		                     [os.path.join('/data', 'notes.md')])

	def test_not_a_directory(self):
		self.assertRaises(DataError, parsing.scan_dir,
		                  os.path.join(DATA_DIR, 'two_triangles.txt'))


class TestArtifacts(TestCase):
	def setUp(self):
		CONFIG.reset_defaults()
		self.tmp = tempfile.mkdtemp()

	def tearDown(self):
		shutil.rmtree(self.tmp)

	def test_curve_csv(self):
		curve = SirCurve([0.0, 0.5, 1.0], [0.1, 0.3, 0.0], [0.0, 0.2, 0.7])
		path = os.path.join(self.tmp, 'curve.csv')
		parsing.write_curve_csv(curve, path)
		with open(path) as src:
			self.assertEqual(src.readline().strip(), 't,s,i,r')
		restored = parsing.read_curve_csv(path)
		np.testing.assert_array_equal(restored.time_grid, curve.time_grid)
		np.testing.assert_array_equal(restored.i_mean, curve.i_mean)
		np.testing.assert_array_equal(restored.r_mean, curve.r_mean)
		np.testing.assert_array_equal(restored.s_mean, curve.s_mean)

	def test_profile_csv(self):
		profile = SpreadingProfile([0.0, 1.0, 2.0], [0.1, 0.6, 1.0 / 3])
		path = os.path.join(self.tmp, 'profile.csv')
		parsing.write_profile_csv(profile, path)
		restored = parsing.read_profile_csv(path)
		np.testing.assert_array_equal(restored.rho_r, profile.rho_r)

	def test_spectral_csv(self):
		summary = SpectralSummary([0.1, 1.0], [3.5, 2.1], [0.875, 0.525],
		                          [1.2, 0.4], [-12.5, -0.74])
		path = os.path.join(self.tmp, 'spectral.csv')
		parsing.write_spectral_csv(summary, path)
		restored = parsing.read_spectral_csv(path)
		np.testing.assert_array_equal(restored.free_energy, summary.free_energy)

	def test_wrong_columns(self):
		path = os.path.join(self.tmp, 'other.csv')
		parsing.write_rows_csv(path, ['a', 'b'], [[1, 2]])
		self.assertRaises(DataError, parsing.read_profile_csv, path)

	def test_float_text_is_repr(self):
		path = os.path.join(self.tmp, 'rows.csv')
		parsing.write_rows_csv(path, ['x', 'n'], [[0.1, np.int64(3)]])
		with open(path) as src:
			self.assertEqual(src.read(), 'x,n\n0.1,3\n')

	def test_invalid_json(self):
		path = os.path.join(self.tmp, 'bad.json')
		with open(path, 'w') as out:
			out.write('{not json')
		self.assertRaises(DataError, parsing.read_json, path)

	def test_json_sorted(self):
		path = os.path.join(self.tmp, 'ok.json')
		parsing.write_json({'b': 1, 'a': [1, 2]}, path)
		self.assertDictEqual(parsing.read_json(path), {'a': [1, 2], 'b': 1})
		with open(path) as src:
			self.assertTrue(src.read().startswith('{\n  "a"'))


if __name__ == '__main__':
	unittest.main()
