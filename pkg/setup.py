"""
netshrink reduces complex networks by removing low-degree nodes and pruning
edges toward low-degree neighbors, then verifies that the reduced networks
keep the original's SIR spreading behaviour and Laplacian information flow.
It comes with random-sampling baselines, an experiment harness writing CSV
artifacts and a command line tool.
"""
from setuptools import setup, find_packages
import os


packagedir = os.path.abspath(os.path.dirname(__file__))


with open(os.path.join(packagedir, 'netshrink', 'version.py'), 'r') as v:
	exec(v.read(), globals())


setup(
	packages=find_packages(),
	name=NAME,
	version=__version__,
	author=AUTHOR,
	author_email=EMAIL,
	package_dir={'netshrink': 'netshrink'},
	package_data={'netshrink': ['tests/data/*']},
	url=URL,
	license=LICENSE,
	description=DESCRIPTION,
	long_description=open(os.path.join(packagedir, 'README.rst')).read(),
	keywords='network reduction graph sampling SIR epidemic laplacian spectrum',
	platforms=['Linux', 'MacOS'],
	python_requires='>=3.8, <4',
	install_requires=[
		'numpy>=1.20',
		'scipy>=1.8',
		'networkx>=2.6',
		],
	entry_points={
		'console_scripts': [
			'netshrink=netshrink.bin.netshrink:main'
			]
		}
	)
