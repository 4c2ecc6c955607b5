# -*- coding: utf-8 -*-

__version__ = '0.3.0'
NAME = 'netshrink'
DESCRIPTION = ('Degree-ordered reduction of complex networks with SIR and '
               'Laplacian information-flow verification.')
AUTHOR = 'netshrink developers'
EMAIL = 'netshrink@users.noreply.github.com'
LICENSE = 'MIT'
COPYRIGHT = '©2025 netshrink developers'
URL = 'https://github.com/netshrink/netshrink.git'
