"""
ERRORS
======
Exception classes raised by netshrink. Each class also derives from the
builtin exception a caller would naturally catch (mostly ValueError), and
carries the exit code the command-line utility returns for it.
"""


class NetshrinkError(Exception):
	""" Base class of all netshrink errors. """
	exit_code = 1


class ConfigurationError(NetshrinkError, ValueError):
	""" Invalid parameters, generator/sampler specs or config files. """
	exit_code = 2


class UsageError(NetshrinkError, ValueError):
	""" Arguments that do not fit together, e.g. mismatched grids. """
	exit_code = 2


class DataError(NetshrinkError, ValueError):
	""" Missing or unreadable input data. """
	exit_code = 3


class EdgeListError(DataError):
	"""
	A malformed line in an edge list.

	:param int line: 1-based line number of the offending entry.
	:param str message: What was wrong with it.
	"""
	def __init__(self, line, message):
		self.line = line
		super(EdgeListError, self).__init__('line %d: %s' % (line, message))


class DomainError(NetshrinkError, ValueError):
	""" A value outside the domain of an operation (empty graph, tau < 0). """
	exit_code = 3


class PreconditionError(DomainError):
	""" The input graph lacks a property the operation requires. """


class CapabilityError(NetshrinkError, RuntimeError):
	""" The request exceeds what the chosen method can handle. """
	exit_code = 4
