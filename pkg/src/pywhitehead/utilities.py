# -*- coding: utf-8 -*-
"""
Some utility constructs.

Logging mixin, keyword checking, random streams and the
exception hierarchy shared by all modules.

"""

import logging
import inspect
import functools
import zlib

import numpy as np


class ClassLoggingMixin(object):
    """Mixin class that enables logging for instances of a specific class

    """
    def __init__(self, *args, **kwds):
        """Initialise the logger instance"""
        super(ClassLoggingMixin, self).__init__(*args, **kwds)
        self.logger = logging.getLogger(self.__class__.__name__)

    def debug(self, msg):
        self.logger.debug(msg)

    def info(self, msg):
        self.logger.info(msg)

    def warn(self, msg):
        self.logger.warning(msg)

    def error(self, msg):
        self.logger.error(msg)

    @staticmethod
    def setup_basic_config(level=logging.DEBUG):
        logging.basicConfig(level=level,
                            format='%(name)-18s \t %(levelname)-8s %(message)s',
                            datefmt='%m-%d %H:%M')


class WhiteheadError(Exception):
    """Base class of all errors raised by pywhitehead"""


class ArgumentError(WhiteheadError, TypeError):
    """Unknown keyword argument"""


class DeterminantGuardError(WhiteheadError, ValueError):
    """A matrix expected in SL(3,C) has a determinant away from 1"""
    reason = 'det guard'


class SkewnessError(WhiteheadError, ValueError):
    """A matrix expected to be skew-symmetric is not"""
    reason = 'not skew'


class WordSyntaxError(WhiteheadError, ValueError):
    """Malformed group word

    Attributes:
        offset (int): Byte offset of the offending token in the input text

    """
    def __init__(self, offset, message):
        super(WordSyntaxError, self).__init__("%s (at byte %d)" % (message, offset))
        self.offset = offset
        self.message = message


class CoefficientOverflowError(WhiteheadError, OverflowError):
    """An exact coefficient left the signed 64-bit range"""
    reason = 'coefficient overflow'


class ConvergenceError(WhiteheadError, RuntimeError):
    """A least-squares fit exhausted all restarts

    Attributes:
        best_residual (float): Smallest residual norm reached over all restarts
        best_params (numpy.ndarray): Parameters belonging to ``best_residual``

    """
    reason = 'no convergence'

    def __init__(self, message, best_residual, best_params=None):
        super(ConvergenceError, self).__init__("%s (best residual %.3e)" % (message, best_residual))
        self.best_residual = best_residual
        self.best_params = best_params


class SchemaError(WhiteheadError, ValueError):
    """A JSON payload does not follow the whitehead-sl3 schema"""


class AssumptionError(WhiteheadError):
    """A hypothesis of the reconstruction theorem fails at the given point"""
    #: str: stable machine name of the failure
    reason = 'assumption'


class NonOrdinaryCommutatorError(AssumptionError):
    reason = 'non-ordinary commutator'


class DegeneratePencilError(AssumptionError):
    reason = 'degenerate pencil'


class NoKernelError(AssumptionError):
    reason = 'no kernel'


class SingularYError(AssumptionError):
    reason = 'singular y'


class CoordinateCollisionError(AssumptionError):
    reason = 'coordinate collision'


class ReducibleError(AssumptionError):
    reason = 'reducible pair'


class RelationResidualError(AssumptionError):
    reason = 'relation residual'


#: reason -> exception class
ASSUMPTION_ERRORS = {cls.reason: cls for cls in (NonOrdinaryCommutatorError,
                                                 DegeneratePencilError,
                                                 NoKernelError,
                                                 SingularYError,
                                                 CoordinateCollisionError,
                                                 ReducibleError,
                                                 RelationResidualError)}

#: tuple: errors that report a mathematical failure of the input rather than malformed input
NUMERICAL_ERRORS = (DeterminantGuardError, SkewnessError, CoefficientOverflowError, ConvergenceError, AssumptionError)


def check_kwds(keys):
    """Decorator factory for decorators checking for valid keyword argument names

    """
    def decorator(func):
        """Decorator applying a check for valid keyword argument names to the function"""
        valid_keys = set(keys)
        valid_keys.update(inspect.signature(func).parameters)

        @functools.wraps(func)
        def decorated(*args, **kwds):
            for key in kwds:
                if key not in valid_keys:
                    raise ArgumentError("Unallowed keyword argument " + key)
            return func(*args, **kwds)

        return decorated
    return decorator


def substream(seed, name=None):
    """ Create an independent random stream

    Streams with the same ``seed`` but different ``name`` are statistically independent,
    streams with equal arguments are identical.

    Args:
        seed (int): Unsigned 64-bit master seed
        name (str, optional): Name of the sub-stream, e.g. the subcommand or suite

    Returns:
        numpy.random.Generator (PCG64)

    """
    if name is None:
        return np.random.Generator(np.random.PCG64(np.random.SeedSequence(int(seed))))
    key = zlib.crc32(name.encode('utf-8'))
    sequence = np.random.SeedSequence(int(seed), spawn_key=(key,))
    return np.random.Generator(np.random.PCG64(sequence))
