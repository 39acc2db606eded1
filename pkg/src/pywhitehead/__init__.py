# -*- coding: utf-8 -*-
from importlib.metadata import version, PackageNotFoundError

try:
    # Change here if project is renamed and does not equal the package name
    dist_name = __name__
    __version__ = version(dist_name)
except PackageNotFoundError:
    __version__ = 'unknown'

from .coordinates import TraceCoords, create_coords
from .exactpoly import IntPoly5, F
from .hypersurface import coords_of, k_matrix, f_eval, sample
from .reconstruct import solve_point, enumerate_lifts, surface_matrix
from .words import parse_word, word_trace
