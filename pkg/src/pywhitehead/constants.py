# -*- coding: utf-8 -*-
""" Repository wide constants

Tolerance defaults, the JSON schema tag, the default seed and the sign conventions
that were determined once by direct computation and are pinned here.

"""

import numpy as np

#: str: version tag written into every JSON document
SCHEMA = 'whitehead-sl3/v1'

#: int: default master seed of the command line interface
DEFAULT_SEED = 20240229

#: float: rank threshold relative to the largest pivot
RANK_TOL = 1e-8
#: float: eigenvalue clustering / geometric dimension threshold
EIGEN_TOL = 1e-8
#: float: bound for matrix identities (relative to the squared norm)
IDENTITY_TOL = 1e-10
#: float: maximal |det - 1| accepted for SL(3,C) inputs
DET_GUARD = 1e-8
#: float: maximal ||u + u^tr|| / ||u|| accepted for skew inputs
SKEW_TOL = 1e-9

#: int: sign s with (uv - vu)^ = s * (u^ x v^) for the ordering (u12, u13, u23)
CROSS_SIGN = -1
#: int: sign s with tr(uvw) = s * det[u^, v^, w^]
TRIPLE_SIGN = 1
#: int: sign s with K = s * F(t, tbar, s, sbar, r)
K_SIGN = 1

#: complex: primitive cube root of unity
OMEGA = np.exp(2j * np.pi / 3)

#: tuple: names of the five trace coordinates, in exponent order of IntPoly5
VARIABLES = ('t', 'tbar', 's', 'sbar', 'r')
