#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    conftest.py for pywhitehead.

    Every test gets its own random stream, derived from the test name, so that failures replay.
    Read more about conftest.py under:
    https://pytest.org/latest/plugins.html
"""

import pytest

from pywhitehead.constants import DEFAULT_SEED
from pywhitehead.reconstruct import surface_matrix
from pywhitehead.utilities import substream


@pytest.fixture
def rng(request):
    return substream(DEFAULT_SEED, request.node.name)


@pytest.fixture(scope='session')
def surface_matrices():
    """ Matrices a with (a, a^tr) on F = 0"""
    stream = substream(DEFAULT_SEED, 'tests/surface')
    return [surface_matrix(stream) for _ in range(6)]
