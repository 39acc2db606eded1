#!/usr/bin/env python
# -*- coding: utf-8 -*-

import logging

import pytest
import numpy as np

from pywhitehead import mat3
from pywhitehead import skewmap
from pywhitehead.coordinates import TraceCoords
from pywhitehead.hypersurface import (coords_of, extended_coords, pencil, pencil_scales, k_matrix, f_eval, f_scale,
                                      on_hypersurface, lucky_identities, k_chain, cubic_in, sample, k_equals_f_error)


def test_coords_of_diagonal():
    a = mat3.diag(2, 0.5, 1)
    assert coords_of(a) == TraceCoords(3.5, 3.5, 5.25, 5.25, 3)


def test_coords_of_warns_off_slice(rng, caplog):
    a, b = mat3.random_sl3(rng), mat3.random_sl3(rng)
    with caplog.at_level(logging.WARNING):
        coords_of(a, b)
    assert 'differs from a^tr' in caplog.text


def test_pencil_is_skew(rng):
    a = mat3.random_sl3(rng)
    for m in pencil(a):
        assert mat3.is_skew(m)


def test_symmetric_a_gives_zero_pencil():
    a = mat3.diag(2, 0.5, 1)
    assert all(mat3.frobenius(m) == 0 for m in pencil(a))
    assert k_matrix(a) == 0
    assert f_eval(coords_of(a)) == 0, "symmetric matrices lie on F = 0"


def get_test_symmetric_matrix(rng):
    x = mat3.standard_complex_normal(rng, (3, 3))
    a = x @ x.T
    return a / mat3.cube_root(mat3.det(a))


def test_k_matrix_equal_pair(rng):
    a = get_test_symmetric_matrix(rng)
    assert k_matrix(a, a) == 0
    assert abs(k_matrix(a)) < 1e-9 * (1 + mat3.frobenius(a) ** 9)


def test_pencil_scales(rng):
    a = mat3.random_sl3(rng)
    for m, scale in zip(pencil(a), pencil_scales(a)):
        assert 0 < mat3.frobenius(m) <= scale


def test_k_equals_f(rng):
    for _ in range(50):
        a = mat3.random_sl3(rng)
        assert k_equals_f_error(a) < 1e-8


def test_k_equals_f_scaled(rng):
    for scale in (0.5, 1.0, 2.0):
        x = mat3.random_sl3(rng)
        g = mat3.diag(scale, 1, 1 / scale)
        a = g @ x @ mat3.transpose(g)
        assert abs(mat3.det(a) - 1) < 1e-8
        assert k_equals_f_error(a) < 1e-8


def test_k_chain(rng):
    for _ in range(20):
        stages = k_chain(mat3.random_sl3(rng))
        assert list(stages) == ['product', 'commutator', 'six_terms', 'lucky', 'square_reduced', 'cube_reduced',
                                'collected', 'polynomial']
        k = stages['product']
        for name, value in stages.items():
            assert abs(value - k) < 1e-8 * (1 + abs(k)), "stage %s differs" % name


def test_lucky_identities(rng):
    identities = lucky_identities(mat3.random_sl3(rng))
    for values in identities.values():
        assert np.allclose(values, values[0], rtol=1e-8)


def test_k_is_pencil_determinant(rng):
    a = mat3.random_sl3(rng)
    assert k_matrix(a) == pytest.approx(skewmap.colinearity_det(*pencil(a)).value, rel=1e-9)


def test_conjugation_invariance(rng):
    a = mat3.random_sl3(rng)
    g = mat3.random_orthogonal(rng)
    moved = g @ a @ mat3.transpose(g)
    assert coords_of(moved).distance(coords_of(a)) < 1e-9 * coords_of(a).scale()
    assert extended_coords(moved).t1212bar == pytest.approx(extended_coords(a).t1212bar, rel=1e-8)


def test_antisymmetry(rng):
    c = TraceCoords(*mat3.standard_complex_normal(rng, 5))
    assert abs(f_eval(c.swapped()) + f_eval(c)) < 1e-12 * (1 + f_scale(c))


def test_cubic_in():
    fixed = {'t': 1, 'tbar': 1, 'sbar': 0, 'r': 0}
    assert cubic_in('s', fixed) == (1, -2, 2, 0)
    assert cubic_in('sbar', {'t': 0, 'tbar': 0, 's': 0, 'r': 0}) == (-1, 0, 0, 0)


def test_sample_fixed():
    points = sample({'t': 1, 'tbar': 1, 'sbar': 0, 'r': 0}, free='s')
    roots = sorted((p.coords.s for p in points), key=lambda z: (z.real, z.imag))
    assert np.allclose(roots, [0, 1 - 1j, 1 + 1j], atol=1e-12)
    assert all(p.multiplicity == 1 for p in points)
    assert all(on_hypersurface(p.coords) for p in points)


def test_sample_triple_root():
    points = sample({'t': 0, 'tbar': 0, 'sbar': 0, 'r': 0}, free='s')
    assert len(points) == 1
    assert points[0].multiplicity == 3
    assert points[0].coords.s == 0


def test_sample_random(rng):
    for free in ('s', 'sbar'):
        for _ in range(20):
            for point in sample(free=free, rng=rng):
                assert on_hypersurface(point.coords), point


def test_on_hypersurface():
    assert f_eval(TraceCoords(1, 0, 0, 0, 0)) == 1
    assert f_eval(TraceCoords(0, 0, 2, 0, 0)) == pytest.approx(8)
    assert not on_hypersurface(TraceCoords(1, 0, 0, 0, 0))
    assert on_hypersurface({'t': 1, 'tbar': 1, 's': 1 + 1j, 'sbar': 0, 'r': 0})
