#!/usr/bin/env python
# -*- coding: utf-8 -*-

import pytest
import numpy as np

from pywhitehead import mat3
from pywhitehead import skewmap
from pywhitehead.constants import CROSS_SIGN, TRIPLE_SIGN
from pywhitehead.utilities import SkewnessError

E1, E2, E3 = np.eye(3, dtype=complex)


def random_skew(rng):
    return skewmap.to_skew(mat3.standard_complex_normal(rng, 3))


def test_vector_ordering():
    u = skewmap.to_skew([1, 2, 3])
    assert u[0, 1] == 1 and u[0, 2] == 2 and u[1, 2] == 3
    assert np.array_equal(u, -mat3.transpose(u))
    assert np.array_equal(skewmap.to_vec(u), [1, 2, 3])


def test_to_vec_rejects_non_skew():
    with pytest.raises(SkewnessError):
        skewmap.to_vec(mat3.identity() + skewmap.to_skew([1, 0, 0]))


def test_rounding_noise_is_judged_against_its_terms():
    noise = 1e-13 * np.array([[1, 2, 0], [0, 1, 0], [0, 0, 3]])
    with pytest.raises(SkewnessError):
        skewmap.check_skew(noise)
    assert np.array_equal(skewmap.check_skew(noise, scale=1.0), noise)

    result = skewmap.colinearity_det(noise, 0 * noise, noise.T, scales=(1.0, 1.0, 1.0))
    assert result.rank == 0
    assert result.degenerate


def test_pinned_signs():
    u, v, w = skewmap.to_skew(E1), skewmap.to_skew(E2), skewmap.to_skew(E3)
    assert np.array_equal(skewmap.to_vec(u @ v - v @ u), CROSS_SIGN * skewmap.cross(E1, E2))
    assert CROSS_SIGN == -1
    assert mat3.trace(u @ v @ w) == TRIPLE_SIGN * skewmap.triple(E1, E2, E3) == 1


def test_cross_lemma(rng):
    for _ in range(20):
        u, v = random_skew(rng), random_skew(rng)
        assert np.allclose(skewmap.to_vec(u @ v - v @ u), skewmap.commutator_vec(u, v))


def test_triple_lemma(rng):
    for _ in range(20):
        u, v, w = random_skew(rng), random_skew(rng), random_skew(rng)
        x, y, z = (skewmap.to_vec(m) for m in (u, v, w))
        assert mat3.trace(u @ v @ w) == pytest.approx(TRIPLE_SIGN * skewmap.triple(x, y, z))


def test_commute_iff_parallel(rng):
    u, v = random_skew(rng), random_skew(rng)
    assert skewmap.commute(u, (2 - 1j) * u)
    assert skewmap.are_parallel(skewmap.to_vec(u), skewmap.to_vec((2 - 1j) * u))
    assert not skewmap.commute(u, v)
    assert not skewmap.are_parallel(skewmap.to_vec(u), skewmap.to_vec(v))


def test_normalize_kernel():
    assert np.allclose(skewmap.normalize_kernel([0, 2j, 0]), [0, 1, 0])
    v = skewmap.normalize_kernel([1e-6, -3, 4j])
    assert np.linalg.norm(v) == pytest.approx(1)
    assert v[1].real > 0 and v[1].imag == pytest.approx(0)


def test_colinearity_rank_two(rng):
    u, v = random_skew(rng), random_skew(rng)
    w = 2 * u - 1j * v
    result = skewmap.colinearity_det(u, v, w)
    assert result.rank == 2
    assert not result.degenerate
    assert abs(result.value) < 1e-12
    lam, mu, nu = result.nullvec
    assert mat3.frobenius(lam * u + mu * v + nu * w) < 1e-12
    assert np.linalg.norm(result.nullvec) == pytest.approx(1)


def test_colinearity_full_and_degenerate(rng):
    u, v, w = skewmap.to_skew(E1), skewmap.to_skew(E2), skewmap.to_skew(E3)
    result = skewmap.colinearity_det(u, v, w)
    assert result.rank == 3
    assert result.nullvec is None
    assert result.value == TRIPLE_SIGN

    result = skewmap.colinearity_det(u, 2 * u, -u)
    assert result.rank == 1
    assert result.degenerate


def test_colinearity_explicit_dependence(rng):
    u, v = random_skew(rng), random_skew(rng)
    result = skewmap.colinearity_det(u, 2 * u, v)
    assert result.rank == 2
    assert np.allclose(result.nullvec, np.array([2, -1, 0]) / np.sqrt(5))


def test_commutator_is_not_in_the_span(rng):
    u, v = random_skew(rng), random_skew(rng)
    x, y = skewmap.to_vec(u), skewmap.to_vec(v)
    w = skewmap.cross(x, y)
    result = skewmap.colinearity_det(u, v, u @ v - v @ u)
    assert result.rank == 3
    assert result.value == pytest.approx(TRIPLE_SIGN * CROSS_SIGN * np.sum(w * w))
