#!/usr/bin/env python
# -*- coding: utf-8 -*-

import cmath

import pytest
import numpy as np

from pywhitehead import mat3
from pywhitehead.constants import OMEGA
from pywhitehead.utilities import DeterminantGuardError


def test_det_and_adjugate(rng):
    assert mat3.det(mat3.diag(2, 3, 4)) == 24
    x = mat3.standard_complex_normal(rng, (3, 3))
    assert np.allclose(x @ mat3.adjugate(x), mat3.det(x) * mat3.identity()), "adjugate is not the classical adjoint"
    assert np.array_equal(mat3.adjugate(mat3.transpose(x)), mat3.transpose(mat3.adjugate(x)))


def test_stack_arithmetic(rng):
    stack = np.array([mat3.random_sl3(rng) for _ in range(4)])
    assert mat3.trace(stack).shape == (4,)
    assert np.allclose(mat3.det(stack), 1)
    assert isinstance(mat3.trace(stack[0]), complex)


def test_random_sl3(rng):
    for _ in range(20):
        x = mat3.random_sl3(rng)
        assert abs(mat3.det(x) - 1) < 1e-10, "random_sl3 left SL(3,C)"
        assert mat3.is_unimodular(x)
        assert np.allclose(mat3.inverse(x) @ x, mat3.identity())


def test_guard_det():
    with pytest.raises(DeterminantGuardError):
        mat3.guard_det(mat3.diag(2, 1, 1), name='x')
    with pytest.raises(DeterminantGuardError):
        mat3.inverse(mat3.diag(1, 1, 0))
    mat3.guard_det(mat3.identity(), mat3.diag(2, 0.5, 1))


def test_cube_root_branch():
    assert mat3.cube_root(8) == pytest.approx(2)
    assert mat3.cube_root(0) == 0
    assert mat3.cube_root(-8) == pytest.approx(2 * cmath.exp(1j * cmath.pi / 3)), "negative reals use angle pi"
    z = 3 - 4j
    assert mat3.cube_root(z) ** 3 == pytest.approx(z)


def test_cubic_roots():
    roots = sorted(mat3.cubic_roots((1, -6, 11, -6)), key=lambda x: x.real)
    assert np.allclose(roots, [1, 2, 3])

    assert np.array_equal(mat3.cubic_roots((1, 0, 0, 0)), np.zeros(3))

    roots = mat3.cubic_roots((2, 0, 0, -2))
    for w in (1, OMEGA, OMEGA ** 2):
        assert min(abs(roots - w)) < 1e-12


def test_cubic_roots_complex(rng):
    for _ in range(20):
        coeffs = mat3.standard_complex_normal(rng, 4)
        for root in mat3.cubic_roots(coeffs):
            assert abs(np.polyval(coeffs, root)) < 1e-9 * (1 + np.sum(np.abs(coeffs)) * max(1, abs(root)) ** 3)


def test_rank():
    v = np.array([1, 2j, 3])
    assert mat3.rank(mat3.identity()) == 3
    assert mat3.rank([v, 2 * v]) == 1
    assert mat3.rank([v, 2 * v, np.array([0, 1, 0])]) == 2
    assert mat3.rank(np.zeros((3, 3))) == 0
    assert mat3.rank([]) == 0


def test_eigen_ordinary():
    spectrum = mat3.eigen(mat3.diag(1, 2, 3))
    assert spectrum.is_ordinary
    assert len(spectrum.distinct) == 3

    jordan = np.array([[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    spectrum = mat3.eigen(jordan)
    assert spectrum.algebraic == (3,)
    assert spectrum.geometric_dims == (1,)
    assert mat3.is_ordinary(jordan), "a full Jordan block is ordinary"
    assert mat3.is_ordinary(mat3.diag(1, OMEGA, OMEGA ** 2))


def test_eigen_special():
    spectrum = mat3.eigen(mat3.identity())
    assert spectrum.distinct == (1,)
    assert spectrum.geometric_dims == (3,)
    assert not spectrum.is_ordinary

    assert not mat3.is_ordinary(np.array([[1, 1, 0], [0, 1, 0], [0, 0, 1]]))
    assert not mat3.is_ordinary(mat3.diag(2, 2, 0.25))


def test_minimal_polynomial_degree():
    assert mat3.minimal_polynomial_degree(mat3.identity()) == 1
    assert mat3.minimal_polynomial_degree(mat3.diag(1, 1, 2)) == 2
    assert mat3.minimal_polynomial_degree(mat3.diag(1, 2, 3)) == 3


def test_symmetry_predicates(rng):
    x = mat3.standard_complex_normal(rng, (3, 3))
    assert mat3.is_symmetric(x + mat3.transpose(x))
    assert not mat3.is_symmetric(x)
    assert mat3.is_skew(x - mat3.transpose(x))


def test_expm():
    assert np.allclose(mat3.expm(np.zeros((3, 3))), mat3.identity())
    assert np.allclose(mat3.expm(mat3.diag(1, 0, -1)), mat3.diag(np.e, 1, 1 / np.e))


def test_random_orthogonal(rng):
    g = mat3.random_orthogonal(rng)
    assert np.allclose(mat3.transpose(g) @ g, mat3.identity(), atol=1e-12)
    assert abs(mat3.det(g) - 1) < 1e-12


def get_test_conjugator(rng):
    while True:
        g = mat3.random_sl3(rng)
        if np.linalg.cond(g) < 10:
            return g


def get_test_jordan_forms(lam, mu):
    """ Normal forms with the degree of their minimal polynomial"""
    return [
        (lam * mat3.identity(), 1),
        (mat3.diag(lam, lam, mu), 2),
        (np.array([[lam, 1, 0], [0, lam, 0], [0, 0, lam]], dtype=complex), 2),
        (np.array([[lam, 1, 0], [0, lam, 0], [0, 0, mu]], dtype=complex), 3),
        (np.array([[lam, 1, 0], [0, lam, 1], [0, 0, lam]], dtype=complex), 3),
    ]


def test_ordinary_matches_minimal_polynomial(rng):
    for index in range(500):
        x = mat3.random_sl3(rng)
        degree = mat3.minimal_polynomial_degree(x)
        assert degree == 3, "sample %d has degree %d" % (index, degree)
        assert mat3.is_ordinary(x) == (degree == 3), "sample %d" % index


@pytest.mark.parametrize('lam, mu', [(1, 2), (1j, 3), (-2, 0.25 + 1j), (2 - 1j, -0.5)])
def test_ordinary_on_conjugated_jordan_forms(lam, mu, rng):
    for form, expected in get_test_jordan_forms(lam, mu):
        g = get_test_conjugator(rng)
        x = g @ form @ mat3.inverse(g)
        assert mat3.minimal_polynomial_degree(x) == expected, form
        assert mat3.is_ordinary(x) == (expected == 3), form


def test_ordinary_with_close_eigenvalues(rng):
    lam, mu = 0.5, 0.501
    forms = get_test_jordan_forms(lam, mu)
    for form, expected in forms[:3]:
        g = get_test_conjugator(rng)
        x = g @ form @ mat3.inverse(g)
        assert mat3.minimal_polynomial_degree(x) == expected, form
        assert not mat3.is_ordinary(x), form
    assert mat3.is_ordinary(mat3.diag(lam, mu, 2))


def test_multiplicativity(rng):
    for _ in range(50):
        x = mat3.standard_complex_normal(rng, (3, 3))
        y = mat3.standard_complex_normal(rng, (3, 3))
        scale = 1 + abs(mat3.det(x) * mat3.det(y))
        assert abs(mat3.det(x @ y) - mat3.det(x) * mat3.det(y)) < 1e-10 * scale
        assert abs(mat3.trace(x @ y) - mat3.trace(y @ x)) < 1e-10 * (1 + mat3.frobenius(x) * mat3.frobenius(y))


def test_random_sl3_is_ordinary(rng):
    samples = [mat3.random_sl3(rng) for _ in range(1000)]
    assert all(mat3.is_ordinary(x) for x in samples), "generic matrices have distinct eigenvalues"
