# -*- coding: utf-8 -*-
""" Skew-symmetric matrices as vectors

A skew-symmetric 3x3 matrix u is identified with u^ = (u12, u13, u23). With this ordering

    (uv - vu)^ = CROSS_SIGN * (u^ x v^)
    tr(uvw)    = TRIPLE_SIGN * det[u^, v^, w^]

Two skew matrices commute iff their vectors are parallel, three are linearly dependent iff the
trace of their product vanishes. ``colinearity_det`` packages the second statement together with
the kernel vector that solves the linear pencil.

"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import mat3
from .constants import SKEW_TOL, RANK_TOL, CROSS_SIGN
from .utilities import SkewnessError


def check_skew(u, tol=SKEW_TOL, name='u', scale=0.0):
    """ Return u as an array, raise SkewnessError unless ||u + u^tr|| <= tol * (||u|| + scale)

    ``scale`` is the size of the terms u was computed from. A difference of nearly equal terms is
    rounding noise that need not be skew on its own scale.

    """
    u = mat3.as_matrix(u)
    deviation = mat3.frobenius(u + mat3.transpose(u))
    bound = tol * (mat3.frobenius(u) + scale)
    if not np.all(deviation <= bound):
        raise SkewnessError("%s is not skew-symmetric: ||u + u^tr|| = %.3e > %.3e"
                            % (name, np.max(deviation), np.max(bound)))
    return u


def to_vec(u, tol=SKEW_TOL, scale=0.0):
    """ (u12, u13, u23) of a skew matrix

    Args:
        u (array): Skew matrix or stack of them
        tol (float): Relative skewness tolerance
        scale (float): Size of the terms u was computed from, see ``check_skew``

    Returns:
        complex array of shape (..., 3)

    Raises:
        SkewnessError

    """
    u = check_skew(u, tol, scale=scale)
    return np.stack([u[..., 0, 1], u[..., 0, 2], u[..., 1, 2]], axis=-1)


def to_skew(v):
    v = np.asarray(v, dtype=complex)
    u = np.zeros(v.shape[:-1] + (3, 3), dtype=complex)
    u[..., 0, 1], u[..., 0, 2], u[..., 1, 2] = v[..., 0], v[..., 1], v[..., 2]
    u[..., 1, 0], u[..., 2, 0], u[..., 2, 1] = -v[..., 0], -v[..., 1], -v[..., 2]
    return u


def cross(x, y):
    x = np.asarray(x, dtype=complex)
    y = np.asarray(y, dtype=complex)
    return np.stack([x[..., 1] * y[..., 2] - x[..., 2] * y[..., 1],
                     x[..., 2] * y[..., 0] - x[..., 0] * y[..., 2],
                     x[..., 0] * y[..., 1] - x[..., 1] * y[..., 0]], axis=-1)


def triple(x, y, z):
    """ det of the matrix with columns x, y, z"""
    value = np.sum(np.asarray(x, dtype=complex) * cross(y, z), axis=-1)
    if np.ndim(value) == 0:
        return complex(value)
    return value


def commutator_vec(u, v):
    """ (uv - vu)^ by the cross product lemma"""
    return CROSS_SIGN * cross(to_vec(u), to_vec(v))


def commute(u, v, tol=RANK_TOL):
    u, v = mat3.as_matrix(u), mat3.as_matrix(v)
    return mat3.frobenius(u @ v - v @ u) <= tol * max(1.0, mat3.frobenius(u) * mat3.frobenius(v))


def are_parallel(x, y, tol=RANK_TOL):
    return mat3.rank([x, y], tol) <= 1


def normalize_kernel(v, rel=1e-3):
    """ Unit norm, first component above rel * max magnitude made real positive"""
    v = np.asarray(v, dtype=complex)
    v = v / np.linalg.norm(v)
    magnitudes = np.abs(v)
    lead = int(np.argmax(magnitudes > rel * magnitudes.max()))
    return v * (abs(v[lead]) / v[lead])


@dataclass
class Colinearity(object):
    """ Linear dependence of three skew matrices

    Attributes:
        value (complex): det of the three vectors
        rank (int): Numerical rank of [m1^ m2^ m3^]
        nullvec (numpy.ndarray or None): Normalized (lambda, mu, nu) with
            lambda m1 + mu m2 + nu m3 = 0, present iff rank is 2

    """
    value: complex
    rank: int
    nullvec: Optional[np.ndarray] = None

    @property
    def degenerate(self):
        return self.rank <= 1


def colinearity_det(m1, m2, m3, tol=RANK_TOL, scales=None):
    """ Dependence test for three skew matrices

    The kernel vector of the rank 2 column matrix M = [m1^ m2^ m3^] is read off the adjugate: since
    M adj(M) = det(M) e = 0 every column of adj(M) lies in the kernel, and the longest one is taken.

    Args:
        m1, m2, m3 (array): Skew matrices
        tol (float): Relative rank threshold
        scales (sequence of float, optional): Sizes of the terms each mi was computed from. The skew
            check is floored by them, and if every mi is below tol times the largest one the pencil
            has rank 0.

    Returns:
        Colinearity

    Raises:
        SkewnessError

    """
    scales = (0.0, 0.0, 0.0) if scales is None else tuple(float(s) for s in scales)
    vectors = [to_vec(m, scale=s) for m, s in zip((m1, m2, m3), scales)]
    value = triple(*vectors)
    if max(np.linalg.norm(v) for v in vectors) <= tol * max(scales):
        rank = 0
    else:
        rank = mat3.rank(vectors, tol)
    nullvec = None
    if rank == 2:
        adj = mat3.adjugate(np.column_stack(vectors))
        column = adj[:, int(np.argmax(np.linalg.norm(adj, axis=0)))]
        nullvec = normalize_kernel(column)
    return Colinearity(value, rank, nullvec)
