# -*- coding: utf-8 -*-
""" Complex 3x3 matrices

Scalar and matrix arithmetic in SL(3,C) together with the spectral utilities used by all other
modules: a Cardano cubic solver, eigenvalues with geometric multiplicities, the ordinary/special
dichotomy and a pivoted numerical rank.

Matrices are plain ``numpy`` arrays of dtype ``complex128`` and shape ``(3, 3)``. All arithmetic
functions also accept stacks of shape ``(..., 3, 3)``, which is what the least-squares fits use to
evaluate a whole Jacobian in one pass.

Examples:

    .. code-block:: python

        from pywhitehead import mat3
        from pywhitehead.utilities import substream

        rng = substream(42, 'example')
        x = mat3.random_sl3(rng)
        mat3.det(x)            # 1 within 1e-12
        mat3.eigen(x).distinct

"""

import logging
import math

import numpy as np

from .constants import RANK_TOL, EIGEN_TOL, DET_GUARD, OMEGA
from .utilities import DeterminantGuardError

logger = logging.getLogger(__name__)


class Spectrum(object):
    """ Eigenvalues of a 3x3 matrix with their algebraic and geometric multiplicities

    Attributes:
        eigenvalues (tuple of complex): The three eigenvalues, repeated by multiplicity
        distinct (tuple of complex): Distinct eigenvalues (cluster means for repeated roots)
        algebraic (tuple of int): Algebraic multiplicity of each distinct eigenvalue
        geometric_dims (tuple of int): Dimension of the eigenspace of each distinct eigenvalue
        ill_conditioned (bool): Two roots were within the clustering radius but had to be kept apart

    """
    __slots__ = ('eigenvalues', 'distinct', 'algebraic', 'geometric_dims', 'ill_conditioned')

    def __init__(self, eigenvalues, distinct, algebraic, geometric_dims, ill_conditioned=False):
        self.eigenvalues = tuple(complex(v) for v in eigenvalues)
        self.distinct = tuple(complex(v) for v in distinct)
        self.algebraic = tuple(int(m) for m in algebraic)
        self.geometric_dims = tuple(int(g) for g in geometric_dims)
        self.ill_conditioned = bool(ill_conditioned)

    @property
    def is_ordinary(self):
        return all(g == 1 for g in self.geometric_dims)

    def __repr__(self):
        return 'Spectrum(distinct=%r, algebraic=%r, geometric_dims=%r)' % (
            self.distinct, self.algebraic, self.geometric_dims)


def as_matrix(x):
    """ Convert anything array-like into a complex array with trailing shape (3, 3)"""
    x = np.asarray(x, dtype=complex)
    assert x.shape[-2:] == (3, 3), "Expected 3x3 matrices, got shape %r" % (x.shape,)
    return x


def identity():
    return np.eye(3, dtype=complex)


def diag(*values):
    return np.diag(np.asarray(values, dtype=complex))


def transpose(x):
    return np.swapaxes(as_matrix(x), -1, -2)


def trace(x):
    """ Trace over the last two axes

    Returns:
        complex for a single matrix, array of complex for a stack

    """
    tr = np.trace(as_matrix(x), axis1=-2, axis2=-1)
    if np.ndim(tr) == 0:
        return complex(tr)
    return tr


def det(x):
    """ Determinant by cofactor expansion along the first row"""
    x = as_matrix(x)
    a, b, c = x[..., 0, 0], x[..., 0, 1], x[..., 0, 2]
    d, e, f = x[..., 1, 0], x[..., 1, 1], x[..., 1, 2]
    g, h, i = x[..., 2, 0], x[..., 2, 1], x[..., 2, 2]
    value = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    if np.ndim(value) == 0:
        return complex(value)
    return value


def adjugate(x):
    """ Classical adjoint, x @ adjugate(x) = det(x) * e

    For x in SL(3,C) this is the inverse, written with an overline in the trace calculus.
    adjugate(x^tr) equals adjugate(x)^tr bit for bit.

    """
    x = as_matrix(x)
    a, b, c = x[..., 0, 0], x[..., 0, 1], x[..., 0, 2]
    d, e, f = x[..., 1, 0], x[..., 1, 1], x[..., 1, 2]
    g, h, i = x[..., 2, 0], x[..., 2, 1], x[..., 2, 2]
    adj = np.empty_like(x)
    adj[..., 0, 0] = e * i - f * h
    adj[..., 0, 1] = c * h - b * i
    adj[..., 0, 2] = b * f - c * e
    adj[..., 1, 0] = f * g - d * i
    adj[..., 1, 1] = a * i - c * g
    adj[..., 1, 2] = c * d - a * f
    adj[..., 2, 0] = d * h - e * g
    adj[..., 2, 1] = b * g - a * h
    adj[..., 2, 2] = a * e - b * d
    return adj


def frobenius(x):
    """ Frobenius norm over the last two axes"""
    x = np.asarray(x, dtype=complex)
    value = np.sqrt(np.sum(np.abs(x) ** 2, axis=(-2, -1)))
    if np.ndim(value) == 0:
        return float(value)
    return value


def is_symmetric(x, tol=1e-8):
    x = as_matrix(x)
    return frobenius(x - transpose(x)) <= tol * max(1.0, frobenius(x))


def is_skew(x, tol=1e-9):
    x = as_matrix(x)
    return frobenius(x + transpose(x)) <= tol * frobenius(x)


def is_unimodular(x, tol=DET_GUARD):
    return bool(np.all(np.abs(det(x) - 1) <= tol))


def guard_det(*matrices, **kwds):
    """ Raise DeterminantGuardError unless every matrix (or stack) has det within tol of 1

    Args:
        *matrices: Matrices to check
        tol (float, optional): Allowed deviation, default DET_GUARD
        name (str, optional): Name used in the error message

    """
    tol = kwds.pop('tol', DET_GUARD)
    name = kwds.pop('name', 'matrix')
    for x in matrices:
        deviation = np.max(np.abs(det(x) - 1))
        if not deviation <= tol:
            raise DeterminantGuardError("%s has |det - 1| = %.3e > %.1e" % (name, deviation, tol))


def inverse(x, tol=DET_GUARD):
    """ Inverse of an SL(3,C) matrix, realised as the adjugate under the det guard"""
    guard_det(x, tol=tol)
    return adjugate(x)


def cube_root(z):
    """ Principal cube root, argument in (-pi/3, pi/3]"""
    z = complex(z)
    if z == 0:
        return 0j
    phi = math.atan2(z.imag, z.real)
    if phi <= -math.pi:
        phi = math.pi
    return abs(z) ** (1.0 / 3.0) * complex(math.cos(phi / 3.0), math.sin(phi / 3.0))


def cubic_roots(coeffs, polish=2):
    """ Roots of a complex cubic by Cardano's formula

    The cubic is brought to depressed form mu^3 + p mu + q by the shift lambda = mu - A/3. The larger
    of the two Cardano radicands is used for stability. Each root is then polished by at most
    ``polish`` Newton steps; a step is only kept if it reduces the polynomial value.

    Args:
        coeffs (sequence of complex): (c3, c2, c1, c0), leading coefficient first, c3 != 0
        polish (int): Maximal number of Newton steps per root

    Returns:
        numpy.ndarray of three complex roots, repeated by multiplicity

    """
    c3, c2, c1, c0 = (complex(c) for c in coeffs)
    assert c3 != 0, "Leading coefficient of a cubic must not vanish"
    A, B, C = c2 / c3, c1 / c3, c0 / c3

    p = B - A * A / 3.0
    q = 2.0 * A ** 3 / 27.0 - A * B / 3.0 + C

    sq = np.sqrt(complex((q / 2.0) ** 2 + (p / 3.0) ** 3))
    u = -q / 2.0 + sq
    if abs(-q / 2.0 - sq) > abs(u):
        u = -q / 2.0 - sq

    if u == 0:
        mus = [0j, 0j, 0j]
    else:
        root = cube_root(u)
        mus = []
        for k in range(3):
            ck = root * OMEGA ** k
            mus.append(ck - p / (3.0 * ck))
    roots = np.array([mu - A / 3.0 for mu in mus], dtype=complex)

    def value(x):
        return ((x + A) * x + B) * x + C

    def slope(x):
        return (3.0 * x + 2.0 * A) * x + B

    for k in range(3):
        x = roots[k]
        fx = value(x)
        for _ in range(polish):
            dx = slope(x)
            if fx == 0 or dx == 0:
                break
            candidate = x - fx / dx
            fc = value(candidate)
            if abs(fc) >= abs(fx):
                break
            x, fx = candidate, fc
        roots[k] = x
    return roots


def rank(columns, tol=RANK_TOL, scale=None):
    """ Numerical rank by Gaussian elimination with complete pivoting

    Elimination stops at the first pivot whose modulus is at most ``tol`` times the reference: the
    first (largest) pivot, or ``scale`` when given. A fixed ``scale`` makes a matrix that is pure
    rounding noise come out with rank 0.

    Args:
        columns (list of vectors or 2d array): Column vectors, or a matrix of any shape
        tol (float): Pivot threshold relative to the reference, > 0
        scale (float, optional): Absolute reference size, typically the norm of the data the
            matrix was computed from

    Returns:
        int

    """
    assert tol > 0, "Rank tolerance must be positive"
    if isinstance(columns, (list, tuple)):
        if len(columns) == 0:
            return 0
        m = np.column_stack([np.asarray(c, dtype=complex).ravel() for c in columns])
    else:
        m = np.array(columns, dtype=complex)
    if m.size == 0:
        return 0

    n_rows, n_cols = m.shape
    reference = scale
    r = 0
    for k in range(min(n_rows, n_cols)):
        block = np.abs(m[k:, k:])
        i, j = np.unravel_index(np.argmax(block), block.shape)
        pivot = block[i, j]
        if reference is None:
            reference = pivot
        if pivot == 0 or pivot <= tol * reference:
            break
        i, j = i + k, j + k
        m[[k, i], :] = m[[i, k], :]
        m[:, [k, j]] = m[:, [j, k]]
        factors = m[k + 1:, k] / m[k, k]
        m[k + 1:, k:] -= np.outer(factors, m[k, k:])
        r += 1
    return r


def _clusters(roots, radius):
    """ Group root indices whose mutual distance is within radius (single linkage)"""
    groups = [[k] for k in range(len(roots))]
    merged = True
    while merged:
        merged = False
        for g1 in range(len(groups)):
            for g2 in range(g1 + 1, len(groups)):
                if any(abs(roots[i] - roots[j]) <= radius for i in groups[g1] for j in groups[g2]):
                    groups[g1] = groups[g1] + groups[g2]
                    del groups[g2]
                    merged = True
                    break
            if merged:
                break
    return groups


def eigen(x, tol=EIGEN_TOL):
    """ Eigenvalues and eigenspace dimensions

    The characteristic cubic lambda^3 - tr(x) lambda^2 + tr(adj x) lambda - det x is solved by
    ``cubic_roots``. A root of multiplicity m is perturbed by O(eps^(1/m)) in floating point, so roots
    closer than sqrt(tol) times the spectral scale are collected into one cluster. The single roots of
    a cluster are inaccurate but their sum is not: the cluster value is (tr(x) - other roots) / m.

    The eigenspace dimension of a cluster is 3 - rank(x - lambda e), with the pivots measured against
    tol * max(1, ||x||), so that x - lambda e consisting of rounding noise has rank 0. A cluster whose
    matrix x - lambda e turns out to be regular consisted of distinct eigenvalues after all: it is
    split again and the spectrum is flagged ill-conditioned.

    Args:
        x (array): 3x3 matrix
        tol (float): Rank tolerance, > 0

    Returns:
        Spectrum

    """
    assert tol > 0, "Eigen tolerance must be positive"
    x = as_matrix(x)
    roots = cubic_roots((1.0, -trace(x), trace(adjugate(x)), -det(x)))
    spectral_scale = max(1.0, float(np.max(np.abs(roots))))
    radius = math.sqrt(tol) * spectral_scale
    size = max(1.0, frobenius(x))
    total = trace(x)

    eigenvalues = list(roots)
    distinct, algebraic, geometric = [], [], []
    ill_conditioned = False
    for group in _clusters(roots, radius):
        if len(group) == 1:
            distinct.append(roots[group[0]])
            algebraic.append(1)
            geometric.append(1)
            continue
        others = sum((roots[k] for k in range(3) if k not in group), 0j)
        lam = (total - others) / len(group)
        dim = 3 - rank(x - lam * identity(), tol, scale=size)
        if dim == 0:
            logger.warning("Eigenvalues %s are closer than %.1e but x - lambda e is regular, keeping them apart",
                           [complex(roots[k]) for k in group], radius)
            ill_conditioned = True
            for k in group:
                distinct.append(roots[k])
                algebraic.append(1)
                geometric.append(1)
            continue
        for k in group:
            eigenvalues[k] = lam
        distinct.append(lam)
        algebraic.append(len(group))
        geometric.append(min(dim, len(group)))
    return Spectrum(eigenvalues, distinct, algebraic, geometric, ill_conditioned)


def is_ordinary(x, tol=EIGEN_TOL):
    """ True iff every eigenspace is one dimensional (minimal polynomial = characteristic polynomial)"""
    return eigen(x, tol).is_ordinary


def minimal_polynomial_degree(x, tol=EIGEN_TOL):
    """ Degree of the minimal polynomial, decided by least squares

    Checks whether x is a multiple of e, then whether x^2 lies in the span of e and x.

    Args:
        x (array): 3x3 matrix
        tol (float): Relative residual below which a fit counts as exact

    Returns:
        int in {1, 2, 3}

    """
    x = as_matrix(x)
    e = identity().ravel()
    x1 = x.ravel()
    x2 = (x @ x).ravel()

    def residual(columns, target):
        basis = np.column_stack(columns)
        coef, _, _, _ = np.linalg.lstsq(basis, target, rcond=None)
        return np.linalg.norm(basis @ coef - target)

    if residual([e], x1) <= tol * max(1.0, np.linalg.norm(x1)):
        return 1
    if residual([e, x1], x2) <= tol * max(1.0, np.linalg.norm(x2)):
        return 2
    return 3


def standard_complex_normal(rng, size):
    """ I.i.d. standard complex Gaussians, E|z|^2 = 1"""
    return (rng.standard_normal(size) + 1j * rng.standard_normal(size)) / math.sqrt(2.0)


def random_sl3(rng):
    """ Random element of SL(3,C)

    Gaussian entries divided by the principal cube root of the determinant; matrices with
    |det| < 1e-8 are redrawn.

    Args:
        rng (numpy.random.Generator): Random stream

    Returns:
        3x3 complex array with det = 1 within 1e-12

    """
    while True:
        x = standard_complex_normal(rng, (3, 3))
        d = det(x)
        if abs(d) < 1e-8:
            logger.debug("Redrawing nearly singular sample")
            continue
        return x / cube_root(d)


def expm(x, degree=12):
    """ Matrix exponential by scaling and squaring of a truncated Taylor series"""
    x = as_matrix(x)
    norm = frobenius(x)
    squarings = max(0, int(math.ceil(math.log2(norm))) + 1) if norm > 0.5 else 0
    y = x / 2.0 ** squarings
    result = identity()
    term = identity()
    for k in range(1, degree + 1):
        term = term @ y / k
        result = result + term
    for _ in range(squarings):
        result = result @ result
    return result


def random_orthogonal(rng):
    """ Random complex orthogonal matrix g^tr g = e with det g = 1

    The exponential of a random skew matrix of Frobenius norm at most 1.

    """
    v = standard_complex_normal(rng, 3)
    u = np.array([[0, v[0], v[1]],
                  [-v[0], 0, v[2]],
                  [-v[1], -v[2], 0]], dtype=complex)
    u *= rng.uniform(0.2, 1.0) / frobenius(u)
    return expm(u)
