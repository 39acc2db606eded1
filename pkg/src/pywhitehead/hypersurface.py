# -*- coding: utf-8 -*-
""" The hypersurface F = 0 in C^5

Trace coordinates of a pair (a, b = a^tr), the quantity K which vanishes exactly when the linear
pencil of the three skew matrices

    M1 = a b^-1 a^-1 b a - b a b^-1 a^-1 b,   M2 = a - b,   M3 = b^-1 a b - a b a^-1

has a nontrivial kernel, the polynomial F with K = F(t, tbar, s, sbar, r), and a sampler for points
of F = 0. F is cubic with leading coefficient +1 in s and -1 in sbar, so fixing the other four
coordinates leaves a cubic that ``mat3.cubic_roots`` solves.

Examples:

    .. code-block:: python

        from pywhitehead.hypersurface import coords_of, k_matrix, f_eval

        c = coords_of(a)                 # b = a^tr
        k_matrix(a) - f_eval(c)          # ~1e-13

        sample({'t': 1, 'tbar': 1, 'sbar': 0, 'r': 0}, free='s')

"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from . import mat3
from . import exactpoly
from . import skewmap
from .constants import VARIABLES, K_SIGN
from .coordinates import TraceCoords, ExtendedCoords, create_coords
from .words import Word, eval_word, word_trace, letters

logger = logging.getLogger(__name__)

#: Word: a b a^-1 b^-1
COMMUTATOR_AB = Word([1, 2, -1, -2])
#: Word: b a b^-1 a^-1
COMMUTATOR_BA = Word([2, 1, -2, -1])

_P = Word([1, -2, -1, 2, 1])
_P_TR = Word([2, 1, -2, -1, 2])
_BAB = Word([-2, 1, 2])
_ABA = Word([1, 2, -1])


@dataclass
class HypersurfacePoint(object):
    """ Point found by the sampler

    Attributes:
        coords (TraceCoords): The point
        residual (float): |F(coords)|
        multiplicity (int): Number of coinciding roots of the cubic

    """
    coords: TraceCoords
    residual: float
    multiplicity: int = 1


def _pair(a, b):
    a = mat3.as_matrix(a)
    b = mat3.transpose(a) if b is None else mat3.as_matrix(b)
    return a, b


def is_symmetric_pair(a, b, tol=1e-8):
    return mat3.frobenius(b - mat3.transpose(a)) <= tol * max(1.0, mat3.frobenius(a))


def coords_of(a, b=None, check=True):
    """ The five trace coordinates of a pair

    Args:
        a (array): Matrix in SL(3,C)
        b (array, optional): Second matrix, defaults to a^tr
        check (bool): Cross-check tr(a) = tr(b) and tr(a^-1 b) = tr(a b^-1) on symmetric pairs and
            warn about pairs off the symmetric slice

    Returns:
        TraceCoords

    """
    a, b = _pair(a, b)
    table = letters(a, b)
    ai, bi = table[-1], table[-2]
    tr = mat3.trace
    coords = TraceCoords(tr(a), tr(ai), tr(a @ b), tr(ai @ bi), tr(ai @ b))

    if check:
        if is_symmetric_pair(a, b):
            scale = 1.0 + mat3.frobenius(a) * mat3.frobenius(b)
            if abs(tr(a) - tr(b)) > 1e-9 * scale or abs(coords.r - tr(a @ bi)) > 1e-9 * scale:
                logger.warning("Trace symmetries of the pair are violated beyond 1e-9")
        else:
            logger.warning("b differs from a^tr, the coordinates are taken from a, ab and a^-1 b")
    return coords


def extended_coords(a, b=None):
    a, b = _pair(a, b)
    return ExtendedCoords(coords_of(a, b), word_trace(COMMUTATOR_AB, a, b), word_trace(COMMUTATOR_BA, a, b))


def _pencil_terms(a, b):
    return ((eval_word(_P, a, b), eval_word(_P_TR, a, b)),
            (a, b),
            (eval_word(_BAB, a, b), eval_word(_ABA, a, b)))


def pencil(a, b=None):
    """ The three matrices M1, M2, M3 of the linear system for (lambda, mu, nu)

    Returns:
        tuple of three 3x3 arrays, skew-symmetric when b = a^tr

    """
    a, b = _pair(a, b)
    return tuple(x - y for x, y in _pencil_terms(a, b))


def pencil_scales(a, b=None):
    """ ||x|| + ||y|| for each difference Mi = x - y, the size against which rounding in Mi is judged"""
    a, b = _pair(a, b)
    return tuple(mat3.frobenius(x) + mat3.frobenius(y) for x, y in _pencil_terms(a, b))


def k_matrix(a, b=None, check_skew=True):
    """ K = tr(M1 M2 M3)

    Args:
        a (array): Matrix in SL(3,C)
        b (array, optional): Defaults to a^tr
        check_skew (bool): On symmetric pairs, raise SkewnessError if some Mi is not skew

    Returns:
        complex

    """
    a, b = _pair(a, b)
    m1, m2, m3 = pencil(a, b)
    if check_skew and is_symmetric_pair(a, b, 1e-12):
        for name, m, scale in zip(('M1', 'M2', 'M3'), (m1, m2, m3), pencil_scales(a, b)):
            skewmap.check_skew(m, name=name, scale=scale)
    return mat3.trace(m1 @ m2 @ m3)


def f_eval(c):
    """ F at a point of C^5

    Args:
        c (TraceCoords or anything ``create_coords`` accepts): The point

    Returns:
        complex

    """
    return exactpoly.F.evaluate(create_coords(c))


def f_scale(c):
    """ Sum of the absolute values of the terms of F at c"""
    return exactpoly.F.abs_evaluate(create_coords(c))


def on_hypersurface(c, tol=1e-10):
    c = create_coords(c)
    return abs(f_eval(c)) <= tol * (1.0 + f_scale(c))


def lucky_identities(a):
    """ The two trace identities of the symmetric slice that cancel four of the six terms of K

    With P = a b^-1 a^-1 b a and b = a^tr:

        tr(P a b a^-1 b) = tr(P b^-1 a b^2)
        tr(P a^2 b a^-1) = tr(a^2 b) = tr(a b^2) = tr(P b a b a^-1)

    Returns:
        dict name -> list of values that must coincide

    """
    a, b = _pair(a, None)

    def t(*word):
        return word_trace(word, a, b)

    return {'first': [t(1, -2, -1, 2, 1, 1, 2, -1, 2), t(1, -2, -1, 2, 1, -2, 1, 2, 2)],
            'second': [t(1, -2, -1, 2, 1, 1, 1, 2, -1), t(1, 1, 2), t(1, 2, 2),
                       t(1, -2, -1, 2, 1, 2, 1, 2, -1)]}


def _collected(c, w):
    t, tb, s, sb, r = c
    return ((r * (t - tb ** 2) + tb * w['12b2b']) * w['1212b']
            + (r * (t ** 2 - tb) - t * w['1b22']) * w['1b2b1b2']
            + (r * (t * tb - 1) - t * w['12b2b']) * w['112']
            + (r * (1 - t * tb) + tb * w['1b22']) * w['1b1b2b']
            + (s ** 2 - sb) * w['12b2b'] + (s - sb ** 2) * w['1b22']
            + r * tb * (2 * sb - s ** 2) + r * t * (sb ** 2 - 2 * s) + t ** 3 - tb ** 3)


def k_chain(a):
    """ The intermediate forms of K, evaluated numerically on (a, a^tr)

    Every stage equals K; the stages follow the derivation from the triple product through the
    Cayley-Hamilton reductions to the polynomial.

    Returns:
        dict stage -> complex, in derivation order

    """
    a, b = _pair(a, None)

    def t(*word):
        return word_trace(word, a, b)

    def m(*word):
        return eval_word(word, a, b)

    c = coords_of(a, b, check=False)
    m1, m2, m3 = pencil(a, b)
    p = m(*_P)
    r = c.r

    stages = {}
    stages['product'] = mat3.trace(m1 @ m2 @ m3)
    stages['commutator'] = mat3.trace(p @ (m2 @ m3 - m3 @ m2))
    six = m(1, -2, 1, 2) - m(1, 2, -1, 2) + m(-2, 1, 2, 2) - m(1, 1, 2, -1) + m(2, 1, 2, -1) - m(-2, 1, 2, 1)
    stages['six_terms'] = mat3.trace(p @ six)
    stages['lucky'] = mat3.trace(p @ m(1, -2, 1, 2)) - mat3.trace(p @ m(-2, 1, 2, 1))
    stages['square_reduced'] = t(1, -2, -1, 2, -1, -2, 1, 2) - t(-1, -2, -1, 2, 1, -2, 1, 2)
    stages['cube_reduced'] = (-r * t(1, -2, -2, -2, 1, 2) + t(1, -2, -2, 1, -2, -2, 1, 2)
                              + r * t(-1, -2, -1, 2, 2, 2) - t(-1, -2, -1, 2, 2, -1, 2, 2))
    traces = {'1212b': t(1, 2, 1, -2), '1b2b1b2': t(-1, -2, -1, 2), '112': t(1, 1, 2),
              '1b1b2b': t(-1, -1, -2), '12b2b': t(1, -2, -2), '1b22': t(-1, 2, 2)}
    stages['collected'] = _collected(c, traces)
    stages['polynomial'] = f_eval(c)
    return stages


def cubic_in(free, fixed):
    """ F as a cubic in s or sbar

    Args:
        free (str): 's' or 'sbar'
        fixed (dict): Values of the four other coordinates

    Returns:
        tuple (c3, c2, c1, c0) of complex, leading coefficient first

    """
    assert free in ('s', 'sbar'), "F is cubic only in s and sbar, got %r" % free
    point = {name: complex(fixed[name]) for name in VARIABLES if name != free}
    point[free] = 0j
    coefficients = [poly.evaluate(point) for poly in exactpoly.F.coefficients_in(free)]
    coefficients += [0j] * (4 - len(coefficients))
    return tuple(reversed(coefficients[:4]))


def _newton(fixed, free, root, steps):
    coeffs = cubic_in(free, fixed)
    derivative = np.polyder(np.array(coeffs))

    def value(x):
        return f_eval(dict(fixed, **{free: x}))

    fx = value(root)
    for _ in range(steps):
        dx = np.polyval(derivative, root)
        if fx == 0 or dx == 0:
            break
        candidate = root - fx / dx
        fc = value(candidate)
        if abs(fc) >= abs(fx):
            break
        root, fx = candidate, fc
    return complex(root), abs(fx)


def sample(fixed=None, free='s', rng=None, polish=3, tol=1e-10):
    """ Points of F = 0 with four coordinates prescribed

    Args:
        fixed (dict, optional): Values of the four coordinates other than ``free``; drawn as
            standard complex Gaussians from ``rng`` if omitted
        free (str): 's' or 'sbar'
        rng (numpy.random.Generator, optional): Needed only when ``fixed`` is omitted
        polish (int): Newton steps on F per root
        tol (float): Roots closer than sqrt(tol) times their scale are reported once

    Returns:
        list of HypersurfacePoint, at most three

    """
    assert free in ('s', 'sbar'), "The free coordinate must be s or sbar, got %r" % free
    if fixed is None:
        assert rng is not None, "Either fixed coordinates or a random stream are needed"
        values = mat3.standard_complex_normal(rng, 4)
        fixed = dict(zip([name for name in VARIABLES if name != free], values))
    fixed = {name: complex(value) for name, value in fixed.items() if name != free}
    missing = [name for name in VARIABLES if name != free and name not in fixed]
    assert not missing, "Missing fixed coordinates %s" % ', '.join(missing)

    roots = mat3.cubic_roots(cubic_in(free, fixed), polish=0)
    polished = [_newton(fixed, free, root, polish) for root in roots]

    points = []
    radius = math.sqrt(tol) * max(1.0, max(abs(root) for root, _ in polished))
    for root, residual in polished:
        for point in points:
            if abs(getattr(point.coords, free) - root) <= radius:
                point.multiplicity += 1
                break
        else:
            coords = create_coords(dict(fixed, **{free: root}))
            points.append(HypersurfacePoint(coords, residual))
    for point in points:
        if not on_hypersurface(point.coords, tol):
            logger.warning("Sampled point %s misses F = 0 by %.3e", point.coords, point.residual)
    return points


def k_equals_f_error(a):
    """ |K - K_SIGN * F| on (a, a^tr), relative to the larger of |K| and the term scale of F"""
    k = k_matrix(a)
    c = coords_of(a, check=False)
    return abs(k - K_SIGN * f_eval(c)) / (1.0 + max(abs(k), f_scale(c)))
