# -*- coding: utf-8 -*-
""" Representations from points of the hypersurface

Given trace coordinates (t, tbar, s, sbar, r) on F = 0 the pipeline

    1. fits a matrix a in SL(3,C) whose pair (a, a^tr) has these coordinates (``TraceFit``),
    2. checks that the commutator c = a b^-1 a^-1 b is ordinary,
    3. solves lambda M1 + mu M2 + nu M3 = 0 for the kernel (lambda, mu, nu),
    4. builds y = lambda c + mu e + nu c^-1, normalised to det y = 1, and z = y a,
    5. checks the separation of the commutator traces, irreducibility and the group relation
       y z y z^-2 y z = z y z^-2 y z y.

Every assumption that can fail has its own exception class in ``utilities``. ``solve_point`` does
not raise on them: the first failure is recorded in the report, and
``SolveReport.raise_for_failure`` raises it on demand.

``enumerate_lifts`` completes a successful report to the six representations over one point: the
three scalings by cube roots of unity of the solution and of the solution for the swapped pair
(a^tr, a).

Examples:

    .. code-block:: python

        from pywhitehead.reconstruct import solve_point, enumerate_lifts
        from pywhitehead.utilities import substream

        report = solve_point(target, substream(42, 'solve'))
        report.raise_for_failure()
        lifts = enumerate_lifts(report)

"""

import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import mat3
from . import skewmap
from .constants import RANK_TOL, DET_GUARD, OMEGA
from .coordinates import TraceCoords, ExtendedCoords, create_coords
from .hypersurface import coords_of, extended_coords, pencil, pencil_scales, on_hypersurface
from .utilities import ClassLoggingMixin, ConvergenceError, CoordinateCollisionError, ASSUMPTION_ERRORS, check_kwds
from .words import Word, eval_word

logger = logging.getLogger(__name__)

#: Word: y z y z^-1 z^-1 y z, left side of the group relation in the letters y = 1, z = 2
RELATION_LHS = Word([1, 2, 1, -2, -2, 1, 2])
#: Word: z y z^-1 z^-1 y z y
RELATION_RHS = Word([2, 1, -2, -2, 1, 2, 1])
#: Word: a b^-1 a^-1 b
COMMUTATOR = Word([1, -2, -1, 2])


@dataclass
class SolveOptions(object):
    """ Budget and tolerances of the reconstruction

    Attributes:
        restarts (int): Random restarts of the trace fit after the spectral start
        max_iter (int): Iterations per start
        tol (float): Residual norm accepted by the trace fit
        rank_tol (float): Rank threshold for ordinariness and irreducibility
        pencil_tol (float): Rank threshold for the pencil [M1^ M2^ M3^]
        relation_tol (float): Accepted relative residual of the group relation
        symmetry_tol (float): Accepted relative asymmetry of y and z
        separation_tol (float): Relative gap required between the two commutator traces

    """
    restarts: int = 20
    max_iter: int = 200
    tol: float = 1e-10
    rank_tol: float = RANK_TOL
    pencil_tol: float = 1e-6
    relation_tol: float = 1e-6
    symmetry_tol: float = 1e-8
    separation_tol: float = 1e-8

    def __post_init__(self):
        for name in ('restarts', 'max_iter'):
            value = getattr(self, name)
            if int(value) != value or value <= 0:
                raise ValueError("%s must be a positive integer, got %r" % (name, value))
        for name in ('tol', 'rank_tol', 'pencil_tol', 'relation_tol', 'symmetry_tol', 'separation_tol'):
            if not getattr(self, name) > 0:
                raise ValueError("%s must be positive, got %r" % (name, getattr(self, name)))


def params_to_matrix(p):
    """ 18 reals (real parts, then imaginary parts, row-major) to a complex matrix"""
    p = np.asarray(p, dtype=float)
    return (p[..., :9] + 1j * p[..., 9:]).reshape(p.shape[:-1] + (3, 3))


def matrix_to_params(a):
    flat = mat3.as_matrix(a).reshape(-1)
    return np.concatenate([flat.real, flat.imag])


class LeastSquaresFit(ClassLoggingMixin):
    """ Damped Gauss-Newton (Levenberg-Marquardt) over a real parameter vector

    Subclasses provide ``residual`` (vectorised over leading axes) and ``start``. The Jacobian is
    obtained by central finite differences, all 2n shifted parameter vectors being evaluated in one
    call of ``residual``.

    The class attributes configure the iteration and may be overridden per instance by keyword.

    Args:
        restarts (int): Number of restarts after the first start
        max_iter (int): Iterations per start
        tol (float): Residual norm accepted as converged

    """
    #: float: initial damping
    damping_start = 1e-3
    #: float: damping is multiplied on reject and divided on accept
    damping_factor = 10.
    #: float: the start is abandoned above this damping
    damping_max = 1e10
    #: float: finite difference step
    fd_step = 1e-7
    #: float: relative step size below which the iteration stops
    step_tol = 1e-15

    @check_kwds(['damping_start', 'damping_factor', 'damping_max', 'fd_step', 'step_tol'])
    def __init__(self, restarts=20, max_iter=200, tol=1e-10, **kwds):
        super(LeastSquaresFit, self).__init__()
        self.restarts = restarts
        self.max_iter = max_iter
        self.tol = tol
        for key, value in kwds.items():
            setattr(self, key, value)

        self.params = None
        self.residual_norm = None
        self.iterations = 0
        self.restarts_used = 0

    def residual(self, params):
        raise NotImplementedError

    def start(self, rng, attempt):
        """ Initial parameters of the given attempt"""
        raise NotImplementedError

    def budget(self, attempt):
        return self.max_iter

    def jacobian(self, params, step=None):
        """ Central finite difference Jacobian

        Args:
            params (numpy.ndarray): Point of shape (n,)
            step (float, optional): Difference step, defaults to ``fd_step``

        Returns:
            numpy.ndarray of shape (m, n)

        """
        step = self.fd_step if step is None else step
        params = np.asarray(params, dtype=float)
        n = params.size
        shifts = step * np.eye(n)
        values = self.residual(np.concatenate([params + shifts, params - shifts]))
        return ((values[:n] - values[n:]) / (2 * step)).T

    def check_jacobian(self, params, coarse_step=1e-4):
        """ Relative difference between the Jacobian and a coarser stencil"""
        fine = self.jacobian(params)
        coarse = self.jacobian(params, coarse_step)
        return np.linalg.norm(fine - coarse) / max(np.linalg.norm(fine), 1e-300)

    def _fit(self, x, max_iter):
        x = np.asarray(x, dtype=float)
        r = self.residual(x)
        cost = np.linalg.norm(r)
        damping = self.damping_start
        jac = None
        steps = 0
        while steps < max_iter and cost > self.tol:
            steps += 1
            if jac is None:
                jac = self.jacobian(x)
            n = x.size
            system = np.vstack([jac, np.sqrt(damping) * np.eye(n)])
            rhs = np.concatenate([-r, np.zeros(n)])
            dx = np.linalg.lstsq(system, rhs, rcond=None)[0]
            x_new = x + dx
            r_new = self.residual(x_new)
            cost_new = np.linalg.norm(r_new)
            if np.isfinite(cost_new) and cost_new < cost:
                x, r, cost = x_new, r_new, cost_new
                jac = None
                damping /= self.damping_factor
                if np.linalg.norm(dx) <= self.step_tol * (1 + np.linalg.norm(x)):
                    break
            else:
                damping *= self.damping_factor
                if damping > self.damping_max:
                    break
        return x, cost, steps

    def fit(self, rng):
        """ Minimise the residual, restarting until the norm drops below ``tol``

        Args:
            rng (numpy.random.Generator): Stream for the restarts

        Returns:
            numpy.ndarray, the converged parameters

        Raises:
            ConvergenceError: with the best residual over all starts

        """
        best_x, best_cost = None, np.inf
        self.iterations = 0
        for attempt in range(self.restarts + 1):
            x, cost, iterations = self._fit(self.start(rng, attempt), self.budget(attempt))
            self.iterations += iterations
            self.debug("Attempt %d: residual %.3e after %d iterations" % (attempt, cost, iterations))
            if cost < best_cost:
                best_x, best_cost = x, cost
            if cost <= self.tol:
                self.params, self.residual_norm, self.restarts_used = x, cost, attempt
                return x
        self.params, self.residual_norm, self.restarts_used = best_x, best_cost, self.restarts
        raise ConvergenceError("%s did not converge in %d starts" % (self.__class__.__name__, self.restarts + 1),
                               best_cost, best_x)


class TraceFit(LeastSquaresFit):
    """ Find a in SL(3,C) with prescribed trace coordinates of (a, a^tr)

    The residual is (tr a - t, tr adj a - tbar, tr(a a^tr) - s, tr(adj a adj a^tr) - sbar,
    tr(adj a a^tr) - r, det a - 1), split into real and imaginary parts.

    The first start is the diagonal matrix of the roots of x^3 - t x^2 + tbar x - 1, which has the
    right t, tbar and det. The residual is invariant under a -> a^tr, so an iteration started on a
    symmetric matrix cannot leave the symmetric matrices; that start therefore only gets a short
    budget and random starts follow.

    Args:
        target (TraceCoords): Coordinates to realise

    """
    #: int: iterations granted to the spectral start
    spectral_budget = 20

    def __init__(self, target, **kwds):
        super(TraceFit, self).__init__(**kwds)
        self.target = create_coords(target)
        self._target = np.array(self.target, dtype=complex)

    def residual(self, params):
        a = params_to_matrix(params)
        ai = mat3.adjugate(a)
        at = mat3.transpose(a)
        values = np.stack([np.asarray(mat3.trace(a)),
                           np.asarray(mat3.trace(ai)),
                           np.asarray(mat3.trace(a @ at)),
                           np.asarray(mat3.trace(ai @ mat3.transpose(ai))),
                           np.asarray(mat3.trace(ai @ at))], axis=-1) - self._target
        values = np.concatenate([values, np.asarray(mat3.det(a) - 1)[..., None]], axis=-1)
        return np.concatenate([values.real, values.imag], axis=-1)

    def start(self, rng, attempt):
        if attempt == 0:
            t, tbar = self.target.t, self.target.tbar
            roots = mat3.cubic_roots((1, -t, tbar, -1))
            return matrix_to_params(np.diag(roots))
        return matrix_to_params(mat3.random_sl3(rng))

    def budget(self, attempt):
        if attempt == 0:
            return min(self.spectral_budget, self.max_iter)
        return self.max_iter

    @property
    def matrix(self):
        return None if self.params is None else params_to_matrix(self.params)


class SurfaceFit(LeastSquaresFit):
    """ Find a in SL(3,C) with K(a, a^tr) = 0

    Produces points of the hypersurface together with a matrix realising them. The residual is
    (K / k_scale, det a - 1) where k_scale = 1 + |K| at the start of the current attempt.

    """
    tol_default = 1e-12

    def __init__(self, **kwds):
        kwds.setdefault('tol', self.tol_default)
        super(SurfaceFit, self).__init__(**kwds)
        self.k_scale = 1.0

    @staticmethod
    def k_values(a):
        """ K on stacks, without det guard"""
        ai = mat3.adjugate(a)
        b = mat3.transpose(a)
        bi = mat3.transpose(ai)
        m1 = a @ bi @ ai @ b @ a - b @ a @ bi @ ai @ b
        m2 = a - b
        m3 = bi @ a @ b - a @ b @ ai
        return mat3.trace(m1 @ m2 @ m3)

    def residual(self, params):
        a = params_to_matrix(params)
        values = np.stack([np.asarray(self.k_values(a)) / self.k_scale, np.asarray(mat3.det(a) - 1)], axis=-1)
        return np.concatenate([values.real, values.imag], axis=-1)

    def start(self, rng, attempt):
        a = mat3.random_sl3(rng)
        self.k_scale = 1.0 + abs(complex(self.k_values(a)))
        return matrix_to_params(a)


def surface_matrix(rng, **kwds):
    """ Random a in SL(3,C) with (a, a^tr) on the hypersurface

    Args:
        rng (numpy.random.Generator): Random stream
        **kwds: Passed to SurfaceFit

    Returns:
        3x3 complex array with det a = 1

    """
    fit = SurfaceFit(**kwds)
    a = params_to_matrix(fit.fit(rng))
    return a / mat3.cube_root(mat3.det(a))


def recover_a(target, rng, opts=None):
    """ A matrix a whose pair (a, a^tr) has the given trace coordinates

    Args:
        target (TraceCoords): The point
        rng (numpy.random.Generator): Stream for the restarts
        opts (SolveOptions, optional): Budget and tolerance

    Returns:
        3x3 complex array

    Raises:
        ConvergenceError

    """
    return _fit_trace(target, rng, opts).matrix


def _fit_trace(target, rng, opts):
    opts = SolveOptions() if opts is None else opts
    target = create_coords(target)
    if not on_hypersurface(target, 1e-8):
        logger.warning("Target %s is not on F = 0, the pencil will have no kernel", tuple(target))
    fit = TraceFit(target, restarts=opts.restarts, max_iter=opts.max_iter, tol=opts.tol)
    fit.fit(rng)
    return fit


@dataclass
class NullspaceCoeffs(object):
    """ Kernel (lambda, mu, nu) of the pencil, unit norm, first significant entry real positive"""
    lam: complex
    mu: complex
    nu: complex

    @classmethod
    def from_vector(cls, v):
        return cls(*(complex(x) for x in v))

    def as_vector(self):
        return np.array([self.lam, self.mu, self.nu], dtype=complex)


def check_relation(y, z, guard=True):
    """ Relative residual of y z y z^-2 y z = z y z^-2 y z y

    Args:
        y, z (array): Matrices in SL(3,C)
        guard (bool): Raise DeterminantGuardError unless det y = det z = 1; without the guard the
            inverses are the adjugates whatever the determinants

    Returns:
        ||lhs - rhs|| / max(1, ||lhs||)

    """
    lhs = eval_word(RELATION_LHS, y, z, guard)
    rhs = eval_word(RELATION_RHS, y, z, guard)
    return mat3.frobenius(lhs - rhs) / max(1.0, mat3.frobenius(lhs))


def commutes_with_commutator(y, a):
    """ Relative norm of y c - c y with c = a b^-1 a^-1 b, b = a^tr"""
    a = mat3.as_matrix(a)
    c = eval_word(COMMUTATOR, a, mat3.transpose(a))
    y = mat3.as_matrix(y)
    return mat3.frobenius(y @ c - c @ y) / max(1.0, mat3.frobenius(y) * mat3.frobenius(c))


def is_irreducible(y, z, tol=RANK_TOL):
    """ True iff neither (y, z) nor (y^tr, z^tr) share an eigenvector

    For all eigenvalues lambda of y and mu of z the stacked 6x3 matrix [y - lambda e; z - mu e]
    must have full rank. For symmetric y and z the transposed pair is the same pair and is skipped.

    """
    y, z = mat3.as_matrix(y), mat3.as_matrix(z)
    pairs = [(y, z)]
    if mat3.is_symmetric(y) and mat3.is_symmetric(z):
        logger.debug("Symmetric pair, skipping the transposed pass")
    else:
        pairs.append((mat3.transpose(y), mat3.transpose(z)))

    e = mat3.identity()
    for u, v in pairs:
        for lam in mat3.eigen(u, tol).distinct:
            for mu in mat3.eigen(v, tol).distinct:
                if mat3.rank(np.vstack([u - lam * e, v - mu * e]), tol) < 3:
                    logger.debug("Common eigenvector for eigenvalues %s, %s", lam, mu)
                    return False
    return True


def coords_of_representation(y, z):
    """ Trace coordinates of a = y^-1 z, b = z y^-1"""
    y, z = mat3.as_matrix(y), mat3.as_matrix(z)
    yi = mat3.adjugate(y)
    return coords_of(yi @ z, z @ yi)


def symmetric_slice_residual(y, z):
    """ |tr[y, z] - tr[z, y]| relative to the size of the commutators"""
    lhs = eval_word([1, 2, -1, -2], y, z)
    rhs = eval_word([2, 1, -2, -1], y, z)
    return abs(mat3.trace(lhs) - mat3.trace(rhs)) / (1.0 + mat3.frobenius(lhs) + mat3.frobenius(rhs))


def asymmetry(x):
    return mat3.frobenius(x - mat3.transpose(x)) / max(1.0, mat3.frobenius(x))


@dataclass
class Representation(object):
    """ A pair (y, z) with its verification residuals

    Attributes:
        y, z (numpy.ndarray): The matrices
        relation_residual (float): ``check_relation(y, z)``
        symmetry_residuals (tuple): Relative asymmetry of y and z
        det_residuals (tuple): |det y - 1| and |det z - 1|

    """
    y: np.ndarray
    z: np.ndarray
    relation_residual: float = field(init=False)
    symmetry_residuals: tuple = field(init=False)
    det_residuals: tuple = field(init=False)

    def __post_init__(self):
        self.y = mat3.as_matrix(self.y)
        self.z = mat3.as_matrix(self.z)
        self.det_residuals = (abs(mat3.det(self.y) - 1), abs(mat3.det(self.z) - 1))
        self.symmetry_residuals = (asymmetry(self.y), asymmetry(self.z))
        self.relation_residual = check_relation(self.y, self.z, guard=False)

    def scaled(self, k):
        """ (omega^k y, omega^k z)"""
        w = OMEGA ** k
        return Representation(w * self.y, w * self.z)

    def is_symmetric(self, tol):
        return max(self.symmetry_residuals) <= tol


@dataclass
class SolveReport(object):
    """ Outcome of the reconstruction at one point

    ``failure`` is None on success, otherwise the reason of the first failed assumption. Fields
    behind the failing step stay None.

    """
    target: Optional[TraceCoords]
    a: np.ndarray
    flags: dict = field(default_factory=dict)
    failure: Optional[str] = None
    pencil_rank: Optional[int] = None
    kdet: Optional[complex] = None
    coeffs: Optional[NullspaceCoeffs] = None
    representation: Optional[Representation] = None
    extended: Optional[ExtendedCoords] = None
    residuals: dict = field(default_factory=dict)
    iterations: int = 0
    restarts: int = 0

    @property
    def success(self):
        return self.failure is None

    def raise_for_failure(self):
        if self.failure is not None:
            raise ASSUMPTION_ERRORS[self.failure]("Reconstruction failed: %s" % self.failure)


def assemble(a, opts=None, target=None):
    """ Run the pipeline behind the trace fit on a known matrix a

    Args:
        a (array): Matrix in SL(3,C), the pair is (a, a^tr)
        opts (SolveOptions, optional): Tolerances
        target (TraceCoords, optional): Stored in the report, defaults to coords_of(a)

    Returns:
        SolveReport

    """
    opts = SolveOptions() if opts is None else opts
    a = mat3.as_matrix(a)
    mat3.guard_det(a, name='a')
    b = mat3.transpose(a)
    target = coords_of(a, b, check=False) if target is None else create_coords(target)
    report = SolveReport(target=target, a=a)
    flags = report.flags

    c = eval_word(COMMUTATOR, a, b)
    flags['ordinary_commutator'] = mat3.is_ordinary(c, opts.rank_tol)
    if not flags['ordinary_commutator']:
        report.failure = 'non-ordinary commutator'
        return report

    m1, m2, m3 = pencil(a, b)
    colinearity = skewmap.colinearity_det(m1, m2, m3, opts.pencil_tol, pencil_scales(a, b))
    report.pencil_rank, report.kdet = colinearity.rank, colinearity.value
    flags['rank2_pencil'] = colinearity.rank == 2
    if colinearity.rank == 3:
        report.failure = 'no kernel'
        return report
    if colinearity.degenerate:
        report.failure = 'degenerate pencil'
        return report

    coeffs = NullspaceCoeffs.from_vector(colinearity.nullvec)
    report.coeffs = coeffs
    combination = coeffs.lam * m1 + coeffs.mu * m2 + coeffs.nu * m3
    report.residuals['pencil'] = mat3.frobenius(combination) / max(mat3.frobenius(m) for m in (m1, m2, m3))

    y0 = coeffs.lam * c + coeffs.mu * mat3.identity() + coeffs.nu * mat3.adjugate(c)
    det_y0 = mat3.det(y0)
    flags['dety_nonzero'] = abs(det_y0) > DET_GUARD * max(mat3.frobenius(y0) ** 3, 1e-300)
    if not flags['dety_nonzero']:
        report.failure = 'singular y'
        return report
    y = y0 / mat3.cube_root(det_y0)
    z = y @ a

    report.extended = extended_coords(a, b)
    gap = report.extended.separation()
    flags['coords_separated'] = gap > opts.separation_tol * (1.0 + abs(report.extended.t1212bar))
    if not flags['coords_separated']:
        report.failure = 'coordinate collision'
        return report

    flags['irreducible'] = is_irreducible(y, z, opts.rank_tol)
    if not flags['irreducible']:
        report.failure = 'reducible pair'
        return report

    report.representation = Representation(y, z)
    report.residuals['commutation'] = commutes_with_commutator(y, a)
    report.residuals['z_consistency'] = (mat3.frobenius(y @ a - b @ y)
                                         / (mat3.frobenius(y) * mat3.frobenius(a)))
    if report.representation.relation_residual > opts.relation_tol:
        report.failure = 'relation residual'
        return report
    if not report.representation.is_symmetric(opts.symmetry_tol):
        logger.warning("y, z are not symmetric within %.1e: %s", opts.symmetry_tol,
                       report.representation.symmetry_residuals)
    return report


def solve_point(target, rng, opts=None):
    """ Reconstruct a representation over a point of the hypersurface

    Args:
        target (TraceCoords): The point
        rng (numpy.random.Generator): Stream for the trace fit
        opts (SolveOptions, optional): Budget and tolerances

    Returns:
        SolveReport

    Raises:
        ConvergenceError: if no matrix with the given coordinates was found

    """
    opts = SolveOptions() if opts is None else opts
    target = create_coords(target)
    fit = _fit_trace(target, rng, opts)
    report = assemble(fit.matrix, opts, target)
    report.iterations = fit.iterations
    report.restarts = fit.restarts_used
    report.residuals['trace_fit'] = fit.residual_norm
    if report.success:
        logger.info("Solved %s after %d restarts", tuple(target), fit.restarts_used)
    else:
        logger.info("Point %s failed: %s", tuple(target), report.failure)
    return report


@dataclass
class Lift(object):
    """ One of the six representations over a point

    Attributes:
        sheet (int): 0 for the pair (a, a^tr), 1 for the swapped pair (a^tr, a)
        k (int): Power of omega applied to y and z
        representation (Representation): The pair
        coords (TraceCoords): Trace coordinates recomputed from (y, z)
        tr_y (complex): Trace of y
        t1212bar (complex): tr(a b a^-1 b^-1) recomputed from (y, z)
        t2121bar (complex): tr(b a b^-1 a^-1) recomputed from (y, z)

    """
    sheet: int
    k: int
    representation: Representation
    coords: TraceCoords
    tr_y: complex
    t1212bar: complex
    t2121bar: complex

    @classmethod
    def build(cls, sheet, k, representation):
        y, z = representation.y, representation.z
        yi = mat3.adjugate(y)
        extended = extended_coords(yi @ z, z @ yi)
        return cls(sheet, k, representation, extended.base, mat3.trace(y), extended.t1212bar, extended.t2121bar)

    @property
    def label(self):
        return (self.tr_y, self.t1212bar)


class LiftSet(ClassLoggingMixin):
    """ The six lifts over one point, two sheets of three scalings each

    Args:
        lifts (list of Lift): Sheet 0 first, k ascending
        relation_tol (float): Residual accepted for every lift
        coords_tol (float): Accepted spread of the recomputed coordinates

    """
    def __init__(self, lifts, relation_tol=1e-6, coords_tol=1e-7):
        super(LiftSet, self).__init__()
        assert len(lifts) == 6, "A lift set has six members, got %d" % len(lifts)
        self.lifts = list(lifts)
        self.relation_tol = relation_tol
        self.coords_tol = coords_tol

    def __iter__(self):
        return iter(self.lifts)

    def __len__(self):
        return len(self.lifts)

    def sheet(self, index):
        return [lift for lift in self.lifts if lift.sheet == index]

    def coords_spread(self):
        first = self.lifts[0].coords
        return max(lift.coords.distance(first) for lift in self.lifts) / first.scale()

    def max_relation_residual(self):
        return max(lift.representation.relation_residual for lift in self.lifts)

    def distinguishing_pairs(self):
        return [lift.label for lift in self.lifts]

    @property
    def degenerate(self):
        """ tr y = 0 on some sheet, the scalings are then not told apart by tr y"""
        return any(abs(lift.tr_y) <= 1e-8 * (1 + mat3.frobenius(lift.representation.y)) for lift in self.lifts)

    def pairs_distinct(self, tol=1e-6):
        labels = self.distinguishing_pairs()
        for i in range(len(labels)):
            for j in range(i + 1, len(labels)):
                gap = max(abs(labels[i][0] - labels[j][0]), abs(labels[i][1] - labels[j][1]))
                if gap <= tol * (1 + abs(labels[i][0]) + abs(labels[i][1])):
                    return False
        return True

    @property
    def valid(self):
        return self.max_relation_residual() <= self.relation_tol and self.coords_spread() <= self.coords_tol

    def validate(self):
        if self.max_relation_residual() > self.relation_tol:
            self.error("A lift violates the relation: residual %.3e" % self.max_relation_residual())
        if self.coords_spread() > self.coords_tol:
            self.error("Lifts disagree on the trace coordinates: spread %.3e" % self.coords_spread())
        if self.degenerate:
            self.warn("tr y vanishes, the scalings share their distinguishing pair")
        return self.valid


def enumerate_lifts(report, opts=None):
    """ The six representations over the point of a successful report

    Args:
        report (SolveReport): Successful report with separated commutator traces
        opts (SolveOptions, optional): Tolerances for the swapped pair

    Returns:
        LiftSet

    Raises:
        AssumptionError: if the report failed or the swapped pair fails the pipeline

    """
    opts = SolveOptions() if opts is None else opts
    report.raise_for_failure()
    if not report.flags.get('coords_separated', False):
        raise CoordinateCollisionError("Lifts need separated commutator traces")

    swapped = assemble(mat3.transpose(report.a), opts, report.target)
    if not swapped.success:
        logger.error("The swapped pair fails: %s", swapped.failure)
        swapped.raise_for_failure()

    lifts = []
    for sheet, source in enumerate((report.representation, swapped.representation)):
        for k in range(3):
            lifts.append(Lift.build(sheet, k, source.scaled(k)))
    lift_set = LiftSet(lifts, opts.relation_tol)
    lift_set.validate()
    return lift_set
