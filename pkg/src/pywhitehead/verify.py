# -*- coding: utf-8 -*-
""" Verification suites

Every identity used on the way from the pair (a, a^tr) to the polynomial F is checked here on
seeded random input: the Cayley-Hamilton identities, the two lemmas on skew matrices, the closed
forms of word traces, K = F and its intermediate stages, the antisymmetry of F, the exact
certificates, conjugation invariance and the finite difference Jacobian of the trace fit.

Each suite draws from its own named sub-stream of the master seed, so a failure is replayed by
running the same suite with the same seed; the inputs of failing cases are returned as well.

Examples:

    .. code-block:: python

        from pywhitehead.verify import run_suites

        frame, results = run_suites(seed=42, samples=1000)
        print(frame.to_string())

"""

import math
from dataclasses import dataclass, field

import numpy as np
import pandas as pd

from . import mat3
from . import skewmap
from . import exactpoly
from .constants import CROSS_SIGN, TRIPLE_SIGN, IDENTITY_TOL
from .coordinates import create_coords
from .data import encode_matrix, encode_coords
from .hypersurface import coords_of, k_matrix, f_eval, f_scale, pencil, k_chain, lucky_identities, k_equals_f_error
from .reconstruct import TraceFit, matrix_to_params
from .utilities import ClassLoggingMixin, WhiteheadError, substream
from .words import ch_square, ch_cube, ch_aba, ch_aba_alt, closed_form_errors, word_trace, letters, Word


@dataclass
class SuiteResult(object):
    """ Counts and worst case of one suite

    Attributes:
        name (str): Suite name
        tol (float): Largest accepted error
        passed (int): Number of passing checks
        failed (int): Number of failing checks
        max_error (float): Largest error observed
        failures (list of dict): Replay data of the first failing cases

    """
    name: str
    tol: float
    passed: int = 0
    failed: int = 0
    max_error: float = 0.0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return self.failed == 0

    def record(self, error, index, inputs, seed, keep=5):
        error = float(error) if np.isfinite(error) else math.inf
        self.max_error = max(self.max_error, error)
        if error <= self.tol:
            self.passed += 1
            return
        self.failed += 1
        if len(self.failures) < keep:
            self.failures.append({'suite': self.name, 'seed': seed, 'index': index,
                                  'error': error if math.isfinite(error) else None,
                                  'inputs': inputs() if callable(inputs) else inputs})


class Suite(ClassLoggingMixin):
    """ Base class of the suites

    Subclasses set ``name`` and ``tol`` and implement ``cases``, a generator of
    (error, inputs) pairs where ``inputs`` returns the JSON replay data of the case.

    """
    name = None
    tol = 1e-9

    def cases(self, rng, samples):
        raise NotImplementedError

    def run(self, seed, samples):
        result = SuiteResult(self.name, self.tol)
        rng = substream(seed, 'verify/' + self.name)
        index = 0
        generator = self.cases(rng, samples)
        while True:
            try:
                error, inputs = next(generator)
            except StopIteration:
                break
            except WhiteheadError as err:
                self.error("Case %d raised %s" % (index, err))
                result.record(math.inf, index, {'exception': str(err)}, seed)
                break
            result.record(error, index, inputs, seed)
            index += 1
        if result.failed:
            self.warn("%d of %d checks failed, max error %.3e" % (result.failed, result.failed + result.passed,
                                                                 result.max_error))
        else:
            self.info("%d checks passed, max error %.3e" % (result.passed, result.max_error))
        return result


def _matrices(**named):
    return lambda: {name: encode_matrix(x) for name, x in named.items()}


def _random_skew(rng):
    return skewmap.to_skew(mat3.standard_complex_normal(rng, 3))


class CayleyHamiltonSuite(Suite):
    """ Square, cube and both expansions of a b a"""
    name = 'cayley_hamilton'
    tol = IDENTITY_TOL

    def cases(self, rng, samples):
        for _ in range(samples):
            a, b = mat3.random_sl3(rng), mat3.random_sl3(rng)
            na = 1 + mat3.frobenius(a) + mat3.frobenius(mat3.adjugate(a))
            nb = 1 + mat3.frobenius(b) + mat3.frobenius(mat3.adjugate(b))
            aba = a @ b @ a
            errors = [mat3.frobenius(a @ a - ch_square(a)) / na ** 2,
                      mat3.frobenius(a @ a @ a - ch_cube(a)) / na ** 3,
                      mat3.frobenius(aba - ch_aba(a, b)) / (na ** 2 * nb),
                      mat3.frobenius(aba - ch_aba_alt(a, b)) / (na ** 2 * nb ** 2),
                      mat3.frobenius(ch_aba(a, b) - ch_aba_alt(a, b)) / (na ** 2 * nb ** 2)]
            yield max(errors), _matrices(a=a, b=b)


class SkewLemmaSuite(Suite):
    """ Commutators are cross products, triple traces are determinants, commuting means parallel"""
    name = 'skew_lemmas'
    tol = 1e-10

    def cases(self, rng, samples):
        for _ in range(samples):
            u, v, w = _random_skew(rng), _random_skew(rng), _random_skew(rng)
            x, y, z = skewmap.to_vec(u), skewmap.to_vec(v), skewmap.to_vec(w)
            nx, ny, nz = np.linalg.norm(x), np.linalg.norm(y), np.linalg.norm(z)
            cross_error = np.linalg.norm(skewmap.to_vec(u @ v - v @ u) - CROSS_SIGN * skewmap.cross(x, y)) / (nx * ny)
            triple_error = abs(mat3.trace(u @ v @ w) - TRIPLE_SIGN * skewmap.triple(x, y, z)) / (nx * ny * nz)
            parallel = skewmap.commute(u, (1.5 - 0.5j) * u)
            generic = not skewmap.commute(u, v)
            colinear = skewmap.colinearity_det(u, v, u - (2 + 1j) * v).rank == 2
            logic_error = 0.0 if (parallel and generic and colinear) else math.inf
            yield max(cross_error, triple_error, logic_error), _matrices(u=u, v=v, w=w)


class ClosedFormSuite(Suite):
    """ The eight closed forms on symmetric pairs"""
    name = 'closed_forms'
    tol = 1e-9

    def cases(self, rng, samples):
        for _ in range(samples):
            a = mat3.random_sl3(rng)
            yield max(closed_form_errors(a, mat3.transpose(a)).values()), _matrices(a=a)


class KEqualsFSuite(Suite):
    """ K(a, a^tr) = F(coords) and K = det of the pencil vectors"""
    name = 'k_equals_f'
    tol = 1e-8

    def cases(self, rng, samples):
        for _ in range(samples):
            a = mat3.random_sl3(rng)
            k = k_matrix(a)
            value = skewmap.colinearity_det(*pencil(a)).value
            size = 1 + abs(k) + mat3.frobenius(a) ** 9
            yield max(k_equals_f_error(a), abs(k - TRIPLE_SIGN * value) / size), _matrices(a=a)


class KChainSuite(Suite):
    """ Every intermediate stage of the derivation of K, and the two cancellation identities"""
    name = 'k_chain'
    tol = 1e-8

    def cases(self, rng, samples):
        for _ in range(samples):
            a = mat3.random_sl3(rng)
            stages = k_chain(a)
            k = stages['product']
            scale = 1 + max(abs(k), f_scale(coords_of(a, check=False)))
            errors = [abs(value - k) / scale for value in stages.values()]
            for values in lucky_identities(a).values():
                top = max(abs(v) for v in values)
                errors.extend(abs(v - values[0]) / (scale + top) for v in values)
            yield max(errors), _matrices(a=a)


class AntisymmetrySuite(Suite):
    """ F(tbar, t, sbar, s, r) = -F(t, tbar, s, sbar, r) at random points"""
    name = 'antisymmetry'
    tol = 1e-12

    def cases(self, rng, samples):
        for _ in range(samples):
            c = tuple(mat3.standard_complex_normal(rng, 5))
            coords = create_coords(c)
            error = abs(f_eval(coords.swapped()) + f_eval(coords)) / (1 + f_scale(coords))
            yield error, (lambda coords=coords: {'coords': encode_coords(coords)})


class CertificateSuite(Suite):
    """ The exact certificates, one check each"""
    name = 'certificates'
    tol = 0.0

    def cases(self, rng, samples):
        for certificate in exactpoly.all_certificates():
            yield len(certificate.diff), (lambda c=certificate: {'certificate': c.label, **c.to_dict()})


class ConjugationSuite(Suite):
    """ Coordinates under orthogonal conjugation, word traces under SL(3,C) conjugation"""
    name = 'conjugation'
    tol = 1e-8

    def cases(self, rng, samples):
        word = Word([1, 2, -1, -2, 2])
        for _ in range(samples):
            a = mat3.random_sl3(rng)
            g = mat3.random_orthogonal(rng)
            before = coords_of(a)
            after = coords_of(g @ a @ mat3.transpose(g), check=False)
            coords_error = before.distance(after) / before.scale()

            b = mat3.random_sl3(rng)
            h = mat3.random_sl3(rng)
            hi = mat3.adjugate(h)
            direct = word_trace(word, a, b)
            moved = h @ a @ hi, h @ b @ hi
            conjugated = word_trace(word, *moved)
            table = letters(*moved)
            size = np.prod([mat3.frobenius(table[k]) for k in word])
            trace_error = abs(direct - conjugated) / (1 + max(abs(direct), size))
            yield max(coords_error, trace_error), _matrices(a=a, b=b, g=g, h=h)


class SolverHygieneSuite(Suite):
    """ The finite difference Jacobian of the trace fit against a coarser stencil"""
    name = 'solver_hygiene'
    tol = 1e-4
    #: int: the suite is capped at this many points
    max_points = 10

    def cases(self, rng, samples):
        for _ in range(min(samples, self.max_points)):
            a = mat3.random_sl3(rng)
            fit = TraceFit(coords_of(a))
            x = matrix_to_params(mat3.random_sl3(rng))
            yield fit.check_jacobian(x), _matrices(a=a)


#: list of Suite classes in execution order
SUITES = [CayleyHamiltonSuite, SkewLemmaSuite, ClosedFormSuite, KEqualsFSuite, KChainSuite,
          AntisymmetrySuite, CertificateSuite, ConjugationSuite, SolverHygieneSuite]


def suite_names():
    return [suite.name for suite in SUITES]


def run_suites(seed, samples, names=None):
    """ Run the selected suites

    Args:
        seed (int): Master seed
        samples (int): Random cases per suite
        names (list of str, optional): Subset of ``suite_names()``

    Returns:
        tuple (pandas.DataFrame, list of SuiteResult)

    """
    selected = SUITES if names is None else [suite for suite in SUITES if suite.name in names]
    unknown = set(names or []) - set(suite_names())
    assert not unknown, "Unknown suites: %s" % ', '.join(sorted(unknown))
    results = [suite().run(seed, samples) for suite in selected]
    frame = pd.DataFrame([{'suite': r.name, 'passed': r.passed, 'failed': r.failed,
                           'max_error': r.max_error, 'tol': r.tol} for r in results],
                         columns=['suite', 'passed', 'failed', 'max_error', 'tol'])
    return frame, results
