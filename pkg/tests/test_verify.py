#!/usr/bin/env python
# -*- coding: utf-8 -*-

import math

import pytest

from pywhitehead import exactpoly
from pywhitehead.exactpoly import F
from pywhitehead.verify import SUITES, Suite, SuiteResult, run_suites, suite_names


def test_suite_names():
    assert suite_names() == ['cayley_hamilton', 'skew_lemmas', 'closed_forms', 'k_equals_f', 'k_chain',
                             'antisymmetry', 'certificates', 'conjugation', 'solver_hygiene']
    assert len(set(suite_names())) == len(SUITES)


def test_all_suites_pass():
    frame, results = run_suites(seed=42, samples=10)
    assert list(frame.columns) == ['suite', 'passed', 'failed', 'max_error', 'tol']
    assert len(frame) == len(SUITES)
    for result in results:
        assert result.ok, "%s failed: %s" % (result.name, result.failures)
        assert result.passed > 0


@pytest.mark.slow
def test_all_suites_pass_large_sample():
    _, results = run_suites(seed=42, samples=1000)
    failed = [result.name for result in results if not result.ok]
    assert not failed, "suites failed on 1000 samples: %s" % failed


def test_run_is_reproducible():
    first, _ = run_suites(seed=7, samples=5, names=['k_equals_f', 'conjugation'])
    second, _ = run_suites(seed=7, samples=5, names=['conjugation', 'k_equals_f'])
    assert first.equals(second)
    assert list(first['suite']) == ['k_equals_f', 'conjugation']


def test_unknown_suite():
    with pytest.raises(AssertionError):
        run_suites(seed=1, samples=1, names=['no_such_suite'])


def test_corrupted_polynomial_is_detected(monkeypatch):
    monkeypatch.setattr(exactpoly, 'F', F + 1)
    _, results = run_suites(seed=42, samples=5, names=['k_equals_f', 'antisymmetry', 'certificates'])
    for result in results:
        assert not result.ok, "%s did not notice F + 1" % result.name
        assert result.failures[0]['suite'] == result.name
        assert result.failures[0]['seed'] == 42


def test_suite_result_record():
    result = SuiteResult('demo', 1e-9)
    result.record(1e-12, 0, {}, seed=1)
    result.record(math.nan, 1, lambda: {'x': 1}, seed=1)
    assert (result.passed, result.failed) == (1, 1)
    assert result.failures == [{'suite': 'demo', 'seed': 1, 'index': 1, 'error': None, 'inputs': {'x': 1}}]
    assert result.max_error == math.inf


def test_failures_are_capped():
    class Failing(Suite):
        name = 'failing'
        tol = 0.0

        def cases(self, rng, samples):
            for k in range(samples):
                yield 1.0, {'k': k}

    result = Failing().run(seed=3, samples=12)
    assert result.failed == 12
    assert len(result.failures) == 5
