#!/usr/bin/env python
# -*- coding: utf-8 -*-

import pytest
import numpy as np

from pywhitehead import mat3
from pywhitehead.constants import OMEGA
from pywhitehead.utilities import WordSyntaxError
from pywhitehead.words import (Word, parse_word, format_word, inverse_word, transpose_word, eval_word, word_trace,
                               ch_square, ch_cube, ch_aba, ch_aba_alt, closed_form_table, closed_form_errors,
                               closed_form_scope)


def get_pair(rng):
    a = mat3.random_sl3(rng)
    return a, mat3.transpose(a)


def test_parse_word():
    assert parse_word("1,-2,-2") == (1, -2, -2)
    assert parse_word("2 2 2") == (2, 2, 2)
    assert parse_word(" 1, -2 ,+1") == (1, -2, 1)
    assert parse_word("") == ()
    assert format_word(parse_word("1,-2,-1,2")) == "1,-2,-1,2"


@pytest.mark.parametrize('text, offset, message', [
    ("1,,2", 2, "empty token"),
    (",1", 0, "empty token"),
    ("1,3", 2, "token 3 out of alphabet"),
    ("0", 0, "token 0 out of alphabet"),
    ("1,x", 2, "malformed token"),
    ("1,2,", 3, "trailing comma"),
])
def test_parse_word_errors(text, offset, message):
    with pytest.raises(WordSyntaxError) as info:
        parse_word(text)
    assert info.value.offset == offset
    assert info.value.message.startswith(message)


def test_word_alphabet():
    with pytest.raises(ValueError):
        Word([1, 3])


def test_inverse_word(rng):
    a, b = get_pair(rng)
    w = Word([1, 2, -1, -2, 2])
    assert inverse_word(w) == (-2, 2, 1, -2, -1)
    assert np.allclose(eval_word(w, a, b) @ eval_word(inverse_word(w), a, b), mat3.identity())
    assert np.array_equal(eval_word([], a, b), mat3.identity())


def test_transpose_word(rng):
    a, b = get_pair(rng)
    w = Word([1, -2, -2, 1, 2])
    assert transpose_word(w) == (1, 2, -1, -1, 2)
    assert np.allclose(eval_word(transpose_word(w), a, b), mat3.transpose(eval_word(w, a, b)))


def test_cayley_hamilton(rng):
    a, b = mat3.random_sl3(rng), mat3.random_sl3(rng)
    assert np.allclose(a @ a, ch_square(a))
    assert np.allclose(a @ a @ a, ch_cube(a))
    assert np.allclose(a @ b @ a, ch_aba(a, b))
    assert np.allclose(a @ b @ a, ch_aba_alt(a, b))


def test_cayley_hamilton_fixed_points():
    e = mat3.identity()
    assert np.allclose(ch_square(e), e)
    assert np.allclose(ch_cube(mat3.diag(1, OMEGA, OMEGA ** 2)), e), "cube of the cube roots of unity"


def test_closed_form_names():
    names = [form.name for form in closed_form_table()]
    assert names == ['t_{2^3}', 't_{2bar^3}', 't_{1^2 2}', 't_{1bar^2 2bar}', 't_{1bar 2^2}', 't_{1 2bar^2}',
                     't_{1 2 1 2bar}', 't_{1bar 2bar 1bar 2}']


def test_closed_forms_symmetric(rng):
    for _ in range(50):
        a, b = get_pair(rng)
        errors = closed_form_errors(a, b)
        assert max(errors.values()) < 1e-9, "closed form off: %s" % errors


def test_closed_form_scope(rng):
    universal = closed_form_scope(rng, samples=5)
    assert set(universal) == {form.name for form in closed_form_table()}
    assert not universal['t_{2^3}'], "tr b^3 cannot be a polynomial in the traces of a, ab, a^-1 b"


def test_word_trace_conjugation(rng):
    a, b = mat3.random_sl3(rng), mat3.random_sl3(rng)
    h = mat3.random_sl3(rng)
    hi = mat3.adjugate(h)
    w = [1, 2, -1, -2, 2]
    assert word_trace(w, h @ a @ hi, h @ b @ hi) == pytest.approx(word_trace(w, a, b), rel=1e-6, abs=1e-6)
