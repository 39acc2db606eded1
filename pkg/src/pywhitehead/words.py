# -*- coding: utf-8 -*-
""" Group words in a, a^-1, b, b^-1

Parsing and evaluation of words, the Cayley-Hamilton identities for SL(3,C) and the table of
closed forms for the word traces needed by the computation of K.

A word is a sequence of signed generator indices: 1 and 2 stand for a and b, -1 and -2 for their
inverses. The trace of ``[1, -2, -2]`` is tr(a b^-1 b^-1), written t_{1 2bar^2}.

Examples:

    .. code-block:: python

        from pywhitehead.words import parse_word, word_trace

        w = parse_word("1,-2,-2")
        word_trace(w, a, b)

"""

import logging
import re
from dataclasses import dataclass

import numpy as np

from . import mat3
from .constants import DET_GUARD
from .exactpoly import IntPoly5, T, TBAR, S, SBAR, R
from .utilities import WordSyntaxError

logger = logging.getLogger(__name__)

#: tuple: admitted letters
ALPHABET = (1, -1, 2, -2)

_PIECE = re.compile(r'[^,\s]+|,')
_INTEGER = re.compile(r'[+-]?\d+')


class Word(tuple):
    """ Immutable sequence of letters from ALPHABET"""

    def __new__(cls, tokens=()):
        tokens = tuple(int(k) for k in tokens)
        for k in tokens:
            if k not in ALPHABET:
                raise ValueError("token %d out of alphabet" % k)
        return super(Word, cls).__new__(cls, tokens)

    def __str__(self):
        return format_word(self)

    def __repr__(self):
        return 'Word(%s)' % list(self)


def parse_word(text):
    """ Parse signed integers separated by commas and/or white space

    Args:
        text (str): E.g. "1,-2,-2" or "2 2 2"; empty input gives the empty word

    Returns:
        Word

    Raises:
        WordSyntaxError: with the byte offset of the offending token

    """
    tokens = []
    expect_token = True
    seen_comma = None
    for match in _PIECE.finditer(text):
        piece = match.group(0)
        offset = len(text[:match.start()].encode('utf-8'))
        if piece == ',':
            if expect_token:
                raise WordSyntaxError(offset, "empty token")
            expect_token = True
            seen_comma = offset
            continue
        if not _INTEGER.fullmatch(piece):
            raise WordSyntaxError(offset, "malformed token %r" % piece)
        value = int(piece)
        if value not in ALPHABET:
            raise WordSyntaxError(offset, "token %d out of alphabet" % value)
        tokens.append(value)
        expect_token = False
    if tokens and expect_token:
        raise WordSyntaxError(seen_comma, "trailing comma")
    return Word(tokens)


def format_word(word):
    return ','.join(str(k) for k in word)


def inverse_word(word):
    return Word(-k for k in reversed(word))


def transpose_word(word):
    """ Word of the transposed product when b = a^tr

    (x1 ... xn)^tr = xn^tr ... x1^tr and a^tr = b, so the letters are reversed and a, b exchanged.

    """
    swap = {1: 2, -1: -2, 2: 1, -2: -1}
    return Word(swap[k] for k in reversed(word))


def letters(a, b, guard=True, tol=DET_GUARD):
    """ Matrices of the four letters

    Returns:
        dict letter -> matrix, inverses realised as adjugates

    """
    a = mat3.as_matrix(a)
    b = mat3.as_matrix(b)
    if guard:
        mat3.guard_det(a, tol=tol, name='a')
        mat3.guard_det(b, tol=tol, name='b')
    return {1: a, -1: mat3.adjugate(a), 2: b, -2: mat3.adjugate(b)}


def eval_word(word, a, b, guard=True):
    """ Left to right product of the letter matrices

    Args:
        word (sequence of int): Letters from ALPHABET
        a, b (array): Matrices in SL(3,C)
        guard (bool): Check |det - 1| <= DET_GUARD for a and b

    Returns:
        3x3 complex array, e for the empty word

    """
    table = letters(a, b, guard)
    result = mat3.identity()
    for k in word:
        result = result @ table[k]
    return result


def word_trace(word, a, b, guard=True):
    return mat3.trace(eval_word(word, a, b, guard))


def ch_square(a):
    """ a^2 = tr(a) a - tr(a^-1) e + a^-1"""
    a = mat3.as_matrix(a)
    mat3.guard_det(a, name='a')
    ai = mat3.adjugate(a)
    return mat3.trace(a) * a - mat3.trace(ai) * mat3.identity() + ai


def ch_cube(a):
    """ a^3 = (tr(a)^2 - tr(a^-1)) a + (1 - tr(a) tr(a^-1)) e + tr(a) a^-1"""
    a = mat3.as_matrix(a)
    mat3.guard_det(a, name='a')
    ai = mat3.adjugate(a)
    t, tb = mat3.trace(a), mat3.trace(ai)
    return (t * t - tb) * a + (1 - t * tb) * mat3.identity() + t * ai


def ch_aba(a, b):
    """ Right hand side of the first expansion of a b a"""
    table = letters(a, b)
    a, ai, b, bi = table[1], table[-1], table[2], table[-2]
    tr = mat3.trace
    return (-ai @ b - b @ ai + tr(a @ b) * a + tr(b) * ai + tr(ai) * b
            + (tr(ai @ b) - tr(ai) * tr(b)) * mat3.identity())


def ch_aba_alt(a, b):
    """ Right hand side of the second expansion of a b a"""
    table = letters(a, b)
    a, ai, b, bi = table[1], table[-1], table[2], table[-2]
    tr = mat3.trace
    return tr(a @ b) * a - tr(ai @ bi) * bi + bi @ ai @ bi


@dataclass(frozen=True)
class ClosedForm(object):
    """ A word trace together with its polynomial in (t, tbar, s, sbar, r)

    Attributes:
        name (str): Label, e.g. 't_{1^2 2}'
        word (Word): The word
        formula (IntPoly5): Closed form, valid when b = a^tr

    """
    name: str
    word: Word
    formula: IntPoly5


def closed_form_table():
    """ The eight closed forms of word traces on the symmetric slice

    Returns:
        list of ClosedForm

    """
    return [
        ClosedForm('t_{2^3}', Word([2, 2, 2]), T ** 3 - 3 * T * TBAR + 3),
        ClosedForm('t_{2bar^3}', Word([-2, -2, -2]), TBAR ** 3 - 3 * T * TBAR + 3),
        ClosedForm('t_{1^2 2}', Word([1, 1, 2]), T * S - T * TBAR + R),
        ClosedForm('t_{1bar^2 2bar}', Word([-1, -1, -2]), TBAR * SBAR - T * TBAR + R),
        ClosedForm('t_{1bar 2^2}', Word([-1, 2, 2]), T * R - TBAR ** 2 + SBAR),
        ClosedForm('t_{1 2bar^2}', Word([1, -2, -2]), TBAR * R - T ** 2 + S),
        ClosedForm('t_{1 2 1 2bar}', Word([1, 2, 1, -2]), T * SBAR + (S + TBAR) * R + TBAR * (1 - T * TBAR)),
        ClosedForm('t_{1bar 2bar 1bar 2}', Word([-1, -2, -1, 2]), TBAR * S + (T + SBAR) * R + T * (1 - T * TBAR)),
    ]


def pair_coordinates(a, b):
    """ (t, tbar, s, sbar, r) read from a alone and the products with b, no symmetry assumed"""
    table = letters(a, b)
    a, ai, b, bi = table[1], table[-1], table[2], table[-2]
    tr = mat3.trace
    return (tr(a), tr(ai), tr(a @ b), tr(ai @ bi), tr(ai @ b))


def closed_form_errors(a, b, table=None):
    """ Relative deviation of each closed form from the directly evaluated word trace

    The error of a word trace is scaled by the product of the letter norms, and the error of the
    formula by its evaluation in absolute values, so the figure is relative to what floating point
    can resolve.

    Args:
        a, b (array): Matrices in SL(3,C)
        table (list of ClosedForm, optional): Defaults to ``closed_form_table()``

    Returns:
        dict name -> relative error

    """
    table = closed_form_table() if table is None else table
    point = pair_coordinates(a, b)
    norms = {1: mat3.frobenius(a), 2: mat3.frobenius(b)}
    norms[-1] = mat3.frobenius(mat3.adjugate(a))
    norms[-2] = mat3.frobenius(mat3.adjugate(b))
    errors = {}
    for form in table:
        direct = word_trace(form.word, a, b)
        predicted = form.formula.evaluate(point)
        scale = max(form.formula.abs_evaluate(point), float(np.prod([norms[k] for k in form.word])))
        errors[form.name] = abs(direct - predicted) / (1.0 + max(abs(direct), scale))
    return errors


def closed_form_scope(rng, samples=100, tol=1e-9):
    """ Decide empirically which closed forms hold on unconstrained pairs

    Each formula is checked on ``samples`` independent random pairs (a, b) with the coordinates
    read off by ``pair_coordinates``.

    Args:
        rng (numpy.random.Generator): Random stream
        samples (int): Number of random pairs
        tol (float): Relative error accepted as agreement

    Returns:
        dict name -> True if universal, False if the symmetric constraint is needed

    """
    universal = {form.name: True for form in closed_form_table()}
    for _ in range(samples):
        a, b = mat3.random_sl3(rng), mat3.random_sl3(rng)
        for name, error in closed_form_errors(a, b).items():
            if error > tol:
                universal[name] = False
    needs_symmetry = sorted(name for name, ok in universal.items() if not ok)
    if needs_symmetry:
        logger.info("Closed forms requiring b = a^tr: %s", ', '.join(needs_symmetry))
    return universal
