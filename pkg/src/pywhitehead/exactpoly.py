# -*- coding: utf-8 -*-
""" Exact polynomials in the trace coordinates

Sparse integer polynomials in the five commuting variables (t, tbar, s, sbar, r) and the exact
certificates for the last steps of the computation of K: substituting the closed form word traces
into the collected expression, and expanding the fully substituted product display, must both give
the hypersurface polynomial F term by term.

Coefficients live in the signed 64-bit range. Every arithmetic result is checked and leaving the
range raises CoefficientOverflowError instead of silently growing.

Examples:

    .. code-block:: python

        from pywhitehead.exactpoly import F, T, TBAR, S, SBAR, R, verify_penultimate

        (S * S).terms()                  # [((0, 0, 2, 0, 0), 1)]
        F.swap() == -F                   # True
        verify_penultimate().equal       # True

"""

import numbers
from dataclasses import dataclass, field

from .constants import VARIABLES
from .utilities import CoefficientOverflowError

#: int: largest coefficient magnitude admitted
COEF_MAX = 2 ** 63 - 1


def _checked(value):
    if not -COEF_MAX <= value <= COEF_MAX:
        raise CoefficientOverflowError("Coefficient %d leaves the signed 64-bit range" % value)
    return value


def _variable_index(var):
    if isinstance(var, numbers.Integral):
        assert 0 <= var < len(VARIABLES), "Variable index %d out of range" % var
        return int(var)
    assert var in VARIABLES, "Unknown variable %r, use one of %s" % (var, VARIABLES)
    return VARIABLES.index(var)


def _point(values):
    """ Accept a mapping by variable name or a sequence in variable order"""
    if hasattr(values, 'keys'):
        return [complex(values[name]) for name in VARIABLES]
    values = [complex(v) for v in values]
    assert len(values) == len(VARIABLES), "Expected %d values, got %d" % (len(VARIABLES), len(values))
    return values


class IntPoly5(object):
    """ Exact integer polynomial in (t, tbar, s, sbar, r)

    Stored as a map from exponent 5-tuples to nonzero integer coefficients. Instances are treated as
    immutable; all arithmetic returns new polynomials. The usual operators are overloaded, so
    polynomials are written the way they are printed.

    Args:
        terms (dict, optional): Exponent tuple -> coefficient; zero coefficients are dropped

    """
    __slots__ = ('_terms',)

    def __init__(self, terms=None):
        clean = {}
        if terms is not None:
            for exp, coef in dict(terms).items():
                exp = tuple(int(e) for e in exp)
                assert len(exp) == len(VARIABLES), "Exponent %r does not have 5 entries" % (exp,)
                assert all(e >= 0 for e in exp), "Negative exponent in %r" % (exp,)
                coef = _checked(int(coef))
                if coef != 0:
                    clean[exp] = coef
        self._terms = clean

    @classmethod
    def constant(cls, c):
        return cls({(0, 0, 0, 0, 0): c})

    @classmethod
    def variable(cls, var):
        exp = [0] * len(VARIABLES)
        exp[_variable_index(var)] = 1
        return cls({tuple(exp): 1})

    @classmethod
    def from_json(cls, terms):
        return cls({tuple(term['exp']): term['coef'] for term in terms})

    @staticmethod
    def _coerce(other):
        if isinstance(other, IntPoly5):
            return other
        if isinstance(other, numbers.Integral):
            return IntPoly5.constant(int(other))
        return NotImplemented

    def add(self, other):
        terms = dict(self._terms)
        for exp, coef in other._terms.items():
            terms[exp] = _checked(terms.get(exp, 0) + coef)
        return IntPoly5(terms)

    def sub(self, other):
        return self.add(other.scalar_mul(-1))

    def scalar_mul(self, c):
        c = int(c)
        return IntPoly5({exp: _checked(coef * c) for exp, coef in self._terms.items()})

    def mul(self, other):
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exp = tuple(i + j for i, j in zip(e1, e2))
                terms[exp] = _checked(terms.get(exp, 0) + _checked(c1 * c2))
        return IntPoly5(terms)

    def equals(self, other):
        return self._terms == other._terms

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.add(other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.sub(other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other.sub(self)

    def __neg__(self):
        return self.scalar_mul(-1)

    def __mul__(self, other):
        if isinstance(other, numbers.Integral):
            return self.scalar_mul(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.mul(other)

    __rmul__ = __mul__

    def __pow__(self, n):
        assert isinstance(n, numbers.Integral) and n >= 0, "Only nonnegative integer powers"
        result = IntPoly5.constant(1)
        for _ in range(n):
            result = result.mul(self)
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.equals(other)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def coefficient(self, exp):
        return self._terms.get(tuple(exp), 0)

    def degree(self):
        """ Total degree, -1 for the zero polynomial"""
        if not self._terms:
            return -1
        return max(sum(exp) for exp in self._terms)

    def terms(self):
        """ Terms in graded lexicographic order (highest total degree first)

        Returns:
            list of (exponent tuple, coefficient)

        """
        return sorted(self._terms.items(), key=lambda item: (-sum(item[0]), tuple(-e for e in item[0])))

    def to_json(self):
        return [{'exp': list(exp), 'coef': coef} for exp, coef in self.terms()]

    def swap(self):
        """ Exchange t <-> tbar and s <-> sbar"""
        return IntPoly5({(e[1], e[0], e[3], e[2], e[4]): coef for e, coef in self._terms.items()})

    def coefficients_in(self, var):
        """ Coefficients with respect to one variable

        Args:
            var (str or int): Variable name from VARIABLES or its index

        Returns:
            list of IntPoly5, entry k is the coefficient of var^k (var itself eliminated)

        """
        index = _variable_index(var)
        buckets = {}
        for exp, coef in self._terms.items():
            rest = list(exp)
            power = rest[index]
            rest[index] = 0
            buckets.setdefault(power, {})[tuple(rest)] = coef
        if not buckets:
            return [IntPoly5()]
        return [IntPoly5(buckets.get(k, {})) for k in range(max(buckets) + 1)]

    def evaluate(self, values):
        """ Nested Horner evaluation over the complex numbers

        Args:
            values (mapping or sequence): Values of (t, tbar, s, sbar, r)

        Returns:
            complex

        """
        return _horner(list(self._terms.items()), _point(values), 0)

    def evaluate_terms(self, values):
        """ Term by term evaluation, independent of ``evaluate``"""
        point = _point(values)
        total = 0j
        for exp, coef in self._terms.items():
            monomial = complex(coef)
            for v, e in zip(point, exp):
                monomial *= v ** e
            total += monomial
        return total

    def abs_evaluate(self, values):
        """ Sum of the absolute values of all terms, the natural error scale of ``evaluate``"""
        point = [abs(v) for v in _point(values)]
        total = 0.0
        for exp, coef in self._terms.items():
            monomial = float(abs(coef))
            for v, e in zip(point, exp):
                monomial *= v ** e
            total += monomial
        return total

    def __call__(self, *values):
        if len(values) == 1:
            return self.evaluate(values[0])
        return self.evaluate(values)

    def __repr__(self):
        return 'IntPoly5(%s)' % self

    def __str__(self):
        if not self._terms:
            return '0'
        pieces = []
        for exp, coef in self.terms():
            factors = []
            for name, e in zip(VARIABLES, exp):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append('%s^%d' % (name, e))
            magnitude = abs(coef)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = '*'.join(factors)
            else:
                body = '%d*%s' % (magnitude, '*'.join(factors))
            sign = '-' if coef < 0 else '+'
            pieces.append((sign, body))
        text = ('-' if pieces[0][0] == '-' else '') + pieces[0][1]
        for sign, body in pieces[1:]:
            text += ' %s %s' % (sign, body)
        return text


def _horner(terms, point, depth):
    if not terms:
        return 0j
    if depth == len(point):
        return complex(sum(coef for _, coef in terms))
    by_power = {}
    for exp, coef in terms:
        by_power.setdefault(exp[depth], []).append((exp, coef))
    result = 0j
    for power in range(max(by_power), -1, -1):
        result = result * point[depth] + _horner(by_power.get(power, []), point, depth + 1)
    return result


T = IntPoly5.variable('t')
TBAR = IntPoly5.variable('tbar')
S = IntPoly5.variable('s')
SBAR = IntPoly5.variable('sbar')
R = IntPoly5.variable('r')

#: IntPoly5: defining polynomial of the hypersurface
F = (S ** 3 - SBAR ** 3
     + (R * TBAR - 2 * T ** 2) * S ** 2
     - (R * T - 2 * TBAR ** 2) * SBAR ** 2
     + (T ** 4 + T ** 2 * TBAR + R ** 2 * T - R * (T ** 2 * TBAR + 3 * T)) * S
     - (TBAR ** 4 + TBAR ** 2 * T + R ** 2 * TBAR - R * (TBAR ** 2 * T + 3 * TBAR)) * SBAR
     + (T ** 3 - TBAR ** 3) * (R + 1 - T * TBAR))


@dataclass
class Certificate(object):
    """ Outcome of an exact comparison of two polynomials

    Attributes:
        label (str): What was compared
        lhs (IntPoly5): Expanded left hand side
        rhs (IntPoly5): Expanded right hand side
        equal (bool): Exact term map equality
        diff (IntPoly5): lhs - rhs, empty iff equal

    """
    label: str
    lhs: IntPoly5
    rhs: IntPoly5
    equal: bool = field(init=False)
    diff: IntPoly5 = field(init=False)

    def __post_init__(self):
        self.diff = self.lhs - self.rhs
        self.equal = self.diff.is_zero()

    def __bool__(self):
        return self.equal

    def to_dict(self):
        return {'lhs_terms': self.lhs.to_json(),
                'rhs_terms': self.rhs.to_json(),
                'equal': self.equal,
                'diff': self.diff.to_json()}


def current_f():
    """ The hypersurface polynomial as currently bound in this module"""
    return F


def _closed_forms(closed_forms):
    if closed_forms is None:
        from .words import closed_form_table
        closed_forms = closed_form_table()
    if hasattr(closed_forms, 'keys'):
        return dict(closed_forms)
    return {form.name: form.formula for form in closed_forms}


def penultimate_expression(closed_forms=None):
    """ The collected expression for K with the six word traces replaced by their closed forms

    Args:
        closed_forms (list of ClosedForm or dict, optional): Replacement table keyed by name,
            defaults to ``words.closed_form_table()``

    Returns:
        IntPoly5

    """
    c = _closed_forms(closed_forms)
    t_1212b = c['t_{1 2 1 2bar}']
    t_1b2b1b2 = c['t_{1bar 2bar 1bar 2}']
    t_112 = c['t_{1^2 2}']
    t_1b1b2b = c['t_{1bar^2 2bar}']
    t_12b2b = c['t_{1 2bar^2}']
    t_1b22 = c['t_{1bar 2^2}']
    return ((R * (T - TBAR ** 2) + TBAR * t_12b2b) * t_1212b
            + (R * (T ** 2 - TBAR) - T * t_1b22) * t_1b2b1b2
            + (R * (T * TBAR - 1) - T * t_12b2b) * t_112
            + (R * (1 - T * TBAR) + TBAR * t_1b22) * t_1b1b2b
            + (S ** 2 - SBAR) * t_12b2b
            + (S - SBAR ** 2) * t_1b22
            + R * TBAR * (2 * SBAR - S ** 2)
            + R * T * (SBAR ** 2 - 2 * S)
            + T ** 3 - TBAR ** 3)


def expanded_trace_expression(closed_forms=None):
    """ The expression for K just before collecting, which still contains t_{2^3} and t_{2bar^3}"""
    c = _closed_forms(closed_forms)
    t_1212b = c['t_{1 2 1 2bar}']
    t_1b2b1b2 = c['t_{1bar 2bar 1bar 2}']
    t_112 = c['t_{1^2 2}']
    t_1b1b2b = c['t_{1bar^2 2bar}']
    t_12b2b = c['t_{1 2bar^2}']
    t_1b22 = c['t_{1bar 2^2}']
    t_222 = c['t_{2^3}']
    t_2b2b2b = c['t_{2bar^3}']
    return (R * (T - TBAR ** 2) * t_1212b + R * (T * TBAR - 1) * t_112 + R * TBAR * (2 * SBAR - S ** 2)
            + R * (T ** 2 - TBAR) * t_1b2b1b2 + R * (1 - T * TBAR) * t_1b1b2b + R * T * (SBAR ** 2 - 2 * S)
            + t_12b2b * (TBAR * t_1212b - T * t_112 + S ** 2 - 2 * SBAR) - t_1b22 * S + t_222
            - t_1b22 * (T * t_1b2b1b2 - TBAR * t_1b1b2b + SBAR ** 2 - 2 * S) + t_12b2b * SBAR - t_2b2b2b)


def explicit_products_expression():
    """ The fully substituted product display preceding the final collection"""
    return ((R * T - T ** 2 * TBAR + TBAR * S) * (T * SBAR + (S + TBAR) * R + TBAR * (1 - T * TBAR))
            + (T * TBAR ** 2 - R * TBAR - T * SBAR) * (TBAR * S + (T + SBAR) * R + T * (1 - T * TBAR))
            + (T ** 3 - R - T * S) * (T * S - T * TBAR + R)
            + (R + TBAR * SBAR - TBAR ** 3) * (TBAR * SBAR - T * TBAR + R)
            + (S ** 2 - SBAR) * (TBAR * R - T ** 2 + S)
            + (S - SBAR ** 2) * (T * R - TBAR ** 2 + SBAR)
            + R * TBAR * (2 * SBAR - S ** 2)
            + R * T * (SBAR ** 2 - 2 * S)
            + T ** 3 - TBAR ** 3)


def certify(lhs, rhs, label=''):
    return Certificate(label, lhs, rhs)


def verify_penultimate(closed_forms=None, reference=None):
    """ Certify that the collected expression for K expands to F

    Args:
        closed_forms (optional): Replacement table, see ``penultimate_expression``
        reference (IntPoly5, optional): Polynomial to compare with, defaults to F

    Returns:
        Certificate

    """
    reference = current_f() if reference is None else reference
    return certify(penultimate_expression(closed_forms), reference, 'penultimate')


def verify_trace_expansion(closed_forms=None, reference=None):
    reference = current_f() if reference is None else reference
    return certify(expanded_trace_expression(closed_forms), reference, 'trace expansion')


def verify_explicit_products(reference=None):
    """ Certify that the explicit product display expands to F

    Args:
        reference (IntPoly5, optional): Polynomial to compare with, defaults to F

    Returns:
        Certificate

    """
    reference = current_f() if reference is None else reference
    return certify(explicit_products_expression(), reference, 'explicit products')


def verify_antisymmetry(poly=None):
    """ Certify F(tbar, t, sbar, s, r) = -F(t, tbar, s, sbar, r)"""
    poly = current_f() if poly is None else poly
    return certify(poly.swap(), -poly, 'antisymmetry')


def all_certificates():
    return [verify_penultimate(), verify_trace_expansion(), verify_explicit_products(), verify_antisymmetry()]
