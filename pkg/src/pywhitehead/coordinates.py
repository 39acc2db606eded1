# -*- coding: utf-8 -*-
""" Trace coordinates

The five trace functions (t, tbar, s, sbar, r) of a pair (a, b = a^tr), their extension by the two
commutator traces, and the conversion of user input (strings, lists, dicts) into them.

Todo:
    * parse_fix and create_coords could share the name handling

"""

import math
import re
from typing import NamedTuple

from .constants import VARIABLES

_BARE_UNIT = re.compile(r"(^|[+-])j$")


class TraceCoords(NamedTuple):
    """ A point of C^5

    t = tr(a) = tr(b), tbar = tr(a^-1), s = tr(ab), sbar = tr(a^-1 b^-1), r = tr(a^-1 b)

    """
    t: complex
    tbar: complex
    s: complex
    sbar: complex
    r: complex

    def swapped(self):
        """ The image under t <-> tbar, s <-> sbar"""
        return TraceCoords(self.tbar, self.t, self.sbar, self.s, self.r)

    def distance(self, other):
        return max(abs(complex(x) - complex(y)) for x, y in zip(self, other))

    def scale(self):
        return max(1.0, max(abs(complex(x)) for x in self))

    def replace(self, **kwds):
        return self._replace(**{k: complex(v) for k, v in kwds.items()})


class ExtendedCoords(NamedTuple):
    """ Trace coordinates plus tr(a b a^-1 b^-1) and tr(b a b^-1 a^-1)"""
    base: TraceCoords
    t1212bar: complex
    t2121bar: complex

    def separation(self):
        return abs(self.t1212bar - self.t2121bar)

    def separated(self, tol):
        return self.separation() > tol


def parse_complex(text):
    """ Parse "re+imi" strings such as "1.5-2i", "3", "-i" or "2.5e-3j"

    Args:
        text (str): Number in human notation

    Returns:
        complex

    Raises:
        ValueError: for malformed or non-finite input

    """
    cleaned = text.strip().replace(' ', '').replace('i', 'j').replace('J', 'j')
    cleaned = _BARE_UNIT.sub(lambda m: m.group(1) + '1j', cleaned)
    try:
        z = complex(cleaned)
    except ValueError:
        raise ValueError("Cannot read %r as a complex number, use a format like 1.5-2i" % text)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError("%r is not a finite complex number" % text)
    return z


def to_complex(value):
    if isinstance(value, str):
        return parse_complex(value)
    if isinstance(value, (list, tuple)):
        assert len(value) == 2, "Complex numbers are given as [re, im], got %r" % (value,)
        return complex(float(value[0]), float(value[1]))
    return complex(value)


def format_complex(z):
    z = complex(z)
    return '%s%si' % (repr(z.real), ('+' if z.imag >= 0 else '-') + repr(abs(z.imag)))


def parse_fix(text):
    """ Read assignments like "t=1,tbar=1,sbar=0,r=0"

    Returns:
        dict name -> complex

    """
    values = {}
    for item in text.split(','):
        item = item.strip()
        if not item:
            continue
        if '=' not in item:
            raise ValueError("Expected name=value, got %r" % item)
        name, value = (x.strip() for x in item.split('=', 1))
        if name not in VARIABLES:
            raise ValueError("Unknown coordinate %r, use one of %s" % (name, ', '.join(VARIABLES)))
        if name in values:
            raise ValueError("Coordinate %r given twice" % name)
        values[name] = to_complex(value)
    return values


def create_coords(var):
    """ Magic function to convert several objects into TraceCoords

    Args:
        var (TraceCoords, dict, list or str): Existing coordinates, a mapping by name (values as
            numbers, [re, im] pairs or strings), five values in order, or a string like
            "t=3,tbar=3,s=3,sbar=3,r=3"

    Returns:
        TraceCoords

    """
    if isinstance(var, TraceCoords):
        return var
    if isinstance(var, str):
        var = parse_fix(var)
    if hasattr(var, 'keys'):
        missing = [name for name in VARIABLES if name not in var]
        assert not missing, "Missing coordinates %s" % ', '.join(missing)
        return TraceCoords(*(to_complex(var[name]) for name in VARIABLES))
    var = list(var)
    assert len(var) == len(VARIABLES), "Please use five values (t, tbar, s, sbar, r)"
    return TraceCoords(*(to_complex(v) for v in var))
