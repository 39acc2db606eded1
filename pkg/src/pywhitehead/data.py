# -*- coding: utf-8 -*-
""" Conversion between pywhitehead objects and JSON

All documents carry ``"schema": "whitehead-sl3/v1"``. A complex number is written as [re, im] and
a matrix as three rows of three such pairs. Floats are written with ``repr``, which round-trips
exactly. Output is produced with sorted keys so that identical results give identical bytes.

Examples:

    .. code-block:: python

        from pywhitehead.data import encode_report, dumps

        print(dumps(encode_report(report)))

"""

import json
import math
import sys

import numpy as np

from .constants import SCHEMA, VARIABLES
from .coordinates import create_coords
from .utilities import SchemaError


def _real(x):
    x = float(x)
    return x if math.isfinite(x) else None


def encode_complex(z):
    z = complex(z)
    return [_real(z.real), _real(z.imag)]


def decode_complex(value):
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return complex(value)
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise SchemaError("A complex number is [re, im], got %r" % (value,))
    try:
        z = complex(float(value[0]), float(value[1]))
    except (TypeError, ValueError):
        raise SchemaError("A complex number is [re, im] with real entries, got %r" % (value,))
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise SchemaError("Non-finite complex number %r" % (value,))
    return z


def encode_matrix(x):
    x = np.asarray(x, dtype=complex)
    return [[encode_complex(x[i, j]) for j in range(3)] for i in range(3)]


def decode_matrix(value):
    if not isinstance(value, (list, tuple)) or len(value) != 3 or \
            any(not isinstance(row, (list, tuple)) or len(row) != 3 for row in value):
        raise SchemaError("A matrix is three rows of three [re, im] pairs")
    return np.array([[decode_complex(entry) for entry in row] for row in value], dtype=complex)


def encode_coords(c, residual=None):
    c = create_coords(c)
    payload = {name: encode_complex(value) for name, value in zip(VARIABLES, c)}
    if residual is not None:
        payload['residual'] = _real(residual)
    return payload


def decode_coords(value):
    if not isinstance(value, dict):
        raise SchemaError("Trace coordinates are an object with keys %s" % ', '.join(VARIABLES))
    missing = [name for name in VARIABLES if name not in value]
    if missing:
        raise SchemaError("Trace coordinates lack %s" % ', '.join(missing))
    return create_coords({name: decode_complex(value[name]) for name in VARIABLES})


def document(kind, **content):
    """ Top level JSON object of the given kind"""
    payload = {'schema': SCHEMA, 'kind': kind}
    payload.update(content)
    return payload


def encode_representation(representation):
    return {'y': encode_matrix(representation.y),
            'z': encode_matrix(representation.z),
            'relation_residual': _real(representation.relation_residual),
            'symmetry_residuals': [_real(x) for x in representation.symmetry_residuals],
            'det_residuals': [_real(x) for x in representation.det_residuals]}


def encode_report(report):
    """ JSON object of a SolveReport"""
    payload = document('solve',
                       target=encode_coords(report.target),
                       a=encode_matrix(report.a),
                       success=report.success,
                       failure=report.failure,
                       flags={key: bool(value) for key, value in report.flags.items()},
                       residuals={key: _real(value) for key, value in report.residuals.items()},
                       iterations=int(report.iterations),
                       restarts=int(report.restarts))
    if report.pencil_rank is not None:
        payload['pencil_rank'] = int(report.pencil_rank)
        payload['kdet'] = encode_complex(report.kdet)
    if report.coeffs is not None:
        payload['coeffs'] = {'lambda': encode_complex(report.coeffs.lam),
                             'mu': encode_complex(report.coeffs.mu),
                             'nu': encode_complex(report.coeffs.nu)}
    if report.extended is not None:
        payload['t1212bar'] = encode_complex(report.extended.t1212bar)
        payload['t2121bar'] = encode_complex(report.extended.t2121bar)
    if report.representation is not None:
        payload['representation'] = encode_representation(report.representation)
    return payload


def encode_lifts(lift_set, report=None):
    lifts = []
    for lift in lift_set:
        entry = encode_representation(lift.representation)
        entry.update({'sheet': lift.sheet,
                      'k': lift.k,
                      'coords': encode_coords(lift.coords),
                      'tr_y': encode_complex(lift.tr_y),
                      't1212bar': encode_complex(lift.t1212bar),
                      't2121bar': encode_complex(lift.t2121bar)})
        lifts.append(entry)
    payload = document('lift',
                       lifts=lifts,
                       coords_spread=_real(lift_set.coords_spread()),
                       max_relation_residual=_real(lift_set.max_relation_residual()),
                       pairs_distinct=lift_set.pairs_distinct(),
                       degenerate=lift_set.degenerate,
                       valid=lift_set.valid)
    if report is not None:
        payload['target'] = encode_coords(report.target)
    return payload


def decode_representation(payload):
    """ (y, z) from a check input, a solve output or one entry of a lift output

    Returns:
        tuple of two 3x3 complex arrays

    """
    if not isinstance(payload, dict):
        raise SchemaError("Expected a JSON object")
    source = payload
    if 'y' not in source and isinstance(payload.get('representation'), dict):
        source = payload['representation']
    if 'y' not in source or 'z' not in source:
        raise SchemaError("No representation (y, z) in the input")
    return decode_matrix(source['y']), decode_matrix(source['z'])


def check_schema(payload):
    if not isinstance(payload, dict):
        raise SchemaError("Expected a JSON object")
    schema = payload.get('schema', SCHEMA)
    if schema != SCHEMA:
        raise SchemaError("Unsupported schema %r, expected %r" % (schema, SCHEMA))
    return payload


def loads(text):
    try:
        payload = json.loads(text)
    except ValueError as err:
        raise SchemaError("Malformed JSON: %s" % err)
    return check_schema(payload)


def load(source):
    """ Read a JSON document from a path, or from stdin for '-'"""
    if source == '-':
        return loads(sys.stdin.read())
    try:
        with open(source) as handle:
            text = handle.read()
    except OSError as err:
        raise SchemaError("Cannot read %s: %s" % (source, err))
    return loads(text)


def dumps(payload):
    return json.dumps(payload, sort_keys=True, indent=2, allow_nan=False)
