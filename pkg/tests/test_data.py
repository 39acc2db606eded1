#!/usr/bin/env python
# -*- coding: utf-8 -*-

import json

import pytest
import numpy as np

from pywhitehead import mat3
from pywhitehead.constants import SCHEMA
from pywhitehead.coordinates import TraceCoords
from pywhitehead.data import (encode_complex, decode_complex, encode_matrix, decode_matrix, encode_coords,
                              decode_coords, decode_representation, document, dumps, loads, load)
from pywhitehead.utilities import SchemaError


def test_complex_encoding():
    assert encode_complex(1.5 - 2j) == [1.5, -2.0]
    assert encode_complex(float('nan')) == [None, 0.0]
    assert decode_complex([0.1, 0.2]) == 0.1 + 0.2j
    assert decode_complex(3) == 3
    for bad in ([1], "1+2i", [None, 0], True):
        with pytest.raises(SchemaError):
            decode_complex(bad)


def test_matrix_encoding(rng):
    x = mat3.random_sl3(rng)
    payload = json.loads(json.dumps(encode_matrix(x)))
    assert np.array_equal(decode_matrix(payload), x), "repr floats must round-trip exactly"
    with pytest.raises(SchemaError):
        decode_matrix([[0, 0, 0]])


def test_coords_encoding():
    c = TraceCoords(1, 2j, 3, 4, 5)
    payload = encode_coords(c, residual=1e-14)
    assert payload['tbar'] == [0.0, 2.0]
    assert payload['residual'] == 1e-14
    assert decode_coords(payload) == c
    with pytest.raises(SchemaError):
        decode_coords({'t': [1, 0]})
    with pytest.raises(SchemaError):
        decode_coords([1, 2, 3, 4, 5])


def test_document_is_deterministic():
    payload = document('eval', b=1, a=[0.1, None])
    assert payload['schema'] == SCHEMA
    text = dumps(payload)
    assert text == dumps(loads(text))
    assert text.index('"a"') < text.index('"b"') < text.index('"kind"')
    with pytest.raises(ValueError):
        dumps({'x': float('inf')})


def test_loads_rejects():
    with pytest.raises(SchemaError):
        loads("{not json")
    with pytest.raises(SchemaError):
        loads("[1, 2]")
    with pytest.raises(SchemaError):
        loads(json.dumps({'schema': 'whitehead-sl3/v0'}))


def test_load_file(tmp_path):
    path = tmp_path / 'point.json'
    path.write_text(json.dumps({'schema': SCHEMA, 'coords': {'t': 1}}))
    assert load(str(path))['coords'] == {'t': 1}
    with pytest.raises(SchemaError):
        load(str(tmp_path / 'missing.json'))


def test_decode_representation(rng):
    y, z = mat3.random_sl3(rng), mat3.random_sl3(rng)
    flat = {'y': encode_matrix(y), 'z': encode_matrix(z)}
    nested = {'schema': SCHEMA, 'kind': 'solve', 'representation': flat}
    for payload in (flat, nested):
        y2, z2 = decode_representation(payload)
        assert np.array_equal(y2, y) and np.array_equal(z2, z)
    with pytest.raises(SchemaError):
        decode_representation({'kind': 'solve', 'failure': 'no kernel'})
