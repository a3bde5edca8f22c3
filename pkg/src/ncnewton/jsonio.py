"""JSON encoding of ring elements, matrices, polynomials and results.

Rationals are strings ``"p/q"`` (``"p"`` when q = 1), blocks are nested
arrays of rational strings, and a matrix document looks like::

    {"ring": "rational" | {"block": d}, "rows": [[entry, ...], ...]}

All encoders are exact and deterministic; :func:`dumps` fixes the byte layout.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .biortho import BiorthoResult
from .diffcalc import NewtonExpansion
from .errors import ParseError, SchemaError
from .matrix import Matrix
from .polynomial import Polynomial
from .ring import Block

_RATIONAL = re.compile(r"-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?")


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})") from None


def encode_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def decode_rational(value, location="$") -> Fraction:
    if isinstance(value, bool):
        raise SchemaError(f"expected a rational string, got {value!r}", location)
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str) or not _RATIONAL.fullmatch(value):
        raise SchemaError(f"expected a rational string like \"-3/4\", got {value!r}", location)
    return Fraction(value)


def encode_element(x):
    if isinstance(x, Block):
        return [[encode_rational(v) for v in row] for row in x.entries]
    if isinstance(x, Polynomial):
        return encode_polynomial(x)
    return encode_rational(x)


def decode_element(value, ring, location="$"):
    """``ring`` is "rational" or ("block", d)."""
    if ring == "rational":
        return decode_rational(value, location)
    d = ring[1]
    if not isinstance(value, list) or len(value) != d:
        raise SchemaError(f"expected a {d}x{d} block", location)
    rows = []
    for r, row in enumerate(value):
        if not isinstance(row, list) or len(row) != d:
            raise SchemaError(f"expected a {d}x{d} block", f"{location}[{r}]")
        rows.append([decode_rational(v, f"{location}[{r}][{c}]") for c, v in enumerate(row)])
    return Block(rows)


def encode_ring(ring):
    return "rational" if ring == "rational" else {"block": ring[1]}


def decode_ring(value, location="$.ring"):
    if value == "rational":
        return "rational"
    if isinstance(value, dict) and set(value) == {"block"}:
        d = value["block"]
        if isinstance(d, int) and not isinstance(d, bool) and d >= 1:
            return ("block", d)
    raise SchemaError('ring must be "rational" or {"block": d} with d >= 1', location)


def encode_matrix(M: Matrix, ring=None) -> dict:
    if ring is None:
        v = M.variant
        ring = "rational" if v is None or v[0] == "rational" else v
    return {"ring": encode_ring(ring), "rows": [[encode_element(x) for x in row] for row in M.rows]}


def decode_matrix(doc, location="$") -> Matrix:
    if not isinstance(doc, dict) or set(doc) != {"ring", "rows"}:
        raise SchemaError('matrix must be an object with exactly the keys "ring" and "rows"', location)
    ring = decode_ring(doc["ring"], f"{location}.ring")
    rows = doc["rows"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise SchemaError("rows must be an array of arrays", f"{location}.rows")
    width = len(rows[0]) if rows else 0
    for r, row in enumerate(rows):
        if len(row) != width:
            raise SchemaError(f"row {r} has {len(row)} entries, expected {width}", f"{location}.rows[{r}]")
    return Matrix([[decode_element(v, ring, f"{location}.rows[{r}][{c}]") for c, v in enumerate(row)]
                   for r, row in enumerate(rows)])


def decode_vector(value, ring, location="$") -> list:
    if not isinstance(value, list):
        raise SchemaError("expected an array", location)
    return [decode_element(v, ring, f"{location}[{j}]") for j, v in enumerate(value)]


def encode_polynomial(p: Polynomial) -> list:
    return [encode_rational(c) for c in p.coeffs]


def decode_polynomial(value, location="$") -> Polynomial:
    if not isinstance(value, list):
        raise SchemaError("polynomial must be an array of rational strings", location)
    return Polynomial(decode_rational(v, f"{location}[{j}]") for j, v in enumerate(value))


def encode_biortho(res: BiorthoResult) -> dict:
    return {
        "order": res.order,
        "A": encode_matrix(res.A),
        "C": encode_matrix(res.C),
        "pivots": [encode_element(p) for p in res.pivots],
    }


def encode_expansion(exp: NewtonExpansion) -> list:
    return [[encode_element(t.delta_right), encode_element(t.pivot), encode_element(t.delta_left)]
            for t in exp.terms]
