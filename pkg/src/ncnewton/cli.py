"""Command-line front end: one JSON job in, one JSON document out.

Usage::

    ncnewton COMMAND [--input PATH|-] [--output PATH|-] [--order N]
                     [--method theorem6|elimination]
                     [--algorithm recurrence|quasidet|biortho]
                     [--cols i0,i1,...] [--rows k0,k1,...] [--decimal D]

Commands and payloads (all numbers are exact rational strings):

``invert``     matrix document; ``--method`` picks the inverse-matrix sum or elimination.
``biortho``    matrix document; ``--order`` or ``--cols``/``--rows`` for a reordered run.
``diffderiv``  ``{"matrix": M, "f": [...], "g": [...]}``, either of f/g optional.
``newton``     ``{"nodes": [...], "values": [...]}``.
``taylor``     ``{"x0": "p/q", "derivs": [...]}`` with derivs[i] = f^(i)(x0).
``gram``       rational symmetric matrix document.

Exit status: 0 success, 2 parse/schema error, 3 non-generic input,
4 domain error (duplicate node, not positive definite).  Errors are printed
as ``{"code", "message", "location"}`` JSON on stderr.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Optional

from . import jsonio
from .applications import gram_schmidt, newton_interpolate, taylor_interpolate
from .biortho import biorthogonalize, biorthogonalize_permuted
from .diffcalc import ALGORITHMS, delta_left, delta_right, inverse_via_theorem6
from .errors import (
    DuplicateIndex,
    DuplicateNode,
    IndexOutOfBounds,
    NcNewtonError,
    NonGeneric,
    NotPositiveDefinite,
    ParseError,
    SchemaError,
    VariantMismatch,
)
from .matrix import Matrix, invert

COMMANDS = ("invert", "biortho", "diffderiv", "newton", "taylor", "gram")
METHODS = ("theorem6", "elimination")

EXIT_OK, EXIT_INTERNAL, EXIT_SCHEMA, EXIT_NONGENERIC, EXIT_DOMAIN = 0, 1, 2, 3, 4


@dataclass
class JobRequest:
    command: str
    payload: dict
    options: dict = field(default_factory=dict)


# payload codecs ---------------------------------------------------------------

def _expect_keys(doc, required, optional=()):
    if not isinstance(doc, dict):
        raise SchemaError("payload must be a JSON object", "$")
    missing = [k for k in required if k not in doc]
    if missing:
        raise SchemaError(f"missing key {missing[0]!r}", "$")
    extra = sorted(set(doc) - set(required) - set(optional))
    if extra:
        raise SchemaError(f"unexpected key {extra[0]!r}", f"$.{extra[0]}")


def _matrix_payload(doc, location="$"):
    ring = jsonio.decode_ring(doc.get("ring") if isinstance(doc, dict) else None, f"{location}.ring")
    return {"ring": ring, "matrix": jsonio.decode_matrix(doc, location)}


def decode_payload(command: str, doc) -> dict:
    if command in ("invert", "biortho", "gram"):
        out = _matrix_payload(doc)
        if command == "gram" and out["ring"] != "rational":
            raise SchemaError("gram needs a rational matrix", "$.ring")
        return out
    if command == "diffderiv":
        _expect_keys(doc, ["matrix"], ["f", "g"])
        if "f" not in doc and "g" not in doc:
            raise SchemaError("diffderiv needs at least one of \"f\" and \"g\"", "$")
        out = _matrix_payload(doc["matrix"], "$.matrix")
        for key in ("f", "g"):
            if key in doc:
                out[key] = jsonio.decode_vector(doc[key], out["ring"], f"$.{key}")
        return out
    if command == "newton":
        _expect_keys(doc, ["nodes", "values"])
        return {"nodes": jsonio.decode_vector(doc["nodes"], "rational", "$.nodes"),
                "values": jsonio.decode_vector(doc["values"], "rational", "$.values")}
    if command == "taylor":
        _expect_keys(doc, ["x0", "derivs"])
        return {"x0": jsonio.decode_rational(doc["x0"], "$.x0"),
                "derivs": jsonio.decode_vector(doc["derivs"], "rational", "$.derivs")}
    raise SchemaError(f"unknown command {command!r}", "$")


def encode_payload(command: str, payload: dict):
    if command in ("invert", "biortho", "gram"):
        return jsonio.encode_matrix(payload["matrix"], payload["ring"])
    if command == "diffderiv":
        doc = {"matrix": jsonio.encode_matrix(payload["matrix"], payload["ring"])}
        for key in ("f", "g"):
            if key in payload:
                doc[key] = [jsonio.encode_element(x) for x in payload[key]]
        return doc
    if command == "newton":
        return {"nodes": [jsonio.encode_rational(x) for x in payload["nodes"]],
                "values": [jsonio.encode_rational(x) for x in payload["values"]]}
    if command == "taylor":
        return {"x0": jsonio.encode_rational(payload["x0"]),
                "derivs": [jsonio.encode_rational(x) for x in payload["derivs"]]}
    raise SchemaError(f"unknown command {command!r}", "$")


def parse_payload(command: str, text: str) -> dict:
    return decode_payload(command, jsonio.loads(text))


def serialize_payload(command: str, payload: dict) -> str:
    return jsonio.dumps(encode_payload(command, payload))


# execution --------------------------------------------------------------------

def _square(M: Matrix) -> int:
    if M.n_rows != M.n_cols:
        raise SchemaError(f"expected a square matrix, got {M.n_rows}x{M.n_cols}", "$.rows")
    return M.n_rows


def _order(options, size) -> int:
    n = options.get("order")
    if n is None:
        return size - 1
    if not 0 <= n < size:
        raise SchemaError(f"order {n} outside 0..{size - 1}", "--order")
    return n


def _sequences(options, M: Matrix):
    cols, rows = options.get("cols"), options.get("rows")
    if cols is None and rows is None:
        n = _order(options, min(M.n_rows, M.n_cols))
        return list(range(n + 1)), list(range(n + 1))
    if cols is None:
        cols = list(range(len(rows)))
    if rows is None:
        rows = list(range(len(cols)))
    if len(cols) != len(rows):
        raise SchemaError("--cols and --rows must have the same length", "--cols")
    return cols, rows


def _execute(request: JobRequest):
    cmd, p, opt = request.command, request.payload, request.options
    if cmd == "invert":
        M = p["matrix"]
        size = _square(M)
        method = opt.get("method") or "elimination"
        Z = invert(M) if method == "elimination" or size == 0 else inverse_via_theorem6(M, size - 1)
        return {"method": method, "inverse": jsonio.encode_matrix(Z, p["ring"])}
    if cmd == "biortho":
        M = p["matrix"]
        if opt.get("cols") is not None or opt.get("rows") is not None:
            cols, rows = _sequences(opt, M)
            res = biorthogonalize_permuted(M, cols, rows)
        else:
            res = biorthogonalize(M, _order(opt, min(M.n_rows, M.n_cols)))
        return jsonio.encode_biortho(res)
    if cmd == "diffderiv":
        M = p["matrix"]
        algorithm = opt.get("algorithm") or "biortho"
        cols, rows = _sequences(opt, M)
        out = {"algorithm": algorithm, "cols": cols, "rows": rows}
        if "f" in p:
            out["right"] = jsonio.encode_element(delta_right(p["f"], M, cols, rows, algorithm))
        if "g" in p:
            out["left"] = jsonio.encode_element(delta_left(p["g"], M, cols, rows, algorithm))
        return out
    if cmd in ("newton", "taylor"):
        if cmd == "newton":
            size = min(len(p["nodes"]), len(p["values"]))
            n = _order(opt, size)
            exp, poly = newton_interpolate(p["nodes"], p["values"], n)
        else:
            n = _order(opt, len(p["derivs"]))
            exp, poly = taylor_interpolate(p["x0"], p["derivs"], n)
        return {
            "order": n,
            "polynomial": jsonio.encode_polynomial(poly),
            "differences": [jsonio.encode_element(t.delta_right) for t in exp.terms],
            "pivots": [jsonio.encode_element(t.pivot) for t in exp.terms],
            "terms": jsonio.encode_expansion(exp),
        }
    if cmd == "gram":
        G = p["matrix"]
        size = _square(G)
        res = gram_schmidt(G, _order(opt, size))
        norms = [1 / piv for piv in res.pivots]
        return {"C": jsonio.encode_matrix(res.C), "pivots": [jsonio.encode_rational(x) for x in res.pivots],
                "norms": [jsonio.encode_rational(x) for x in norms]}
    raise SchemaError(f"unknown command {cmd!r}", "$")


def _to_decimal(value, digits: int):
    if isinstance(value, str):
        q = Fraction(value)
        with localcontext() as ctx:
            ctx.prec = digits + len(str(abs(q.numerator))) + len(str(q.denominator)) + 5
            d = Decimal(q.numerator) / Decimal(q.denominator)
            return str(d.quantize(Decimal(1).scaleb(-digits), rounding=ROUND_HALF_EVEN))
    if isinstance(value, list):
        return [_to_decimal(v, digits) for v in value]
    if isinstance(value, dict):
        return {k: (v if k in ("ring", "method", "algorithm") else _to_decimal(v, digits))
                for k, v in value.items()}
    return value


def _diagnostic(exc: Exception):
    if isinstance(exc, NonGeneric):
        return EXIT_NONGENERIC, {"code": "NonGeneric", "message": str(exc),
                                 "location": f"order {exc.order}", "m": exc.order}
    if isinstance(exc, (DuplicateNode, NotPositiveDefinite)):
        return EXIT_DOMAIN, {"code": exc.code, "message": str(exc), "location": "$"}
    if isinstance(exc, (ParseError, SchemaError, DuplicateIndex, IndexOutOfBounds, VariantMismatch)):
        return EXIT_SCHEMA, {"code": exc.code, "message": str(exc),
                             "location": getattr(exc, "location", "options")}
    if isinstance(exc, NcNewtonError):
        return EXIT_INTERNAL, {"code": exc.code, "message": str(exc), "location": "$"}
    return EXIT_SCHEMA, {"code": "SchemaError", "message": str(exc), "location": "$"}


def run(request: JobRequest):
    """Execute a job; returns ``(exit_status, stdout_text, stderr_text)``."""
    try:
        result = _execute(request)
    except (NcNewtonError, ValueError) as exc:
        status, diag = _diagnostic(exc)
        return status, "", jsonio.dumps(diag)
    doc = {"command": request.command, "result": result}
    digits = request.options.get("decimal")
    if digits is not None:
        doc["decimal_approximation"] = {"digits": digits, "approximate": True,
                                        "result": _to_decimal(result, digits)}
    return EXIT_OK, jsonio.dumps(doc), ""


# argv handling ----------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise SchemaError(message, "argv")


def _index_list(text):
    try:
        return [int(x) for x in text.split(",")] if text else []
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ncnewton", description="Exact quasideterminant inversion and interpolation.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--input", default="-", help="payload JSON file, or - for stdin")
    parser.add_argument("--output", default="-", help="result file, or - for stdout")
    parser.add_argument("--method", choices=METHODS)
    parser.add_argument("--algorithm", choices=ALGORITHMS)
    parser.add_argument("--order", type=int)
    parser.add_argument("--cols", type=_index_list)
    parser.add_argument("--rows", type=_index_list)
    parser.add_argument("--decimal", type=int, metavar="D")
    return parser


def request_from_argv(argv, stdin=None) -> tuple:
    args = build_parser().parse_args(argv)
    if args.decimal is not None and args.decimal < 0:
        raise SchemaError("--decimal must be nonnegative", "--decimal")
    if args.input == "-":
        text = (stdin or sys.stdin).read()
    else:
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {args.input}: {exc.strerror}") from None
    options = {k: getattr(args, k) for k in ("method", "algorithm", "order", "cols", "rows", "decimal")
               if getattr(args, k) is not None}
    return JobRequest(args.command, parse_payload(args.command, text), options), args.output


def main(argv: Optional[list] = None, stdin=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        request, output = request_from_argv(sys.argv[1:] if argv is None else argv, stdin)
    except NcNewtonError as exc:
        status, diag = _diagnostic(exc)
        stderr.write(jsonio.dumps(diag))
        return status
    status, out, err = run(request)
    if err:
        stderr.write(err)
    if out:
        if output == "-":
            stdout.write(out)
        else:
            with open(output, "w", encoding="utf-8") as fh:
                fh.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
