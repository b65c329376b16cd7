"""JSON encodings of the domain values.

Rationals are strings ``"num/den"`` (``"num"`` when the denominator is 1),
matrices are row-major nested arrays, polynomials ascending coefficient
arrays.  Decoding failures raise :class:`DecodeError` naming the JSON path.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .baker import DiffOperator
from .cm import CMPoint
from .exact import MultiPoly, Poly, QMatrix, fmt_q
from .partitions import as_partition
from .quasi import INF, QuasiExpSpace
from .window import FlagSpec, WindowSubspace


class DecodeError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"at {path}: {message}")
        self.path = path


def _sub(path: str, key) -> str:
    return f"{path}[{key!r}]" if isinstance(key, str) else f"{path}[{key}]"


def _get(doc, key, path: str):
    if not isinstance(doc, dict):
        raise DecodeError(path, f"expected an object, got {type(doc).__name__}")
    if key not in doc:
        raise DecodeError(path, f"missing field {key!r}")
    return doc[key]


def _list(doc, path: str) -> list:
    if not isinstance(doc, list):
        raise DecodeError(path, f"expected an array, got {type(doc).__name__}")
    return doc


# ---------------------------------------------------------------------------
# scalars, polynomials, matrices


def enc_rational(x) -> str:
    return fmt_q(x)


def dec_rational(doc, path: str = "$") -> Fraction:
    if isinstance(doc, bool) or not isinstance(doc, (str, int)):
        raise DecodeError(path, f"expected a rational string, got {doc!r}")
    try:
        value = Fraction(doc)
    except (ValueError, ZeroDivisionError) as exc:
        raise DecodeError(path, f"bad rational {doc!r}") from exc
    if isinstance(doc, str) and "." in doc:
        raise DecodeError(path, f"decimal notation is not exact: {doc!r}")
    return value


def enc_poly(p: Poly) -> list[str]:
    return [fmt_q(c) for c in p.coeffs]


def dec_poly(doc, path: str = "$", var: str = "x") -> Poly:
    return Poly([dec_rational(c, _sub(path, i)) for i, c in enumerate(_list(doc, path))], var)


def enc_matrix(m: QMatrix) -> list[list[str]]:
    return m.tolist()


def dec_matrix(doc, path: str = "$") -> QMatrix:
    rows = [[dec_rational(c, _sub(_sub(path, i), j)) for j, c in enumerate(_list(r, _sub(path, i)))] for i, r in enumerate(_list(doc, path))]
    if any(len(r) != len(rows[0]) for r in rows):
        raise DecodeError(path, "ragged matrix")
    return QMatrix(rows)


def enc_multipoly(p: MultiPoly) -> dict:
    return {
        "vars": list(p.vars),
        "terms": [{"exp": list(e), "coeff": fmt_q(c)} for e, c in sorted(p.terms.items())],
    }


def dec_multipoly(doc, path: str = "$") -> MultiPoly:
    vs = _list(_get(doc, "vars", path), _sub(path, "vars"))
    terms = {}
    for i, t in enumerate(_list(_get(doc, "terms", path), _sub(path, "terms"))):
        p = _sub(_sub(path, "terms"), i)
        e = tuple(_list(_get(t, "exp", p), _sub(p, "exp")))
        if len(e) != len(vs) or not all(isinstance(k, int) and k >= 0 for k in e):
            raise DecodeError(_sub(p, "exp"), "exponent does not match the variables")
        terms[e] = dec_rational(_get(t, "coeff", p), _sub(p, "coeff"))
    return MultiPoly(vs, terms)


# ---------------------------------------------------------------------------
# combinatorial values


def enc_partition(lam) -> list[int]:
    return list(lam)


def dec_partition(doc, path: str = "$") -> tuple[int, ...]:
    parts = _list(doc, path)
    if not all(isinstance(p, int) and not isinstance(p, bool) for p in parts):
        raise DecodeError(path, "parts must be integers")
    try:
        return as_partition(parts)
    except ValueError as exc:
        raise DecodeError(path, str(exc)) from exc


def enc_multipartition(mp) -> list[dict]:
    return [{"point": fmt_q(b), "parts": list(lam)} for b, lam in mp]


def dec_multipartition(doc, path: str = "$") -> tuple:
    out = []
    for i, item in enumerate(_list(doc, path)):
        p = _sub(path, i)
        out.append((dec_rational(_get(item, "point", p), _sub(p, "point")), dec_partition(_get(item, "parts", p), _sub(p, "parts"))))
    return tuple(out)


def enc_divisor(d) -> list[dict]:
    return [{"point": fmt_q(b), "mult": m} for b, m in d]


def dec_divisor(doc, path: str = "$") -> tuple:
    out = []
    for i, item in enumerate(_list(doc, path)):
        p = _sub(path, i)
        m = _get(item, "mult", p)
        if not isinstance(m, int) or m < 1:
            raise DecodeError(_sub(p, "mult"), "multiplicity must be a positive integer")
        out.append((dec_rational(_get(item, "point", p), _sub(p, "point")), m))
    return tuple(out)


# ---------------------------------------------------------------------------
# domain records


def enc_cm_point(P: CMPoint) -> dict:
    return {"n": P.n, "X": enc_matrix(P.X), "Y": enc_matrix(P.Y)}


def dec_cm_point(doc, path: str = "$") -> CMPoint:
    n = _get(doc, "n", path)
    X = dec_matrix(_get(doc, "X", path), _sub(path, "X"))
    Y = dec_matrix(_get(doc, "Y", path), _sub(path, "Y"))
    if X.shape != (n, n) or Y.shape != (n, n):
        raise DecodeError(path, f"X and Y must be {n}x{n}")
    try:
        return CMPoint(X, Y)
    except ValueError as exc:
        raise DecodeError(path, str(exc)) from exc


def enc_window(W: WindowSubspace) -> dict:
    return {"n": W.n, "b": fmt_q(W.b), "rows": enc_matrix(W.basis)}


def dec_window(doc, path: str = "$") -> WindowSubspace:
    n = _get(doc, "n", path)
    b = dec_rational(_get(doc, "b", path), _sub(path, "b"))
    rows = dec_matrix(_get(doc, "rows", path), _sub(path, "rows"))
    try:
        return WindowSubspace(n, b, rows)
    except ValueError as exc:
        raise DecodeError(path, str(exc)) from exc


def enc_flag(F: FlagSpec) -> dict:
    return {"at": INF if F.at_infinity else fmt_q(F.at)}


def dec_flag(doc, path: str = "$") -> FlagSpec:
    at = _get(doc, "at", path)
    return FlagSpec(INF) if at == INF else FlagSpec(dec_rational(at, _sub(path, "at")))


def enc_quasi(C: QuasiExpSpace) -> list[dict]:
    return [{"b": fmt_q(b), "polys": [enc_poly(g) for g in polys]} for b, polys in C.components]


def dec_quasi(doc, path: str = "$") -> QuasiExpSpace:
    comps = []
    for i, item in enumerate(_list(doc, path)):
        p = _sub(path, i)
        b = dec_rational(_get(item, "b", p), _sub(p, "b"))
        polys = tuple(dec_poly(g, _sub(_sub(p, "polys"), j)) for j, g in enumerate(_list(_get(item, "polys", p), _sub(p, "polys"))))
        comps.append((b, polys))
    try:
        return QuasiExpSpace(tuple(comps))
    except ValueError as exc:
        raise DecodeError(path, str(exc)) from exc


def enc_diff_op(D: DiffOperator) -> list[dict]:
    return [{"i": i, "j": j, "coeff": fmt_q(c)} for (i, j), c in D.coeffs]


def dec_diff_op(doc, path: str = "$") -> DiffOperator:
    out = {}
    for k, item in enumerate(_list(doc, path)):
        p = _sub(path, k)
        i, j = _get(item, "i", p), _get(item, "j", p)
        if not (isinstance(i, int) and isinstance(j, int) and i >= 0 and j >= 0):
            raise DecodeError(p, "indices must be non-negative integers")
        out[(i, j)] = dec_rational(_get(item, "coeff", p), _sub(p, "coeff"))
    return DiffOperator.from_dict(out)


CODECS = {
    "rational": (enc_rational, dec_rational),
    "poly": (enc_poly, dec_poly),
    "matrix": (enc_matrix, dec_matrix),
    "multipoly": (enc_multipoly, dec_multipoly),
    "partition": (enc_partition, dec_partition),
    "multipartition": (enc_multipartition, dec_multipartition),
    "divisor": (enc_divisor, dec_divisor),
    "cm_point": (enc_cm_point, dec_cm_point),
    "window": (enc_window, dec_window),
    "flag": (enc_flag, dec_flag),
    "quasi_exp": (enc_quasi, dec_quasi),
    "diff_op": (enc_diff_op, dec_diff_op),
}

_BY_TYPE = {
    Fraction: "rational",
    Poly: "poly",
    QMatrix: "matrix",
    MultiPoly: "multipoly",
    CMPoint: "cm_point",
    WindowSubspace: "window",
    FlagSpec: "flag",
    QuasiExpSpace: "quasi_exp",
    DiffOperator: "diff_op",
}


def kind_of(value) -> str:
    try:
        return _BY_TYPE[type(value)]
    except KeyError:
        raise TypeError(f"no default codec for {type(value).__name__}; pass kind explicitly") from None


def dumps(value, kind: str | None = None, **kw) -> str:
    kind = kind or kind_of(value)
    return json.dumps(CODECS[kind][0](value), **kw)


def loads(text: str, kind: str) -> Any:
    if kind not in CODECS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {sorted(CODECS)}")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DecodeError(f"line {exc.lineno} column {exc.colno}", exc.msg) from exc
    return CODECS[kind][1](doc, "$")


def json_roundtrip(value, kind: str | None = None):
    kind = kind or kind_of(value)
    return loads(dumps(value, kind), kind)

