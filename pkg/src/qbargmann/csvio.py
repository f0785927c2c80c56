"""Coefficient files: ``n,w,x,y,z`` rows, one quaternion coefficient per row.

Rows appear in strictly increasing ``n``; indices that are skipped are zero.
Lines starting with ``#`` are comments, except that a leading
``# nu=<value> basis=<hermite|fock>`` line is read as metadata.
"""

from __future__ import annotations

import csv
import io
import math
from pathlib import Path
from typing import NamedTuple

import numpy as np

from .errors import ParseError

HEADER = ("n", "w", "x", "y", "z")
BASES = ("hermite", "fock")


class CoefficientTable(NamedTuple):
    coeffs: np.ndarray
    nu: float | None = None
    basis: str | None = None


def _parse_meta(text: str, line: int) -> dict:
    meta = {}
    for token in text.split():
        key, sep, value = token.partition("=")
        if not sep:
            continue
        if key == "nu":
            try:
                nu = float(value)
            except ValueError:
                raise ParseError(f"bad nu {value!r}", line) from None
            if not (math.isfinite(nu) and nu > 0):
                raise ParseError(f"nu must be positive, got {value}", line)
            meta["nu"] = nu
        elif key == "basis":
            if value not in BASES:
                raise ParseError(f"basis must be one of {BASES}, got {value!r}", line)
            meta["basis"] = value
    return meta


def parse_coefficients(text: str) -> CoefficientTable:
    meta: dict = {}
    rows: dict[int, list[float]] = {}
    header_seen = False
    last = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            if not header_seen and not rows:
                meta.update(_parse_meta(stripped[1:], lineno))
            continue
        fields = [f.strip() for f in next(csv.reader([stripped]))]
        if not header_seen:
            if tuple(fields) != HEADER:
                raise ParseError(f"expected header {','.join(HEADER)}, got {stripped!r}", lineno)
            header_seen = True
            continue
        if len(fields) != 5:
            raise ParseError(f"expected 5 fields, got {len(fields)}", lineno)
        try:
            n = int(fields[0])
        except ValueError:
            raise ParseError(f"index {fields[0]!r} is not an integer", lineno) from None
        if n < 0:
            raise ParseError(f"negative index {n}", lineno)
        if n <= last:
            raise ParseError(f"index {n} does not increase (previous {last})", lineno)
        try:
            vals = [float(v) for v in fields[1:]]
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
        if not all(math.isfinite(v) for v in vals):
            raise ParseError("non-finite coefficient", lineno)
        rows[n] = vals
        last = n
    if not header_seen:
        raise ParseError("missing header", 1)
    coeffs = np.zeros((last + 1 if rows else 1, 4))
    for n, vals in rows.items():
        coeffs[n] = vals
    return CoefficientTable(coeffs, meta.get("nu"), meta.get("basis"))


def read_coefficients(path) -> CoefficientTable:
    return parse_coefficients(Path(path).read_text())


def format_coefficients(coeffs, nu: float | None = None, basis: str | None = None) -> str:
    """Round-trip exact text (``repr`` floats); every index is written."""
    buf = io.StringIO()
    meta = []
    if nu is not None:
        meta.append(f"nu={nu!r}")
    if basis is not None:
        meta.append(f"basis={basis}")
    if meta:
        buf.write("# " + " ".join(meta) + "\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(HEADER)
    for n, c in enumerate(np.asarray(coeffs, dtype=float).reshape(-1, 4)):
        w.writerow([n, *(repr(float(v)) for v in c)])
    return buf.getvalue()


def write_coefficients(path, coeffs, nu: float | None = None, basis: str | None = None) -> None:
    Path(path).write_text(format_coefficients(coeffs, nu, basis))
