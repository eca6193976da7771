"""Plain-text matrix files.

::

    # comment lines and blank lines are ignored
    2 2
    1 0+1i
    0-1i 2.5e-3

The first significant line holds ``rows cols``; then ``rows * cols``
whitespace-separated entries follow in row-major order. An entry is a real
float, optionally followed by a signed float and ``i`` with no spaces
(``3+4i``, ``0-1i``).
"""

from __future__ import annotations

import math
import re
from pathlib import Path

import numpy as np

from .errors import MatrixParseError

_FLOAT = r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_ENTRY = re.compile(rf"(?P<re>{_FLOAT})(?:(?P<im>[+-](?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)i)?")
_SHAPE = re.compile(r"(\d+)\s+(\d+)")


def _tokens(text):
    """Yield ``(token, line, column)`` for every non-comment token."""
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.lstrip().startswith("#"):
            continue
        for match in re.finditer(r"\S+", line):
            yield match.group(), lineno, match.start() + 1


def parse_entry(token, line=None, column=None) -> complex:
    match = _ENTRY.fullmatch(token)
    if match is None:
        raise MatrixParseError(f"malformed entry {token!r}", line, column)
    re_part = float(match.group("re"))
    im_part = float(match.group("im")) if match.group("im") is not None else 0.0
    if not (math.isfinite(re_part) and math.isfinite(im_part)):
        raise MatrixParseError(f"non-finite value {token!r}", line, column)
    return complex(re_part, im_part)


def parse_matrix(text: str) -> np.ndarray:
    lines = [(i, ln) for i, ln in enumerate(text.splitlines(), start=1)]
    header = next(((i, ln.strip()) for i, ln in lines if ln.strip() and not ln.lstrip().startswith("#")), None)
    if header is None:
        raise MatrixParseError("missing '<rows> <cols>' header")
    head_line, head = header
    shape = _SHAPE.fullmatch(head)
    if shape is None:
        raise MatrixParseError(f"expected '<rows> <cols>', found {head!r}", head_line, 1)
    rows, cols = int(shape.group(1)), int(shape.group(2))

    values = []
    last = (head_line, 1)
    for token, line, column in _tokens(text):
        if line <= head_line:
            continue
        values.append(parse_entry(token, line, column))
        last = (line, column)
    expected = rows * cols
    if len(values) != expected:
        raise MatrixParseError(f"expected {expected} entries, found {len(values)}", *last)
    return np.array(values, dtype=np.complex128).reshape(rows, cols)


def read_matrix(path) -> np.ndarray:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise MatrixParseError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return parse_matrix(text)
    except MatrixParseError as exc:
        raise MatrixParseError(f"{path}: {exc}") from exc


def format_entry(z: complex) -> str:
    z = complex(z)
    re_s = f"{z.real:.17g}"
    if z.imag == 0.0 and math.copysign(1.0, z.imag) > 0:
        return re_s
    im_s = f"{z.imag:.17g}"
    if not im_s.startswith("-"):
        im_s = "+" + im_s
    return f"{re_s}{im_s}i"


def format_matrix(A, comment=None) -> str:
    A = np.asarray(A)
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"{A.shape[0]} {A.shape[1]}")
    out.extend(" ".join(format_entry(z) for z in row) for row in A)
    return "\n".join(out) + "\n"


def write_matrix(path, A, comment=None):
    Path(path).write_text(format_matrix(A, comment), encoding="utf-8")
