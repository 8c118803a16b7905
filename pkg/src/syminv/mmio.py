"""Reading and writing dense matrices as CSV or Matrix Market files.

CSV files carry one matrix row per line with full-precision (``%.17g``)
decimal entries and no header.  Matrix Market files go through
``scipy.io`` and may use either the ``array`` or the ``coordinate``
layout; coordinate files (including ``symmetric`` ones) are expanded to
dense on read.
"""

from __future__ import annotations

import csv
import os

import numpy as np
import scipy.io
import scipy.sparse

from .errors import InvalidArgument
from .matcore import as_matrix


def read_csv_matrix(path) -> np.ndarray:
    rows = []
    with open(path, newline="") as fh:
        for record in csv.reader(fh):
            if not record:
                continue
            try:
                rows.append([float(cell) for cell in record])
            except ValueError as exc:
                raise InvalidArgument(f"{path}: bad numeric cell: {exc}") from None
    if not rows:
        raise InvalidArgument(f"{path}: no matrix rows found")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise InvalidArgument(f"{path}: rows have inconsistent lengths")
    return as_matrix(rows)


def write_csv_matrix(path, a) -> None:
    a = as_matrix(a)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        for row in a:
            writer.writerow(["%.17g" % x for x in row])


def read_mm_matrix(path) -> np.ndarray:
    m = scipy.io.mmread(path)
    if scipy.sparse.issparse(m):
        m = m.toarray()
    return as_matrix(m)


def write_mm_matrix(path, a) -> None:
    a = as_matrix(a)
    scipy.io.mmwrite(path, a, precision=17)


_READERS = {".csv": read_csv_matrix, ".mtx": read_mm_matrix}
_WRITERS = {".csv": write_csv_matrix, ".mtx": write_mm_matrix}


def _dispatch(table, path, kind):
    ext = os.path.splitext(str(path))[1].lower()
    try:
        return table[ext]
    except KeyError:
        raise InvalidArgument(
            f"cannot {kind} {path!r}: unsupported extension {ext!r}"
            " (expected .csv or .mtx)"
        ) from None


def read_matrix(path) -> np.ndarray:
    """Load a square matrix, picking the format from the file extension."""
    return _dispatch(_READERS, path, "read")(path)


def write_matrix(path, a) -> None:
    """Store a square matrix, picking the format from the file extension."""
    _dispatch(_WRITERS, path, "write")(path, a)
