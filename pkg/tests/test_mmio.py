"""Matrix file I/O: CSV and Matrix Market round-trips."""

import numpy as np
import pytest

from syminv import InvalidArgument, read_matrix, write_matrix
from syminv.mmio import read_csv_matrix, write_csv_matrix


def _sample(rng, n=5):
    return rng.uniform(-1, 1, (n, n))


def test_csv_round_trip_is_bitwise(tmp_path):
    rng = np.random.default_rng(19)
    a = _sample(rng)
    path = tmp_path / "m.csv"
    write_matrix(str(path), a)
    back = read_matrix(str(path))
    np.testing.assert_array_equal(back, a)  # %.17g preserves float64 exactly


def test_matrix_market_round_trip(tmp_path):
    rng = np.random.default_rng(21)
    a = _sample(rng)
    path = tmp_path / "m.mtx"
    write_matrix(str(path), a)
    back = read_matrix(str(path))
    np.testing.assert_allclose(back, a, rtol=0, atol=1e-15)


def test_csv_explicit_helpers(tmp_path):
    a = np.array([[1.5, -2.0], [0.25, 1e-300]])
    path = tmp_path / "x.csv"
    write_csv_matrix(str(path), a)
    np.testing.assert_array_equal(read_csv_matrix(str(path)), a)


def test_csv_rejects_ragged_rows(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("1,2\n3\n")
    with pytest.raises(InvalidArgument):
        read_matrix(str(path))


def test_csv_rejects_non_numeric(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("1,2\nx,4\n")
    with pytest.raises(InvalidArgument):
        read_matrix(str(path))


def test_csv_rejects_empty_file(tmp_path):
    path = tmp_path / "empty.csv"
    path.write_text("")
    with pytest.raises(InvalidArgument):
        read_matrix(str(path))


def test_unknown_extension_rejected(tmp_path):
    path = tmp_path / "m.json"
    with pytest.raises(InvalidArgument):
        write_matrix(str(path), np.eye(2))
    with pytest.raises(InvalidArgument):
        read_matrix(str(path))


def test_read_missing_file_raises_oserror(tmp_path):
    with pytest.raises(OSError):
        read_matrix(str(tmp_path / "nope.csv"))
