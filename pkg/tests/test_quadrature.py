import io

import numpy as np
import pytest

from pentaverify import reports
from pentaverify.errors import NoConvergence
from pentaverify.quadrature import integrate_doubling
from pentaverify.qseries import CoeffSeries


def test_polynomial_exactness():
    val = integrate_doubling(lambda x: x ** 4 + 0j, -1.0, 2.0, 1e-12)
    assert abs(complex(val).real - (2.0 ** 5 + 1.0) / 5.0) < 1e-12


def test_oscillatory_integral():
    val = integrate_doubling(lambda x: np.exp(1j * 10 * x), 0.0, 1.0, 1e-12)
    expected = (np.exp(10j) - 1.0) / 10j
    assert abs(complex(val) - complex(expected)) < 1e-10


def test_no_convergence_raised():
    # resolution-starved high-frequency integrand
    with pytest.raises(NoConvergence):
        integrate_doubling(lambda x: np.sin(1e7 * x) + 0j, 0.0, 1.0, 1e-14,
                           max_nodes=128)


def test_invalid_interval():
    with pytest.raises(ValueError):
        integrate_doubling(lambda x: x, 1.0, 0.0, 1e-10)


def test_extended_nodes_match_double_nodes():
    from pentaverify.quadrature import _gl_nodes
    x64, w64 = _gl_nodes(16, np.float64)
    xld, wld = _gl_nodes(16, np.longdouble)
    assert np.max(np.abs(x64 - xld.astype(np.float64))) < 1e-15
    assert np.max(np.abs(w64 - wld.astype(np.float64))) < 1e-15


def test_csv_float_formatting():
    out = io.StringIO()
    reports.write_csv(["a", "b"], [[1.0 / 3.0, float("nan")],
                                   [float("-inf"), True]], out)
    lines = out.getvalue().split("\n")
    assert lines[0] == "a,b"
    assert lines[1] == "0.33333333333333331,nan"
    assert lines[2] == "-inf,true"


def test_series_csv_dump():
    out = io.StringIO()
    series = CoeffSeries.from_list([1, 0, -2], 2)
    reports.write_csv(["exponent", "coefficient"], list(series.rows()), out)
    assert out.getvalue() == "exponent,coefficient\n0,1\n1,0\n2,-2\n"


def test_json_nan_becomes_null():
    import json
    out = io.StringIO()
    reports.write_json({"cmd": "x"}, ["v"], [[float("nan")]], out)
    doc = json.loads(out.getvalue())
    assert doc["rows"][0]["v"] is None
