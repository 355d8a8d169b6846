"""Compiled and pure-Python kernels must be interchangeable."""

import importlib

import pytest

from spindet import _ddem_py
from spindet.hurwitz import _C2J

try:
    from spindet import _ddem
    HAVE_COMPILED = True
except ImportError:
    HAVE_COMPILED = False

pytestmark = pytest.mark.skipif(not HAVE_COMPILED,
                                reason="compiled kernel not built")

GRID = [(s, a, m)
        for s in (-29.0, -12.0, -3.0, -1.0, -0.5, 0.5, 2.0, 3.0, 31.0)
        for a in (0.25, 0.5, 1.0, 2.5, 12.5, 15.0)
        for m in (0, 8, 24)]


@pytest.mark.parametrize("s,a,m", GRID)
def test_kernels_bit_identical(s, a, m):
    got_c = _ddem.em_hurwitz(s, a, m, 12, 64, 1e-33, _C2J)
    got_py = _ddem_py.em_hurwitz(s, a, m, 12, 64, 1e-33, _C2J)
    assert got_c == got_py


def test_env_var_selects_python_backend(monkeypatch):
    monkeypatch.setenv("SPINDET_PURE_PYTHON", "1")
    import spindet._backend
    backend = importlib.reload(spindet._backend)
    try:
        assert backend.BACKEND == "python"
    finally:
        monkeypatch.delenv("SPINDET_PURE_PYTHON")
        importlib.reload(spindet._backend)


def test_end_to_end_values_identical():
    # drive the public evaluator through both kernels
    from spindet import barnes, hurwitz
    from spindet.barnes import BarnesPoint, log_barnes_gamma

    def run():
        barnes._b_values_dd.cache_clear()
        return (log_barnes_gamma(BarnesPoint(25, 12.5)),
                log_barnes_gamma(BarnesPoint(8, 0.5)))

    original = hurwitz.em_hurwitz
    try:
        hurwitz.em_hurwitz = _ddem.em_hurwitz
        compiled = run()
        hurwitz.em_hurwitz = _ddem_py.em_hurwitz
        python = run()
    finally:
        hurwitz.em_hurwitz = original
    assert compiled == python
