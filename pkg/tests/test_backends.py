"""The numba loops and the numpy vectorised path must agree."""
import os
import subprocess
import sys

import numpy as np
import pytest

from qlandauer import _kernels


@pytest.mark.parametrize("name", ["loggamma", "digamma", "trigamma"])
def test_numba_and_numpy_agree(name):
    rng = np.random.default_rng(11)
    z = rng.uniform(-60, 60, 4000) + 1j * rng.uniform(-60, 60, 4000)
    a = _kernels.KERNELS["numba"][name](z)
    b = _kernels.KERNELS["numpy"][name](z)
    np.testing.assert_allclose(a, b, rtol=1e-13, atol=1e-13)


def test_env_flag_selects_numpy():
    env = dict(os.environ, QLANDAUER_BACKEND="numpy")
    out = subprocess.run([sys.executable, "-c", "import qlandauer; print(qlandauer.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "numpy"


def test_env_flag_rejects_unknown():
    env = dict(os.environ, QLANDAUER_BACKEND="fortran")
    out = subprocess.run([sys.executable, "-c", "import qlandauer"], env=env,
                         capture_output=True, text=True)
    assert out.returncode != 0
    assert "QLANDAUER_BACKEND" in out.stderr
