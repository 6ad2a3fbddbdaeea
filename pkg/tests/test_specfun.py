import cmath
import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qlandauer.errors import DomainError, PoleError
from qlandauer.specfun import digamma, entropy_kernel, log_gamma, trigamma

EULER = 0.5772156649015329
BACKENDS = ["numba", "numpy"]


def annulus(n, rmin, rmax, seed):
    rng = np.random.default_rng(seed)
    r = rng.uniform(rmin, rmax, n)
    theta = rng.uniform(-math.pi, math.pi, n)
    return r * np.exp(1j * theta)


@pytest.mark.parametrize("backend", BACKENDS)
class TestLogGamma:
    def test_one(self, backend):
        # absolute floor: ln Gamma(13) - ln 12! cancels to ~20 ulp
        assert log_gamma(1.0, backend=backend) == pytest.approx(0.0, abs=1e-14)

    def test_five(self, backend):
        assert log_gamma(5.0, backend=backend) == pytest.approx(math.log(24.0), rel=1e-14)

    def test_modulus_on_line_re_one(self, backend):
        # |Gamma(1 + ix)|^2 = pi x / sinh(pi x)
        x = 3.0
        val = log_gamma(1 + 1j * x, backend=backend)
        assert 2 * val.real == pytest.approx(math.log(math.pi * x / math.sinh(math.pi * x)), rel=1e-13)

    def test_against_mpmath(self, backend):
        z = annulus(300, 1.0, 200.0, seed=3)
        got = log_gamma(z, backend=backend)
        ref = np.array([complex(mpmath.loggamma(mpmath.mpc(c))) for c in z])
        assert np.max(np.abs(got - ref) / np.abs(ref)) < 1e-12

    def test_principal_branch_large_imaginary(self, backend):
        # imaginary part grows like y ln y; no 2 pi i jumps across recurrence shifts
        z = np.array([0.3 + 40j, -7.5 + 20j, 2.0 - 80j])
        ref = np.array([complex(mpmath.loggamma(mpmath.mpc(c))) for c in z])
        np.testing.assert_allclose(log_gamma(z, backend=backend), ref, rtol=1e-12)

    def test_poles(self, backend):
        for z in (0.0, -1.0, -7.0):
            with pytest.raises(PoleError):
                log_gamma(z, backend=backend)


@pytest.mark.parametrize("backend", BACKENDS)
class TestDigamma:
    def test_one(self, backend):
        assert digamma(1.0, backend=backend).real == pytest.approx(-EULER, rel=1e-14)

    def test_two(self, backend):
        assert digamma(2.0, backend=backend).real == pytest.approx(1.0 - EULER, rel=1e-14)

    def test_conjugate(self, backend):
        assert digamma(1 + 2j, backend=backend) == pytest.approx(
            np.conj(digamma(1 - 2j, backend=backend)), rel=1e-15)

    def test_against_mpmath(self, backend):
        z = annulus(300, 1.0, 200.0, seed=4)
        got = digamma(z, backend=backend)
        ref = np.array([complex(mpmath.digamma(mpmath.mpc(c))) for c in z])
        assert np.max(np.abs(got - ref) / np.abs(ref)) < 1e-12

    def test_recurrence_random(self, backend):
        z = annulus(10_000, 1.0, 100.0, seed=5)
        lhs = digamma(z + 1, backend=backend) - digamma(z, backend=backend) - 1.0 / z
        assert np.max(np.abs(lhs)) < 1e-12

    @pytest.mark.parametrize("x", [1e3, 1e6])
    def test_large_argument_law(self, backend, x):
        # psi(1 + x) - ln x = 1/(2x) + O(x^-2)
        val = digamma(1.0 + x, backend=backend).real - math.log(x)
        assert abs(val) < 1.0 / x

    def test_pole(self, backend):
        with pytest.raises(PoleError):
            digamma(-3.0, backend=backend)


@pytest.mark.parametrize("backend", BACKENDS)
class TestTrigamma:
    def test_one(self, backend):
        assert trigamma(1.0, backend=backend).real == pytest.approx(math.pi ** 2 / 6, rel=1e-14)

    def test_two(self, backend):
        assert trigamma(2.0, backend=backend).real == pytest.approx(math.pi ** 2 / 6 - 1, rel=1e-14)

    def test_finite_difference_of_digamma(self, backend):
        z, h = 3 + 1j, 1e-5
        fd = (digamma(z + h, backend=backend) - digamma(z - h, backend=backend)) / (2 * h)
        assert abs(trigamma(z, backend=backend) - fd) / abs(fd) < 1e-6

    def test_against_mpmath(self, backend):
        z = annulus(300, 1.0, 200.0, seed=6)
        got = trigamma(z, backend=backend)
        ref = np.array([complex(mpmath.polygamma(1, mpmath.mpc(c))) for c in z])
        assert np.max(np.abs(got - ref) / np.abs(ref)) < 1e-12


finite_complex = st.complex_numbers(min_magnitude=1.0, max_magnitude=1e3,
                                    allow_nan=False, allow_infinity=False).filter(
    # stay clear of the poles, where trigamma legitimately overflows
    lambda z: z.real > 0 or abs(z - round(z.real)) > 1e-6)


@settings(max_examples=200, deadline=None)
@given(finite_complex)
def test_conjugate_symmetry(z):
    for f in (log_gamma, digamma, trigamma):
        a, b = f(z), f(np.conj(z))
        assert abs(a - np.conj(b)) <= 1e-13 * max(1.0, abs(a))


def test_array_shape_preserved():
    z = np.full((2, 3), 2.5 + 0.5j)
    assert digamma(z).shape == (2, 3)
    assert np.ndim(digamma(2.5)) == 0


def test_non_finite_rejected():
    with pytest.raises(DomainError):
        digamma(complex(math.nan, 0))


class TestEntropyKernel:
    def test_pure_state(self):
        assert entropy_kernel(0.5) == 0.0

    def test_v_one(self):
        mpmath.mp.dps = 30
        v = mpmath.mpf(1)
        ref = (v + 0.5) * mpmath.log(v + 0.5) - (v - 0.5) * mpmath.log(v - 0.5)
        mpmath.mp.dps = 15
        assert entropy_kernel(1.0) == pytest.approx(float(ref), rel=1e-14)
        assert entropy_kernel(1.0) == pytest.approx(0.9547712524, abs=1e-10)

    def test_large_v(self):
        v = 1e6
        assert entropy_kernel(v) == pytest.approx(math.log(v) + 1.0, rel=1e-10)

    def test_below_half_is_domain_error(self):
        with pytest.raises(DomainError):
            entropy_kernel(0.49)

    def test_monotone_and_concave(self):
        v = np.linspace(0.5, 50.0, 5001)
        s = entropy_kernel(v)
        assert np.all(np.diff(s) > 0)
        assert np.all(np.diff(s, 2) < 0)

    # the textbook difference itself cancels badly beyond ~1e4
    @given(st.floats(min_value=0.5, max_value=1e4))
    def test_matches_textbook_form(self, v):
        x = v - 0.5
        textbook = (v + 0.5) * math.log(v + 0.5) - (x * math.log(x) if x > 0 else 0.0)
        assert entropy_kernel(v) == pytest.approx(textbook, rel=1e-9, abs=1e-12)
