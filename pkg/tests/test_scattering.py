import math

import numpy as np
import pytest
from scipy.integrate import quad

from qmsd import (CONST, PhysicalSystem, ScatteringParams, ValidationError,
                  derive_scales, dsf, isf, isf_phase, pair_correlation_self)

ANGSTROM_INV = 1e10


@pytest.fixture(scope="module")
def xe():
    sys = PhysicalSystem.from_user_units(131.0, 105.0, 256.0, 10)
    s = derive_scales(sys)
    return ScatteringParams(v_T=s.v_T, D_q=s.D_q, q=1.0 * ANGSTROM_INV)


class TestPairCorrelation:
    def test_normalized(self, xe):
        t = 5e-14
        w = 40 * xe.v_T * t
        re, _ = quad(lambda x: pair_correlation_self(xe, x, t).real,
                     -w, w, limit=400)
        im, _ = quad(lambda x: pair_correlation_self(xe, x, t).imag,
                     -w, w, limit=400)
        assert re == pytest.approx(1.0, abs=1e-8)
        assert im == pytest.approx(0.0, abs=1e-8)

    def test_second_moment_is_complex_width(self, xe):
        t = 5e-14
        delta2 = xe.v_T**2 * t**2 - 2j * xe.D_q * t
        w = 40 * xe.v_T * t
        # epsabs=0: the integral is ~1e-23, far below quad's default
        # absolute tolerance
        re, _ = quad(lambda x: x * x * pair_correlation_self(xe, x, t).real,
                     -w, w, limit=2000, epsabs=0, epsrel=1e-11)
        im, _ = quad(lambda x: x * x * pair_correlation_self(xe, x, t).imag,
                     -w, w, limit=2000, epsabs=0, epsrel=1e-11)
        assert re == pytest.approx(delta2.real, rel=1e-8, abs=0)
        assert im == pytest.approx(delta2.imag, rel=1e-8, abs=0)

    def test_even_in_x(self, xe):
        t = 3e-14
        x = 2e-10
        assert pair_correlation_self(xe, x, t) == pair_correlation_self(
            xe, -x, t)

    def test_nonpositive_time_rejected(self, xe):
        for t in (0.0, -1e-14):
            with pytest.raises(ValidationError):
                pair_correlation_self(xe, 0.0, t)

    def test_vectorized(self, xe):
        out = pair_correlation_self(xe, np.linspace(-1e-9, 1e-9, 7), 1e-14)
        assert out.shape == (7,)
        assert out.dtype == complex


class TestDsf:
    def test_peak_at_recoil_shift(self, xe):
        # Xe at q = 1/angstrom: recoil about 0.016 meV
        omega0 = xe.D_q * xe.q**2
        meV = omega0 * CONST.hbar / 1.602176634e-19 * 1e3
        assert meV == pytest.approx(0.016, rel=0.03, abs=0)
        grid = omega0 + np.linspace(-1, 1, 201) * 1e9
        vals = dsf(xe, grid)
        assert np.argmax(vals) == 100

    def test_normalized_in_omega(self, xe):
        sigma = xe.v_T * abs(xe.q)
        omega0 = xe.D_q * xe.q**2
        val, _ = quad(lambda w: dsf(xe, w), omega0 - 40 * sigma,
                      omega0 + 40 * sigma, limit=400)
        assert val == pytest.approx(1.0, rel=1e-8, abs=0)

    def test_fwhm(self, xe):
        sigma = xe.v_T * abs(xe.q)
        omega0 = xe.D_q * xe.q**2
        half = dsf(xe, omega0) / 2
        fwhm_expected = 2 * math.sqrt(2 * math.log(2)) * sigma
        assert dsf(xe, omega0 + fwhm_expected / 2) == pytest.approx(
            half, rel=1e-10, abs=0)

    def test_zero_q_rejected(self):
        p = ScatteringParams(v_T=100.0, D_q=1e-9, q=0.0)
        with pytest.raises(ValidationError):
            dsf(p, 0.0)


class TestIsf:
    def test_amplitude_and_phase(self, xe):
        t = 2e-14
        val = isf(xe, t)
        amp_expected = math.exp(-xe.v_T**2 * t**2 * xe.q**2 / 4) / math.sqrt(
            2 * math.pi)
        assert abs(val) == pytest.approx(amp_expected, rel=1e-12, abs=0)
        assert np.angle(val) == pytest.approx(isf_phase(xe, t), rel=1e-12, abs=0)

    def test_phase_linear_in_time(self, xe):
        ts = np.linspace(0, 1e-13, 9)
        ph = isf_phase(xe, ts)
        np.testing.assert_allclose(np.diff(ph, 2), 0.0, atol=1e-16)
        assert ph[1] == pytest.approx(xe.D_q * ts[1] * xe.q**2 / 2, rel=1e-14, abs=0)

    def test_value_at_zero(self, xe):
        assert isf(xe, 0.0) == complex(1 / math.sqrt(2 * math.pi))

    def test_negative_time_rejected(self, xe):
        with pytest.raises(ValidationError):
            isf(xe, -1e-15)
        with pytest.raises(ValidationError):
            isf_phase(xe, -1e-15)


class TestFourierConsistency:
    """The three observables are one Gaussian seen through two
    transforms; check both links by direct quadrature."""

    def test_pair_correlation_to_isf(self, xe):
        # int Gs(x, t) e^{i q x} dx = 2 pi isf(t)^2; pick q so the
        # amplitude is O(1) rather than exponentially small
        t = 3e-14
        q = 1.5 / (xe.v_T * t)
        p = ScatteringParams(v_T=xe.v_T, D_q=xe.D_q, q=q)
        w = 40 * xe.v_T * t
        f = lambda x: pair_correlation_self(p, x, t) * np.exp(1j * q * x)
        re, _ = quad(lambda x: f(x).real, -w, w, limit=2000,
                     epsabs=0, epsrel=1e-11)
        im, _ = quad(lambda x: f(x).imag, -w, w, limit=2000,
                     epsabs=0, epsrel=1e-11)
        target = 2 * math.pi * isf(p, t) ** 2
        assert abs(target) > 0.1  # the check is not vacuous
        assert re == pytest.approx(target.real, rel=1e-8, abs=0)
        assert im == pytest.approx(target.imag, rel=1e-8, abs=0)

    def test_isf_to_dsf(self, xe):
        # (1/2 pi) int 2 pi isf(|t|)^2 e^{-i omega t} dt = dsf(omega),
        # extending to t < 0 by conjugation (even amplitude, odd phase)
        omega0 = xe.D_q * xe.q**2
        sigma = xe.v_T * abs(xe.q)
        T = 25 / sigma
        for omega in (omega0, omega0 + sigma, omega0 - 2 * sigma):

            def f(t):
                val = isf(xe, abs(t)) ** 2
                if t < 0:
                    val = np.conj(val)
                return (val * np.exp(-1j * omega * t)).real

            ref, _ = quad(f, -T, T, limit=2000, epsabs=0, epsrel=1e-11)
            assert ref == pytest.approx(dsf(xe, omega), rel=1e-8, abs=0)


def test_params_validation():
    with pytest.raises(ValidationError):
        ScatteringParams(v_T=0.0, D_q=1e-9, q=1e10)
    with pytest.raises(ValidationError):
        ScatteringParams(v_T=100.0, D_q=-1e-9, q=1e10)
