import cmath
import math

import mpmath
import numpy as np
import pytest

from dzeta.core import ConvergenceError, DomainError, PoleError
from dzeta.special_functions import (PsiEvalConfig, asymptotic_coefficients, choose_ray, gamma,
                                     kummer_residual, psi, psi_asymptotic, psi_polar, rgamma)

from conftest import rel


def mp_psi(a, c, x):
    return complex(mpmath.hyperu(a, c, x))


class TestGamma:
    @pytest.mark.parametrize("z", [0.5, 3.2 - 1j, -2.5 + 0.3j, 10 + 20j, -7.9])
    def test_against_mpmath(self, z):
        assert rel(gamma(z), mpmath.gamma(z)) < 1e-13

    def test_poles_raise(self):
        for n in (0, -1, -4):
            with pytest.raises(PoleError):
                gamma(n)

    def test_rgamma_vanishes_at_poles(self):
        assert rgamma(-3) == 0
        assert rgamma(2.5) == pytest.approx(1 / math.gamma(2.5))


class TestPsiValues:
    @pytest.mark.parametrize("a, c, x", [
        (0.5, 1.0, 2.0),
        (1.3 + 0.4j, -0.7 + 1j, 0.3 + 0.2j),
        (0.05, 2.5, 1.5 - 1j),
        (-2.3 + 0.5j, 0.4, 3.0 + 1j),
        (2.0, 4.5 - 2j, 40.0 + 5j),
        (1.0, 0.5, -3.0 + 0.5j),
        (0.7, 1.2, 2.0 * cmath.exp(3j)),
    ])
    def test_against_mpmath(self, a, c, x):
        out = psi(a, c, x)
        assert rel(out.value, mp_psi(a, c, x)) < 1e-12

    def test_random_points(self, rng):
        worst = 0.0
        for _ in range(40):
            a = complex(rng.uniform(-2, 3), rng.uniform(-2, 2))
            c = complex(rng.uniform(-2, 3), rng.uniform(-2, 2))
            x = rng.uniform(0.1, 20) * cmath.exp(1j * rng.uniform(-3.0, 3.0))
            worst = max(worst, rel(psi(a, c, x).value, mp_psi(a, c, x)))
        assert worst < 1e-11

    def test_exact_law_a_equals_one(self):
        # Psi(1, 1; x) = e^x E1(x)
        x = 1.7 + 0.4j
        assert rel(psi(1, 1, x).value, cmath.exp(x) * complex(mpmath.e1(x))) < 1e-13

    def test_exact_law_a_equals_c(self):
        # Psi(a, a + 1; x) = x^{-a}
        a, x = 0.6 - 0.8j, 2.2 + 1.1j
        assert rel(psi(a, a + 1, x).value, x ** -a) < 1e-13


class TestPsiAsymptotics:
    def test_series_matches_at_large_argument(self):
        a, c, x = 0.8 + 0.2j, 1.5, 60.0 + 10j
        val, err = psi_asymptotic(a, c, x, 30, return_error=True)
        assert rel(val, mp_psi(a, c, x)) < 1e-13
        assert err < 1e-10 * abs(val)

    def test_coefficients_start_at_one(self):
        coeffs = asymptotic_coefficients(0.5, 2.0, 4)
        # (-1)^k (a)_k (a - c + 1)_k / k!, a - c + 1 = -0.5
        assert np.allclose(coeffs, [1, 0.25, 0.5 * 1.5 * -0.5 * 0.5 / 2,
                                    -0.5 * 1.5 * 2.5 * -0.5 * 0.5 * 1.5 / 6])

    def test_polar_beyond_principal_sheet(self):
        # arg x = 1.2 pi lies off the principal branch; compare with mpmath via continuation
        a, c, r, theta = 0.9, 1.3, 2.0, 1.2 * math.pi
        vals, _, _ = psi_polar(a, c, np.array([r]), theta)
        # Psi(a, c; x e^{2 pi i}) relation through the Kummer connection
        xp = r * cmath.exp(1j * (theta - 2 * math.pi))
        k = cmath.exp(-2j * math.pi * c)
        g = complex(mpmath.gamma(1 - c) / mpmath.gamma(a - c + 1))
        m1 = complex(mpmath.hyp1f1(a, c, xp))
        expect = k * mp_psi(a, c, xp) + (1 - k) * g * m1
        assert rel(vals[0], expect) < 1e-10


class TestKummer:
    @pytest.mark.parametrize("a, c, x", [(0.4, 0.3, 1.0), (1 + 1j, 2.7, 0.5 - 0.2j),
                                         (-0.8, -1.4 + 0.5j, 6.0)])
    def test_transformation(self, a, c, x):
        assert kummer_residual(a, c, x) < 1e-12 * abs(psi(a, c, x).value)


class TestRouting:
    def test_ray_keeps_integrand_decaying(self):
        # rays reach |arg x| < 3 pi / 2 - 1.1 on continued sheets
        for theta in np.linspace(-3.6, 3.6, 31):
            phi = choose_ray(theta)
            assert abs(phi + theta) < math.pi / 2

    def test_refuses_zero_and_far_sheets(self):
        with pytest.raises(DomainError):
            psi(1, 1, 0)
        with pytest.raises(DomainError):
            psi_polar(1, 1, np.array([1.0]), 1.6 * math.pi)

    def test_convergence_error_is_reported(self):
        cfg = PsiEvalConfig(max_refinements=0, tol=1e-16, crossover_magnitude=math.inf)
        with pytest.raises(ConvergenceError):
            psi(0.3, 5.0 + 30j, 0.01 + 0j, cfg)
