import math

import mpmath
import numpy as np
import pytest

from dzeta.classical_zetas import (cusp_L, hurwitz_general, direct_L, hurwitz_zeta, lerch_phi, periodic_L,
                                   riemann_zeta, sequence_L)
from dzeta.coefficients import (Constant, Delta, Exponential, characters, delta_form,
                                delta_sequence)
from dzeta.core import DomainError, PoleError, RefusedError

from conftest import rel

CATALAN = 0.915965594177219015054603514932384110774


class TestRiemann:
    @pytest.mark.parametrize("s", [2, -3.5, 0.3 - 7j, -25.5 + 2j, 30])
    def test_against_mpmath(self, s):
        assert rel(riemann_zeta(s), mpmath.zeta(s)) < 1e-12

    def test_near_first_zero(self):
        s = 0.5 + 14.134725j
        assert abs(riemann_zeta(s) - complex(mpmath.zeta(s))) < 1e-14

    def test_special_values(self):
        assert riemann_zeta(2) == pytest.approx(math.pi ** 2 / 6, rel=1e-15)
        assert riemann_zeta(0) == pytest.approx(-0.5, rel=1e-15)
        assert abs(riemann_zeta(-2)) < 1e-15

    def test_pole(self):
        with pytest.raises(PoleError):
            riemann_zeta(1)

    def test_reflection_route_agrees_with_euler_maclaurin(self):
        for s in (-0.9 + 3j, -5.5 + 1j, -3 + 200j):
            val, err = hurwitz_general(s, 1.0, with_error=True)
            assert abs(val - complex(mpmath.zeta(s))) <= err
            assert rel(riemann_zeta(s), mpmath.zeta(s)) < 1e-12

    def test_euler_maclaurin_error_bounds(self):
        for s in (-10 - 60j, -1.5 + 9.6j, 0.5 + 100j, -0.3 + 50j, -2.5):
            val, err = hurwitz_general(s, 1.0, with_error=True)
            assert abs(val - complex(mpmath.zeta(s))) <= err

    def test_euler_maclaurin_reports_cancellation(self):
        # far left the head sum cancels badly; the error estimate must say so
        s = -21.5 + 1j
        val, err = hurwitz_general(s, 1.0, with_error=True)
        assert abs(val - riemann_zeta(s)) <= err
        assert err > abs(riemann_zeta(s))


class TestHurwitzAndLerch:
    @pytest.mark.parametrize("s, a", [(2.5, 0.3), (-1.5 + 2j, 0.75), (0.2 + 5j, 1.0)])
    def test_hurwitz(self, s, a):
        assert rel(hurwitz_zeta(s, a), mpmath.zeta(s, a)) < 1e-12

    def test_hurwitz_alpha_range(self):
        with pytest.raises(DomainError):
            hurwitz_zeta(2, 1.5)

    @pytest.mark.parametrize("s, b", [(2, 0.25), (0.5 + 1j, 0.1), (-2.5, 0.7), (1, 0.5)])
    def test_lerch(self, s, b):
        expect = mpmath.exp(2j * mpmath.pi * b) * mpmath.lerchphi(
            mpmath.exp(2j * mpmath.pi * b), s, 1)
        assert rel(lerch_phi(s, b), expect) < 1e-12

    def test_lerch_at_one_is_log2(self):
        assert lerch_phi(1, 0.5) == pytest.approx(-math.log(2), rel=1e-14)


class TestDirichletL:
    def test_chi4_values(self):
        chi = characters(4)[1]
        assert periodic_L(1, chi) == pytest.approx(math.pi / 4, rel=1e-14)
        assert periodic_L(2, chi) == pytest.approx(CATALAN, rel=1e-14)

    def test_chi4_negative_and_complex(self):
        chi = characters(4)[1]
        for s in (-2.5, 0.5 + 3j):
            expect = 4.0 ** -s * (mpmath.zeta(s, 0.25) - mpmath.zeta(s, 0.75))
            assert rel(periodic_L(s, chi), expect) < 1e-12

    def test_direct_partial_sum_agrees(self):
        chi = characters(5)[1]
        d = direct_L(4.0, chi, 4000)
        assert abs(d.value - periodic_L(4.0, chi)) <= d.error + 1e-15

    def test_direct_refuses_outside_absolute_convergence(self):
        with pytest.raises(RefusedError):
            direct_L(0.9, Constant(), 100)


class TestCuspL:
    def test_against_direct_sum(self):
        s = 12.0
        d = direct_L(s, delta_sequence(), 20000)
        assert rel(cusp_L(s, delta_form()), d.value) < 1e-12

    def test_functional_equation(self):
        # (2 pi)^{-s} Gamma(s) L(s) is symmetric under s -> 12 - s
        def lam(s):
            return (2 * math.pi) ** -s * complex(mpmath.gamma(s)) * cusp_L(s, delta_form())
        for s in (3.3 + 1j, 6 + 2.5j):
            assert rel(lam(s), lam(12 - s)) < 1e-11

    def test_central_sign(self):
        assert cusp_L(6.0, delta_form()).real > 0


class TestSequenceDispatch:
    def test_routes(self):
        assert sequence_L(3, Delta(2)).value == pytest.approx(1 / 8)
        assert sequence_L(3, Exponential(0.5)).value == pytest.approx(
            -0.75 * float(mpmath.zeta(3)), rel=1e-14)
        assert np.isfinite(sequence_L(0.5, Constant(2.0)).value)


class TestTinyPhase:
    def test_subnormal_phase_snaps_when_harmless(self):
        b = 2.225073858507203e-309
        assert lerch_phi(3.0, b) == pytest.approx(float(mpmath.zeta(3)), rel=1e-15)

    def test_subnormal_phase_refused_near_the_pole(self):
        with pytest.raises(DomainError):
            lerch_phi(1.05, 1e-300)
