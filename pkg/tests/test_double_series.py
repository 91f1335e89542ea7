import math

import mpmath
import numpy as np
import pytest

from dzeta.coefficients import (Constant, Delta, Exponential, LinearCombination, Periodic,
                                characters, delta_sequence)
from dzeta.core import EvalPoint, PoleError, RefusedError, TAIL_TOO_LARGE
from dzeta.double_series import (DoubleSeriesParams, L2_direct, L2_series, convergence_region,
                                 decompose_periodic, double_L_direct, evaluate_decomposition,
                                 single_series, zeta2_two_omega_direct)
from dzeta.fe_engine import L2_value, thm5_rhs

from conftest import rel

ZETA2_2_2 = 0.8117424252833539  # (zeta(2)^2 - zeta(4)) / 2
# mpmath: outer sum by Euler-Maclaurin over an inner Hurwitz zeta, 20 digits
EZ_15_05_2 = 0.87281847121762015006 - 0.14809608929785972324j
TWO_OMEGA_REF = 0.42389012042088315318 - 0.22011205530437352095j


def euler_zagier(s1, s2):
    return L2_direct((s1, s2), DoubleSeriesParams()).value


class TestRegion:
    def test_examples(self):
        kappa = Constant().kappa
        assert convergence_region((0, 2.5), kappa)
        assert not convergence_region((0, 2), kappa)
        assert not convergence_region((0.5, 1.0), kappa)
        assert not convergence_region((-2, 3), kappa)
        assert convergence_region((-0.5, 3), kappa)

    def test_cusp_region_is_shifted(self):
        k = delta_sequence().kappa
        assert not convergence_region((1, 6.4), k)
        assert convergence_region((1, 7.0), k)

    def test_direct_refuses_outside(self):
        with pytest.raises(RefusedError):
            L2_direct((0.5, 1.0), DoubleSeriesParams())


class TestEulerZagier:
    def test_frozen_value(self):
        assert euler_zagier(2, 2) == pytest.approx(ZETA2_2_2, rel=1e-13)

    def test_euler_identity(self):
        assert euler_zagier(1, 2) == pytest.approx(float(mpmath.zeta(3)), rel=1e-13)

    def test_harmonic_sum_identity(self):
        # zeta(s1, s2) + zeta(s2, s1) = zeta(s1) zeta(s2) - zeta(s1 + s2)
        s1, s2 = 2.5 + 1j, 3.1 - 0.5j
        lhs = euler_zagier(s1, s2) + euler_zagier(s2, s1)
        rhs = mpmath.zeta(s1) * mpmath.zeta(s2) - mpmath.zeta(s1 + s2)
        assert rel(lhs, rhs) < 1e-13

    def test_mpmath_double_sum(self):
        assert rel(euler_zagier(1.5 + 0.5j, 2.0), EZ_15_05_2) < 1e-13


class TestRowSeries:
    def test_single_row_matches_mpmath(self):
        s, alpha, b = EvalPoint(0.4 + 1j, 1.3), 0.35, 2.0 - 0.5j
        v, e = single_series(s, alpha, np.array([b]))
        expect = mpmath.nsum(lambda m: (alpha + m) ** -s.s1 * (alpha + m + b) ** -s.s2,
                             [0, mpmath.inf], method="euler-maclaurin")
        assert rel(v[0], expect) < 1e-12
        assert e[0] < 1e-12 * abs(v[0])

    def test_row_pole(self):
        with pytest.raises(PoleError):
            single_series((0.3, -0.3), 1.0, np.array([1.0]))

    def test_delta_reduces_to_row(self):
        s = (0.2, 1.5)
        v = L2_direct(s, DoubleSeriesParams(0.5, 1.5, Delta(2))).value
        w, _ = single_series(s, 0.5, np.array([3.0]))
        assert v == pytest.approx(w[0], rel=1e-15)


class TestStructure:
    def test_linearity(self):
        s = (0.7 - 0.2j, 2.4)
        a, b = Exponential(0.3), characters(5)[1]
        combo = LinearCombination(((2.0, a), (-1.5j, b)))
        p = lambda seq: L2_direct(s, DoubleSeriesParams(0.6, 1.2, seq)).value
        assert rel(p(combo), 2 * p(a) - 1.5j * p(b)) < 1e-13

    def test_homogeneity(self):
        # sum (m w1)^{-s1} (m w1 + n w2)^{-s2} = w1^{-s1-s2} zeta2(s; w2 / w1)
        s = EvalPoint(1.2 + 0.3j, 2.2)
        w1, w2 = 1.5 + 0.4j, 0.7 - 0.2j
        v = zeta2_two_omega_direct(s, w1, w2).value
        assert rel(v, TWO_OMEGA_REF) < 1e-13

    def test_decomposition_matches_residue_classes(self):
        s = (1.1 + 0.5j, 2.6)
        for a1, a2 in [(characters(4)[1], characters(4)[1]),
                       (characters(5)[2], characters(5)[1]),
                       (Periodic((1, 2, -1)), Periodic((0.5, 0, 1j)))]:
            direct = double_L_direct(s, a1, a2, 1.0, 1.3 + 0.2j).value
            dec = evaluate_decomposition(s, decompose_periodic(a1, a2, 1.0, 1.3 + 0.2j)).value
            assert rel(dec, direct) < 1e-12

    def test_truncation_status(self):
        p = DoubleSeriesParams(truncation=(100, 10))
        out = L2_direct((0, 3), p)
        assert out.status == TAIL_TOO_LARGE


class TestContinuation:
    @pytest.mark.parametrize("seq", [Constant(), Exponential(0.2), characters(4)[1]])
    def test_continued_route_matches_series_in_region(self, seq):
        s = (0.5 + 0.2j, 2.7)
        a = L2_series(s, 0.4, 1.1, seq).value
        b = thm5_rhs(s, 0.4, 1.1, seq).value
        assert rel(a, b) < 1e-11

    def test_continuation_outside_region(self):
        # the harmonic sum identity persists under continuation; both orders lie outside
        s1, s2 = 0.3 + 0.2j, 1.4
        lhs = (L2_value((s1, s2), 1.0, 1.0, Constant()).value
               + L2_value((s2, s1), 1.0, 1.0, Constant()).value)
        rhs = mpmath.zeta(s1) * mpmath.zeta(s2) - mpmath.zeta(s1 + s2)
        assert rel(lhs, rhs) < 1e-10
