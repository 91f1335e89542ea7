import cmath
import math

import pytest

from dzeta.core import (EvalPoint, PoleError, RefusedError, SeriesValue, as_point, cpow,
                        polar_pow)


class TestEvalPoint:
    def test_coerces_to_complex(self):
        p = EvalPoint(1, 2.5)
        assert isinstance(p.s1, complex) and p.sigma2 == 2.5

    def test_reflection_is_an_involution(self):
        p = EvalPoint(0.3 + 1j, -2 - 0.5j)
        back = p.reflected().reflected()
        assert back.s1 == pytest.approx(p.s1) and back.s2 == pytest.approx(p.s2)
        assert p.reflected().total == 2 - p.total

    def test_as_point_accepts_tuples(self):
        assert as_point((1, 2)) == EvalPoint(1, 2)


class TestPowers:
    def test_cpow_principal_branch(self):
        assert cpow(-1 + 0j, 0.5) == pytest.approx(1j)

    def test_cpow_zero_base(self):
        assert cpow(0j, 2 + 0j) == 0
        with pytest.raises(PoleError):
            cpow(0j, -1 + 0j)

    def test_polar_pow_keeps_given_argument(self):
        # arg 3 pi / 2 is not reduced to -pi / 2
        v = polar_pow(1.0, 1.5 * math.pi, 0.5)
        assert v == pytest.approx(cmath.exp(0.75j * math.pi))


class TestSeriesValue:
    def test_status_flag(self):
        assert SeriesValue(1.0).ok
        assert not SeriesValue(1.0, status="tail-too-large").ok

    def test_refused_error_keeps_reason(self):
        err = RefusedError("Re s2 > 1 fails")
        assert err.reason == "Re s2 > 1 fails"
