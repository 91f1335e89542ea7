import math

import numpy as np
import pytest

from dzeta.quadrature import exp_sinh, tanh_sinh


class TestExpSinh:
    def test_gamma_integral(self):
        val, err, _ = exp_sinh(lambda t: t ** 1.5 * np.exp(-t))
        assert val == pytest.approx(math.gamma(2.5), rel=1e-13)

    def test_vector_valued_integrand(self):
        xs = np.array([0.5, 1.0, 3.0])
        val, _, _ = exp_sinh(lambda t: np.exp(-np.outer(t, xs)))
        assert np.allclose(val, 1 / xs, rtol=1e-13)

    def test_endpoint_singularity(self):
        val, _, _ = exp_sinh(lambda t: t ** -0.5 * np.exp(-t))
        assert val == pytest.approx(math.sqrt(math.pi), rel=1e-12)


class TestTanhSinh:
    def test_algebraic_endpoints(self):
        # Beta(0.3, 0.6); strong endpoint singularities need a wider cut
        val, _, _ = tanh_sinh(lambda x, da, db: da ** -0.7 * db ** -0.4, 0.0, 1.0,
                              tau_max=4.5)
        expect = math.gamma(0.3) * math.gamma(0.6) / math.gamma(0.9)
        assert val == pytest.approx(expect, rel=1e-11)

    def test_polynomial(self):
        val, _, _ = tanh_sinh(lambda x, da, db: x ** 3, -1.0, 2.0)
        assert val == pytest.approx((16 - 1) / 4, rel=1e-14)
