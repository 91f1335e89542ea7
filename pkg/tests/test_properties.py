import cmath
import json
import math

import numpy as np
from hypothesis import given, settings, strategies as st

from dzeta.classical_zetas import hurwitz_general, hurwitz_zeta, riemann_zeta
from dzeta.coefficients import (Exponential, Periodic, divisors, finite_fourier,
                                inverse_fourier, parity)
from dzeta.cli import dumps
from dzeta.core import EvalPoint
from dzeta.double_series import DoubleSeriesParams, L2_direct
from dzeta.special_functions import kummer_residual, psi

FAST = settings(max_examples=25, deadline=None)
reals = st.floats(-2, 3, allow_nan=False)
complexes = st.builds(complex, reals, st.floats(-2, 2, allow_nan=False))


class TestPsiProperties:
    @FAST
    @given(a=complexes, c=complexes, r=st.floats(0.2, 30), th=st.floats(-2.9, 2.9))
    def test_kummer_transformation(self, a, c, r, th):
        x = r * cmath.exp(1j * th)
        assert kummer_residual(a, c, x) <= 1e-9 * max(abs(psi(a, c, x).value), 1e-300)

    @FAST
    @given(a=complexes, c=complexes, r=st.floats(0.2, 30))
    def test_real_conjugation(self, a, c, r):
        # Psi(conj a, conj c; r) = conj Psi(a, c; r) for real r > 0
        v = psi(a, c, r).value
        w = psi(a.conjugate(), c.conjugate(), r).value
        assert abs(w - v.conjugate()) <= 1e-10 * max(abs(v), 1e-300)


class TestZetaProperties:
    @FAST
    @given(s=st.builds(complex, st.floats(1.5, 6), st.floats(-20, 20)),
           q=st.floats(0.05, 1.0))
    def test_hurwitz_shift(self, s, q):
        # zeta(s, q) = q^{-s} + zeta(s, q + 1)
        lhs = hurwitz_zeta(s, q)
        rhs = q ** -s + hurwitz_general(s, q + 1)
        assert abs(lhs - rhs) <= 1e-12 * abs(lhs)

    @FAST
    @given(s=st.builds(complex, st.floats(-3, 4), st.floats(-20, 20)))
    def test_conjugate_symmetry(self, s):
        if abs(s - 1) < 0.05:
            return
        v = riemann_zeta(s)
        assert abs(riemann_zeta(s.conjugate()) - v.conjugate()) <= 1e-12 * max(abs(v), 1e-3)


class TestCoefficientProperties:
    @FAST
    @given(st.lists(st.floats(-5, 5), min_size=2, max_size=9))
    def test_fourier_roundtrip(self, table):
        back = inverse_fourier(finite_fourier(table))
        assert np.allclose(back, table, atol=1e-12)

    @FAST
    @given(st.lists(st.floats(-5, 5), min_size=2, max_size=9))
    def test_symmetrization_has_parity(self, table):
        f = len(table)
        refl = [table[(f - m - 1) % f] for m in range(1, f + 1)]
        even = [(x + y) / 2 for x, y in zip(table, refl)]
        odd = [(x - y) / 2 for x, y in zip(table, refl)]
        assert parity(even) == 1 or not any(even)
        assert parity(odd) == -1 or np.allclose(odd, 0)

    @FAST
    @given(st.integers(1, 5000))
    def test_divisors(self, k):
        ds = divisors(k)
        assert all(k % d == 0 for d in ds) and list(ds) == sorted(set(ds))
        assert len(ds) == sum(1 for d in range(1, k + 1) if k % d == 0)


class TestDoubleSeriesProperties:
    @FAST
    @given(s1=st.floats(0.2, 3), s2=st.floats(2.1, 4), alpha=st.floats(0.1, 1.0),
           beta=st.floats(0, 1))
    def test_conjugation(self, s1, s2, alpha, beta):
        # real s, alpha, omega: conj L2(beta) = L2(-beta)
        s = EvalPoint(s1, s2)
        a = L2_direct(s, DoubleSeriesParams(alpha, 1.0, Exponential(beta))).value
        b = L2_direct(s, DoubleSeriesParams(alpha, 1.0, Exponential(-beta))).value
        assert abs(a.conjugate() - b) <= 1e-12 * max(abs(a), 1e-300)

    @FAST
    @given(s1=st.floats(0.5, 2), s2=st.floats(2.1, 3), alpha=st.floats(0.1, 0.9),
           c=st.floats(-3, 3))
    def test_periodic_splits_into_exponentials(self, s1, s2, alpha, c):
        # the table (1, c) is (1 + c)/2 + (c - 1)/2 (-1)^n
        s = EvalPoint(s1, s2)
        val = lambda seq: L2_direct(s, DoubleSeriesParams(alpha, 1.0, seq)).value
        lhs = val(Periodic((1, c)))
        rhs = (c - 1) / 2 * val(Exponential(0.5)) + (1 + c) / 2 * val(Exponential(0.0))
        assert abs(lhs - rhs) <= 1e-12 * max(abs(val(Exponential(0.0))), 1e-300)


class TestSerialization:
    @FAST
    @given(st.recursive(st.one_of(st.floats(allow_nan=False, allow_infinity=False),
                                  st.integers(-10 ** 6, 10 ** 6), st.text(max_size=5),
                                  st.booleans()),
                        lambda kids: st.lists(kids, max_size=3)
                        | st.dictionaries(st.text(max_size=3), kids, max_size=3),
                        max_leaves=10))
    def test_dumps_is_valid_json_and_stable(self, obj):
        text = dumps(obj)
        assert dumps(json.loads(text)) == text
