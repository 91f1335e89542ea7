"""One-variable zeta and L-functions with continuation to the whole plane.

Euler-Maclaurin summation is the single continuation engine: Hurwitz zeta
directly, the Lerch series phi(s, alpha) with the oscillating phase kept in
the summand, periodic L-functions through the Hurwitz decomposition, and
cusp-form L-functions through the completed integral split at y = 1.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .coefficients import (Constant, CoefficientSequence, CuspForm, CuspFormSequence, Delta,
                           Explicit, Exponential, LinearCombination, Periodic)
from .core import DomainError, PoleError, RefusedError, SeriesValue
from .quadrature import exp_sinh
from .special_functions import gamma, rgamma

POLE_DISTANCE = 1e-6
TWO_PI = 2.0 * math.pi


@lru_cache(maxsize=1)
def _bernoulli_ratios(kmax: int = 60) -> tuple[float, ...]:
    """B_{2k} / (2k)! for k = 1..kmax, from exact rational Bernoulli numbers."""
    # Akiyama-Tanigawa
    n_max = 2 * kmax
    a = [Fraction(0)] * (n_max + 1)
    bern = []
    for m in range(n_max + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        bern.append(a[0])
    # this recursion yields B_1 = +1/2; even indices are unaffected
    return tuple(float(bern[2 * k] / math.factorial(2 * k)) for k in range(1, kmax + 1))


def _check_pole(s: complex, what: str):
    if abs(s - 1) < POLE_DISTANCE:
        raise PoleError(f"{what} has a pole at s = 1 (requested s = {s})", residue=1.0)


def _pow_array(base: np.ndarray, s: complex) -> np.ndarray:
    return np.exp(-s * np.log(base))


def hurwitz_general(s, q: float, drop_pole: bool = False, with_error: bool = False,
                    method: str = "auto", cutoff: int | None = None):
    """zeta(s, q) = sum_{n >= 0} (n + q)^{-s} for any real q > 0.

    With ``drop_pole`` the value of zeta(s, q) - 1/(s - 1) is returned,
    which is regular at s = 1. ``method="euler-maclaurin"`` disables the
    reflection used for Re s < -0.5, so that functional-equation checks
    compare genuinely independent routes.
    """
    s = complex(s)
    q = float(q)
    if q <= 0:
        raise DomainError("shift q must be positive")
    if not drop_pole:
        _check_pole(s, "zeta(s, q)")
        if s.real < -0.5 and not with_error and method == "auto" and cutoff is None:
            # reflect at the fractional shift, then peel off the short head
            k = math.ceil(q) - 1
            q0 = q - k
            base = riemann_zeta_reflected(s) if q0 == 1 else _hurwitz_reflected(s, q0)
            if k == 0:
                return base
            return base - complex(np.sum(_pow_array(q0 + np.arange(k, dtype=float), s)))
    if s.real < -1:
        # the head terms grow here, so keep it as short as the Bernoulli tail allows
        target = max(10.0, (abs(s) + 60.0) / TWO_PI)
    else:
        target = max(abs(s) + 25.0, 30.0)
    n_head = cutoff if cutoff is not None else max(0, math.ceil(target - q))
    head = 0j
    head_abs = 0.0
    if n_head:
        terms = _pow_array(q + np.arange(n_head, dtype=float), s)
        head = complex(np.sum(terms))
        head_abs = float(np.sum(np.abs(terms)))
    x = q + n_head
    lx = math.log(x)
    xs = cmath.exp(-s * lx)
    if drop_pole:
        u = (1 - s) * lx
        if abs(u) < 1e-8:
            integral = -lx * (1 + u / 2)
        else:
            integral = (cmath.exp(u) - 1) / (s - 1)
    else:
        integral = x * xs / (s - 1)
    total = head + integral + 0.5 * xs
    poch = s  # (s)_{2k-1}
    power = xs / x
    last = 0.0
    for k, b in enumerate(_bernoulli_ratios(), start=1):
        term = b * poch * power
        if k > 1 and abs(term) > last:
            # asymptotic series: stop at the smallest term
            break
        total += term
        last = abs(term)
        if last <= 1e-17 * abs(total):
            break
        poch *= (s + 2 * k - 1) * (s + 2 * k)
        power /= x * x
    if with_error:
        # rounding in the head grows with its length
        return total, last + 4.4e-16 * (n_head + 2) * (head_abs + abs(integral))
    return total


def riemann_zeta(s, method: str = "auto") -> complex:
    """zeta(s) for all complex s != 1."""
    s = complex(s)
    _check_pole(s, "zeta(s)")
    if s.real < -20 and method == "auto":
        # reflection keeps Euler-Maclaurin on the well-conditioned side
        return riemann_zeta_reflected(s)
    return hurwitz_general(s, 1.0, method=method)


def riemann_zeta_reflected(s: complex) -> complex:
    w = 1 - s
    return (2 ** s * math.pi ** (s - 1) * cmath.sin(math.pi * s / 2) * gamma(w)
            * hurwitz_general(w, 1.0))


def hurwitz_zeta(s, alpha: float, method: str = "auto") -> complex:
    """zeta(s, alpha) = sum_{n >= 0} (n + alpha)^{-s} for 0 < alpha <= 1."""
    if not 0 < alpha <= 1:
        raise DomainError("alpha must lie in (0, 1]")
    return hurwitz_general(s, alpha, method=method)


MIN_PHASE = 1e-200


def _reduce_phase(alpha: float) -> float:
    """Representative of alpha mod 1 in [-1/2, 1/2)."""
    r = math.fmod(alpha, 1.0)
    if r >= 0.5:
        r -= 1.0
    elif r < -0.5:
        r += 1.0
    return r


def lerch_tail(s, alpha: float, start: int, with_error: bool = False, method: str = "auto"):
    """sum_{n >= start} e^{2 pi i n alpha} n^{-s}, continued in s.

    For alpha not an integer the Euler-Maclaurin corrections converge
    geometrically (ratio (alpha mod 1)^2 <= 1/4) and the remainder integral
    is rotated onto the vertical ray where e^{2 pi i alpha x} decays.
    """
    s = complex(s)
    if start < 1:
        raise DomainError("start must be >= 1")
    r = _reduce_phase(alpha)
    if 0 < abs(r) < MIN_PHASE:
        # the contour scale 1/|r| overflows; the sum differs from r = 0 by about
        # |Gamma(1 - s)| (2 pi |r|)^{Re s - 1}, so snap only when that is negligible
        if s.real <= 1 or (s.real - 1) * math.log(TWO_PI * abs(r)) > math.log(1e-17):
            raise DomainError(f"phase {alpha!r} is too close to an integer at s = {s}")
        r = 0.0
    if r == 0:
        return hurwitz_general(s, float(start), with_error=with_error, method=method)
    if s.real < 0 and start <= 64 and method == "auto":
        n = np.arange(1, start, dtype=float)
        head = complex(np.sum(np.exp(1j * TWO_PI * np.mod(alpha * n, 1.0)) * _pow_array(n, s)))
        val = _lerch_reflected(s, alpha) - head
        if with_error:
            return val, 1e-15 * (abs(val) + abs(head))
        return val
    lam = TWO_PI * r
    sgn = 1.0 if lam > 0 else -1.0
    x0 = max(start, math.ceil(abs(s) / 2 + 12))
    head = 0j
    if x0 > start:
        n = np.arange(start, x0, dtype=float)
        head = complex(np.sum(np.exp(1j * TWO_PI * np.mod(alpha * n, 1.0)) * _pow_array(n, s)))
    x = float(x0)
    phase0 = cmath.exp(1j * TWO_PI * ((alpha * x0) % 1.0))

    def integrand(t):
        return np.exp(-abs(lam) * t - s * np.log(x + 1j * sgn * t))

    ival, ierr, _ = exp_sinh(integrand, scale=1.0 / abs(lam), tol=1e-15, tau_min=-4.5,
                             tau_max=4.0)
    integral = 1j * sgn * phase0 * complex(ival)
    fx = phase0 * cmath.exp(-s * math.log(x))
    total = head + integral + 0.5 * fx
    # derivative pieces D_r = (-1)^r (s)_r x^{-s-r} e^{i lam x}
    rmax = 2 * len(_bernoulli_ratios()) - 1
    d = np.empty(rmax + 1, dtype=complex)
    d[0] = fx
    for j in range(1, rmax + 1):
        d[j] = -d[j - 1] * (s + j - 1) / x
    il = 1j * lam
    last = 0.0
    for k, b in enumerate(_bernoulli_ratios(), start=1):
        j = 2 * k - 1
        deriv = 0j
        coef = 1.0
        for rr in range(j + 1):
            deriv += coef * il ** (j - rr) * d[rr]
            coef = coef * (j - rr) / (rr + 1)
        term = -b * deriv
        total += term
        last = abs(term)
        if last <= 1e-17 * abs(total):
            break
    if with_error:
        return total, last + float(abs(ierr)) + 1e-16 * abs(head)
    return total


def lerch_phi(s, alpha: float, method: str = "auto") -> complex:
    """phi(s, alpha) = sum_{n >= 1} e^{2 pi i n alpha} n^{-s}."""
    s = complex(s)
    if float(alpha).is_integer():
        return riemann_zeta(s, method=method)
    if s.real < 0 and method == "auto":
        return _lerch_reflected(s, alpha)
    return lerch_tail(s, alpha, 1, method=method)


def _lerch_reflected(s: complex, alpha: float) -> complex:
    # phi(s, a) = Gamma(1-s) (2 pi)^{s-1} [i^{1-s} zeta(1-s, a) + i^{s-1} zeta(1-s, 1-a)]
    a = alpha - math.floor(alpha)
    w = 1 - s
    rot = cmath.exp(0.5j * math.pi * w)
    return (gamma(w) * cmath.exp(-w * math.log(TWO_PI))
            * (rot * hurwitz_general(w, a) + hurwitz_general(w, 1 - a) / rot))


def _hurwitz_reflected(s: complex, q: float) -> complex:
    # zeta(s, q) = Gamma(1-s) (2 pi)^{s-1} [e^{-i pi w/2} phi(w, q) + e^{i pi w/2} phi(w, -q)]
    w = 1 - s
    rot = cmath.exp(0.5j * math.pi * w)
    return (gamma(w) * cmath.exp(-w * math.log(TWO_PI))
            * (lerch_tail(w, q, 1) / rot + rot * lerch_tail(w, -q, 1)))


def periodic_L(s, seq: Periodic) -> complex:
    """L(s, a) = f^{-s} sum_{nu=1}^f a(nu) zeta(s, nu/f)."""
    s = complex(s)
    f = seq.period
    table = seq.array()
    mean_zero = abs(complex(np.sum(table))) <= 1e-14 * max(1.0, float(np.max(np.abs(table))))
    if not mean_zero:
        _check_pole(s, "L(s, a) with nonzero mean")
    # the poles cancel; drop them only near s = 1 so the reflection route stays available
    drop = mean_zero and abs(s - 1) < 0.5
    total = 0j
    for nu in range(1, f + 1):
        a = table[nu - 1]
        if a != 0:
            total += a * hurwitz_general(s, nu / f, drop_pole=drop)
    return cmath.exp(-s * math.log(f)) * total


def _completed_integrand_terms(form: CuspForm, s: complex):
    root_n = math.sqrt(form.level)
    n_terms = int(root_n * (45.0 + form.weight) / TWO_PI) + 8
    a = form.a(n_terms).astype(complex)
    at = form.a_tilde(n_terms)
    n = np.arange(1, n_terms + 1, dtype=float)
    sign = -1.0 if (form.weight // 2) % 2 else 1.0
    k = form.weight

    def integrand(t):
        y = 1.0 + t
        q = np.exp(-TWO_PI * np.outer(y, n) / root_n)
        fy = q @ a
        fty = q @ at
        ly = np.log(y)
        return fy * np.exp((s - 1) * ly) + sign * fty * np.exp((k - s - 1) * ly)

    return integrand


def cusp_completed(s, form: CuspForm, with_error: bool = False):
    """Lambda(s) = int_0^inf f(i y / sqrt(N)) y^{s-1} dy via the split at y = 1."""
    s = complex(s)
    integrand = _completed_integrand_terms(form, s)
    val, err, _ = exp_sinh(integrand, scale=1.0, tol=1e-15, tau_min=-5.0, tau_max=3.5,
                           max_levels=8)
    if with_error:
        return complex(val), float(np.abs(err))
    return complex(val)


def cusp_L(s, form: CuspForm | CuspFormSequence) -> complex:
    """Entire continuation L(s, f) = (2 pi / sqrt N)^s Lambda(s) / Gamma(s)."""
    if isinstance(form, CuspFormSequence):
        form = form.form
    s = complex(s)
    lam = cusp_completed(s, form)
    return cmath.exp(s * math.log(TWO_PI / math.sqrt(form.level))) * lam * rgamma(s)


def direct_L(s, seq: CoefficientSequence, n_terms: int) -> SeriesValue:
    """Partial sum of sum a(n) n^{-s} with the tail bounded by the growth bound of a(n)."""
    s = complex(s)
    p = seq.growth_exponent
    if s.real <= p + 1:
        raise RefusedError(f"Re s = {s.real:g} <= (kappa+1)/2 + eps = {p + 1:g}: "
                           "Dirichlet series not absolutely convergent")
    n = np.arange(1, n_terms + 1, dtype=float)
    val = complex(np.sum(seq.values(n.astype(np.int64)) * _pow_array(n, s)))
    # sum_{n > N} C n^{p - sigma} <= C N^{p - sigma + 1} / (sigma - p - 1), times d(n) slack
    tail = seq.bound_constant * n_terms ** (p - s.real + 1) / (s.real - p - 1)
    tail *= max(1.0, 2.0 * math.log(n_terms))
    return SeriesValue(val, tail, n_terms, route="direct")


def sequence_L(s, seq: CoefficientSequence) -> SeriesValue:
    """L(s, A) dispatched on the sequence kind; refuses when no continuation exists."""
    s = complex(s)
    if isinstance(seq, Delta):
        return SeriesValue(cmath.exp(-s * math.log(seq.n0)), 0.0, 1, route="delta")
    if isinstance(seq, Constant):
        return SeriesValue(seq.value * riemann_zeta(s), 1e-15, route="riemann_zeta")
    if isinstance(seq, Exponential):
        return SeriesValue(lerch_phi(s, seq.beta), 1e-15, route="lerch_phi")
    if isinstance(seq, Periodic):
        return SeriesValue(periodic_L(s, seq), 1e-15, route="periodic_L")
    if isinstance(seq, CuspFormSequence):
        return SeriesValue(cusp_L(s, seq.form), 1e-13, route="cusp_L")
    if isinstance(seq, LinearCombination):
        parts = [(c, sequence_L(s, sub)) for c, sub in seq.terms]
        return SeriesValue(sum(c * p.value for c, p in parts),
                           sum(abs(c) * p.error for c, p in parts),
                           route="combination")
    p = seq.growth_exponent
    if s.real > p + 1:
        return direct_L(s, seq, 20000)
    raise RefusedError(f"Re s = {s.real:g} <= (kappa+1)/2 + eps = {p + 1:g} and sequence "
                       f"{seq.kind!r} has no continuation strategy")


def dirichlet_tail(seq: CoefficientSequence, z, start: int, with_error: bool = False):
    """sum_{n >= start} a(n) n^{-z}, analytically continued in z.

    With ``with_error`` a pair (value, absolute error estimate) is returned.
    """
    z = complex(z)
    err = None
    if start <= 1:
        res = sequence_L(z, seq)
        val, err = res.value, res.error + 1e-15 * abs(res.value)
    elif isinstance(seq, Delta):
        val = cmath.exp(-z * math.log(seq.n0)) if seq.n0 >= start else 0j
        err = 0.0
    elif isinstance(seq, Constant):
        val = seq.value * hurwitz_general(z, float(start))
    elif isinstance(seq, Exponential):
        val = lerch_tail(z, seq.beta, start)
    elif isinstance(seq, Periodic):
        f = seq.period
        total, scale = 0j, 0.0
        for nu in range(1, f + 1):
            a = seq.at(nu)
            if a == 0:
                continue
            first = start + ((nu - start) % f)
            part = a * hurwitz_general(z, first / f)
            total += part
            scale += abs(part)
        factor = cmath.exp(-z * math.log(f))
        val, err = factor * total, 1e-15 * abs(factor) * scale
    elif isinstance(seq, LinearCombination):
        parts = [(c, dirichlet_tail(sub, z, start, True)) for c, sub in seq.terms]
        val = sum(c * v for c, (v, _) in parts)
        err = sum(abs(c) * e for c, (_, e) in parts)
    else:
        excess = z.real - seq.growth_exponent - 1
        if excess >= 9:
            # the tail is tiny against L(z); sum it directly instead of cancelling
            stop = int(start * 10 ** (17.0 / excess)) + 1
            n = np.arange(start, stop + 1)
            terms = seq.values(n) * _pow_array(n.astype(float), z)
            val = complex(np.sum(terms))
            err = 1e-16 * float(np.sum(np.abs(terms))) + 1e-17 * abs(terms[0])
        else:
            head = np.arange(1, start, dtype=float)
            terms = seq.values(head.astype(np.int64)) * _pow_array(head, z)
            res = sequence_L(z, seq)
            val = res.value - complex(np.sum(terms))
            err = res.error + 1e-15 * (abs(res.value) + float(np.sum(np.abs(terms))))
    if err is None:
        err = 1e-15 * abs(val)
    return (val, err) if with_error else val


def gamma_times_L(w, seq: CoefficientSequence) -> complex:
    """Gamma(w) L(w, A), taking the finite limit where a trivial zero meets a Gamma pole."""
    w = complex(w)
    if isinstance(seq, CuspFormSequence):
        form = seq.form
        return cmath.exp(w * math.log(TWO_PI / math.sqrt(form.level))) * cusp_completed(w, form)
    if isinstance(seq, Constant) and w.real < 0.5:
        # Gamma(w) zeta(w) = (2 pi)^w zeta(1 - w) / (2 cos(pi w / 2))
        return seq.value * (cmath.exp(w * math.log(TWO_PI)) * riemann_zeta(1 - w)
                            / (2 * cmath.cos(math.pi * w / 2)))
    if isinstance(seq, LinearCombination):
        return sum(c * gamma_times_L(w, sub) for c, sub in seq.terms)
    return gamma(w) * sequence_L(w, seq).value
