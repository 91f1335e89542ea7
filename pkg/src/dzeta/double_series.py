"""Direct evaluators for double series of Euler-Hurwitz-Barnes type.

The workhorse is the row series

    S(s; alpha, b) = sum_{m >= 0} (alpha + m)^{-s1} (alpha + m + b)^{-s2},

summed by Euler-Maclaurin in m (vectorized over many b at once). A double
series sum_n a(n) S(s; alpha, n omega) is then the sum of its first N0 rows
plus a tail sum_{n >= N0} a(n) S(s; alpha, n omega) taken from the large-b
expansion

    S ~ G(s) b^{1-s1-s2} + sum_j binom(-s2, j) zeta(s1 - j, alpha) b^{-s2-j},
    G(s) = Gamma(1 - s1) Gamma(s1 + s2 - 1) / Gamma(s2),

whose n-sums are Dirichlet-series tails of the coefficients.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .classical_zetas import _bernoulli_ratios, dirichlet_tail, hurwitz_general
from .coefficients import (Constant, CoefficientSequence, Delta, Exponential, Periodic,
                           finite_fourier)
from .core import (OK, TAIL_TOO_LARGE, DomainError, EvalPoint, PoleError, RefusedError,
                   SeriesValue, as_point, cpow)
from .special_functions import gamma, rgamma

DEFAULT_TRUNCATION = 20000
DEFAULT_TOL = 1e-10
BRANCH_GUARD = 1e-12


@dataclass(frozen=True)
class DoubleSeriesParams:
    alpha: float = 1.0
    omega: complex = 1.0
    seq: CoefficientSequence = field(default_factory=Constant)
    truncation: tuple[int, int] = (DEFAULT_TRUNCATION, DEFAULT_TRUNCATION)
    target_tol: float = DEFAULT_TOL

    def __post_init__(self):
        object.__setattr__(self, "omega", complex(self.omega))
        if not 0 < self.alpha <= 1:
            raise DomainError("alpha must lie in (0, 1]")
        if self.omega == 0 or (self.omega.imag == 0 and self.omega.real < 0):
            raise DomainError("omega must satisfy |arg omega| < pi")
        if min(self.truncation) < 1 or self.target_tol <= 0:
            raise DomainError("truncation and target_tol must be positive")


@dataclass(frozen=True)
class RegionCheck:
    inside: bool
    margin_s2: float
    margin_total: float

    def __bool__(self):
        return self.inside

    def violated(self) -> str:
        if self.margin_s2 <= 0:
            return f"Re s2 > (kappa+1)/2 fails (margin {self.margin_s2:g})"
        if self.margin_total <= 0:
            return f"Re(s1+s2) > (kappa+3)/2 fails (margin {self.margin_total:g})"
        return ""


def convergence_region(s, kappa: float) -> RegionCheck:
    """Absolute-convergence region of sum_n a(n) S(s; alpha, n omega)."""
    s = as_point(s)
    m2 = s.sigma2 - (kappa + 1) / 2
    mt = s.total.real - (kappa + 3) / 2
    return RegionCheck(m2 > 0 and mt > 0, m2, mt)


def _binomials(s2: complex, count: int) -> np.ndarray:
    """binom(-s2, j), j = 0..count-1."""
    out = np.empty(count, dtype=complex)
    c = 1.0 + 0j
    for j in range(count):
        out[j] = c
        c *= (-s2 - j) / (j + 1)
    return out


def single_series(s, alpha: float, b) -> tuple[np.ndarray, np.ndarray]:
    """S(s; alpha, b) for an array of b (|arg(alpha + b)| < pi), with error estimates.

    Continued in s by Euler-Maclaurin; poles sit on s1 + s2 = 1, 0, -1, ...
    """
    s = as_point(s)
    s1, s2 = s.s1, s.s2
    b = np.atleast_1d(np.asarray(b, dtype=complex))
    for j in range(0, 64):
        if abs(s1 + s2 + j - 1) < 1e-12:
            raise PoleError(f"row series has a pole on s1 + s2 = {1 - j}")
    bmax = float(np.max(np.abs(b))) if b.size else 0.0
    M = int(math.ceil(2 * bmax + abs(s1) + abs(s2) + 30))
    m = alpha + np.arange(M, dtype=float)
    base = m[None, :] + b[:, None]
    if np.any((np.abs(base.imag) < BRANCH_GUARD) & (base.real <= 0)):
        raise RefusedError("alpha + m + n omega lies on the branch cut of the power")
    head = np.exp(-s2 * np.log(base)) @ np.exp(-s1 * np.log(m))
    U = alpha + M
    V = U + b
    logU = math.log(U)
    logV = np.log(V)
    # integral of f over [M, inf) by binomial expansion in b/U (|b/U| <= 1/2)
    n_bin = 80
    binom = _binomials(s2, n_bin)
    j = np.arange(n_bin)
    ratio = b[:, None] / U
    powers = ratio ** j[None, :]
    integral = cmath.exp((1 - s1 - s2) * logU) * (powers * (binom / (s1 + s2 + j - 1))).sum(axis=1)
    bin_err = np.abs(powers[:, -1] * binom[-1])
    # derivative pieces at x = M
    bern = _bernoulli_ratios()
    kmax = len(bern)
    order = 2 * kmax
    d1 = np.empty(order, dtype=complex)
    d1[0] = cmath.exp(-s1 * logU)
    for r in range(1, order):
        d1[r] = -d1[r - 1] * (s1 + r - 1) / U
    d2 = np.empty((order, b.size), dtype=complex)
    d2[0] = np.exp(-s2 * logV)
    for q in range(1, order):
        d2[q] = -d2[q - 1] * (s2 + q - 1) / V
    f0 = d1[0] * d2[0]
    total = head + integral + 0.5 * f0
    last = np.zeros(b.size)
    for k in range(1, kmax + 1):
        kk = 2 * k - 1
        coef = np.array([math.comb(kk, r) for r in range(kk + 1)], dtype=float)
        deriv = (coef * d1[:kk + 1]) @ d2[kk::-1]
        term = -bern[k - 1] * deriv
        total = total + term
        last = np.abs(term)
        if np.all(last <= 1e-17 * np.abs(total)):
            break
    err = last + bin_err + 1e-16 * (np.abs(head) + np.abs(integral)) * math.sqrt(M)
    return total, err


def _tail_generic(s: EvalPoint, alpha: float, omega: complex, seq: CoefficientSequence,
                  n0: int) -> tuple[complex, float]:
    """sum_{n >= n0} a(n) S(s; alpha, n omega) from the large-b expansion."""
    s1, s2 = s.s1, s.s2
    log_omega = cmath.log(omega)

    acc_err = [0.0]

    def T(z, weight=1.0):
        scale = cmath.exp(-z * log_omega)
        v, e = dirichlet_tail(seq, z, n0, with_error=True)
        acc_err[0] += abs(weight * scale) * e
        return scale * v

    k_int = round(s1.real)
    near_int = k_int >= 1 and abs(s1 - k_int) < 0.05
    j_pole = k_int - 1 if near_int else -1

    def pole_group(s1v):
        w = s1v + s2 - 1
        c0 = gamma(1 - s1v) * gamma(w) * rgamma(s2)
        g = c0 * T(w, c0 / J)
        if j_pole >= 0:
            c1 = _binomials(s2, j_pole + 1)[j_pole] * hurwitz_general(s1v - j_pole, alpha)
            g += c1 * T(s2 + j_pole, c1 / J)
        return g

    J, r = 24, 0.25
    if near_int:
        # removable singularity: mean over a circle around s1 (trapezoid rule is exact
        # up to (r / distance-to-next-singularity)^J)
        pts = s1 + r * np.exp(2j * math.pi * (np.arange(J) + 0.5) / J)
        first = complex(np.mean([pole_group(p) for p in pts]))
    else:
        w = s1 + s2 - 1
        c0 = gamma(1 - s1) * gamma(w) * rgamma(s2)
        first = c0 * T(w, c0)
    total = first
    binom = _binomials(s2, 120)
    # trivial zeros of zeta(s1 - j) make single terms vanish; judge pairs of terms
    prev, smallest = abs(first), math.inf
    for j in range(120):
        if j == j_pole:
            continue
        cj = binom[j] * hurwitz_general(s1 - j, alpha)
        term = cj * T(s2 + j, cj)
        total += term
        mag = abs(term)
        pair = max(mag, prev)
        prev = mag
        if j > 2 and pair <= 1e-17 * abs(total):
            break
        if j > 8 and pair > 10 * smallest:
            if smallest > 1e-13 * abs(total):
                raise RefusedError("large-b expansion diverges before reaching tolerance")
            break
        smallest = min(smallest, pair)
    else:
        pair = smallest
    return total, pair + acc_err[0] + 1e-15 * abs(first)


def _head_size(s: EvalPoint, omega: complex) -> int:
    return max(16, int(math.ceil((20 + 2 * (abs(s.s1) + abs(s.s2))) / abs(omega))))


def L2_series(s, alpha: float, omega: complex, seq: CoefficientSequence,
              n_head: int | None = None) -> SeriesValue:
    """sum_n a(n) S(s; alpha, n omega) without the region gate.

    Valid wherever the Dirichlet tails of the coefficients are continued,
    which covers every point of absolute convergence.
    """
    s = as_point(s)
    omega = complex(omega)
    if isinstance(seq, Delta):
        v, e = single_series(s, alpha, np.array([seq.n0 * omega]))
        return SeriesValue(complex(v[0]), float(e[0]), 1, route="row-series")
    n0 = n_head or _head_size(s, omega)
    n = np.arange(1, n0)
    a = seq.values(n)
    keep = a != 0
    rows, errs = (single_series(s, alpha, n[keep] * omega) if np.any(keep)
                  else (np.zeros(0), np.zeros(0)))
    head = complex(np.sum(a[keep] * rows))
    head_err = float(np.sum(np.abs(a[keep]) * errs))
    tail, tail_err = _tail_generic(s, alpha, omega, seq, n0)
    return SeriesValue(head + tail, head_err + tail_err, n0, route="rows+asymptotic-tail",
                       notes={"head_rows": n0 - 1})


def L2_direct(s, p: DoubleSeriesParams) -> SeriesValue:
    """sum_{m >= 0} sum_{n >= 1} a(n) (alpha + m)^{-s1} (alpha + m + n omega)^{-s2}.

    Refused outside the absolute-convergence region (for a delta sequence
    only Re(s1 + s2) > 1 is needed).
    """
    s = as_point(s)
    seq = p.seq
    if isinstance(seq, Delta):
        if s.total.real <= 1:
            raise RefusedError("Re(s1+s2) > 1 fails for the single row series")
    else:
        region = convergence_region(s, seq.kappa)
        if not region:
            raise RefusedError(region.violated())
    n_head = _head_size(s, p.omega)
    if n_head > p.truncation[1]:
        return SeriesValue(math.nan, math.inf, 0, status=TAIL_TOO_LARGE,
                           notes={"needed_rows": n_head})
    out = L2_series(s, p.alpha, p.omega, seq, n_head)
    if out.error > max(p.target_tol, 1e-15) * max(1.0, abs(out.value)):
        out.status = TAIL_TOO_LARGE
    return out


def _check_right_half(*omegas):
    for w in omegas:
        if complex(w).real <= 0:
            raise DomainError("omega_1 and omega_2 must have positive real part")


def zeta2_two_omega_direct(s, omega1, omega2, tol: float = DEFAULT_TOL) -> SeriesValue:
    """sum_{m, n >= 1} (m omega1)^{-s1} (m omega1 + n omega2)^{-s2}."""
    s = as_point(s)
    omega1, omega2 = complex(omega1), complex(omega2)
    _check_right_half(omega1, omega2)
    if not (s.sigma2 > 1 and s.total.real > 2):
        raise RefusedError("need Re s2 > 1 and Re(s1+s2) > 2")
    inner = L2_direct(s, DoubleSeriesParams(1.0, omega2 / omega1, Constant(), target_tol=tol))
    # both factors have arguments inside (-pi/2, pi/2), so omega1^{-s1-s2} splits off exactly
    scale = cpow(omega1, -s.total)
    return SeriesValue(scale * inner.value, abs(scale) * inner.error, inner.terms,
                       inner.status, "scaled-L2")


def zeta2_hl_two_omega(s, alpha: float, beta: float, omega1, omega2,
                       tol: float = DEFAULT_TOL) -> SeriesValue:
    """sum_{m>=0, n>=1} e^{2 pi i n beta} ((alpha+m) w1)^{-s1} ((alpha+m) w1 + n w2)^{-s2}."""
    s = as_point(s)
    omega1, omega2 = complex(omega1), complex(omega2)
    _check_right_half(omega1, omega2)
    inner = L2_direct(s, DoubleSeriesParams(alpha, omega2 / omega1, Exponential(beta),
                                            target_tol=tol))
    scale = cpow(omega1, -s.total)
    return SeriesValue(scale * inner.value, abs(scale) * inner.error, inner.terms,
                       inner.status, "scaled-L2")


def double_L_direct(s, a1: Periodic, a2: Periodic, omega1, omega2,
                    tol: float = DEFAULT_TOL) -> SeriesValue:
    """sum_{m, n >= 1} a1(m) a2(n) (m w1)^{-s1} (m w1 + n w2)^{-s2}.

    The m-sum is split by residue class m = nu + f k, each class being a
    row-summed double series with coefficients a2 itself.
    """
    s = as_point(s)
    omega1, omega2 = complex(omega1), complex(omega2)
    _check_right_half(omega1, omega2)
    if not (s.sigma2 > 1 and s.total.real > 2):
        raise RefusedError("need Re s2 > 1 and Re(s1+s2) > 2")
    f = a1.period
    fw = f * omega1
    total, err = 0j, 0.0
    status = OK
    for nu in range(1, f + 1):
        c = a1.at(nu)
        if c == 0:
            continue
        part = L2_direct(s, DoubleSeriesParams(nu / f, omega2 / fw, a2, target_tol=tol))
        total += c * part.value
        err += abs(c) * part.error
        if not part.ok:
            status = part.status
    scale = cpow(fw, -s.total)
    return SeriesValue(scale * total, abs(scale) * err, f, status, "residue-classes")


@dataclass(frozen=True)
class HurwitzLerchInstance:
    """Parameters (alpha, beta, omega1, omega2) of one Hurwitz-Lerch double zeta."""

    alpha: float
    beta: float
    omega1: complex
    omega2: complex

    def evaluate(self, s, tol: float = DEFAULT_TOL) -> SeriesValue:
        return zeta2_hl_two_omega(s, self.alpha, self.beta, self.omega1, self.omega2, tol)


def decompose_periodic(a1: Periodic, a2: Periodic, omega1, omega2
                       ) -> list[tuple[complex, HurwitzLerchInstance]]:
    """Weights a1(nu) a2_hat(mu) and instances (nu/f, mu/f, f w1, w2), nu, mu = 1..f."""
    f = a1.period
    if a2.period != f:
        raise DomainError(f"period mismatch: {f} vs {a2.period}")
    hat = finite_fourier(a2.table)
    out = []
    for nu in range(1, f + 1):
        for mu in range(1, f + 1):
            w = complex(a1.at(nu)) * complex(hat[mu - 1])
            out.append((w, HurwitzLerchInstance(nu / f, mu / f, f * complex(omega1),
                                                complex(omega2))))
    return out


def evaluate_decomposition(s, terms, tol: float = DEFAULT_TOL) -> SeriesValue:
    total, err = 0j, 0.0
    for w, inst in terms:
        if w == 0:
            continue
        part = inst.evaluate(s, tol)
        total += w * part.value
        err += abs(w) * part.error
    return SeriesValue(total, err, len(terms), route="decomposition")
