"""Complex Gamma and the confluent hypergeometric function Psi(a, c; x).

Psi is Tricomi's U, defined by the ray integral

    Psi(a, c; x) = 1/Gamma(a) int_0^{e^{i phi} inf} e^{-xy} y^{a-1} (1+y)^{c-a-1} dy.

Three routes are provided and cross-check each other: double-exponential
quadrature on a rotated ray, the divergent large-|x| asymptotic series, and
Kummer's transformation Psi(a, c; x) = x^{1-c} Psi(a-c+1, 2-c; x).

Arguments ``x`` may be given in polar form with |arg x| up to 3*pi/2, since
several functional-equation factors fix arg(+-2 pi i omega) = +-pi/2 + arg(omega)
without reducing it into (-pi, pi].
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy import special as sp

from .core import ConvergenceError, DomainError, PoleError, SeriesValue, polar_pow
from .quadrature import exp_sinh

RAY_MARGIN = 0.1
RAY_SINGULARITY_MARGIN = 1.0
CROSSOVER_FACTOR = 30.0
MIN_QUADRATURE_RE_A = 0.1


def _near_nonpositive_integer(z: complex, tol: float = 1e-14) -> bool:
    z = complex(z)
    if z.real > 0.5:
        return False
    n = round(z.real)
    return abs(z - n) <= tol * max(1.0, abs(z))


def gamma(z) -> complex:
    """Complex Gamma function (principal, relative error <= 1e-13 in |Re z|, |Im z| <= 50)."""
    z = complex(z)
    if _near_nonpositive_integer(z):
        raise PoleError(f"Gamma has a pole at z = {z}")
    return complex(sp.gamma(z))


def rgamma(z) -> complex:
    """1/Gamma(z); entire, zero at the non-positive integers."""
    z = complex(z)
    if _near_nonpositive_integer(z):
        return 0j
    return complex(sp.rgamma(z))


def loggamma(z) -> complex:
    return complex(sp.loggamma(complex(z)))


@dataclass(frozen=True)
class PsiEvalConfig:
    """Knobs for :func:`psi`.

    ``ray_angle=None`` picks phi = -arg(x) clipped to |phi| < pi/2 - 0.1.
    ``crossover_magnitude=None`` uses 30 * (1 + |a| + |c|).
    """

    ray_angle: float | None = None
    quadrature_points: int = 32
    asymptotic_terms: int = 60
    crossover_magnitude: float | None = None
    tol: float = 1e-14
    max_refinements: int = 9

    def __post_init__(self):
        if self.quadrature_points < 16:
            raise DomainError("quadrature_points must be >= 16")
        if self.asymptotic_terms < 1:
            raise DomainError("asymptotic_terms must be >= 1")
        if self.ray_angle is not None and not -math.pi < self.ray_angle < math.pi:
            raise DomainError("ray_angle must lie in (-pi, pi)")
        if self.crossover_magnitude is not None and self.crossover_magnitude <= 0:
            raise DomainError("crossover_magnitude must be positive")


DEFAULT_CONFIG = PsiEvalConfig()


def choose_ray(theta: float) -> float:
    """Ray angle making e^{-xy} decay along the contour for arg x = theta.

    The ray aims at phi = -theta, kept at least ``RAY_SINGULARITY_MARGIN``
    from the branch point direction y = -1; when that is not enough the
    decay angle |phi + theta| is held at pi/2 - RAY_MARGIN.
    """
    lim = 0.5 * math.pi - RAY_MARGIN
    cap = math.pi - RAY_SINGULARITY_MARGIN
    phi = min(max(-theta, -cap), cap)
    if abs(phi + theta) > lim:
        # only reachable for |theta| > cap + lim (continued arguments)
        phi = -theta + math.copysign(lim, theta)
    if not -math.pi < phi < math.pi or abs(phi + theta) >= 0.5 * math.pi:
        raise DomainError(f"no admissible ray for arg x = {theta}")
    return phi


def crossover(a: complex, c: complex, cfg: PsiEvalConfig = DEFAULT_CONFIG) -> float:
    if cfg.crossover_magnitude is not None:
        return cfg.crossover_magnitude
    return CROSSOVER_FACTOR * (1.0 + abs(a) + abs(c))


def asymptotic_coefficients(a: complex, c: complex, terms: int) -> np.ndarray:
    """Coefficients b_k with Psi ~ x^{-a} sum_k b_k x^{-k}."""
    out = np.empty(terms, dtype=complex)
    b = 1.0 + 0j
    for k in range(terms):
        out[k] = b
        b = -b * (a + k) * (a - c + 1 + k) / (k + 1)
    return out


def psi_asymptotic_polar(a, c, r, theta, terms=60, start=0):
    """Vectorized truncated asymptotic series, summed from index ``start``.

    Summation stops at ``terms`` or at the smallest term, whichever comes
    first. Returns ``(values, proxies)`` where the proxy is the magnitude
    of the first omitted term.
    """
    a = complex(a)
    c = complex(c)
    r = np.atleast_1d(np.asarray(r, dtype=float))
    lx = np.log(r) + 1j * theta
    inv = np.exp(-lx)
    lead = np.exp(-a * lx)
    term = lead.copy()
    coef = 1.0 + 0j
    for k in range(start):
        coef = -coef * (a + k) * (a - c + 1 + k) / (k + 1)
    term = lead * coef * inv ** start
    total = np.zeros_like(term)
    active = np.ones(r.shape, dtype=bool)
    proxy = np.abs(term)
    prev_mag = np.full(r.shape, np.inf)
    for k in range(start, start + terms):
        mag = np.abs(term)
        growing = mag > prev_mag
        active &= ~growing
        total = np.where(active, total + term, total)
        proxy = np.where(active, 0.0, proxy)
        nxt = -term * (a + k) * (a - c + 1 + k) / (k + 1) * inv
        done = active & (np.abs(nxt) <= 1e-17 * np.abs(total))
        proxy = np.where(active, np.abs(nxt), proxy)
        active &= ~done
        prev_mag = np.where(active, mag, prev_mag)
        term = nxt
        if not active.any():
            break
    return total, proxy


def psi_asymptotic(a, c, x, terms: int, return_error: bool = False):
    """Truncated asymptotic expansion x^{-a} - a(a-c+1) x^{-a-1} + ...

    Exactly ``terms`` terms are summed (no optimal truncation), the caller
    owns the judgment of whether |x| is large enough. The magnitude of the
    first omitted term is the error proxy.
    """
    if terms < 1:
        raise DomainError("terms must be >= 1")
    a = complex(a)
    c = complex(c)
    x = complex(x)
    if x == 0:
        raise DomainError("x must be nonzero")
    coefs = asymptotic_coefficients(a, c, terms + 1)
    lead = cmath.exp(-a * cmath.log(x))
    powers = x ** -np.arange(terms + 1, dtype=float)
    series = coefs * powers
    value = lead * complex(np.sum(series[:terms]))
    proxy = abs(lead * series[terms])
    if return_error:
        return value, proxy
    return value


def _psi_quadrature_polar(a, c, r, theta, phi, tol, max_levels):
    """Ray quadrature for all moduli ``r`` sharing one argument ``theta``."""
    a = complex(a)
    c = complex(c)
    if a.real <= 0:
        raise DomainError("ray quadrature needs Re a > 0")
    r = np.atleast_1d(np.asarray(r, dtype=float))
    lnr = np.log(r)[None, :]
    rot = cmath.exp(1j * (theta + phi))
    eiphi = cmath.exp(1j * phi)
    decay = rot.real
    # left cutoff: u^{Re a} negligible; right cutoff: exponential decay
    sinh_lo = min(445.0, 2.0 / math.pi * (45.0 / a.real))
    tau_min = -math.asinh(sinh_lo)
    u_hi = (80.0 + 4.0 * abs(a) + 4.0 * abs(c)) / decay
    tau_max = math.asinh(2.0 / math.pi * math.log(u_hi))
    am1 = a - 1
    cam1 = c - a - 1

    def integrand(u):
        lu = np.log(np.maximum(u, 1e-300))[:, None]
        y = eiphi * np.exp(lu - lnr)
        logg = (-rot * u[:, None] + am1 * (lu - lnr + 1j * phi)
                + cam1 * np.log1p(y) + 1j * phi - lnr)
        return np.exp(logg)

    val, err, _ = exp_sinh(integrand, tau_min=tau_min, tau_max=tau_max, tol=tol,
                           h0=0.5, max_levels=max_levels)
    ra = rgamma(a)
    return val * ra, np.abs(err * ra)


def psi_polar(a, c, r, theta, cfg: PsiEvalConfig = DEFAULT_CONFIG):
    """Psi(a, c; r e^{i theta}) for an array of moduli.

    Returns ``(values, errors, routes)`` with ``routes`` a list of strings.
    """
    a = complex(a)
    c = complex(c)
    r = np.atleast_1d(np.asarray(r, dtype=float))
    if np.any(r <= 0):
        raise DomainError("x must be nonzero")
    if abs(theta) >= 1.5 * math.pi:
        raise DomainError(f"|arg x| = {abs(theta)} >= 3*pi/2 is outside every admissible ray")
    vals = np.zeros(r.shape, dtype=complex)
    errs = np.zeros(r.shape)
    routes = np.empty(r.shape, dtype=object)
    big = r >= crossover(a, c, cfg)
    if big.any():
        av, ap = psi_asymptotic_polar(a, c, r[big], theta, cfg.asymptotic_terms)
        good = ap <= cfg.tol * np.maximum(np.abs(av), 1e-300)
        idx = np.flatnonzero(big)[good]
        vals[idx] = av[good]
        errs[idx] = ap[good]
        routes[idx] = "asymptotic"
        big[np.flatnonzero(big)[~good]] = False
    rest = ~big
    if rest.any():
        v, e, rt = _psi_small(a, c, r[rest], theta, cfg)
        vals[rest] = v
        errs[rest] = e
        routes[rest] = rt
    return vals, errs, list(routes)


def _psi_small(a, c, r, theta, cfg):
    phi = cfg.ray_angle if cfg.ray_angle is not None else choose_ray(theta)
    if abs(phi + theta) >= 0.5 * math.pi:
        raise DomainError(f"ray angle {phi} violates |phi + arg x| < pi/2 for arg x = {theta}")
    # the ray integral needs Re a bounded away from 0 (y^{a-1} at the origin)
    if a.real >= MIN_QUADRATURE_RE_A:
        v, e = _psi_quadrature_polar(a, c, r, theta, phi, cfg.tol, cfg.max_refinements)
        return v, e, "quadrature"
    a2 = a - c + 1
    if a2.real >= MIN_QUADRATURE_RE_A:
        v, e = _psi_quadrature_polar(a2, 2 - c, r, theta, phi, cfg.tol, cfg.max_refinements)
        fac = np.array([polar_pow(ri, theta, 1 - c) for ri in r])
        return v * fac, e * np.abs(fac), "kummer+quadrature"
    # step a upward and recur back
    n = max(1, math.ceil(MIN_QUADRATURE_RE_A - a.real))
    hi1, e1 = _psi_quadrature_polar(a + n, c, r, theta, phi, cfg.tol, cfg.max_refinements)
    hi2, e2 = _psi_quadrature_polar(a + n + 1, c, r, theta, phi, cfg.tol, cfg.max_refinements)
    z = r * cmath.exp(1j * theta)
    u_next, u_cur = hi2, hi1
    for k in range(n - 1, -1, -1):
        ak = a + k
        u_new = (2 * (ak + 1) - c + z) * u_cur - (ak + 1) * (ak - c + 2) * u_next
        u_next, u_cur = u_cur, u_new
    rel = np.maximum(e1 / np.maximum(np.abs(hi1), 1e-300), e2 / np.maximum(np.abs(hi2), 1e-300))
    err = np.abs(u_cur) * (rel + 1e-16) * (n + 1)
    return u_cur, err, "recurrence+quadrature"


def psi(a, c, x, cfg: PsiEvalConfig | None = None) -> SeriesValue:
    """Psi(a, c; x) for complex x (principal argument) as a SeriesValue."""
    cfg = cfg or DEFAULT_CONFIG
    x = complex(x)
    if x == 0:
        raise DomainError("x must be nonzero")
    v, e, routes = psi_polar(a, c, abs(x), cmath.phase(x), cfg)
    value = complex(v[0])
    err = float(e[0])
    if not np.isfinite(value) or err > max(1e-8, 1e3 * cfg.tol) * max(abs(value), 1e-300):
        raise ConvergenceError(f"Psi({a}, {c}; {x}) did not converge (error {err:.3g})")
    return SeriesValue(value, err, 1, route=routes[0])


def kummer_residual(a, c, x, cfg: PsiEvalConfig | None = None) -> float:
    """|Psi(a,c;x) - x^{1-c} Psi(a-c+1, 2-c; x)| from two separate evaluations."""
    a = complex(a)
    c = complex(c)
    x = complex(x)
    left = psi(a, c, x, cfg).value
    right = cmath.exp((1 - c) * cmath.log(x)) * psi(a - c + 1, 2 - c, x, cfg).value
    return abs(left - right)
