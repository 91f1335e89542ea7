"""Integral-based oracles for the double series, disjoint from the series engines.

The double series is compared with a two-dimensional Mellin-type integral

    Lambda(s; alpha; omega; A) = int_0^inf int_0^inf f(i omega y) K(x + y) x^{s1-1} y^{s2-1} dx dy,
    K(t) = e^{2 pi (1 - alpha) t} / (e^{2 pi t} - 1),

where f(tau) = sum a(n) e^{2 pi i n tau} is the generating function of A, and
L2 = (2 pi)^{s1+s2} Lambda / (Gamma(s1) Gamma(s2)). The integral is taken
in polar form x = r u, y = r (1 - u) on fixed double-exponential grids.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .coefficients import (Constant, CoefficientSequence, CuspForm, CuspFormSequence, Delta,
                           Exponential, LinearCombination, Periodic)
from .core import ConvergenceError, DomainError, RefusedError, as_point, cpow
from .double_series import convergence_region
from .special_functions import gamma

TWO_PI = 2.0 * math.pi
HALF_PI = 0.5 * math.pi
MIN_IM_TAU = 1e-3


@dataclass(frozen=True)
class QuadratureGrid:
    """Fixed double-exponential grids for the polar form of the integral.

    ``outer_nodes`` tanh-sinh nodes in u on (0, 1) over tau in [-outer_cut, outer_cut];
    ``inner_nodes`` exp-sinh nodes in r on (0, inf) over tau in [-inner_cut_low, inner_cut_high].
    """

    outer_nodes: int = 128
    inner_nodes: int = 128
    outer_cut: float = 3.6
    inner_cut_low: float = 5.0
    inner_cut_high: float = 3.6
    kind: str = "double-exponential"

    def __post_init__(self):
        for n in (self.outer_nodes, self.inner_nodes):
            if n < 32 or n & (n - 1):
                raise DomainError("node counts must be powers of two >= 32")
        if self.kind != "double-exponential":
            raise DomainError("only the double-exponential transformation is provided")

    def refined(self) -> "QuadratureGrid":
        return QuadratureGrid(2 * self.outer_nodes, 2 * self.inner_nodes, self.outer_cut,
                              self.inner_cut_low, self.inner_cut_high, self.kind)

    def outer(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(u, 1 - u, weights) for int_0^1, both distances free of cancellation."""
        t = np.linspace(-self.outer_cut, self.outer_cut, self.outer_nodes + 1)
        h = t[1] - t[0]
        v = math.pi * np.sinh(t)
        with np.errstate(over="ignore"):
            u = 1.0 / (1.0 + np.exp(-v))
            um = 1.0 / (1.0 + np.exp(v))
        w = h * u * um * math.pi * np.cosh(t)
        keep = (u > 0) & (um > 0)
        return u[keep], um[keep], w[keep]

    def inner(self) -> tuple[np.ndarray, np.ndarray]:
        """(r, weights) for int_0^inf with unit scale."""
        t = np.linspace(-self.inner_cut_low, self.inner_cut_high, self.inner_nodes + 1)
        h = t[1] - t[0]
        r = np.exp(HALF_PI * np.sinh(t))
        return r, h * r * HALF_PI * np.cosh(t)


def _expm1(z):
    """e^z - 1 for complex arrays without cancellation near 0."""
    z = np.asarray(z, dtype=complex)
    out = np.exp(z) - 1.0
    small = np.abs(z) < 1e-2
    if small.any():
        zs = z[small]
        acc = np.zeros_like(zs)
        term = np.ones_like(zs)
        for k in range(1, 12):
            term = term * zs / k
            acc = acc + term
        out[small] = acc
    return out


def _recip_expm1(z):
    """1 / (e^z - 1), written through e^{-z} where Re z is large."""
    z = np.asarray(z, dtype=complex)
    out = np.empty(z.shape, dtype=complex)
    big = z.real > 1.0
    with np.errstate(under="ignore"):
        e = np.exp(-z[big])
    out[big] = e / -_expm1(-z[big])
    out[~big] = 1.0 / _expm1(z[~big])
    return out


def kernel(t, alpha: float):
    """K(t) = e^{2 pi (1 - alpha) t} / (e^{2 pi t} - 1) = e^{-2 pi alpha t} / (1 - e^{-2 pi t})."""
    t = np.asarray(t, dtype=float)
    return np.exp(-TWO_PI * alpha * t) / -np.expm1(-TWO_PI * t)


def kernel_partial_sum(t: float, alpha: float, terms: int) -> float:
    """sum_{m < terms} e^{-2 pi (m + alpha) t}, the expansion behind the integral identity."""
    m = np.arange(terms, dtype=float)
    return float(np.sum(np.exp(-TWO_PI * (m + alpha) * t)))


def _cusp_terms(form: CuspForm, im_tau: float, tol: float = 1e-17) -> int:
    """Terms needed so the Deligne-type bound of the q-expansion tail is below ``tol``."""
    p = (form.weight - 1) / 2 + 0.5
    decay = TWO_PI * im_tau
    n = max(8, math.ceil((p + 1) / decay))
    while (form.bound_constant * 2 * n ** p * math.exp(-decay * n)
           / -math.expm1(-decay) > tol * math.exp(-decay)):
        n = math.ceil(1.25 * n) + 1
    return n


def cusp_form_eval(tau: complex, form: CuspForm, tilde: bool = False) -> complex:
    """f(tau) = sum a(n) e^{2 pi i n tau} by truncated q-expansion (or f-tilde)."""
    tau = complex(tau)
    if tau.imag <= 0:
        raise DomainError("tau must lie in the upper half-plane")
    if tau.imag < MIN_IM_TAU:
        raise RefusedError(f"Im tau = {tau.imag:.3g} < {MIN_IM_TAU}: q-expansion converges "
                           "too slowly")
    n = _cusp_terms(form, tau.imag)
    a = form.a_tilde(n) if tilde else form.a(n).astype(complex)
    q = np.exp(2j * math.pi * tau * np.arange(1, n + 1))
    return complex(np.sum(a * q))


def modular_residual(tau: complex, form: CuspForm) -> float:
    """|(sqrt(N) tau)^{-kappa} f(-1/(N tau)) - f_tilde(tau)|, both by q-expansion."""
    tau = complex(tau)
    N, k = form.level, form.weight
    lhs = (math.sqrt(N) * tau) ** (-k) * cusp_form_eval(-1 / (N * tau), form)
    return abs(lhs - cusp_form_eval(tau, form, tilde=True))


def _cusp_generating(form: CuspForm, tau: np.ndarray) -> np.ndarray:
    """f at many points; small Im tau goes through the transform tau -> -1/(N tau)."""
    tau = np.asarray(tau, dtype=complex)
    out = np.zeros(tau.shape, dtype=complex)
    N, k = form.level, form.weight
    direct = tau.imag >= 1 / math.sqrt(N)
    flat_t = tau.ravel()
    flat_o = out.ravel()
    flat_d = direct.ravel()
    n = _cusp_terms(form, 1 / math.sqrt(N) if N > 1 else 1.0)
    a = form.a(n).astype(complex)
    at = form.a_tilde(n)
    ns = np.arange(1, n + 1)
    for i, t in enumerate(flat_t):
        if flat_d[i]:
            flat_o[i] = np.sum(a * np.exp(2j * math.pi * t * ns))
        else:
            tp = -1 / (N * t)
            # f(tau) = (sqrt(N) tau')^kappa f_tilde(tau'), with Im tau' >= 1/sqrt(N)
            logs = k * cmath.log(math.sqrt(N) * tp) + 2j * math.pi * tp * ns
            keep = logs.real > -745.0
            flat_o[i] = np.sum(at[keep] * np.exp(logs[keep]))
    return flat_o.reshape(tau.shape)


def generating_function(seq, y: np.ndarray, omega: complex) -> np.ndarray:
    """f(i omega y) = sum a(n) e^{-2 pi omega y n} in closed form for the shipped sequences."""
    z = TWO_PI * complex(omega) * np.asarray(y, dtype=float)
    if isinstance(seq, CuspForm):
        seq = CuspFormSequence(seq)
    if isinstance(seq, Constant):
        return _recip_expm1(z)
    if isinstance(seq, Exponential):
        return _recip_expm1(z - TWO_PI * 1j * seq.beta)
    if isinstance(seq, Delta):
        return np.exp(-z * seq.n0)
    if isinstance(seq, Periodic):
        f = seq.period
        acc = np.zeros(z.shape, dtype=complex)
        for nu in range(1, f + 1):
            a = complex(seq.at(nu))
            if a:
                acc += a * np.exp(-z * nu)
        return acc / -_expm1(-z * f)
    if isinstance(seq, CuspFormSequence):
        return _cusp_generating(seq.form, 1j * complex(omega) * np.asarray(y, dtype=float))
    if isinstance(seq, LinearCombination):
        return sum(complex(c) * generating_function(t, y, omega) for c, t in seq.terms)
    raise DomainError(f"no generating function for {type(seq).__name__}")


def lambda_integral(s, alpha: float, omega, seq: CoefficientSequence,
                    grid: QuadratureGrid | None = None) -> complex:
    """The double integral Lambda(s; alpha; omega; A) on a fixed grid."""
    s = as_point(s)
    grid = grid or QuadratureGrid()
    omega = complex(omega)
    if isinstance(seq, CuspForm):
        seq = CuspFormSequence(seq)
    kappa = seq.kappa
    if s.sigma1 <= 0:
        raise RefusedError("need Re s1 > 0")
    region = convergence_region(s, kappa)
    if not region:
        raise RefusedError(f"integral needs {region.violated()}")
    if isinstance(seq, CuspFormSequence) and s.sigma2 <= 6.5:
        raise RefusedError("cusp-form oracle needs Re s2 > 6.5")
    if abs(cmath.phase(omega)) > math.pi / 4:
        raise RefusedError("oracle restricted to |arg omega| <= pi/4")
    if not 0 < alpha <= 1:
        raise DomainError("alpha must lie in (0, 1]")
    u, um, wu = grid.outer()
    r0, wr0 = grid.inner()
    s1, s2 = s.s1, s.s2
    E = s.total
    total = 0j
    for ui, umi, wi in zip(u, um, wu):
        scale = 1.0 / (TWO_PI * (alpha + omega.real * umi))
        r = scale * r0
        wr = scale * wr0
        y = r * umi
        f = generating_function(seq, y, omega)
        # x^{s1-1} y^{s2-1} r = r^{s1+s2-1} u^{s1-1} (1-u)^{s2-1}
        lr = np.log(r)
        powr = np.exp((E - 1) * lr)
        inner = np.sum(wr * powr * kernel(r, alpha) * f)
        total += wi * cmath.exp((s1 - 1) * math.log(ui) + (s2 - 1) * math.log(umi)) * inner
    if not cmath.isfinite(total):
        raise ConvergenceError("quadrature produced a non-finite value")
    return complex(total)


def lambda_to_L2(s, lam: complex) -> complex:
    """(2 pi)^{s1+s2} Lambda / (Gamma(s1) Gamma(s2))."""
    s = as_point(s)
    return cpow(TWO_PI, s.total) * lam / (gamma(s.s1) * gamma(s.s2))


def L2_by_integral(s, alpha: float, omega, seq: CoefficientSequence,
                   grid: QuadratureGrid | None = None) -> complex:
    return lambda_to_L2(s, lambda_integral(s, alpha, omega, seq, grid))


def eta_product_coefficients(n_max: int) -> list[int]:
    """Coefficients of q prod_{n >= 1} (1 - q^n)^24 by plain polynomial products.

    Deliberately naive (no pentagonal-number shortcut) so it can serve as an
    independent check of the tau table.
    """
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    m = n_max - 1
    poly = [1] + [0] * m
    for n in range(1, m + 1):
        for _ in range(24):
            for k in range(m, n - 1, -1):
                poly[k] -= poly[k - n]
    return poly[:n_max]
