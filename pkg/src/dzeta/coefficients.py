"""Coefficient sequences and the arithmetic kernels built on them.

A sequence supplies a(n), a growth exponent kappa with |a(n)| <= C n^{(kappa-1)/2+eps},
and a continuation strategy for its Dirichlet series L(s) = sum a(n) n^{-s}.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from .core import DomainError

EPS = 0.01
TWO_PI = 2.0 * math.pi

STRATEGY_KINDS = ("euler-maclaurin", "hurwitz-decomposition", "completed-integral",
                  "direct-sum-only")


@dataclass(frozen=True)
class ContinuationStrategy:
    kind: str
    cutoff: int = 30
    order: int = 20

    def __post_init__(self):
        if self.kind not in STRATEGY_KINDS:
            raise DomainError(f"unknown continuation strategy {self.kind!r}")
        if self.kind == "euler-maclaurin" and (self.order < 2 or self.cutoff < 10):
            raise DomainError("euler-maclaurin needs order >= 2 and cutoff >= 10")

    @property
    def continues(self) -> bool:
        return self.kind != "direct-sum-only"


EULER_MACLAURIN = ContinuationStrategy("euler-maclaurin")
HURWITZ_DECOMPOSITION = ContinuationStrategy("hurwitz-decomposition")
COMPLETED_INTEGRAL = ContinuationStrategy("completed-integral")
DIRECT_ONLY = ContinuationStrategy("direct-sum-only")


class CoefficientSequence:
    """Base class; subclasses are immutable after construction."""

    kind: str = "abstract"
    kappa: float = 1.0 + 2 * EPS
    bound_constant: float = 1.0
    strategy: ContinuationStrategy = DIRECT_ONLY

    def values(self, n) -> np.ndarray:
        raise NotImplementedError

    def __call__(self, n: int) -> complex:
        return complex(self.values(np.array([n]))[0])

    def support(self, n_max: int) -> tuple[np.ndarray, np.ndarray]:
        """Indices 1..n_max with nonzero a(n) and the corresponding values."""
        n = np.arange(1, n_max + 1)
        v = self.values(n)
        keep = v != 0
        return n[keep], v[keep]

    @property
    def growth_exponent(self) -> float:
        """Exponent p in |a(n)| <= C n^p in the growth bound, with eps included."""
        return (self.kappa - 1) / 2 + EPS

    def scaled(self, c: complex) -> "LinearCombination":
        return LinearCombination(((complex(c), self),))

    def __add__(self, other):
        return LinearCombination(((1.0 + 0j, self), (1.0 + 0j, other)))

    def describe(self) -> dict:
        return {"kind": self.kind}


@dataclass(frozen=True, eq=False)
class Constant(CoefficientSequence):
    value: complex = 1.0

    kind = "constant"
    strategy = EULER_MACLAURIN

    @property
    def bound_constant(self):
        return abs(self.value)

    def values(self, n):
        return np.full(np.shape(n), complex(self.value))

    def describe(self):
        return {"kind": self.kind, "value": [self.value.real, self.value.imag]
                if isinstance(self.value, complex) else self.value}


@dataclass(frozen=True, eq=False)
class Exponential(CoefficientSequence):
    """a(n) = e^{2 pi i n beta}."""

    beta: float = 0.0

    kind = "exponential"
    strategy = EULER_MACLAURIN

    def values(self, n):
        return np.exp(1j * TWO_PI * np.mod(self.beta * np.asarray(n, dtype=float), 1.0))

    @property
    def is_trivial(self) -> bool:
        return float(self.beta).is_integer()

    def describe(self):
        return {"kind": self.kind, "beta": self.beta}


@dataclass(frozen=True, eq=False)
class Periodic(CoefficientSequence):
    """a(m) = table[(m - 1) mod f]; the table lists a(1), ..., a(f)."""

    table: tuple = ()
    name: str = ""

    kind = "periodic"
    strategy = HURWITZ_DECOMPOSITION

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(self.table))
        if len(self.table) < 2:
            raise DomainError("periodic sequences need period f >= 2")

    @property
    def period(self) -> int:
        return len(self.table)

    @property
    def bound_constant(self):
        return max(abs(complex(v)) for v in self.table)

    def array(self) -> np.ndarray:
        return np.array(self.table, dtype=complex)

    def values(self, n):
        n = np.asarray(n, dtype=np.int64)
        return self.array()[(n - 1) % self.period]

    def at(self, m: int) -> complex:
        return complex(self.table[(m - 1) % self.period])

    def describe(self):
        return {"kind": self.kind, "name": self.name,
                "table": [[complex(v).real, complex(v).imag] for v in self.table]}


@dataclass(frozen=True, eq=False)
class Character(Periodic):
    """A Dirichlet character, stored as its table over one period."""

    modulus: int = 0
    index: int = 0
    primitive: bool = False

    kind = "character"

    def __post_init__(self):
        super().__post_init__()
        if self.modulus != len(self.table):
            raise DomainError("character table length must equal the modulus")
        for m in range(1, self.modulus + 1):
            if (math.gcd(m, self.modulus) > 1) != (self.at(m) == 0):
                raise DomainError("character must vanish exactly on non-units")

    @property
    def is_principal(self) -> bool:
        return self.index == 0

    def conjugate(self) -> "Character":
        return Character(tuple(_exact(complex(v).conjugate()) for v in self.table),
                         name=f"conj({self.name})", modulus=self.modulus,
                         index=(-self.index) % max(1, _totient(self.modulus)),
                         primitive=self.primitive)

    def describe(self):
        d = super().describe()
        d.update(modulus=self.modulus, index=self.index, primitive=self.primitive)
        return d


@dataclass(frozen=True, eq=False)
class Delta(CoefficientSequence):
    """a(n) = 1 if n == n0 else 0."""

    n0: int = 1

    kind = "delta"
    strategy = DIRECT_ONLY

    def __post_init__(self):
        if self.n0 < 1:
            raise DomainError("delta index must be >= 1")

    def values(self, n):
        return (np.asarray(n) == self.n0).astype(complex)

    def support(self, n_max):
        if self.n0 <= n_max:
            return np.array([self.n0]), np.array([1.0 + 0j])
        return np.array([], dtype=int), np.array([], dtype=complex)

    def describe(self):
        return {"kind": self.kind, "n0": self.n0}


@dataclass(frozen=True, eq=False)
class LinearCombination(CoefficientSequence):
    """Finite linear combination sum c_j A_j."""

    terms: tuple = ()

    kind = "combination"

    @property
    def kappa(self):
        return max(seq.kappa for _, seq in self.terms)

    @property
    def bound_constant(self):
        return sum(abs(c) * seq.bound_constant for c, seq in self.terms)

    @property
    def strategy(self):
        if all(seq.strategy.continues or seq.kind == "delta" for _, seq in self.terms):
            return EULER_MACLAURIN
        return DIRECT_ONLY

    def values(self, n):
        out = np.zeros(np.shape(n), dtype=complex)
        for c, seq in self.terms:
            out = out + c * seq.values(n)
        return out

    def describe(self):
        return {"kind": self.kind,
                "terms": [{"coef": [c.real, c.imag], "seq": s.describe()} for c, s in self.terms]}


@dataclass(frozen=True, eq=False)
class Explicit(CoefficientSequence):
    """User-supplied coefficients a(1..len) (zero beyond); direct sums only."""

    coeffs: tuple = ()
    kappa_value: float = 1.0 + 2 * EPS
    constant: float = 1.0

    kind = "explicit"
    strategy = DIRECT_ONLY

    @property
    def kappa(self):
        return self.kappa_value

    @property
    def bound_constant(self):
        return self.constant

    def values(self, n):
        n = np.asarray(n, dtype=np.int64)
        arr = np.array(self.coeffs, dtype=complex)
        out = np.zeros(n.shape, dtype=complex)
        ok = (n >= 1) & (n <= len(arr))
        out[ok] = arr[n[ok] - 1]
        return out


@dataclass(frozen=True, eq=False)
class CuspForm:
    """Holomorphic cusp form f(tau) = sum a(n) e^{2 pi i n tau} of weight kappa, level N.

    ``coefficients(n_max)`` returns a(1..n_max); ``tilde_coefficients`` gives
    the expansion of (sqrt(N) tau)^{-kappa} f(-1/(N tau)). For level 1 the
    form is its own transform.
    """

    weight: int
    level: int
    coefficients: Callable[[int], np.ndarray]
    tilde_coefficients: Callable[[int], np.ndarray] | None = None
    name: str = ""
    bound_constant: float = 1.0

    def __post_init__(self):
        if self.weight % 2 or self.weight < 2:
            raise DomainError("cusp form weight must be even and >= 2")
        if self.level < 1:
            raise DomainError("level must be >= 1")
        if self.tilde_coefficients is None:
            if self.level != 1:
                raise DomainError("level N > 1 needs user-supplied tilde coefficients")
            object.__setattr__(self, "tilde_coefficients", self.coefficients)

    def a(self, n_max: int) -> np.ndarray:
        return np.asarray(self.coefficients(n_max), dtype=float if self._real else complex)

    def a_tilde(self, n_max: int) -> np.ndarray:
        return np.asarray(self.tilde_coefficients(n_max), dtype=complex)

    @property
    def _real(self) -> bool:
        return False

    def tilde(self) -> "CuspForm":
        return CuspForm(self.weight, self.level, self.tilde_coefficients, self.coefficients,
                        name=f"tilde({self.name})", bound_constant=self.bound_constant)

    def q_expansion(self, tau: complex, n_terms: int) -> complex:
        a = self.a(n_terms).astype(complex)
        q = np.exp(2j * math.pi * complex(tau) * np.arange(1, n_terms + 1))
        return complex(np.sum(a * q))


@dataclass(frozen=True, eq=False)
class CuspFormSequence(CoefficientSequence):
    form: CuspForm | None = None

    kind = "cuspform"
    strategy = COMPLETED_INTEGRAL

    @property
    def kappa(self):
        return float(self.form.weight)

    @property
    def bound_constant(self):
        return self.form.bound_constant

    @property
    def growth_exponent(self):
        # Deligne: |a(n)| <= d(n) n^{(k-1)/2}; d(n) absorbed into eps
        return (self.kappa - 1) / 2 + EPS

    def values(self, n):
        n = np.asarray(n, dtype=np.int64)
        if n.size == 0:
            return np.zeros(0, dtype=complex)
        a = self.form.a(int(n.max())).astype(complex)
        return a[n - 1]

    def describe(self):
        return {"kind": self.kind, "weight": self.form.weight, "level": self.form.level,
                "name": self.form.name}


# ---------------------------------------------------------------- arithmetic

@lru_cache(maxsize=4096)
def divisors(k: int) -> tuple[int, ...]:
    """Positive divisors of k in increasing order, by trial division."""
    if k < 1:
        raise DomainError("k must be >= 1")
    small, large = [], []
    d = 1
    while d * d <= k:
        if k % d == 0:
            small.append(d)
            if d * d != k:
                large.append(k // d)
        d += 1
    return tuple(small + large[::-1])


def sigma_c(k: int, alpha: float, beta: float, c: complex) -> complex:
    """sum_{d | k} e^{2 pi i d alpha} e^{2 pi i (k/d) beta} d^c."""
    c = complex(c)
    total = 0j
    for d in divisors(k):
        total += cmath.exp(1j * TWO_PI * ((d * alpha + (k // d) * beta) % 1.0)) * d ** c
    return total


def A_c(l: int, sign: int, alpha: float, seq: CoefficientSequence, c: complex) -> complex:
    """sum_{mn = l} e^{+-2 pi i m alpha} a(n) n^c."""
    c = complex(c)
    total = 0j
    for n in divisors(l):
        an = seq(n)
        if an != 0:
            total += cmath.exp(sign * 1j * TWO_PI * (((l // n) * alpha) % 1.0)) * an * n ** c
    return total


def A0_c(l: int, alpha: float, seq: CoefficientSequence, c: complex) -> complex:
    """sum_{mn = l} e^{2 pi i m alpha} m^c a(n); pass -alpha for the minus sign."""
    c = complex(c)
    total = 0j
    for n in divisors(l):
        an = seq(n)
        if an != 0:
            m = l // n
            total += cmath.exp(1j * TWO_PI * ((m * alpha) % 1.0)) * m ** c * an
    return total


def convolution_table(L: int, phase: float, seq: CoefficientSequence, c_n: complex,
                      c_m: complex = 0j) -> np.ndarray:
    """Array T[l-1] = sum_{mn = l} e^{2 pi i m phase} m^{c_m} a(n) n^{c_n}, l = 1..L.

    A_c(l; +-alpha) is ``phase = +-alpha, c_n = c``; A0_c is ``c_n = 0, c_m = c``.
    """
    out = np.zeros(L, dtype=complex)
    ns, an = seq.support(L)
    m = np.arange(1, L + 1, dtype=float)
    mfac = np.exp(1j * TWO_PI * np.mod(phase * m, 1.0))
    if c_m != 0:
        mfac = mfac * np.exp(complex(c_m) * np.log(m))
    for n, a in zip(ns.tolist(), an.tolist()):
        count = L // n
        out[n - 1::n] += a * cmath.exp(complex(c_n) * math.log(n)) * mfac[:count]
    return out


def finite_fourier(table: Sequence[complex]) -> np.ndarray:
    """a_hat(nu) = (1/f) sum_{mu=1}^f a(mu) e^{-2 pi i mu nu / f}, nu = 1..f."""
    a = np.asarray(table, dtype=complex)
    f = len(a)
    if f < 2:
        raise DomainError("period must be >= 2")
    mu = np.arange(1, f + 1)
    kernel = np.exp(-2j * math.pi * np.outer(mu, mu) / f)
    return kernel @ a / f


def inverse_fourier(hat: Sequence[complex]) -> np.ndarray:
    """a(m) = sum_nu a_hat(nu) e^{2 pi i nu m / f}, m = 1..f."""
    h = np.asarray(hat, dtype=complex)
    f = len(h)
    nu = np.arange(1, f + 1)
    return np.exp(2j * math.pi * np.outer(nu, nu) / f) @ h


def fourier_sequence(seq: Periodic) -> Periodic:
    return Periodic(tuple(finite_fourier(seq.table)), name=f"hat({seq.name})")


def parity(seq_or_table, tol: float = 1e-12) -> int | None:
    """+1 if even, -1 if odd, None otherwise (a(f - m) against a(m))."""
    table = seq_or_table.table if isinstance(seq_or_table, Periodic) else tuple(seq_or_table)
    a = np.asarray(table, dtype=complex)
    f = len(a)
    # index m-1 holds a(m); a(f - m) for m = 1..f is a(f-1), ..., a(1), a(f)
    refl = np.array([a[(f - m - 1) % f] for m in range(1, f + 1)])
    if np.all(np.abs(refl - a) <= tol):
        return 1
    if np.all(np.abs(refl + a) <= tol):
        return -1
    return None


def gauss_sum(chi: Periodic) -> complex:
    f = chi.period
    m = np.arange(1, f + 1)
    return complex(np.sum(chi.array() * np.exp(2j * math.pi * m / f)))


def _totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def _exact(v: complex) -> complex | int:
    re, im = round(v.real, 14), round(v.imag, 14)
    re = 0.0 if re == 0 else re
    im = 0.0 if im == 0 else im
    if im == 0 and float(re).is_integer():
        return int(re)
    return complex(re, im)


_GENERATORS = {3: 2, 4: 3, 5: 2}


def dirichlet_character(modulus: int, index: int) -> Character:
    """The character mod f sending the generator g to e^{2 pi i index / phi(f)}.

    Shipped moduli are 3, 4 and 5 (all cyclic); index 0 is principal.
    """
    if modulus not in _GENERATORS:
        raise DomainError(f"characters shipped only for moduli {sorted(_GENERATORS)}")
    g = _GENERATORS[modulus]
    order = _totient(modulus)
    if not 0 <= index < order:
        raise DomainError(f"index must be in 0..{order - 1}")
    log_table = {}
    x = 1
    for k in range(order):
        log_table[x] = k
        x = x * g % modulus
    table = []
    for m in range(1, modulus + 1):
        r = m % modulus
        if math.gcd(r, modulus) > 1:
            table.append(0)
        else:
            table.append(_exact(cmath.exp(2j * math.pi * index * log_table[r] / order)))
    return Character(tuple(table), name=f"chi_{modulus}_{index}", modulus=modulus,
                     index=index, primitive=index != 0)


def characters(modulus: int) -> list[Character]:
    return [dirichlet_character(modulus, j) for j in range(_totient(modulus))]


# ---------------------------------------------------------------- Ramanujan tau

def _euler_function(n_max: int) -> list[int]:
    """Coefficients of prod_{n >= 1} (1 - q^n) up to q^{n_max} (pentagonal theorem)."""
    e = [0] * (n_max + 1)
    k = 0
    while True:
        hit = False
        for kk in ((k, -k) if k else (0,)):
            p = kk * (3 * kk - 1) // 2
            if p <= n_max:
                e[p] += -1 if kk % 2 else 1
                hit = True
        if not hit:
            break
        k += 1
    return e


@lru_cache(maxsize=8)
def _tau_table(n_max: int) -> tuple[int, ...]:
    # Delta = q prod (1 - q^n)^24; power of a series with only O(sqrt n) nonzero
    # terms via b_n = (1/n) sum_j ((p + 1) j - n) a_j b_{n-j}
    m = n_max - 1
    a = _euler_function(m)
    nz = [j for j in range(1, m + 1) if a[j]]
    p = 24
    b = [0] * (m + 1)
    b[0] = 1
    for n in range(1, m + 1):
        acc = 0
        for j in nz:
            if j > n:
                break
            acc += ((p + 1) * j - n) * a[j] * b[n - j]
        b[n] = acc // n
    return tuple(b)


def ramanujan_tau(n_max: int) -> list[int]:
    """tau(1), ..., tau(n_max) as exact Python integers."""
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    size = 1 << max(6, (n_max - 1).bit_length())
    return list(_tau_table(size)[:n_max])


def _tau_float(n_max: int) -> np.ndarray:
    return np.array([float(t) for t in ramanujan_tau(n_max)])


def delta_form() -> CuspForm:
    """The discriminant Delta (weight 12, level 1), bound |tau(n)| <= d(n) n^{11/2}."""
    return CuspForm(12, 1, _tau_float, None, name="Delta", bound_constant=1.0)


def delta_sequence() -> CuspFormSequence:
    return CuspFormSequence(delta_form())
