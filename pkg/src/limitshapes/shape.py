"""Limit-shape curves, their normalizing constants and related statistics.

Curves are evaluated from closed forms where one exists and from one-dimensional
quadrature otherwise. Improper integrals are cut off where the integrand
drops below ``TAIL_EPS``; the discarded tail is bounded by the same quantity
times a geometric factor.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq
from scipy.special import gamma as _gamma
from scipy.special import zeta as _zeta

__all__ = [
    "TAIL_EPS",
    "ShapeCurve",
    "ShapeTriple",
    "E",
    "E_a",
    "dilog",
    "const_d",
    "density",
    "phi_rB",
    "phi_rBa",
    "phi_classic",
    "psi_distinct",
    "odd_distinct_shape",
    "odd_shape",
    "eq_unrestricted_slope",
    "romik_A",
    "romik_B",
    "convex_constant",
    "convex_inverse",
    "rth_inverse",
    "lebesgue_m",
    "lebesgue_m_inv",
    "lebesgue_general",
    "diffd_constants",
    "diffd_inverse",
    "diffdk_inverse",
    "romik_c",
    "bounded_c",
    "bounded_F",
    "bounded_G",
    "bounded_mr_c",
    "bounded_Fmr",
    "bounded_Gmr",
    "parts_constant",
    "durfee_constant",
    "durfee_of",
    "durfee_quintic_root",
    "durfee_quintic_value",
    "glaisher_identity_check",
    "stanton_identity_check",
    "named_curve",
    "CURVE_NAMES",
]

TAIL_EPS = 1e-14
_QUAD = dict(epsabs=1e-14, epsrel=1e-13, limit=400)

C_CLASSIC = math.pi / math.sqrt(6)
D_DISTINCT = math.pi / math.sqrt(12)
ROMIK_A = math.pi / 3


# ---------------------------------------------------------------------------
# Curve containers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ShapeCurve:
    """A nonincreasing limit-shape curve on ``support``.

    ``r`` fixes the scaling exponents: the x axis is scaled by n^{r/(1+r)} and
    the y axis by n^{1/(1+r)}.
    """

    name: str
    func: Callable[[float], float]
    inv: Callable[[float], float] | None = None
    r: float = 1.0
    unit_area: bool = True
    support: tuple[float, float] = (0.0, math.inf)
    params: tuple[tuple[str, float], ...] = field(default_factory=tuple)

    @property
    def x_exponent(self) -> float:
        return self.r / (1 + self.r)

    @property
    def y_exponent(self) -> float:
        return 1 / (1 + self.r)

    def __call__(self, t):
        if np.ndim(t) == 0:
            return float(self.func(float(t)))
        return np.array([self.func(float(x)) for x in np.ravel(t)]).reshape(np.shape(t))

    def inverse(self, y: float) -> float:
        """Compositional inverse; closed form if known, else bracketed root finding."""
        if self.inv is not None:
            return float(self.inv(float(y)))
        lo, hi = self.support
        lo = lo + 1e-15 if lo == 0 else lo
        if math.isinf(hi):
            hi = 1.0
            while self.func(hi) > y:
                hi *= 2
                if hi > 1e6:
                    raise ValueError(f"no preimage of {y} found")
        if not self.func(hi) <= y <= self.func(lo):
            raise ValueError(f"{y} outside the range of {self.name}")
        return brentq(lambda t: self.func(t) - y, lo, hi, xtol=1e-15, rtol=1e-15, maxiter=500)

    def area(self) -> float:
        lo, hi = self.support
        if math.isinf(hi):
            return quad(self.func, lo, 1.0, **_QUAD)[0] + quad(self.func, 1.0, math.inf, **_QUAD)[0]
        return quad(self.func, lo, hi, **_QUAD)[0]


@dataclass(frozen=True)
class ShapeTriple:
    """A limit object as (mass at 0, mass at infinity, density on (0, inf))."""

    alpha0: float
    alpha_inf: float
    density: Callable[[float], float]

    def total_mass(self) -> float:
        body = quad(self.density, 0, 1, **_QUAD)[0] + quad(self.density, 1, math.inf, **_QUAD)[0]
        return self.alpha0 + self.alpha_inf + body

    def check(self, tol: float = 1e-6) -> bool:
        return abs(self.total_mass() - 1) <= tol


# ---------------------------------------------------------------------------
# Elementary functions
# ---------------------------------------------------------------------------


def E(q: float) -> float:
    """Mean of a geometric variable with ratio q: q / (1 - q)."""
    return q / (1 - q)


def E_a(q: float, a: int | None) -> float:
    """Mean of a geometric variable with ratio q conditioned to be below ``a``."""
    if a is None:
        return E(q)
    if q == 0:
        return 0.0
    return _Ea_exp(-math.log(q), a)


def _E_exp(x: float) -> float:
    """E(e^{-x}) without cancellation."""
    return 1.0 / math.expm1(x) if x < 700 else math.exp(-x)


def _Ea_exp(x: float, a: int | None) -> float:
    """E_a(e^{-x}) without cancellation."""
    if a is None:
        return _E_exp(x)
    if x * a < 1e-3:  # series: (a-1)/2 - (a^2-1) x / 12 + ...
        return (a - 1) / 2 - (a * a - 1) * x / 12
    return _E_exp(x) - a * _E_exp(a * x)


def dilog(x: float) -> float:
    """Li_2(x) for 0 <= x <= 1, to absolute accuracy 1e-15.

    Power series with an explicit geometric tail bound on [0, 1/2]; the
    reflection Li_2(x) = pi^2/6 - ln(x) ln(1-x) - Li_2(1-x) above 1/2.
    """
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise ValueError("dilog is implemented on [0, 1]")
    if x > 0.5:
        if x == 1.0:
            return math.pi**2 / 6
        return math.pi**2 / 6 - math.log(x) * math.log1p(-x) - dilog(1.0 - x)
    total = 0.0
    term = x
    k = 1
    while True:
        total += term / (k * k)
        k += 1
        term *= x
        # every later term is below term / k^2 and they decay at least geometrically
        if term / (k * k) / (1 - x) < 1e-17:
            break
    return total


def const_d(r: float, B: float, a: int | None = None) -> float:
    """The constant d(r, B, a); ``a=None`` is the unbounded limit."""
    if r < 1 or B <= 0:
        raise ValueError("need r >= 1 and B > 0")
    if a is not None and a < 2:
        raise ValueError("need a >= 2 or a = None")
    factor = 1.0 if a is None else 1 - a ** (-1 / r)
    inner = factor * float(_zeta(1 + 1 / r)) * float(_gamma(1 + 1 / r)) / (r * B ** (1 / r))
    return inner ** (r / (1 + r))


def density(y: float, r: float, B: float, a: int | None = None, c: float | None = None) -> float:
    """phi(y) = E_a(exp(-c B y^r)) with c = d(r, B, a) unless given."""
    if c is None:
        c = const_d(r, B, a)
    return _Ea_exp(c * B * y**r, a)


def _tail_cutoff(r: float, B: float, c: float, a: int | None) -> float:
    # E_a(e^{-x}) <= e^{-x} / (1 - e^{-x}) < TAIL_EPS once x > ln(1/TAIL_EPS) + 1
    x = math.log(1 / TAIL_EPS) + 1
    return (x / (c * B)) ** (1 / r)


def _phi_integral(t: float, r: float, B: float, a: int | None, c: float | None = None) -> float:
    if t <= 0:
        raise ValueError("t must be positive")
    if c is None:
        c = const_d(r, B, a)
    lo = (t / B) ** (1 / r)
    hi = _tail_cutoff(r, B, c, a)
    if lo >= hi:
        return 0.0
    val, err = quad(lambda y: _Ea_exp(c * B * y**r, a), lo, hi, **_QUAD)
    if err > 1e-9:
        raise ArithmeticError(f"quadrature did not converge (err={err:g})")
    return val


def phi_rB(t: float, r: float, B: float) -> float:
    """Limit shape of partitions with parts u_k ~ B k^r and free multiplicities."""
    return _phi_integral(t, r, B, None)


def phi_rBa(t: float, r: float, B: float, a: int) -> float:
    """Limit shape of partitions with parts u_k ~ B k^r and multiplicities below ``a``."""
    return _phi_integral(t, r, B, a)


def phi_classic(t: float) -> float:
    """Unrestricted partitions: -(1/c) ln(1 - e^{-ct}), c = pi/sqrt(6)."""
    return -math.log(-math.expm1(-C_CLASSIC * t)) / C_CLASSIC


def phi_classic_inv(y: float) -> float:
    return phi_classic(y)  # the curve is symmetric about y = x


def psi_distinct(t: float) -> float:
    """Distinct parts: (1/d) ln(1 + e^{-dt}), d = pi/sqrt(12)."""
    return math.log1p(math.exp(-D_DISTINCT * t)) / D_DISTINCT


def psi_distinct_inv(y: float) -> float:
    return -math.log(math.expm1(D_DISTINCT * y)) / D_DISTINCT


def odd_distinct_shape(t: float) -> float:
    """Distinct odd parts: Psi(t/sqrt 2)/sqrt 2 = (1/c) ln(1 + e^{-ct/2})."""
    return math.log1p(math.exp(-C_CLASSIC * t / 2)) / C_CLASSIC


def odd_shape(t: float) -> float:
    """Odd parts: Phi(t/sqrt 2)/sqrt 2 = -(1/c) ln(1 - e^{-ct/2})."""
    return phi_classic(t / math.sqrt(2)) / math.sqrt(2)


def eq_unrestricted_slope(x: float, r: float, B: float) -> float:
    """Right side of the first-order equation for the shape with parts ~ B k^r.

    It equals -d/dx Phi(x; r, B).
    """
    c = const_d(r, B)
    return x ** (1 / r - 1) / (r * B ** (1 / r)) * _E_exp(c * x)


# ---------------------------------------------------------------------------
# Romik's pair
# ---------------------------------------------------------------------------


def romik_A(x: float) -> float:
    """No parts differing by exactly one and no part equal to one."""
    q = math.exp(-ROMIK_A * x)
    num = 1 + q + math.sqrt(1 + 2 * q - 3 * q * q)
    return math.log(num / (2 * (1 - q))) / (2 * ROMIK_A)


def romik_B(x: float) -> float:
    """No part of multiplicity exactly one."""
    q = math.exp(-ROMIK_A * x)
    return math.log((1 - q + q * q) / (1 - q)) / ROMIK_A


# ---------------------------------------------------------------------------
# Convex partitions and r-th differences
# ---------------------------------------------------------------------------


def convex_constant() -> float:
    return 0.5 * math.pi ** (1 / 3) * float(_zeta(1.5)) ** (2 / 3)


def _conjugate_rth(t: float, r: int, c: float) -> float:
    B = 1 / math.factorial(r)
    hi = _tail_cutoff(r, B, c, None)
    if t >= hi:
        return 0.0
    fr = math.factorial(r - 1)
    f = lambda y: (y - t) ** (r - 1) / fr * _E_exp(c * B * y**r)  # noqa: E731
    return quad(f, t, hi, **_QUAD)[0]


def convex_inverse(x: float) -> float:
    """Inverse of the convex-partition limit shape (r = 2)."""
    if x <= 0:
        raise ValueError("x must be positive")
    return _conjugate_rth(x, 2, convex_constant())


def rth_inverse(t: float, r: int) -> float:
    """Inverse limit shape of partitions with nonnegative r-th differences."""
    if t <= 0:
        raise ValueError("t must be positive")
    if r < 2:
        raise ValueError("r must be at least 2")
    return _conjugate_rth(t, r, const_d(r, 1 / math.factorial(r)))


# ---------------------------------------------------------------------------
# Lebesgue identity
# ---------------------------------------------------------------------------

LEBESGUE_X0 = 2 * math.log(1 + math.sqrt(2)) / math.pi


def lebesgue_m(x: float) -> float:
    if x < 0:
        raise ValueError("x must be nonnegative")
    q = math.exp(-math.pi * x / 4)
    return 2 / math.pi * math.log((1 + q + math.sqrt(1 + 6 * q + q * q)) / 2)


def lebesgue_m_inv(x: float) -> float:
    """Inverse of :func:`lebesgue_m` on (0, x0] with x0 = m(0)."""
    if not 0 < x <= LEBESGUE_X0 + 1e-12:
        raise ValueError(f"lebesgue_m_inv is defined on (0, {LEBESGUE_X0}]")
    h = math.pi * x / 2
    val = 4 / math.pi * math.log((math.exp(-h) + 1) / math.expm1(h))
    return max(val, 0.0)


def lebesgue_general(ell: int, k: int, t: float) -> float:
    """Limit shape of the (ell, k) Lebesgue family; independent of ell."""
    if not 1 <= ell < k:
        raise ValueError("need 1 <= ell < k")
    if t < 0:
        raise ValueError("t must be nonnegative")
    s = math.sqrt(2 * k)
    q = math.exp(-math.pi * t / (2 * s))
    return 2 * math.sqrt(2) / (math.pi * math.sqrt(k)) * math.log(0.5 * (1 + q + math.sqrt(1 + q * q + 6 * q)))


def parts_constant() -> float:
    """Scaled expected number of parts in the Lebesgue family: m(0)."""
    return lebesgue_m(0.0)


def durfee_constant() -> float:
    """Scaled Durfee square of the Lebesgue family: the fixed point of m^{-1}."""
    return brentq(lambda x: lebesgue_m_inv(x) - x, 1e-6, LEBESGUE_X0, xtol=1e-15, rtol=1e-15)


def durfee_quintic_root() -> float:
    """Real root of y^5 - 2y^4 - 7y^3 - 9y^2 + 2y - 1."""
    roots = np.roots([1, -2, -7, -9, 2, -1])
    real = [z.real for z in roots if abs(z.imag) < 1e-10]
    if len(real) != 1:
        raise ArithmeticError("expected exactly one real root")
    return brentq(lambda y: ((((y - 2) * y - 7) * y - 9) * y + 2) * y - 1, real[0] - 0.1, real[0] + 0.1, xtol=1e-15)


def durfee_quintic_value() -> float:
    """(4/pi) log((5 - 30y - 24y^2 - 9y^3 + 4y^4)/14) at the quintic root."""
    y = durfee_quintic_root()
    return 4 / math.pi * math.log((5 - 30 * y - 24 * y**2 - 9 * y**3 + 4 * y**4) / 14)


def durfee_of(f: Callable[[float], float], lo: float = 1e-9, hi: float = 50.0) -> float:
    """Fixed point f(x) = x of a decreasing curve (the scaled Durfee square)."""
    g = lambda x: f(x) - x  # noqa: E731
    if g(lo) * g(hi) > 0:
        raise ValueError("no fixed point in bracket")
    return brentq(g, lo, hi, xtol=1e-15, rtol=1e-15)


# ---------------------------------------------------------------------------
# Minimal difference d
# ---------------------------------------------------------------------------


def _solve_fixed_c(ratio: float) -> float:
    """Positive root of c = sqrt(Li_2(1 - e^{-c * ratio}))."""
    g = lambda c: c - math.sqrt(dilog(-math.expm1(-c * ratio)))  # noqa: E731
    lo, hi = 1e-12, math.pi / math.sqrt(6) + 1.0
    return brentq(g, lo, hi, xtol=1e-15, rtol=1e-15)


def romik_c(z: float) -> float:
    """Positive root of c^2 = Li_2(1 - e^{-cz})."""
    if z <= 0:
        raise ValueError("z must be positive")
    return _solve_fixed_c(z)


@lru_cache(maxsize=None)
def diffd_constants(d: int) -> tuple[float, float, float, float]:
    """(y_d, gamma, w, c) for partitions whose parts differ by at least d."""
    if d < 1:
        raise ValueError("d must be at least 1")
    y = brentq(lambda v: (1 - v) ** d - v, 0.0, 1.0, xtol=1e-15, rtol=1e-15)
    L = math.log1p(-y)
    g = -L / math.sqrt(dilog(y) + d / 2 * L * L)
    w = math.sqrt(1 - d / 2 * g * g)
    c = _solve_fixed_c(g / w)
    return y, g, w, c


def _diff_inverse(d: int, z: float, x: float) -> float:
    w2 = 1 - d * z * z / 2
    if w2 <= 0:
        raise ValueError("inadmissible z: 1 - d z^2 / 2 must be positive")
    w = math.sqrt(w2)
    c = _solve_fixed_c(z / w)
    k = c / w
    # log of (e^{k z d} - e^{k z (d-1)}) e^{-k d x} / (1 - e^{-k x})
    log_arg = k * z * d + math.log(-math.expm1(-k * z)) - k * d * x - math.log(-math.expm1(-k * x))
    return log_arg / k


def diffd_inverse(d: int, x: float) -> float:
    """Inverse limit shape of partitions with parts at least ``d`` apart; support (0, gamma)."""
    if x <= 0:
        raise ValueError("x must be positive")
    return _diff_inverse(d, diffd_constants(d)[1], x)


def diffdk_inverse(d: int, z: float, x: float) -> float:
    """Inverse limit shape with exactly k ~ z sqrt(n) parts at least ``d`` apart."""
    if x <= 0 or z <= 0:
        raise ValueError("x and z must be positive")
    return _diff_inverse(d, z, x)


# ---------------------------------------------------------------------------
# Bounded even parts and the (m, r) generalization
# ---------------------------------------------------------------------------


def _normalize(mass: Callable[[float], float]) -> float:
    """Find c with mass(c) = 1 for a mass decreasing in c."""
    lo, hi = 1e-3, 1.0
    while mass(lo) < 1:
        lo /= 10
        if lo < 1e-12:
            raise ArithmeticError("normalization solver failed (lower bracket)")
    while mass(hi) > 1:
        hi *= 2
        if hi > 1e6:
            raise ArithmeticError("normalization solver failed (upper bracket)")
    return brentq(lambda c: mass(c) - 1, lo, hi, xtol=1e-14, rtol=1e-15)


@lru_cache(maxsize=None)
def bounded_mr_c(m: int, r: int, b: float) -> float:
    """Normalizing constant of the bounded family with parts m^r j^r."""
    top = b ** (1 / r)
    M = m**r

    def mass(c: float) -> float:
        f = lambda y: M * y**r * _E_exp(c * M * y**r)  # noqa: E731
        return quad(f, 0, top, **_QUAD)[0]

    return _normalize(mass)


def bounded_c(b: float) -> float:
    """Normalizing constant for even parts with largest part at most 2b sqrt(n)."""
    return bounded_mr_c(2, 1, b)


def bounded_Fmr(m: int, r: int, b: float, t: float) -> float:
    """Shape of partitions into parts m^r j^r with j^r at most b n^{r/(r+1)}; support (0, m^r b]."""
    M = m**r
    if t <= 0:
        raise ValueError("t must be positive")
    if t >= M * b:
        return 0.0
    c = bounded_mr_c(m, r, b)
    lo = t ** (1 / r) / m
    return quad(lambda y: _E_exp(c * M * y**r), lo, b ** (1 / r), **_QUAD)[0]


def bounded_Gmr(m: int, r: int, b: float, s: float) -> float:
    """Image of :func:`bounded_Fmr` under the divide / multiply / conjugate map; support (0, b]."""
    M = m**r
    return M * bounded_Fmr(m, r, b, M * s)


def bounded_F(b: float, t: float) -> float:
    """Even parts with largest part at most 2k, k ~ b sqrt(n); support (0, 2b]."""
    return bounded_Fmr(2, 1, b, t)


def bounded_G(b: float, t: float) -> float:
    """Even parts with at most k parts, k ~ b sqrt(n); support (0, b]."""
    return bounded_Gmr(2, 1, b, t)


# ---------------------------------------------------------------------------
# Identities between shapes
# ---------------------------------------------------------------------------


def glaisher_identity_check(grid: Iterable[float]) -> float:
    """max |(1/2) sum_k Psi(t 2^{k-1}) - Phi(t/sqrt 2)/sqrt 2| over the grid.

    The left side is the image of the distinct-parts shape under Glaisher's
    map; the right side is the odd-parts shape.
    """
    worst = 0.0
    for t in grid:
        total, k = 0.0, 1
        while True:
            term = 0.5 * psi_distinct(t * 2 ** (k - 1))
            total += term
            if term <= 1e-12 * total:
                break
            k += 1
        worst = max(worst, abs(total - odd_shape(t)))
    return worst


def stanton_identity_check(r: int, m: int, grid: Iterable[float]) -> float:
    """max |(m-1) sum_k m^{r(k-1)-k} Phi(t m^{r(k-1)}; r, 1, m^r) - Phi(t; r, (m/(m-1))^r)|."""
    M = m**r
    worst = 0.0
    for t in grid:
        total, k = 0.0, 1
        while True:
            scale = m ** (r * (k - 1))
            term = (m - 1) * m ** (r * (k - 1) - k) * phi_rBa(t * scale, r, 1.0, M)
            total += term
            if term <= 1e-12 * total:
                break
            k += 1
        rhs = phi_rB(t, r, (m / (m - 1)) ** r)
        worst = max(worst, abs(total - rhs))
    return worst


# ---------------------------------------------------------------------------
# Registry for the command line
# ---------------------------------------------------------------------------


def named_curve(name: str, params: dict[str, float] | None = None) -> ShapeCurve:
    """Look up a curve by name with numeric parameters."""
    p = dict(params or {})
    get = lambda key, default=None: p.get(key, default)  # noqa: E731
    items = tuple(sorted(p.items()))
    match name:
        case "phi":
            return ShapeCurve("phi", phi_classic, phi_classic_inv)
        case "psi":
            return ShapeCurve("psi", psi_distinct, psi_distinct_inv)
        case "odd":
            return ShapeCurve("odd", odd_shape)
        case "odd-distinct":
            return ShapeCurve("odd-distinct", odd_distinct_shape)
        case "phi-rB":
            r, B = float(get("r", 1)), float(get("B", 1))
            return ShapeCurve("phi-rB", lambda t: phi_rB(t, r, B), r=r, params=items)
        case "phi-rBa":
            r, B, a = float(get("r", 1)), float(get("B", 1)), int(get("a", 2))
            return ShapeCurve("phi-rBa", lambda t: phi_rBa(t, r, B, a), r=r, params=items)
        case "romik-a":
            return ShapeCurve("romik-a", romik_A)
        case "romik-b":
            return ShapeCurve("romik-b", romik_B)
        case "convex-inverse":
            return ShapeCurve("convex-inverse", convex_inverse, r=2)
        case "rth-inverse":
            r = int(get("r", 2))
            return ShapeCurve("rth-inverse", lambda t: rth_inverse(t, r), r=r, params=items)
        case "lebesgue-m":
            return ShapeCurve("lebesgue-m", lebesgue_m, inv=lebesgue_m_inv)
        case "lebesgue-m-inv":
            return ShapeCurve("lebesgue-m-inv", lebesgue_m_inv, inv=lebesgue_m, support=(0.0, LEBESGUE_X0))
        case "lebesgue-general":
            ell, k = int(get("ell", 1)), int(get("k", 2))
            return ShapeCurve("lebesgue-general", lambda t: lebesgue_general(ell, k, t), params=items)
        case "diffd-inverse":
            d = int(get("d", 1))
            g = diffd_constants(d)[1]
            return ShapeCurve("diffd-inverse", lambda x: diffd_inverse(d, x), support=(0.0, g), params=items)
        case "diffdk-inverse":
            d, z = int(get("d", 1)), float(get("z", 0.5))
            return ShapeCurve("diffdk-inverse", lambda x: diffdk_inverse(d, z, x), support=(0.0, z), unit_area=False, params=items)
        case "bounded-F":
            b = float(get("b", 1))
            return ShapeCurve("bounded-F", lambda t: bounded_F(b, t), support=(0.0, 2 * b), params=items)
        case "bounded-G":
            b = float(get("b", 1))
            return ShapeCurve("bounded-G", lambda t: bounded_G(b, t), support=(0.0, b), params=items)
        case "bounded-Fmr":
            m, r, b = int(get("m", 2)), int(get("r", 1)), float(get("b", 1))
            return ShapeCurve("bounded-Fmr", lambda t: bounded_Fmr(m, r, b, t), r=r, support=(0.0, m**r * b), params=items)
        case "bounded-Gmr":
            m, r, b = int(get("m", 2)), int(get("r", 1)), float(get("b", 1))
            return ShapeCurve("bounded-Gmr", lambda t: bounded_Gmr(m, r, b, t), r=r, support=(0.0, b), params=items)
    raise KeyError(f"unknown curve {name!r}; choose from {', '.join(CURVE_NAMES)}")


CURVE_NAMES: Sequence[str] = (
    "phi",
    "psi",
    "odd",
    "odd-distinct",
    "phi-rB",
    "phi-rBa",
    "romik-a",
    "romik-b",
    "convex-inverse",
    "rth-inverse",
    "lebesgue-m",
    "lebesgue-m-inv",
    "lebesgue-general",
    "diffd-inverse",
    "diffdk-inverse",
    "bounded-F",
    "bounded-G",
    "bounded-Fmr",
    "bounded-Gmr",
)
