"""Exact counting, exhaustive enumeration and asymptotic counting formulas.

Counts are exact Python integers. Classes whose restriction acts on each part
size separately are counted with a product generating function; the
difference-condition classes each have a dedicated recursion. Exhaustive
enumeration (``enumerate_all``) is the brute-force oracle for both.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import gamma, zeta

from .core import (
    ClassSpec,
    Convex,
    EvenBoundedCount,
    LebesgueL,
    MinDiff,
    MultiplesBoundedCount,
    Partition,
    PartSizeSet,
    RomikA,
    SelfConjugate,
)

__all__ = [
    "PartSizeSet",
    "CountTable",
    "NotApplicable",
    "count",
    "count_table",
    "count_by_largest_part",
    "enumerate_all",
    "all_partitions",
    "asymptotic_unrestricted",
    "asymptotic_distinct",
    "ingham_printed",
    "roth_szekeres_printed",
    "ENUMERATION_LIMIT",
]

ENUMERATION_LIMIT = 60


class NotApplicable(ValueError):
    """Raised when an asymptotic formula is requested off the lattice ``gcd(U) * Z``."""


@dataclass(frozen=True)
class CountTable:
    """Exact counts ``|C_n|`` for ``n = 0..N``."""

    spec: str
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.counts or self.counts[0] != 1:
            raise ValueError("entry 0 must be 1")
        if any(c < 0 for c in self.counts):
            raise ValueError("counts must be nonnegative")

    def __getitem__(self, n: int) -> int:
        return self.counts[n]

    def __len__(self) -> int:
        return len(self.counts)


# ---------------------------------------------------------------------------
# Multiplicative classes
# ---------------------------------------------------------------------------


def _multiplicative_table(c: ClassSpec, N: int) -> list[int]:
    """Multiply in one factor per part size, bottom-up over sizes."""
    table = [0] * (N + 1)
    table[0] = 1
    for i in range(1, N + 1):
        rule = c.rule(i)
        if rule.bound == 1:
            continue
        old = table
        if rule.bound is None:
            new = old[:]
            for n in range(i, N + 1):
                new[n] += new[n - i]
        else:
            # factor (1 - q^{ia}) / (1 - q^i) as a running window sum
            a = rule.bound
            new = [0] * (N + 1)
            for n in range(N + 1):
                acc = old[n]
                if n >= i:
                    acc += new[n - i]
                if n >= i * a:
                    acc -= old[n - i * a]
                new[n] = acc
        if rule.forbid_single:
            for n in range(N, i - 1, -1):
                new[n] -= old[n - i]
        table = new
    return table


def count_by_largest_part(c: ClassSpec, n: int) -> int:
    """Top-down recursion on the largest admissible part size.

    Independent of :func:`count_table`; used as a cross-check for the
    multiplicative classes.
    """
    if not c.multiplicative:
        raise TypeError("largest-part recursion needs a multiplicative class")

    @lru_cache(maxsize=None)
    def g(rem: int, k: int) -> int:
        if rem == 0:
            return 1
        if k == 0:
            return 0
        rule = c.rule(k)
        total = 0
        m = 0
        while m * k <= rem:
            if rule.allows(m):
                total += g(rem - m * k, k - 1)
            elif rule.bound is not None and m >= rule.bound:
                break
            m += 1
        return total

    import sys

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * n + 100))
    try:
        return g(n, n)
    finally:
        sys.setrecursionlimit(limit)


# ---------------------------------------------------------------------------
# Difference-condition classes
# ---------------------------------------------------------------------------


def _exact_parts_table(N: int, K: int) -> list[list[int]]:
    """``P[n][k]``: partitions of n into exactly k parts."""
    P = [[0] * (K + 1) for _ in range(N + 1)]
    P[0][0] = 1
    for n in range(1, N + 1):
        for k in range(1, min(n, K) + 1):
            P[n][k] = P[n - 1][k - 1] + P[n - k][k]
    return P


def _mindiff_table(c: MinDiff, N: int) -> list[int]:
    # Subtract the staircase d*(k-1), d*(k-2), ..., 0 from a k-part partition.
    P = _exact_parts_table(N, N)
    out = [0] * (N + 1)
    out[0] = 1
    for n in range(1, N + 1):
        k = 1
        while True:
            rest = n - c.d * k * (k - 1) // 2
            if c.forbid_size_one:
                rest -= k
            if rest < k:
                break
            out[n] += P[rest][k]
            k += 1
    return out


def _at_most_parts(N: int, K: int, step: int = 1) -> list[int]:
    """Partitions of n into at most K parts, all divisible by ``step``."""
    base = [0] * (N // step + 1)
    base[0] = 1
    for size in range(1, K + 1):  # conjugate: parts of size <= K
        for n in range(size, len(base)):
            base[n] += base[n - size]
    out = [0] * (N + 1)
    for n in range(0, N + 1, step):
        out[n] = base[n // step]
    return out


def _selfconjugate_table(N: int) -> list[int]:
    # Durfee square delta plus two mirror images of a partition of (n - delta^2)/2
    # into parts of size at most delta.
    half = N // 2 + 1
    out = [0] * (N + 1)
    delta = 0
    while delta * delta <= N:
        bounded = [0] * half
        bounded[0] = 1
        for size in range(1, delta + 1):
            for m in range(size, half):
                bounded[m] += bounded[m - size]
        for n in range(delta * delta, N + 1):
            rest = n - delta * delta
            if rest % 2 == 0:
                out[n] += bounded[rest // 2]
        delta += 1
    return out


def _lebesgue_table(c: LebesgueL, N: int) -> list[int]:
    ell, k = c.ell, c.k

    @lru_cache(maxsize=None)
    def f(rem: int, last: int, last_special: int) -> int:
        # rem: size still to place; parts are added in increasing order
        total = 1 if rem == 0 else 0
        start = last + k if last else 1
        for x in range(start, rem + 1):
            res = x % k
            if res == ell:
                if last_special and x - last_special < 2 * k:
                    continue
                total += f(rem - x, x, x)
            elif res == 0:
                total += f(rem - x, x, last_special)
        return total

    return [f(n, 0, 0) for n in range(N + 1)]


def _romik_a_table(N: int) -> list[int]:
    @lru_cache(maxsize=None)
    def f(rem: int, last: int) -> int:
        # add a new block of equal parts of value v > last, v != last + 1, v >= 2
        total = 1 if rem == 0 else 0
        for v in range(max(2, last + 2), rem + 1):
            for m in range(1, rem // v + 1):
                total += f(rem - m * v, v)
        return total

    return [f(n, 0) for n in range(N + 1)]


def _convex_table(c: Convex, N: int) -> list[int]:
    r = c.r
    weights = [(-1) ** s * math.comb(r, s) for s in range(r + 1)]

    @lru_cache(maxsize=None)
    def f(rem: int, below: tuple[int, ...]) -> int:
        # ``below`` holds the r parts under the next one (nearest first), zero padded.
        total = 1 if rem == 0 else 0
        for x in range(max(below[0], 1), rem + 1):
            window = (x, *below)
            if sum(w * v for w, v in zip(weights, window)) < 0:
                continue
            total += f(rem - x, window[:r])
        return total

    return [f(n, (0,) * r) for n in range(N + 1)]


def count_table(c: ClassSpec, N: int) -> CountTable:
    """Exact counts for ``n = 0..N``."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    if c.multiplicative:
        counts = _multiplicative_table(c, N)
    elif isinstance(c, MinDiff):
        counts = _mindiff_table(c, N)
    elif isinstance(c, EvenBoundedCount):
        counts = _at_most_parts(N, c.k, step=2)
    elif isinstance(c, MultiplesBoundedCount):
        counts = _at_most_parts(N, c.k, step=c.m**c.r)
    elif isinstance(c, SelfConjugate):
        counts = _selfconjugate_table(N)
    elif isinstance(c, LebesgueL):
        counts = _lebesgue_table(c, N)
    elif isinstance(c, RomikA):
        counts = _romik_a_table(N)
    elif isinstance(c, Convex):
        counts = _convex_table(c, N)
    else:
        raise TypeError(f"no counting strategy registered for {c!r}")
    return CountTable(c.spec, tuple(counts))


def count(c: ClassSpec, n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return count_table(c, n)[n]


# ---------------------------------------------------------------------------
# Exhaustive enumeration
# ---------------------------------------------------------------------------


@lru_cache(maxsize=8)
def all_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in increasing lexicographic order of their part tuples."""
    if n > ENUMERATION_LIMIT:
        raise ValueError(f"enumeration limited to n <= {ENUMERATION_LIMIT}")
    out: list[tuple[int, ...]] = []

    def rec(rem: int, cap: int, prefix: list[int]) -> None:
        if rem == 0:
            out.append(tuple(prefix))
            return
        for x in range(1, min(rem, cap) + 1):
            prefix.append(x)
            rec(rem - x, x, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(Partition(p) for p in out)


def enumerate_all(c: ClassSpec, n: int) -> list[Partition]:
    """Every partition of ``n`` in ``c``, in increasing lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [p for p in all_partitions(n) if c.contains(p)]


# ---------------------------------------------------------------------------
# Asymptotics
# ---------------------------------------------------------------------------


def _check_lattice(U: PartSizeSet, n: int) -> None:
    if not U.is_polynomial:
        raise ValueError("asymptotic formulas need a polynomial part-size set")
    if n % U.gcd:
        raise NotApplicable(f"n={n} is not a multiple of gcd(U)={U.gcd}")


def _saddle(A: float, r: int, n: float) -> tuple[float, float]:
    """Saddle point s and variance V for log F(e^{-s}) ~ A s^{-1/r}."""
    s = (A / (r * n)) ** (r / (r + 1))
    V = A * (1 / r) * (1 / r + 1) * s ** (-1 / r - 2)
    return s, V


def asymptotic_unrestricted(U: PartSizeSet, n: int) -> float:
    """Leading asymptotic of the number of partitions of ``n`` with parts in ``U``.

    Saddle-point evaluation of prod (1 - q^u)^{-1} using the Mellin expansion
    log F(e^{-s}) = A s^{-1/r} + (1/2 + E/(rB)) log s + D'(0) + o(1), with
    D'(0) = (1/2 + E/(rB)) log B - (r/2) log 2 pi + sum log Gamma(1 + rho_j).
    """
    _check_lattice(U, n)
    r, B, E = U.r, U.B, U.E
    A = math.gamma(1 + 1 / r) * float(zeta(1 + 1 / r)) * B ** (-1 / r)
    s, V = _saddle(A, r, n)
    kappa = 0.5 + E / (r * B)
    gam = np.prod(gamma(1 + U.roots().astype(complex)))
    log_const = kappa * math.log(B) - (r / 2) * math.log(2 * math.pi) + math.log(abs(gam.real))
    log_val = A * s ** (-1 / r) + s * n + kappa * math.log(s) + log_const - 0.5 * math.log(2 * math.pi * V)
    return math.exp(log_val)


def asymptotic_distinct(U: PartSizeSet, n: int) -> float:
    """Leading asymptotic of the number of partitions of ``n`` into distinct parts from ``U``.

    Saddle-point evaluation of prod (1 + q^u), where
    log F(e^{-s}) = A_2 s^{-1/r} - (1/2 + E/(rB)) log 2 + o(1).
    """
    _check_lattice(U, n)
    r, B, E = U.r, U.B, U.E
    A = math.gamma(1 + 1 / r) * (1 - 2 ** (-1 / r)) * float(zeta(1 + 1 / r)) * B ** (-1 / r)
    s, V = _saddle(A, r, n)
    log_val = A * s ** (-1 / r) + s * n - (0.5 + E / (r * B)) * math.log(2) - 0.5 * math.log(2 * math.pi * V)
    return math.exp(log_val)


def _d(r: int, B: float, a: int | None) -> float:
    factor = 1.0 if a is None else 1 - a ** (-1 / r)
    return (factor * float(zeta(1 + 1 / r)) * math.gamma(1 + 1 / r) / (r * B ** (1 / r))) ** (r / (1 + r))


def ingham_printed(U: PartSizeSet, n: int) -> float:
    """The unrestricted formula with its constant c_1 in its uncorrected literal form, kept for comparison."""
    _check_lattice(U, n)
    r, B, E = U.r, U.B, U.E
    d = _d(r, B, None)
    gam = abs(np.prod(gamma(1 + U.roots().astype(complex))).real)
    c1 = d ** (1 + E / (B * r)) * B ** (0.5 + E / (B * r)) * (1 + 1 / r) ** -0.5 * (2 * math.pi) ** (-(r + 1) / 2) * gam
    expo = (1 + r) * d * B ** (-1 / (1 + r)) * n ** (1 / (1 + r))
    power = (B * r + E) / (B * (r + 1)) + 0.5
    return math.exp(expo - math.log(c1) - power * math.log(n))


def roth_szekeres_printed(U: PartSizeSet, n: int) -> float:
    """The distinct-parts formula with its constant c_2 in its uncorrected literal form, kept for comparison."""
    _check_lattice(U, n)
    r, B, E = U.r, U.B, U.E
    d = _d(r, B, 2)
    c2 = 2 ** -(1 + E / (r * B)) * d ** (1 + E / (B * r)) * B ** (0.5 + E / (B * r)) * (1 + 1 / r) ** -0.5 * math.pi**-0.5
    expo = (1 + r) * d * B ** (-1 / (1 + r)) * n ** (1 / (1 + r))
    power = (B * r + E) / (2 * B * (r + 1)) + 1
    return math.exp(expo - math.log(c2) - power * math.log(n))
