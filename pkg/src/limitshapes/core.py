"""Partition representations, diagram functions and partition classes.

A partition is stored as a nonincreasing tuple of positive parts. The sparse
multiplicity view maps part size to count. Every restricted family used in
the package is a small frozen dataclass exposing ``contains``; families whose
constraint acts independently on each part size (Andrews-type classes) also
expose ``rule(i)`` so that the counting code can use a product generating
function.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache

import numpy as np

__all__ = [
    "Partition",
    "MultiplicityVector",
    "PartSizeSet",
    "MultRule",
    "ClassSpec",
    "Unrestricted",
    "AndrewsBound",
    "PartsIn",
    "Distinct",
    "Odd",
    "OddDistinct",
    "GlaisherO",
    "GlaisherD",
    "Convex",
    "MinDiff",
    "RomikA",
    "RomikB",
    "LebesgueL",
    "LebesgueSimple",
    "SelfConjugate",
    "DistinctMod4",
    "EvenBoundedLargest",
    "EvenBoundedCount",
    "MultiplesBoundedLargest",
    "MultiplesBoundedCount",
    "to_multiplicities",
    "from_multiplicities",
    "conjugate",
    "durfee",
    "diagram",
    "scaled_diagram",
    "member",
    "rth_differences",
    "parse_class",
]


# ---------------------------------------------------------------------------
# Partitions
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Partition:
    """A partition stored as its nonincreasing tuple of parts."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be nonincreasing: {parts}")
        if parts and parts[-1] < 1:
            raise ValueError(f"parts must be positive: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Partition":
        """Build from parts in any order."""
        return cls(tuple(sorted((int(p) for p in parts), reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the canonical text form ``"4,3,1"`` (empty string is the empty partition)."""
        text = text.strip().strip("()[]")
        if not text:
            return cls()
        return cls.of(int(tok) for tok in text.split(","))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


class MultiplicityVector(Mapping[int, int]):
    """Immutable sparse map from part size to a positive multiplicity."""

    __slots__ = ("_items", "_dict")

    def __init__(self, counts: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        raw = dict(counts.items() if isinstance(counts, Mapping) else counts)
        items = []
        for size, mult in raw.items():
            size, mult = int(size), int(mult)
            if size < 1:
                raise ValueError(f"part size must be positive, got {size}")
            if mult < 0:
                raise ValueError(f"multiplicity must be nonnegative, got {mult} at {size}")
            if mult:
                items.append((size, mult))
        items.sort()
        self._items = tuple(items)
        self._dict = dict(items)

    def __getitem__(self, size: int) -> int:
        return self._dict[size]

    def get(self, size, default=0):  # type: ignore[override]
        return self._dict.get(size, default)

    def __iter__(self) -> Iterator[int]:
        return (s for s, _ in self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __hash__(self) -> int:
        return hash(self._items)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiplicityVector):
            return self._items == other._items
        if isinstance(other, Mapping):
            return self._items == MultiplicityVector(other)._items
        return NotImplemented

    def __repr__(self) -> str:
        body = ", ".join(f"{s}: {m}" for s, m in self._items)
        return f"MultiplicityVector({{{body}}})"

    @property
    def weight(self) -> int:
        return sum(s * m for s, m in self._items)

    def to_partition(self) -> Partition:
        return from_multiplicities(self)


def to_multiplicities(p: Partition) -> MultiplicityVector:
    counts: dict[int, int] = {}
    for part in p.parts:
        counts[part] = counts.get(part, 0) + 1
    return MultiplicityVector(counts)


def from_multiplicities(m: Mapping[int, int]) -> Partition:
    parts: list[int] = []
    for size in sorted(m, reverse=True):
        parts.extend([size] * m[size])
    return Partition(tuple(parts))


def conjugate(p: Partition) -> Partition:
    if not p.parts:
        return Partition()
    largest = p.parts[0]
    counts = [0] * (largest + 1)
    for part in p.parts:
        counts[part] += 1
    out = []
    running = 0
    for i in range(largest, 0, -1):
        running += counts[i]
        out.append(running)
    return Partition(tuple(reversed(out)))


def durfee(p: Partition) -> int:
    d = 0
    for i, part in enumerate(p.parts, start=1):
        if part >= i:
            d = i
        else:
            break
    return d


def diagram(p: Partition, t: float) -> int:
    """Number of parts of size at least ``ceil(t)``."""
    if t <= 0:
        raise ValueError("diagram is defined for t > 0")
    k = math.ceil(t)
    return sum(1 for part in p.parts if part >= k)


def scaled_diagram(p: Partition, n: int, alpha: float, grid: Sequence[float]) -> np.ndarray:
    """Evaluate ``(alpha/n) * D(alpha * t)`` on each grid point."""
    grid = np.asarray(grid, dtype=float)
    if grid.size == 0:
        raise ValueError("grid must be nonempty")
    if alpha <= 0 or n <= 0:
        raise ValueError("alpha and n must be positive")
    ascending = np.sort(np.asarray(p.parts, dtype=float))
    thresholds = np.ceil(alpha * grid)
    counts = ascending.size - np.searchsorted(ascending, thresholds, side="left")
    return (alpha / n) * counts


def rth_differences(p: Partition, r: int) -> list[int]:
    """The r-th differences of ``p`` with base case at the last part.

    Uses the recursion d^k_i = d^{k-1}_i - d^{k-1}_{i+1}, with d^k_l = lambda_l
    at the last index and d^0 = lambda.
    """
    diffs = list(p.parts)
    n = len(diffs)
    for _ in range(r):
        diffs = [diffs[i] - diffs[i + 1] for i in range(n - 1)] + diffs[n - 1 :]
    return diffs


# ---------------------------------------------------------------------------
# Part-size sets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PartSizeSet:
    """A strictly increasing set of allowed part sizes.

    The set is either ``{P(j) : j >= 1, j mod modulus in residues}`` for an
    integer-valued polynomial ``P`` with rational coefficients ``coeffs``
    (highest degree first), or an explicit finite list ``values``.
    """

    coeffs: tuple[Fraction, ...] | None = None
    values: tuple[int, ...] | None = None
    modulus: int = 1
    residues: tuple[int, ...] = (0,)
    label: str = ""

    def __post_init__(self) -> None:
        if (self.coeffs is None) == (self.values is None):
            raise ValueError("give exactly one of coeffs or values")
        if self.coeffs is not None:
            coeffs = tuple(Fraction(c) for c in self.coeffs)
            while len(coeffs) > 1 and coeffs[0] == 0:
                coeffs = coeffs[1:]
            if len(coeffs) < 2 or coeffs[0] <= 0:
                raise ValueError("polynomial must have degree >= 1 and positive leading coefficient")
            object.__setattr__(self, "coeffs", coeffs)
            residues = tuple(sorted({int(r) % self.modulus for r in self.residues}))
            if not residues:
                raise ValueError("residue set must be nonempty")
            object.__setattr__(self, "residues", residues)
            prev = 0
            for j in range(1, 2 * self.modulus * (len(coeffs) + 2)):
                u = self._poly(j)
                if u.denominator != 1 or u <= prev:
                    raise ValueError("polynomial must be integer valued and strictly increasing from >= 1")
                prev = u
        else:
            vals = tuple(int(v) for v in self.values)
            if not vals or any(b <= a for a, b in zip(vals, vals[1:])) or vals[0] < 1:
                raise ValueError("explicit values must be a nonempty strictly increasing list of positive integers")
            object.__setattr__(self, "values", vals)

    # constructors -------------------------------------------------------
    @classmethod
    def polynomial(cls, *coeffs, modulus: int = 1, residues: Iterable[int] = (0,), label: str = "") -> "PartSizeSet":
        return cls(coeffs=tuple(Fraction(c) for c in coeffs), modulus=modulus, residues=tuple(residues), label=label)

    @classmethod
    def explicit(cls, values: Iterable[int], label: str = "") -> "PartSizeSet":
        return cls(values=tuple(sorted(set(int(v) for v in values))), label=label)

    @classmethod
    def integers(cls) -> "PartSizeSet":
        return cls.polynomial(1, 0, label="integers")

    @classmethod
    def odd(cls) -> "PartSizeSet":
        return cls.polynomial(2, -1, label="odd")

    @classmethod
    def triangular(cls) -> "PartSizeSet":
        return cls.binomial(2)

    @classmethod
    def binomial(cls, r: int) -> "PartSizeSet":
        """Sizes ``binom(r - 1 + k, r)`` for k >= 1."""
        coeffs = [Fraction(1)]
        for i in range(r):  # product of (k + i) over i < r, divided by r!
            coeffs = _poly_mul(coeffs, [Fraction(1), Fraction(i)])
        fact = math.factorial(r)
        return cls.polynomial(*[c / fact for c in coeffs], label=f"binom{r}")

    @classmethod
    def powers(cls, r: int, exclude_multiples_of: int | None = None) -> "PartSizeSet":
        coeffs = [1] + [0] * r
        if exclude_multiples_of is None:
            return cls.polynomial(*coeffs, label=f"powers{r}")
        m = exclude_multiples_of
        return cls.polynomial(*coeffs, modulus=m, residues=range(1, m), label=f"powers{r}-not-{m}")

    @classmethod
    def not_divisible(cls, m: int) -> "PartSizeSet":
        return cls.polynomial(1, 0, modulus=m, residues=range(1, m), label=f"not-div-{m}")

    @classmethod
    def residue_classes(cls, modulus: int, residues: Iterable[int]) -> "PartSizeSet":
        return cls.polynomial(1, 0, modulus=modulus, residues=residues, label=f"mod{modulus}")

    # structure ----------------------------------------------------------
    def _poly(self, j: int) -> Fraction:
        acc = Fraction(0)
        for c in self.coeffs:
            acc = acc * j + c
        return acc

    @property
    def is_polynomial(self) -> bool:
        """True when the set is the full image ``{P(k): k >= 1}``."""
        return self.coeffs is not None and self.modulus == 1

    @property
    def r(self) -> int:
        if self.coeffs is None:
            raise ValueError("degree is undefined for an explicit list")
        return len(self.coeffs) - 1

    @property
    def B(self) -> float:
        if self.coeffs is None:
            raise ValueError("leading coefficient is undefined for an explicit list")
        density = Fraction(self.modulus, len(self.residues))
        return float(self.coeffs[0] * density**self.r)

    @property
    def E(self) -> float:
        if not self.is_polynomial:
            raise ValueError("E is only defined for a polynomial set")
        return float(self.coeffs[1])

    def roots(self) -> np.ndarray:
        """The numbers rho_j with u_k = B * prod(k + rho_j)."""
        if not self.is_polynomial:
            raise ValueError("roots are only defined for a polynomial set")
        return -np.roots([float(c) for c in self.coeffs])

    def u(self, k: int) -> int:
        """The k-th smallest element (1-indexed)."""
        if self.values is not None:
            return self.values[k - 1]
        seen = 0
        j = 0
        while seen < k:
            j += 1
            if j % self.modulus in self.residues:
                seen += 1
        return int(self._poly(j))

    def values_upto(self, n: int) -> list[int]:
        if self.values is not None:
            return [v for v in self.values if v <= n]
        out = []
        j = 1
        while True:
            v = self._poly(j)
            if v > n:
                break
            if j % self.modulus in self.residues:
                out.append(int(v))
            j += 1
        return out

    @cached_property
    def gcd(self) -> int:
        if self.values is not None:
            return math.gcd(*self.values)
        sample = self.values_upto(int(self._poly(self.modulus * (self.r + 2) + 1)))
        return math.gcd(*sample)

    def contains(self, u: int) -> bool:
        return _set_contains(self, int(u))

    def _contains_uncached(self, u: int) -> bool:
        if u < 1:
            return False
        if self.values is not None:
            return u in self.values
        lo, hi = 1, max(2, u + 1)
        while lo < hi:
            mid = (lo + hi) // 2
            if self._poly(mid) < u:
                lo = mid + 1
            else:
                hi = mid
        return self._poly(lo) == u and lo % self.modulus in self.residues

    def __str__(self) -> str:
        return self.label or (
            f"poly{tuple(str(c) for c in self.coeffs)}" if self.coeffs is not None else f"list{self.values}"
        )


@lru_cache(maxsize=1 << 18)
def _set_contains(U: PartSizeSet, u: int) -> bool:
    return U._contains_uncached(u)


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


# ---------------------------------------------------------------------------
# Classes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MultRule:
    """Allowed multiplicities for one part size: ``0 <= m < bound`` (bound None is unbounded),
    optionally excluding ``m == 1``."""

    bound: int | None
    forbid_single: bool = False

    def allows(self, m: int) -> bool:
        if m < 0:
            return False
        if self.bound is not None and m >= self.bound:
            return False
        return not (self.forbid_single and m == 1)


_FORBIDDEN = MultRule(1)
_FREE = MultRule(None)
_DISTINCT = MultRule(2)


class ClassSpec:
    """Base class for partition families."""

    multiplicative = False

    def contains(self, p: Partition) -> bool:  # pragma: no cover - abstract
        raise NotImplementedError

    def rule(self, i: int) -> MultRule:
        raise TypeError(f"{self} is not a multiplicative class")

    def __contains__(self, p: Partition) -> bool:
        return self.contains(p)

    @property
    def spec(self) -> str:
        """Text form accepted by :func:`parse_class`."""
        raise NotImplementedError


class _Multiplicative(ClassSpec):
    multiplicative = True

    def contains(self, p: Partition) -> bool:
        return all(self.rule(s).allows(m) for s, m in to_multiplicities(p).items())


@dataclass(frozen=True)
class Unrestricted(_Multiplicative):
    def rule(self, i: int) -> MultRule:
        return _FREE

    @property
    def spec(self) -> str:
        return "unrestricted"


@dataclass(frozen=True)
class AndrewsBound(_Multiplicative):
    """Part size i appears fewer than ``bounds[i-1]`` times; sizes beyond the list use ``default``."""

    bounds: tuple[int | None, ...]
    default: int | None = None

    def __post_init__(self) -> None:
        for b in (*self.bounds, self.default):
            if b is not None and b < 1:
                raise ValueError("Andrews bounds lie in [1, inf]")

    def rule(self, i: int) -> MultRule:
        b = self.bounds[i - 1] if i <= len(self.bounds) else self.default
        return MultRule(b)

    @property
    def spec(self) -> str:
        fmt = lambda b: "inf" if b is None else str(b)  # noqa: E731
        return "andrews:" + ",".join(fmt(b) for b in self.bounds) + f":default={fmt(self.default)}"


@dataclass(frozen=True)
class PartsIn(_Multiplicative):
    """Parts drawn from ``U`` with multiplicities below ``a`` (None means unbounded)."""

    U: PartSizeSet
    a: int | None = None

    def __post_init__(self) -> None:
        if self.a is not None and self.a < 2:
            raise ValueError("multiplicity bound a must be >= 2 or None")

    def rule(self, i: int) -> MultRule:
        return MultRule(self.a) if self.U.contains(i) else _FORBIDDEN

    @property
    def spec(self) -> str:
        tail = "" if self.a is None else f":a={self.a}"
        return f"parts:{_partset_spec(self.U)}{tail}"


@dataclass(frozen=True)
class Distinct(_Multiplicative):
    def rule(self, i: int) -> MultRule:
        return _DISTINCT

    @property
    def spec(self) -> str:
        return "distinct"


@dataclass(frozen=True)
class Odd(_Multiplicative):
    def rule(self, i: int) -> MultRule:
        return _FREE if i % 2 else _FORBIDDEN

    @property
    def spec(self) -> str:
        return "odd"


@dataclass(frozen=True)
class OddDistinct(_Multiplicative):
    def rule(self, i: int) -> MultRule:
        return _DISTINCT if i % 2 else _FORBIDDEN

    @property
    def spec(self) -> str:
        return "odd-distinct"


@dataclass(frozen=True)
class GlaisherO(_Multiplicative):
    """Odd parts, each with multiplicity below ``2**r``."""

    r: int

    def rule(self, i: int) -> MultRule:
        return MultRule(2**self.r) if i % 2 else _FORBIDDEN

    @property
    def spec(self) -> str:
        return f"glaisher-o:{self.r}"


@dataclass(frozen=True)
class GlaisherD(_Multiplicative):
    """Distinct parts, none divisible by ``2**r``."""

    r: int

    def rule(self, i: int) -> MultRule:
        return _FORBIDDEN if i % 2**self.r == 0 else _DISTINCT

    @property
    def spec(self) -> str:
        return f"glaisher-d:{self.r}"


@dataclass(frozen=True)
class DistinctMod4(_Multiplicative):
    """Distinct parts congruent to 0, 1 or 2 modulo 4."""

    def rule(self, i: int) -> MultRule:
        return _FORBIDDEN if i % 4 == 3 else _DISTINCT

    @property
    def spec(self) -> str:
        return "mod4"


@dataclass(frozen=True)
class RomikB(_Multiplicative):
    """No part has multiplicity exactly one."""

    def rule(self, i: int) -> MultRule:
        return MultRule(None, forbid_single=True)

    @property
    def spec(self) -> str:
        return "romik-b"


@dataclass(frozen=True)
class EvenBoundedLargest(_Multiplicative):
    """Even parts, largest part at most ``2k``."""

    k: int

    def rule(self, i: int) -> MultRule:
        return _FREE if i % 2 == 0 and i <= 2 * self.k else _FORBIDDEN

    @property
    def spec(self) -> str:
        return f"even-largest:{self.k}"


@dataclass(frozen=True)
class MultiplesBoundedLargest(_Multiplicative):
    """Parts ``m**r * j**r`` with ``j**r <= k`` (the generalized bounded domain)."""

    m: int
    r: int
    k: int

    def rule(self, i: int) -> MultRule:
        q, rem = divmod(i, self.m**self.r)
        if rem or q > self.k:
            return _FORBIDDEN
        root = round(q ** (1.0 / self.r))
        ok = any((root + d) ** self.r == q for d in (-1, 0, 1) if root + d >= 1)
        return _FREE if ok else _FORBIDDEN

    @property
    def spec(self) -> str:
        return f"multiples-largest:{self.m}:{self.r}:{self.k}"


@dataclass(frozen=True)
class EvenBoundedCount(ClassSpec):
    """Even parts, at most ``k`` parts."""

    k: int

    def contains(self, p: Partition) -> bool:
        return p.length <= self.k and all(x % 2 == 0 for x in p.parts)

    @property
    def spec(self) -> str:
        return f"even-count:{self.k}"


@dataclass(frozen=True)
class MultiplesBoundedCount(ClassSpec):
    """Parts divisible by ``m**r``, at most ``k`` parts."""

    m: int
    r: int
    k: int

    def contains(self, p: Partition) -> bool:
        step = self.m**self.r
        return p.length <= self.k and all(x % step == 0 for x in p.parts)

    @property
    def spec(self) -> str:
        return f"multiples-count:{self.m}:{self.r}:{self.k}"


@dataclass(frozen=True)
class Convex(ClassSpec):
    """All r-th differences nonnegative."""

    r: int = 2

    def __post_init__(self) -> None:
        if self.r < 2:
            raise ValueError("Convex requires r >= 2")

    def contains(self, p: Partition) -> bool:
        return all(d >= 0 for d in rth_differences(p, self.r))

    @property
    def spec(self) -> str:
        return f"convex:{self.r}"


@dataclass(frozen=True)
class MinDiff(ClassSpec):
    """Consecutive parts differ by at least ``d``; optionally no part equal to 1."""

    d: int = 1
    forbid_size_one: bool = False

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError("MinDiff requires d >= 1")

    def contains(self, p: Partition) -> bool:
        if self.forbid_size_one and p.parts and p.parts[-1] == 1:
            return False
        return all(a - b >= self.d for a, b in zip(p.parts, p.parts[1:]))

    @property
    def spec(self) -> str:
        return f"mindiff:{self.d}" + (":no1" if self.forbid_size_one else "")


@dataclass(frozen=True)
class RomikA(ClassSpec):
    """No two parts differ by exactly one and no part equals one."""

    def contains(self, p: Partition) -> bool:
        if p.parts and p.parts[-1] == 1:
            return False
        return all(a - b != 1 for a, b in zip(p.parts, p.parts[1:]))

    @property
    def spec(self) -> str:
        return "romik-a"


@dataclass(frozen=True)
class LebesgueL(ClassSpec):
    """Parts congruent to 0 or ``ell`` mod ``k``; consecutive parts differ by at least ``k``;
    consecutive parts among those congruent to ``ell`` differ by at least ``2k``."""

    ell: int = 1
    k: int = 2

    def __post_init__(self) -> None:
        if not 1 <= self.ell < self.k:
            raise ValueError("LebesgueL requires 1 <= ell < k")

    def contains(self, p: Partition) -> bool:
        parts = p.parts
        if any(x % self.k not in (0, self.ell) for x in parts):
            return False
        if any(a - b < self.k for a, b in zip(parts, parts[1:])):
            return False
        special = [x for x in parts if x % self.k == self.ell]
        return all(a - b >= 2 * self.k for a, b in zip(special, special[1:]))

    @property
    def spec(self) -> str:
        return f"lebesgue:{self.ell}:{self.k}"


@dataclass(frozen=True)
class LebesgueSimple(LebesgueL):
    """The ell = 1, k = 2 member of :class:`LebesgueL`."""

    ell: int = field(default=1, init=False)
    k: int = field(default=2, init=False)

    @property
    def spec(self) -> str:
        return "lebesgue"


@dataclass(frozen=True)
class SelfConjugate(ClassSpec):
    def contains(self, p: Partition) -> bool:
        return conjugate(p) == p

    @property
    def spec(self) -> str:
        return "self-conjugate"


def member(c: ClassSpec, p: Partition) -> bool:
    return c.contains(p)


# ---------------------------------------------------------------------------
# Text form of classes
# ---------------------------------------------------------------------------


def _partset_spec(U: PartSizeSet) -> str:
    if U.label:
        return U.label
    if U.values is not None:
        return "list=" + "/".join(str(v) for v in U.values)
    return "poly=" + "/".join(str(c) for c in U.coeffs)


def _parse_partset(text: str) -> PartSizeSet:
    named = {
        "integers": PartSizeSet.integers,
        "odd": PartSizeSet.odd,
        "triangular": PartSizeSet.triangular,
    }
    if text in named:
        return named[text]()
    if text.startswith("binom"):
        return PartSizeSet.binomial(int(text[5:]))
    if text.startswith("powers"):
        body = text[6:]
        if "-not-" in body:
            r, m = body.split("-not-")
            return PartSizeSet.powers(int(r), int(m))
        return PartSizeSet.powers(int(body))
    if text.startswith("not-div-"):
        return PartSizeSet.not_divisible(int(text[8:]))
    if text.startswith("poly="):
        return PartSizeSet.polynomial(*(Fraction(c) for c in text[5:].split("/")))
    if text.startswith("list="):
        return PartSizeSet.explicit(int(v) for v in text[5:].split("/"))
    raise ValueError(f"unknown part-size set {text!r}")


def _bound(tok: str) -> int | None:
    return None if tok in ("inf", "oo", "") else int(tok)


def parse_class(text: str) -> ClassSpec:
    """Parse a class spec such as ``"convex:2"``, ``"parts:triangular"`` or ``"glaisher-d:3"``."""
    name, _, rest = text.strip().partition(":")
    args = rest.split(":") if rest else []
    try:
        match name:
            case "unrestricted":
                return Unrestricted()
            case "distinct":
                return Distinct()
            case "odd":
                return Odd()
            case "odd-distinct":
                return OddDistinct()
            case "glaisher-o":
                return GlaisherO(int(args[0]))
            case "glaisher-d":
                return GlaisherD(int(args[0]))
            case "convex":
                return Convex(int(args[0]) if args else 2)
            case "mindiff":
                return MinDiff(int(args[0]) if args else 1, forbid_size_one="no1" in args[1:])
            case "romik-a":
                return RomikA()
            case "romik-b":
                return RomikB()
            case "lebesgue":
                if args:
                    return LebesgueL(int(args[0]), int(args[1]))
                return LebesgueSimple()
            case "self-conjugate":
                return SelfConjugate()
            case "mod4":
                return DistinctMod4()
            case "even-largest":
                return EvenBoundedLargest(int(args[0]))
            case "even-count":
                return EvenBoundedCount(int(args[0]))
            case "multiples-largest":
                return MultiplesBoundedLargest(*(int(a) for a in args[:3]))
            case "multiples-count":
                return MultiplesBoundedCount(*(int(a) for a in args[:3]))
            case "parts":
                a = None
                for extra in args[1:]:
                    if extra.startswith("a="):
                        a = _bound(extra[2:])
                return PartsIn(_parse_partset(args[0]), a)
            case "andrews":
                default = None
                for extra in args[1:]:
                    if extra.startswith("default="):
                        default = _bound(extra[8:])
                return AndrewsBound(tuple(_bound(t) for t in args[0].split(",")), default)
    except (IndexError, ValueError) as exc:
        raise ValueError(f"bad class spec {text!r}: {exc}") from exc
    raise ValueError(f"unknown class {text!r}")
