"""Linear partition bijections and their validators.

A bijection of the MP kind sends a multiplicity vector ``m`` to the parts
``mu_i = sum_j v(i, j) m_j``; one of the MM kind sends it to new
multiplicities ``m'_i = sum_j v(i, j) m_j``. Coefficients are exact
rationals. Each spec also knows its domain and codomain classes and,
optionally, a stability kernel describing the scaling limit of its
coefficients.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Mapping
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import Literal

import numpy as np
from scipy.integrate import quad

from . import shape as _shape
from .core import (
    ClassSpec,
    Convex,
    Distinct,
    EvenBoundedCount,
    EvenBoundedLargest,
    GlaisherD,
    GlaisherO,
    MultiplesBoundedCount,
    MultiplesBoundedLargest,
    MultiplicityVector,
    Odd,
    OddDistinct,
    Partition,
    PartSizeSet,
    PartsIn,
    SelfConjugate,
    Unrestricted,
    durfee,
    from_multiplicities,
    rth_differences,
    to_multiplicities,
)
from .enumeration import count, enumerate_all

__all__ = [
    "BoundError",
    "StabilityKernel",
    "LinearMapSpec",
    "StructureReport",
    "StabilityReport",
    "NamedBijection",
    "BijectionReport",
    "apply",
    "validate_structure",
    "check_stability",
    "verify_bijection",
    "identity_spec",
    "glaisher_spec",
    "ohara_spec",
    "stanton_spec",
    "rthdiff_spec",
    "evenparts_spec",
    "generalized_spec",
    "glaisher",
    "glaisher_inv",
    "ohara_step",
    "ohara_fixpoint",
    "stanton",
    "stanton_inv",
    "rth_diff_forward",
    "rth_diff_inverse",
    "hooks_forward",
    "hooks_inverse",
    "even_parts_map",
    "generalized",
    "named_bijection",
    "BIJECTION_NAMES",
]

DEFAULT_BOUND = 10**7
Column = dict[int, Fraction]


class BoundError(IndexError):
    """A coefficient was requested beyond the spec's working bound."""


# ---------------------------------------------------------------------------
# Specs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StabilityKernel:
    """Scaling limit of a linear map.

    ``coordinate(u)`` turns a column label (a domain part size) into the
    unscaled index that ``beta(n)`` rescales; ``phi`` is the limiting mean
    multiplicity as a function of that scaled index; ``K(t, y, phi(y))`` is
    integrated over ``y`` in ``(0, y_upper)``.
    """

    name: str
    r: int
    c: float
    a: int | None
    phi: Callable[[float], float]
    K: Callable[[float, float, float], float]
    coordinate: Callable[[int], float]
    y_upper: float
    breaks: Callable[[float], list[float]] = lambda t: [t]
    column_limit: Callable[[int], int] | None = None

    def rhs(self, t: float) -> float:
        pts = sorted({p for p in self.breaks(t) if 0 < p < self.y_upper} | {0.0, self.y_upper})
        total = 0.0
        for lo, hi in zip(pts, pts[1:]):
            total += quad(lambda y: self.K(t, y, self.phi(y)), lo, hi, epsabs=1e-13, epsrel=1e-11, limit=400)[0]
        return total


@dataclass(frozen=True)
class LinearMapSpec:
    name: str
    kind: Literal["MP", "MM"]
    column: Callable[[int], Column]
    domain: ClassSpec
    codomain: ClassSpec
    bound: int = DEFAULT_BOUND
    kernel: StabilityKernel | None = None
    onto: bool = True
    injective: bool = True

    def col(self, j: int) -> Column:
        if j < 1:
            raise ValueError("column labels are positive")
        if j > self.bound:
            raise BoundError(f"column {j} exceeds working bound {self.bound} of {self.name}")
        return self.column(j)

    def entry(self, i: int, j: int) -> Fraction:
        return self.col(j).get(i, Fraction(0))


def _image_vector(spec: LinearMapSpec, m: Mapping[int, int]) -> dict[int, int]:
    acc: dict[int, Fraction] = {}
    for j, mult in m.items():
        for i, v in spec.col(j).items():
            acc[i] = acc.get(i, Fraction(0)) + v * mult
    out: dict[int, int] = {}
    for i, v in acc.items():
        if v < 0 or v.denominator != 1:
            raise ValueError(f"{spec.name}: image component {i} is {v}, not a nonnegative integer")
        if v:
            out[i] = int(v)
    return out


def apply(spec: LinearMapSpec, m: Mapping[int, int]) -> Partition | MultiplicityVector:
    """Image of a multiplicity vector: a partition (MP) or a multiplicity vector (MM)."""
    img = _image_vector(spec, m)
    if spec.kind == "MM":
        return MultiplicityVector(img)
    return Partition.of(img.values())


# ---------------------------------------------------------------------------
# Named specs
# ---------------------------------------------------------------------------


def _two_adic(j: int) -> tuple[int, int]:
    s = (j & -j).bit_length() - 1
    return j >> s, s


def identity_spec() -> LinearMapSpec:
    return LinearMapSpec("identity", "MM", lambda j: {j: Fraction(1)}, Unrestricted(), Unrestricted())


def _glaisher_kernel() -> StabilityKernel:
    d = _shape.D_DISTINCT

    def K(t: float, y: float, ph: float) -> float:
        # number of k >= 1 with y >= t 2^{k-1}
        if y < t:
            return 0.0
        return 0.5 * (math.floor(math.log2(y / t)) + 1) * ph

    def breaks(t: float) -> list[float]:
        return [t * 2**k for k in range(60) if t * 2**k < 60 / d]

    return StabilityKernel(
        "glaisher",
        r=1,
        c=d,
        a=2,
        phi=lambda y: _shape.E_a(math.exp(-d * y), 2),
        K=K,
        coordinate=float,
        y_upper=60 / d,
        breaks=breaks,
    )


@lru_cache(maxsize=None)
def glaisher_spec(r: int | None = None) -> LinearMapSpec:
    """m 2^s -> 2^s parts equal to m. With ``r`` only s < r occurs (the r-fold refinement)."""

    def column(j: int) -> Column:
        odd, s = _two_adic(j)
        if r is not None and s >= r:
            return {}
        return {odd: Fraction(2**s)}

    if r is None:
        return LinearMapSpec("glaisher", "MM", column, Distinct(), Odd(), kernel=_glaisher_kernel())
    return LinearMapSpec(f"glaisher-r{r}", "MM", column, GlaisherD(r), GlaisherO(r))


def ohara_spec() -> LinearMapSpec:
    """One O'Hara step for the odd/distinct pair: every even part 2m+2 becomes two parts m+1."""

    def column(j: int) -> Column:
        return {j: Fraction(1)} if j % 2 else {j // 2: Fraction(2)}

    return LinearMapSpec("ohara-step", "MM", column, Unrestricted(), Unrestricted(), onto=False, injective=False)


def _integer_root(q: int, r: int) -> int | None:
    b = round(q ** (1.0 / r))
    for cand in (b - 1, b, b + 1):
        if cand >= 1 and cand**r == q:
            return cand
    return None


@lru_cache(maxsize=None)
def stanton_spec(r: int, m: int) -> LinearMapSpec:
    """(k m^j)^r with m not dividing k -> m^{jr} parts equal to k^r."""
    if r < 1 or m < 2:
        raise ValueError("need r >= 1 and m >= 2")
    M = m**r

    def column(q: int) -> Column:
        b = _integer_root(q, r)
        if b is None:
            return {}
        j = 0
        while b % m == 0:
            b //= m
            j += 1
        return {b**r: Fraction(M**j)}

    domain = PartsIn(PartSizeSet.powers(r), a=M)
    codomain = PartsIn(PartSizeSet.powers(r, exclude_multiples_of=m))
    return LinearMapSpec(f"stanton-r{r}-m{m}", "MM", column, domain, codomain)


def _convex_kernel(r: int) -> StabilityKernel:
    B = 1 / math.factorial(r)
    c = _shape.const_d(r, B)
    upper = (45 / (c * B)) ** (1 / r)
    U = PartSizeSet.binomial(r)
    index = {}

    def coordinate(u: int) -> float:
        if u not in index:
            j = 1
            while U.u(j) < u:
                j += 1
            index[u] = j
        return float(index[u])

    fact = math.factorial(r - 1)
    return StabilityKernel(
        f"convex-r{r}",
        r=r,
        c=c,
        a=None,
        phi=lambda y: _shape._E_exp(c * B * y**r),
        K=lambda t, y, ph: max(y - t, 0.0) ** (r - 1) / fact * ph,
        coordinate=coordinate,
        y_upper=upper,
    )


@lru_cache(maxsize=None)
def rthdiff_spec(r: int) -> LinearMapSpec:
    """Column u_j = binom(r-1+j, r) carries binom(r-1+j-i, r-1) into row i <= j."""
    if r < 2:
        raise ValueError("r-th differences need r >= 2")
    U = PartSizeSet.binomial(r)
    lookup: dict[int, int] = {}
    j = 1
    while U.u(j) <= 5000:
        lookup[U.u(j)] = j
        j += 1

    def index_of(u: int) -> int | None:
        if u in lookup:
            return lookup[u]
        if not U.contains(u):
            return None
        k = max(lookup.values())
        while U.u(k) < u:
            k += 1
        lookup[u] = k
        return k

    def column(u: int) -> Column:
        jj = index_of(u)
        if jj is None:
            return {}
        return {i: Fraction(math.comb(r - 1 + jj - i, r - 1)) for i in range(1, jj + 1)}

    return LinearMapSpec(f"rthdiff-r{r}", "MP", column, PartsIn(U), Convex(r), kernel=_convex_kernel(r))


def _evenparts_kernel(b: float) -> StabilityKernel:
    c = _shape.bounded_c(b)
    return StabilityKernel(
        "evenparts",
        r=1,
        c=c,
        a=None,
        phi=lambda y: _shape._E_exp(2 * c * y),
        K=lambda t, y, ph: 2.0 * ph if t <= y <= b else 0.0,
        coordinate=lambda u: u / 2,
        y_upper=b,
        column_limit=lambda n: 2 * round(b * math.sqrt(n)),
    )


@lru_cache(maxsize=None)
def evenparts_spec(k: int, b: float = 1.0) -> LinearMapSpec:
    """Divide even parts by 2, double multiplicities, conjugate: v(i, 2j) = 2 for i <= j."""

    def column(u: int) -> Column:
        if u % 2 or u > 2 * k:
            return {}
        return {i: Fraction(2) for i in range(1, u // 2 + 1)}

    return LinearMapSpec(f"evenparts-k{k}", "MP", column, EvenBoundedLargest(k), EvenBoundedCount(k), kernel=_evenparts_kernel(b))


@lru_cache(maxsize=None)
def generalized_spec(m: int, r: int, k: int) -> LinearMapSpec:
    """Divide parts m^r j^r by m^r, multiply multiplicities by m^r, conjugate.

    For r = 1 this is a bijection onto partitions with at most k parts all
    divisible by m. For r >= 2 the map is injective but the image is a proper
    subset of that class.
    """
    M = m**r

    def column(u: int) -> Column:
        q, rem = divmod(u, M)
        if rem or q > k or _integer_root(q, r) is None:
            return {}
        return {i: Fraction(M) for i in range(1, q + 1)}

    return LinearMapSpec(
        f"generalized-m{m}-r{r}-k{k}", "MP", column, MultiplesBoundedLargest(m, r, k), MultiplesBoundedCount(m, r, k), onto=(r == 1)
    )


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


@dataclass
class StructureReport:
    spec: str
    ok: bool
    first_violation: str | None
    columns_checked: int
    rows: list[tuple[int, int, int, bool]] = field(default_factory=list)  # (n, |domain_n|, |image_n|, ok)


def _domain_allows(c: ClassSpec, j: int) -> bool:
    if c.multiplicative:
        return c.rule(j).allows(1)
    return True


def validate_structure(spec: LinearMapSpec, nmax: int, exhaust_max: int = 40) -> StructureReport:
    """Check weight conservation for every column up to ``nmax`` and bijectivity by exhaustion."""
    if nmax > 2000:
        raise ValueError("nmax is limited to 2000")
    for j in range(1, nmax + 1):
        col = spec.col(j)
        if any(v < 0 for v in col.values()):
            return StructureReport(spec.name, False, f"negative coefficient in column {j}", j)
        target = j if _domain_allows(spec.domain, j) else 0
        if spec.kind == "MP":
            got = sum(col.values(), Fraction(0))
            what = "column sum"
        else:
            got = sum((i * v for i, v in col.items()), Fraction(0))
            what = "weighted column sum"
        if target and got != target:
            return StructureReport(spec.name, False, f"{what} {got} != {target} at j={j}", j)
    rows = []
    if not spec.injective:
        return StructureReport(spec.name, True, None, nmax, rows)
    for n in range(0, min(nmax, exhaust_max) + 1):
        dom = enumerate_all(spec.domain, n)
        images = []
        for p in dom:
            img = apply(spec, to_multiplicities(p))
            q = img if isinstance(img, Partition) else from_multiplicities(img)
            if q.size != n:
                return StructureReport(spec.name, False, f"size changed for {p}: {q}", nmax, rows)
            if not spec.codomain.contains(q):
                return StructureReport(spec.name, False, f"image {q} of {p} outside codomain", nmax, rows)
            images.append(q)
        distinct = len(set(images)) == len(images)
        target = count(spec.codomain, n)
        ok = distinct and (len(dom) == target or not spec.onto)
        rows.append((n, len(dom), target, ok))
        if not ok:
            why = "images collide" if not distinct else f"|domain|={len(dom)} != |codomain|={target}"
            return StructureReport(spec.name, False, f"{why} at n={n}", nmax, rows)
    return StructureReport(spec.name, True, None, nmax, rows)


@dataclass
class StabilityReport:
    spec: str
    n_list: tuple[int, ...]
    t_grid: tuple[float, ...]
    ratios: np.ndarray  # shape (len(n_list), len(t_grid))
    tol: float

    @property
    def errors(self) -> np.ndarray:
        return np.abs(self.ratios - 1)

    @property
    def decreasing(self) -> bool:
        e = self.errors
        return bool(np.all(e[1:] < e[:-1]))

    @property
    def ok(self) -> bool:
        return self.decreasing and float(self.errors[-1].max()) < self.tol


def _column_labels(spec: LinearMapSpec, ucap: int) -> list[int]:
    dom = spec.domain
    if isinstance(dom, PartsIn):
        return dom.U.values_upto(ucap)
    return [u for u in range(1, ucap + 1) if _domain_allows(dom, u)]


def _previous_label(c: ClassSpec, i: int) -> int:
    j = i - 1
    while j > 0 and not _domain_allows(c, j):
        j -= 1
    return j


def _stability_lhs(spec: LinearMapSpec, n: int, ts: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Scaled mean image at each t, and the centre of the step on which it is constant.

    The image diagram is a step function; comparing it with the kernel
    integral at the midpoint of its constancy cell removes the O(1/beta)
    lattice offset, leaving the O(1/beta^2) discretization error.
    """
    ker = spec.kernel
    assert ker is not None
    beta = n ** (1 / (1 + ker.r))
    xscale = n ** (ker.r / (1 + ker.r))
    out = np.zeros(len(ts))
    ucap = ker.column_limit(n) if ker.column_limit else int(math.ceil(45 / ker.c * xscale)) + 1
    ucap = min(ucap, spec.bound)
    labels = _column_labels(spec, ucap)
    if spec.kind == "MP":
        rows = np.ceil(beta * ts).astype(int)
        for u in labels:
            mean = _shape._Ea_exp(ker.c * u / xscale, ker.a)
            if mean == 0.0:
                continue
            col = spec.col(u)
            for k, i in enumerate(rows):
                v = col.get(int(i))
                if v:
                    out[k] += float(v) * mean
        return out * beta / n, (rows - 0.5) / beta
    # MM: scaled diagram of the image, D(x t)/beta with x = n/beta
    xs = n / beta
    firsts = []
    for s in xs * ts:
        i0 = math.ceil(s)
        while not _domain_allows(spec.codomain, i0):
            i0 += 1
        firsts.append(i0)
    firsts_arr = np.array(firsts)
    for u in labels:
        mean = _shape._Ea_exp(ker.c * u / xscale, ker.a)
        if mean == 0.0:
            continue
        for i, v in spec.col(u).items():
            out[firsts_arr <= i] += float(v) * mean
    centres = np.array([(i0 + _previous_label(spec.codomain, i0)) / 2 for i0 in firsts]) / xs
    return out / beta, centres


def check_stability(
    spec: LinearMapSpec, n_list: tuple[int, ...], t_grid: tuple[float, ...], tol: float = 0.05
) -> StabilityReport:
    """Compare the scaled mean image with the kernel integral at each n and t."""
    if spec.kernel is None:
        raise ValueError(f"{spec.name} has no stability kernel")
    ts = np.asarray(t_grid, dtype=float)
    ratios = []
    for n in n_list:
        lhs, centres = _stability_lhs(spec, n, ts)
        ratios.append(lhs / np.array([spec.kernel.rhs(t) for t in centres]))
    ratios = np.array(ratios)
    return StabilityReport(spec.name, tuple(n_list), tuple(t_grid), ratios, tol)


# ---------------------------------------------------------------------------
# Bijections on partitions
# ---------------------------------------------------------------------------


def _require(c: ClassSpec, p: Partition, what: str) -> None:
    if not c.contains(p):
        raise ValueError(f"{p} is not in the domain of {what}")


_GLAISHER = glaisher_spec()


def glaisher(p: Partition) -> Partition:
    """Distinct parts to odd parts: m 2^s becomes 2^s copies of m."""
    _require(Distinct(), p, "glaisher")
    return from_multiplicities(apply(_GLAISHER, to_multiplicities(p)))


def glaisher_inv(p: Partition) -> Partition:
    """Odd parts to distinct parts via the binary expansion of each multiplicity."""
    _require(Odd(), p, "glaisher_inv")
    parts = []
    for m, c in to_multiplicities(p).items():
        s = 0
        while c:
            if c & 1:
                parts.append(m << s)
            c >>= 1
            s += 1
    return Partition.of(parts)


_OHARA = ohara_spec()


def ohara_step(m: Mapping[int, int]) -> MultiplicityVector:
    return apply(_OHARA, m)  # type: ignore[return-value]


def ohara_fixpoint(m: Mapping[int, int]) -> MultiplicityVector:
    cur = MultiplicityVector(m)
    while any(s % 2 == 0 for s in cur):
        cur = ohara_step(cur)
    return cur


def stanton(r: int, m: int, p: Partition) -> Partition:
    spec = stanton_spec(r, m)
    for q in p.parts:
        if _integer_root(q, r) is None:
            raise ValueError(f"part {q} is not a perfect {r}-th power")
    _require(spec.domain, p, spec.name)
    return from_multiplicities(apply(spec, to_multiplicities(p)))


def stanton_inv(r: int, m: int, p: Partition) -> Partition:
    """Write each multiplicity of k^r in base m^r; digit c_j gives c_j parts (k m^j)^r."""
    spec = stanton_spec(r, m)
    _require(spec.codomain, p, spec.name + " inverse")
    M = m**r
    parts = []
    for q, c in to_multiplicities(p).items():
        k = _integer_root(q, r)
        j = 0
        while c:
            c, digit = divmod(c, M)
            parts.extend([(k * m**j) ** r] * digit)
            j += 1
    return Partition.of(parts)


def rth_diff_forward(r: int, m: Mapping[int, int]) -> Partition:
    spec = rthdiff_spec(r)
    _require(spec.domain, from_multiplicities(m), spec.name)
    return apply(spec, m)  # type: ignore[return-value]


def rth_diff_inverse(r: int, p: Partition) -> MultiplicityVector:
    diffs = rth_differences(p, r)
    if any(d < 0 for d in diffs):
        raise ValueError(f"{p} has a negative {r}-th difference")
    U = PartSizeSet.binomial(r)
    return MultiplicityVector({U.u(j): d for j, d in enumerate(diffs, start=1)})


def hooks_forward(p: Partition) -> Partition:
    """Break a self-conjugate partition into its principal hooks 2(lambda_i - i) + 1."""
    _require(SelfConjugate(), p, "hooks_forward")
    return Partition(tuple(2 * (p.parts[i - 1] - i) + 1 for i in range(1, durfee(p) + 1)))


def hooks_inverse(q: Partition) -> Partition:
    _require(OddDistinct(), q, "hooks_inverse")
    delta = q.length
    rows = [i + (h - 1) // 2 for i, h in enumerate(q.parts, start=1)]
    tail = []
    i = delta + 1
    while True:
        col = sum(1 for lam in rows if lam >= i)
        if col == 0:
            break
        tail.append(col)
        i += 1
    return Partition(tuple(rows + tail))


def even_parts_map(k: int, p: Partition) -> Partition:
    spec = evenparts_spec(k)
    _require(spec.domain, p, spec.name)
    return apply(spec, to_multiplicities(p))  # type: ignore[return-value]


def generalized(m: int, r: int, k: int, p: Partition) -> Partition:
    spec = generalized_spec(m, r, k)
    _require(spec.domain, p, spec.name)
    return apply(spec, to_multiplicities(p))  # type: ignore[return-value]


# ---------------------------------------------------------------------------
# Named bijections with exhaustive verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NamedBijection:
    name: str
    forward: Callable[[Partition], Partition]
    domain: ClassSpec
    codomain: ClassSpec
    inverse: Callable[[Partition], Partition] | None = None
    onto: bool = True


@dataclass
class BijectionReport:
    name: str
    ok: bool
    rows: list[tuple[int, int, int, bool]]
    failure: str | None = None


def verify_bijection(b: NamedBijection, nmax: int) -> BijectionReport:
    """Exhaustively check size preservation, injectivity, codomain membership and counts."""
    rows = []
    for n in range(nmax + 1):
        dom = enumerate_all(b.domain, n)
        seen: set[Partition] = set()
        for p in dom:
            q = b.forward(p)
            if q.size != n:
                return BijectionReport(b.name, False, rows, f"size changed: {p} -> {q}")
            if not b.codomain.contains(q):
                return BijectionReport(b.name, False, rows, f"{p} -> {q} outside codomain")
            if q in seen:
                return BijectionReport(b.name, False, rows, f"collision at {q} (n={n})")
            if b.inverse is not None and b.inverse(q) != p:
                return BijectionReport(b.name, False, rows, f"inverse fails on {q}")
            seen.add(q)
        target = count(b.codomain, n)
        ok = len(dom) == target or not b.onto
        rows.append((n, len(dom), target, ok))
        if not ok:
            return BijectionReport(b.name, False, rows, f"|domain|={len(dom)} != |codomain|={target} at n={n}")
    return BijectionReport(b.name, True, rows)


def _from_mv(fn: Callable[[Mapping[int, int]], Mapping[int, int] | Partition]) -> Callable[[Partition], Partition]:
    def wrapped(p: Partition) -> Partition:
        out = fn(to_multiplicities(p))
        return out if isinstance(out, Partition) else from_multiplicities(out)

    return wrapped


BIJECTION_NAMES = ("glaisher", "glaisher-r", "stanton", "rthdiff", "hooks", "evenparts", "generalized")


def named_bijection(name: str, r: int = 2, m: int = 2, k: int = 4) -> NamedBijection:
    """Look up a bijection by name; ``r``, ``m`` and ``k`` are used where relevant."""
    match name:
        case "glaisher":
            return NamedBijection("glaisher", glaisher, Distinct(), Odd(), glaisher_inv)
        case "glaisher-r":
            spec = glaisher_spec(r)
            return NamedBijection(spec.name, _from_mv(lambda mv: apply(spec, mv)), spec.domain, spec.codomain)
        case "stanton":
            spec = stanton_spec(r, m)
            return NamedBijection(spec.name, lambda p: stanton(r, m, p), spec.domain, spec.codomain, lambda q: stanton_inv(r, m, q))
        case "rthdiff":
            spec = rthdiff_spec(r)
            return NamedBijection(
                spec.name,
                _from_mv(lambda mv: rth_diff_forward(r, mv)),
                spec.domain,
                spec.codomain,
                lambda q: from_multiplicities(rth_diff_inverse(r, q)),
            )
        case "hooks":
            return NamedBijection("hooks", hooks_forward, SelfConjugate(), OddDistinct(), hooks_inverse)
        case "evenparts":
            spec = evenparts_spec(k)
            return NamedBijection(spec.name, lambda p: even_parts_map(k, p), spec.domain, spec.codomain)
        case "generalized":
            spec = generalized_spec(m, r, k)
            return NamedBijection(spec.name, lambda p: generalized(m, r, k, p), spec.domain, spec.codomain, onto=spec.onto)
    raise ValueError(f"unknown bijection {name!r}; choose from {', '.join(BIJECTION_NAMES)}")
