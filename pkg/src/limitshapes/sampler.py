"""Exact uniform sampling of restricted partitions by tilted independent draws.

Each allowed part size ``u`` gets an independent multiplicity ``Z_u`` with
``P(Z_u >= k) = x^{uk}``, truncated below the multiplicity bound. Conditioned
on the total being ``n``, the multiplicities are uniform over the class, so
rejection until ``sum u Z_u = n`` is an exact sampler. The divide-and-conquer
variant leaves the smallest part size out and fills it in with a single
acceptance test.
"""

from __future__ import annotations

import math
import os
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Literal

import numpy as np

from . import shape as _shape
from .core import (
    ClassSpec,
    Distinct,
    MultiplicityVector,
    Odd,
    OddDistinct,
    Partition,
    PartSizeSet,
    PartsIn,
    Unrestricted,
    scaled_diagram,
)

__all__ = [
    "DEFAULT_SEED",
    "THREADS_ENV",
    "SamplingError",
    "SamplerConfig",
    "SamplerStats",
    "ExperimentReport",
    "tilt",
    "draw_independent",
    "sample_exact",
    "sample_pdc",
    "sample",
    "sample_many",
    "run_convergence",
]

DEFAULT_SEED = 20240611
THREADS_ENV = "LIMITSHAPES_THREADS"
_BATCH_CELLS = 1 << 21  # random numbers drawn per batch


class SamplingError(RuntimeError):
    """Raised when no sample was accepted within the attempt budget."""

    def __init__(self, message: str, attempts: int):
        super().__init__(f"{message} (after {attempts} attempts)")
        self.attempts = attempts


def tilt(r: float, B: float, a: int | None, n: int) -> float:
    """The tilting parameter exp(-d(r, B, a) / n^{r/(1+r)})."""
    if n < 1:
        raise ValueError("n must be positive")
    return math.exp(-_shape.const_d(r, B, a) / n ** (r / (1 + r)))


def _default_max_attempts(n: int, mode: str) -> int:
    return 50 * math.ceil(n ** (0.5 if mode == "pdc" else 0.75))


def _solve_tilt(sizes: np.ndarray, a: int | None, n: int) -> float:
    """x with sum_u u E[Z_u] = n, for part-size sets without a polynomial description."""
    from scipy.optimize import brentq

    def excess(s: float) -> float:
        return float(sum(u * _shape._Ea_exp(s * u, a) for u in sizes)) - n

    return math.exp(-brentq(excess, 1e-9, 50.0, xtol=1e-14))


@dataclass(frozen=True)
class SamplerConfig:
    U: PartSizeSet
    a: int | None
    n: int
    x: float
    mode: Literal["plain", "pdc"] = "plain"
    seed: int = DEFAULT_SEED
    max_attempts: int = 0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be positive")
        if not 0 < self.x < 1:
            raise ValueError("tilt x must lie in (0, 1)")
        if self.a is not None and self.a < 2:
            raise ValueError("multiplicity bound must be >= 2 or None")
        if self.mode not in ("plain", "pdc"):
            raise ValueError("mode is plain or pdc")
        if self.max_attempts <= 0:
            object.__setattr__(self, "max_attempts", _default_max_attempts(self.n, self.mode))

    @classmethod
    def create(
        cls,
        U: PartSizeSet,
        n: int,
        a: int | None = None,
        mode: str = "plain",
        seed: int = DEFAULT_SEED,
        x: float | None = None,
        max_attempts: int = 0,
    ) -> "SamplerConfig":
        if x is None:
            if U.coeffs is not None:
                x = tilt(U.r, U.B, a, n)
            else:
                x = _solve_tilt(np.array(U.values_upto(n)), a, n)
        return cls(U, a, n, x, mode, seed, max_attempts)  # type: ignore[arg-type]

    @classmethod
    def for_class(cls, c: ClassSpec, n: int, **kw) -> "SamplerConfig":
        """Config for any class of the form "parts in U, multiplicities below a"."""
        match c:
            case Unrestricted():
                return cls.create(PartSizeSet.integers(), n, None, **kw)
            case Distinct():
                return cls.create(PartSizeSet.integers(), n, 2, **kw)
            case Odd():
                return cls.create(PartSizeSet.odd(), n, None, **kw)
            case OddDistinct():
                return cls.create(PartSizeSet.odd(), n, 2, **kw)
            case PartsIn(U=U, a=a):
                return cls.create(U, n, a, **kw)
        raise ValueError(f"the sampler needs a class of the form parts-in-U with bound a; got {c.spec}")

    @property
    def sizes(self) -> np.ndarray:
        return np.array(self.U.values_upto(self.n), dtype=np.int64)


@dataclass
class SamplerStats:
    attempts: int = 0
    accepted: int = 0

    @property
    def acceptance_rate(self) -> float:
        return self.accepted / self.attempts if self.attempts else 0.0


# ---------------------------------------------------------------------------
# Independent draws
# ---------------------------------------------------------------------------


def _draw(logq: np.ndarray, a: int | None, rng: np.random.Generator, rows: int) -> np.ndarray:
    """Inverse-CDF geometric draws, shape (rows, len(logq))."""
    v = rng.random((rows, logq.size))
    if a is None:
        # P(X >= k) = q^k  <=>  X = floor(log(1 - V) / log q)
        return np.floor(np.log1p(-v) / logq).astype(np.int64)
    # P(X >= k | X < a) = (q^k - q^a) / (1 - q^a)
    tail = -np.expm1(a * logq)
    z = np.floor(np.log1p(-v * tail) / logq).astype(np.int64)
    return np.minimum(z, a - 1)


@lru_cache(maxsize=64)
def _prepared(cfg: SamplerConfig) -> tuple[np.ndarray, np.ndarray, float]:
    """Sizes up to n, their log q, and P(Z_u = 0 for every allowed u > n)."""
    logx = math.log(cfg.x)
    # beyond this size P(Z_u > 0) < 1e-20 and the factor is 1 in double precision
    cutoff = max(cfg.n, math.ceil(47 / -logx))
    everything = np.array(cfg.U.values_upto(cutoff), dtype=np.int64)
    sizes = everything[everything <= cfg.n]
    q = np.exp(everything[everything > cfg.n] * logx)
    # log P(Z_u = 0) = log(1 - q) - log(1 - q^a)
    logs = np.log1p(-q)
    if cfg.a is not None:
        logs -= np.log1p(-(q**cfg.a))
    return sizes, sizes * logx, float(np.exp(logs.sum()))


def draw_independent(cfg: SamplerConfig, rng: np.random.Generator) -> MultiplicityVector:
    """One draw of the independent model restricted to sizes up to n."""
    sizes, logq, _ = _prepared(cfg)
    z = _draw(logq, cfg.a, rng, 1)[0]
    return MultiplicityVector({int(u): int(m) for u, m in zip(sizes, z) if m})


def _batch_rows(width: int, expected: float, remaining: int) -> int:
    rows = max(1, min(_BATCH_CELLS // max(width, 1), int(2 * expected) + 1))
    return min(rows, remaining)


def _check_lattice(cfg: SamplerConfig) -> None:
    g = cfg.U.gcd
    if cfg.n % g:
        raise SamplingError(f"no partition of {cfg.n} has all parts in {cfg.U} (gcd {g})", 0)


def sample_exact(cfg: SamplerConfig, rng: np.random.Generator, stats: SamplerStats | None = None) -> Partition:
    """Uniform sample at size n by plain rejection."""
    _check_lattice(cfg)
    sizes, logq, p_tail = _prepared(cfg)
    attempts = 0
    expected = cfg.n**0.75
    while attempts < cfg.max_attempts:
        rows = _batch_rows(sizes.size, expected, cfg.max_attempts - attempts)
        z = _draw(logq, cfg.a, rng, rows)
        tail_ok = rng.random(rows) < p_tail
        totals = z @ sizes
        hits = np.flatnonzero((totals == cfg.n) & tail_ok)
        if hits.size:
            first = int(hits[0])
            attempts += first + 1
            if stats is not None:
                stats.attempts += attempts
                stats.accepted += 1
            return _to_partition(sizes, z[first])
        attempts += rows
    if stats is not None:
        stats.attempts += attempts
    raise SamplingError(f"plain rejection found no partition of {cfg.n}", attempts)


def sample_pdc(cfg: SamplerConfig, rng: np.random.Generator, stats: SamplerStats | None = None) -> Partition:
    """Uniform sample at size n by divide-and-conquer on the smallest part size."""
    _check_lattice(cfg)
    sizes, logq, p_tail = _prepared(cfg)
    if sizes.size == 0:
        raise SamplingError(f"no allowed part size is at most {cfg.n}", 0)
    u1, rest = int(sizes[0]), sizes[1:]
    logq_rest = logq[1:]
    logq1 = float(logq[0])
    attempts = 0
    expected = cfg.n**0.25
    while attempts < cfg.max_attempts:
        rows = _batch_rows(max(rest.size, 1), expected, cfg.max_attempts - attempts)
        z = _draw(logq_rest, cfg.a, rng, rows) if rest.size else np.zeros((rows, 0), dtype=np.int64)
        u = rng.random(rows)
        tail_ok = rng.random(rows) < p_tail
        R = cfg.n - (z @ rest if rest.size else np.zeros(rows, dtype=np.int64))
        k, rem = np.divmod(np.maximum(R, 0), u1)
        feasible = (R >= 0) & (rem == 0)
        if cfg.a is not None:
            feasible &= k < cfg.a
        # the pmf of Z_{u1} is proportional to q^k on its support, so the ratio to its maximum is q^k
        accept = feasible & tail_ok & (np.log(u) < k * logq1)
        hits = np.flatnonzero(accept)
        if hits.size:
            first = int(hits[0])
            attempts += first + 1
            if stats is not None:
                stats.attempts += attempts
                stats.accepted += 1
            full = np.concatenate(([k[first]], z[first]))
            return _to_partition(sizes, full)
        attempts += rows
    if stats is not None:
        stats.attempts += attempts
    raise SamplingError(f"divide-and-conquer found no partition of {cfg.n}", attempts)


def _to_partition(sizes: np.ndarray, z: np.ndarray) -> Partition:
    parts = np.repeat(sizes[::-1], z[::-1])
    return Partition(tuple(int(p) for p in parts))


def sample(cfg: SamplerConfig, rng: np.random.Generator, stats: SamplerStats | None = None) -> Partition:
    return sample_pdc(cfg, rng, stats) if cfg.mode == "pdc" else sample_exact(cfg, rng, stats)


def sample_many(cfg: SamplerConfig, count: int, stats: SamplerStats | None = None) -> list[Partition]:
    """``count`` samples from one generator seeded by ``cfg.seed``."""
    rng = np.random.Generator(np.random.PCG64(cfg.seed))
    return [sample(cfg, rng, stats) for _ in range(count)]


# ---------------------------------------------------------------------------
# Convergence experiments
# ---------------------------------------------------------------------------


@dataclass
class ExperimentReport:
    grid: np.ndarray
    mean: np.ndarray
    q05: np.ndarray
    q95: np.ndarray
    theory: np.ndarray
    sup_deviation: np.ndarray
    attempts: np.ndarray
    replicas: int
    seed: int
    mode: str = "plain"
    extra: dict = field(default_factory=dict)

    @property
    def mean_sup_deviation(self) -> float:
        return float(self.sup_deviation.mean())

    @property
    def acceptance_rate(self) -> float:
        return float(self.replicas / self.attempts.sum())

    def rows(self) -> list[tuple[float, float, float, float, float]]:
        return [
            (float(t), float(m), float(lo), float(hi), float(th))
            for t, m, lo, hi, th in zip(self.grid, self.mean, self.q05, self.q95, self.theory)
        ]

    def against(self, reference: Callable[[float], float]) -> "ExperimentReport":
        """The same samples compared with a different reference curve."""
        theory = np.array([reference(t) for t in self.grid])
        curves = self.extra["curves"]
        sup = np.abs(curves - theory).max(axis=1)
        return replace(self, theory=theory, sup_deviation=sup)


def _threads() -> int:
    raw = os.environ.get(THREADS_ENV, "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _replica(args: tuple[SamplerConfig, np.random.SeedSequence, float, np.ndarray]) -> tuple[np.ndarray, int]:
    cfg, seq, alpha, grid = args
    rng = np.random.Generator(np.random.PCG64(seq))
    st = SamplerStats()
    p = sample(cfg, rng, st)
    return scaled_diagram(p, cfg.n, alpha, grid), st.attempts


def run_convergence(
    cfg: SamplerConfig,
    reference: Callable[[float], float],
    replicas: int,
    grid: Sequence[float],
    workers: int | None = None,
) -> ExperimentReport:
    """Scaled diagrams of ``replicas`` exact samples against a reference curve.

    Replica ``i`` uses the ``i``-th child of ``SeedSequence(cfg.seed)``, so the
    report does not depend on the number of workers.
    """
    if replicas < 1:
        raise ValueError("need at least one replica")
    grid = np.asarray(grid, dtype=float)
    r = cfg.U.r if cfg.U.coeffs is not None else 1
    alpha = cfg.n ** (r / (1 + r))
    children = np.random.SeedSequence(cfg.seed).spawn(replicas)
    jobs = [(cfg, s, alpha, grid) for s in children]
    workers = workers or _threads()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_replica, jobs))
    else:
        results = [_replica(j) for j in jobs]
    curves = np.array([c for c, _ in results])
    attempts = np.array([a for _, a in results])
    theory = np.array([reference(t) for t in grid])
    return ExperimentReport(
        grid=grid,
        mean=curves.mean(axis=0),
        q05=np.quantile(curves, 0.05, axis=0),
        q95=np.quantile(curves, 0.95, axis=0),
        theory=theory,
        sup_deviation=np.abs(curves - theory).max(axis=1),
        attempts=attempts,
        replicas=replicas,
        seed=cfg.seed,
        mode=cfg.mode,
        extra={"curves": curves},
    )
