"""Numeric calculus of monotone plane curves and three worked pipelines.

Each operation returns new curve objects whose evaluators compose the
operands' evaluators; no curve is ever resampled onto a grid. A curve that
knows a closed-form inverse carries it, otherwise inversion is done by
bracketed root finding.

Curves are decreasing on ``(lo, hi]`` and are extended by zero to the right
of ``hi``, which is the convention that makes ``union`` of diagram functions
with different supports well defined.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

from . import shape as _shape

__all__ = [
    "MonotoneCurve",
    "SeamError",
    "inverse",
    "move",
    "shift",
    "shred",
    "copies",
    "scale",
    "stretch_paste",
    "union",
    "plus",
    "cut",
    "paste",
    "PipelineStage",
    "PipelineResult",
    "pipeline_selfconjugate",
    "pipeline_glaisher",
    "pipeline_lebesgue",
    "PIPELINES",
]

_EDGE = 1e-12
_QUAD = dict(epsabs=1e-13, epsrel=1e-12, limit=400)


class SeamError(ValueError):
    """Raised when pasted pieces do not meet continuously."""


@dataclass(frozen=True)
class MonotoneCurve:
    """A strictly decreasing curve on ``(lo, hi]`` with optional closed inverse."""

    func: Callable[[float], float]
    lo: float = 0.0
    hi: float = math.inf
    inv: Callable[[float], float] | None = None
    name: str = ""
    area_hint: float | None = None
    _ends: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self) -> None:
        if not self.lo < self.hi:
            raise ValueError("empty domain")

    # evaluation ---------------------------------------------------------
    def __call__(self, x: float) -> float:
        x = float(x)
        if x >= self.hi:
            if x - self.hi <= _EDGE:
                return float(self.func(self.hi))
            return 0.0
        if x <= self.lo:
            if self.lo - x <= _EDGE and self.lo > 0:
                return float(self.func(self.lo))
            if x < self.lo:
                raise ValueError(f"{x} is left of the domain of {self.name or 'curve'}")
        return float(self.func(x))

    def values(self, xs: Sequence[float]) -> np.ndarray:
        return np.array([self(x) for x in xs])

    @property
    def top(self) -> float:
        """sup of the curve (its value at the left end, possibly infinite)."""
        if "top" not in self._ends:
            try:
                v = float(self.func(self.lo)) if self.lo > 0 else float(self.func(self.lo + 1e-300))
            except (ValueError, ZeroDivisionError, OverflowError):
                v = math.inf
            if self.lo == 0:
                # a finite value at 1e-300 may still be a log singularity; probe the trend
                try:
                    v_near = float(self.func(1e-150))
                except (ValueError, ZeroDivisionError, OverflowError):
                    v_near = math.inf
                if not math.isfinite(v) or v - v_near > 1e-6:
                    v = math.inf
            self._ends["top"] = v
        return self._ends["top"]

    @property
    def bottom(self) -> float:
        """inf of the curve on its domain (value at ``hi`` or the limit at infinity)."""
        if "bottom" not in self._ends:
            self._ends["bottom"] = 0.0 if math.isinf(self.hi) else float(self.func(self.hi))
        return self._ends["bottom"]

    def inverse_value(self, y: float) -> float:
        y = float(y)
        if self.inv is not None:
            return float(self.inv(y))
        if y <= self.bottom:
            return self.hi
        top = self.top
        if y >= top:
            return self.lo
        a = self.lo if self.lo > 0 else 1e-300
        # shrink towards lo until the curve exceeds y
        if self.lo == 0 and not math.isfinite(top):
            a = min(1.0, self.hi / 2) if math.isfinite(self.hi) else 1.0
            while self.func(a) <= y:
                a /= 16
                if a < 1e-300:
                    return self.lo
        b = self.hi
        if math.isinf(b):
            b = max(1.0, 2 * a)
            while self.func(b) > y:
                b *= 2
        return brentq(lambda x: self.func(x) - y, a, b, xtol=1e-15, rtol=1e-15, maxiter=400)

    def area(self) -> float:
        lo, hi = self.lo, self.hi
        f = lambda x: max(self.func(x), 0.0)  # noqa: E731
        if math.isinf(hi):
            return quad(f, lo, lo + 1.0, **_QUAD)[0] + quad(f, lo + 1.0, math.inf, **_QUAD)[0]
        return quad(f, lo, hi, **_QUAD)[0]

    def check_monotone(self, points: int = 400) -> None:
        hi = self.hi if math.isfinite(self.hi) else self.lo + 20.0
        xs = np.linspace(self.lo, hi, points + 2)[1:-1]
        vals = self.values(xs)
        if np.any(np.diff(vals) >= 0):
            raise ValueError(f"{self.name or 'curve'} is not strictly decreasing")

    def renamed(self, name: str) -> "MonotoneCurve":
        return MonotoneCurve(self.func, self.lo, self.hi, self.inv, name, self.area_hint)


# ---------------------------------------------------------------------------
# Table operations
# ---------------------------------------------------------------------------


def inverse(f: MonotoneCurve) -> MonotoneCurve:
    """Reflection about the diagonal (conjugation)."""
    return MonotoneCurve(f.inverse_value, max(f.bottom, 0.0), f.top, inv=f.__call__, name=f"inv({f.name})", area_hint=f.area_hint)


def move(f: MonotoneCurve, a: float) -> MonotoneCurve:
    """Vertical translation f + a."""
    g = f.inv
    inv = (lambda y: g(y - a)) if g is not None else None
    return MonotoneCurve(lambda x: f.func(x) + a, f.lo, f.hi, inv=inv, name=f"move({f.name},{a:.6g})")


def shift(f: MonotoneCurve, a: float) -> MonotoneCurve:
    """Shear f + a t."""
    out = MonotoneCurve(lambda x: f.func(x) + a * x, f.lo, f.hi, name=f"shift({f.name},{a:.6g})")
    out.check_monotone()
    return out


def shred(f: MonotoneCurve, r: int) -> tuple[MonotoneCurve, ...]:
    """r copies of f(r t), each carrying 1/r of the area."""
    if r < 1:
        raise ValueError("r must be a positive integer")
    g = f.inv
    inv = (lambda y: g(y) / r) if g is not None else None
    piece = MonotoneCurve(lambda x: f.func(r * x), f.lo / r, f.hi / r, inv=inv, name=f"shred({f.name},{r})")
    return (piece,) * r


def copies(f: MonotoneCurve, k: int) -> tuple[MonotoneCurve, ...]:
    """k identical copies of f (the split that precedes a union)."""
    return (f,) * k


def scale(f: MonotoneCurve, w: float) -> MonotoneCurve:
    """Vertical scaling w f, used to split a curve into density components."""
    g = f.inv
    inv = (lambda y: g(y / w)) if g is not None else None
    return MonotoneCurve(lambda x: w * f.func(x), f.lo, f.hi, inv=inv, name=f"{w:.6g}*{f.name}")


def stretch_paste(*fs: MonotoneCurve) -> MonotoneCurve:
    """f_1(m t) + ... + f_m(m t)."""
    m = len(fs)
    if m == 0:
        raise ValueError("need at least one curve")
    lo = min(f.lo for f in fs) / m
    hi = max(f.hi for f in fs) / m
    return MonotoneCurve(lambda x: sum(f(m * x) for f in fs), lo, hi, name="stretch(" + ",".join(f.name for f in fs) + ")")


def union(f: MonotoneCurve, g: MonotoneCurve) -> MonotoneCurve:
    """Pointwise sum f + g (the union of the underlying partitions)."""
    lo = min(f.lo, g.lo)
    hi = max(f.hi, g.hi)
    return MonotoneCurve(lambda x: f(x) + g(x), lo, hi, name=f"union({f.name},{g.name})")


def plus(f: MonotoneCurve, g: MonotoneCurve) -> MonotoneCurve:
    """(f^{-1} + g^{-1})^{-1}: adding the partitions part by part."""
    return inverse(union(inverse(f), inverse(g))).renamed(f"plus({f.name},{g.name})")


def cut(f: MonotoneCurve, at: float) -> tuple[MonotoneCurve, MonotoneCurve]:
    """Split at the abscissa ``at`` into the pieces on (lo, at] and [at, hi)."""
    if not f.lo < at < f.hi:
        raise ValueError("cut point must be interior")
    g = f.inv
    left = MonotoneCurve(f.func, f.lo, at, inv=g, name=f"P({f.name})")
    right = MonotoneCurve(f.func, at, f.hi, inv=g, name=f"Q({f.name})")
    return left, right


def paste(left: MonotoneCurve, right: MonotoneCurve, tol: float = 1e-6) -> MonotoneCurve:
    """Reassemble two pieces meeting at ``left.hi == right.lo``."""
    if abs(left.hi - right.lo) > 1e-12:
        raise SeamError(f"pieces do not share an endpoint: {left.hi} vs {right.lo}")
    at = left.hi
    gap = abs(left.func(at) - right.func(at))
    if gap > tol:
        raise SeamError(f"seam mismatch {gap:.3g} at x={at}")
    return MonotoneCurve(lambda x: left.func(x) if x <= at else right.func(x), left.lo, right.hi, name=f"paste({left.name},{right.name})")


# ---------------------------------------------------------------------------
# Pipelines
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PipelineStage:
    label: str
    curves: tuple[MonotoneCurve, ...]


@dataclass(frozen=True)
class PipelineResult:
    name: str
    stages: tuple[PipelineStage, ...]
    final: MonotoneCurve
    target: Callable[[float], float]
    check_range: tuple[float, float]

    def sup_error(self, points: int = 200) -> float:
        xs = np.linspace(*self.check_range, points)
        return float(max(abs(self.final(x) - self.target(x)) for x in xs))


def pipeline_selfconjugate() -> PipelineResult:
    """Self-conjugate shape from the distinct-odd shape via principal hooks.

    Start from b(t) = Psi(t/sqrt 2)/sqrt 2, split it into two half-area copies
    b(2t), reflect each, shear by t, reflect the second one back and paste at
    x0 = ln 2 / c, the fixed point of the classical shape.
    """
    c = _shape.C_CLASSIC
    x0 = math.log(2) / c
    start = MonotoneCurve(
        _shape.odd_distinct_shape,
        inv=lambda y: -2 / c * math.log(math.expm1(c * y)),
        name="b",
    )
    halves = shred(start, 2)
    reflected = tuple(inverse(h) for h in halves)
    sheared = tuple(shift(h, 1.0) for h in reflected)
    lower, upper = sheared[0], inverse(sheared[1])
    left = MonotoneCurve(lower.func, lower.lo, x0, name="P(h)")
    right = MonotoneCurve(upper.func, x0, math.inf, name="Q(h^-1)")
    final = paste(left, right).renamed("selfconjugate")
    stages = (
        PipelineStage("start", (start,)),
        PipelineStage("split", halves),
        PipelineStage("reflect", reflected),
        PipelineStage("shift", sheared),
        PipelineStage("reflect-second", (lower, upper)),
        PipelineStage("paste", (final,)),
    )
    return PipelineResult("selfconjugate", stages, final, _shape.phi_classic, (0.05, 4.0))


def pipeline_glaisher() -> PipelineResult:
    """Distinct-parts shape from the odd-parts shape.

    With O(t) = Phi(t/sqrt 2)/sqrt 2 the chain is
    O -> (O, O) -> (O - t/2, O - t/2) -> 2 O - t = Psi^{-1} -> Psi.
    """
    start = MonotoneCurve(_shape.odd_shape, inv=lambda y: _shape.odd_shape(y), name="O")
    pair = copies(start, 2)
    sheared = tuple(shift(f, -0.5) for f in pair)
    # each sheared copy vanishes where O(t) = t/2; cut there so the pieces are supported on their positive part
    zero = brentq(lambda t: sheared[0].func(t), 1e-9, 50.0, xtol=1e-15)
    trimmed = tuple(MonotoneCurve(f.func, 0.0, zero, name=f.name) for f in sheared)
    merged = union(*trimmed).renamed("psi^-1")
    final = inverse(merged).renamed("glaisher")
    stages = (
        PipelineStage("start", (start,)),
        PipelineStage("split", pair),
        PipelineStage("shift", trimmed),
        PipelineStage("union", (merged,)),
        PipelineStage("inverse", (final,)),
    )
    return PipelineResult("glaisher", stages, final, _shape.psi_distinct, (0.05, 4.0))


def pipeline_lebesgue() -> PipelineResult:
    """Inverse Lebesgue shape m^{-1} from the mod-4 distinct-parts shape s.

    s splits by density into (2/3)s and (1/3)s. The first is cut at 2 s(0)/3
    into a plateau piece a (seen through its inverse) and a cap b; c = s/3.
    Then v = 2 b(2x) + c^{-1}(x), d = a^{-1} + 2x - 2x0, e = v + 2x - 2s(0)/3,
    t = plus(d, e) and finally m^{-1} = t - 2x + 2x0.
    """
    k4 = math.pi / 4
    s = MonotoneCurve(
        lambda x: 3 / math.pi * math.log1p(math.exp(-k4 * x)),
        inv=lambda y: -math.log(math.expm1(math.pi * y / 3)) / k4,
        name="s",
    )
    s0 = 3 / math.pi * math.log(2)
    two_thirds, one_third = scale(s, 2 / 3), scale(s, 1 / 3)
    x1 = 2 * s0 / 3
    eta0 = two_thirds(x1)
    x0 = eta0 + s0 / 3
    P, Q = cut(two_thirds, x1)
    a_inv = inverse(Q).renamed("a^-1")
    b = move(P, -eta0).renamed("b")
    c_curve = one_third.renamed("c")
    v = union(stretch_paste(b, b), inverse(c_curve)).renamed("v")
    d = move(shift(a_inv, 2.0), -2 * x0).renamed("d")
    v_trim = MonotoneCurve(v.func, 0.0, s0 / 3, name="v")
    e = move(shift(v_trim, 2.0), -2 * s0 / 3).renamed("e")
    t = plus(d, e).renamed("t")
    t_trim = MonotoneCurve(t.func, 0.0, x0, inv=t.inv, name="t")
    final = move(shift(t_trim, -2.0), 2 * x0).renamed("lebesgue")
    stages = (
        PipelineStage("start", (s,)),
        PipelineStage("density-split", (two_thirds, one_third)),
        PipelineStage("cut", (a_inv, b, c_curve)),
        PipelineStage("v", (v,)),
        PipelineStage("d-e", (d, e)),
        PipelineStage("plus", (t_trim,)),
        PipelineStage("final", (final,)),
    )
    return PipelineResult("lebesgue", stages, final, _shape.lebesgue_m_inv, (0.01, x0 - 0.01))


PIPELINES: dict[str, Callable[[], PipelineResult]] = {
    "selfconjugate": pipeline_selfconjugate,
    "glaisher": pipeline_glaisher,
    "lebesgue": pipeline_lebesgue,
}
