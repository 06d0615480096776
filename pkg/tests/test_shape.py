import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from limitshapes import shape
from limitshapes.shape import (
    C_CLASSIC,
    D_DISTINCT,
    CURVE_NAMES,
    E,
    E_a,
    ShapeTriple,
    const_d,
    dilog,
    named_curve,
)


@settings(max_examples=200)
@given(st.floats(0.0, 1.0))
def test_dilog_matches_mpmath(x):
    assert dilog(x) == pytest.approx(float(mpmath.polylog(2, x)), abs=1e-14)


@pytest.mark.parametrize("x, value", [(0.0, 0.0), (0.5, math.pi**2 / 12 - math.log(2) ** 2 / 2), (1.0, math.pi**2 / 6)])
def test_dilog_special_values(x, value):
    assert dilog(x) == pytest.approx(value, abs=1e-15)


def test_dilog_domain():
    with pytest.raises(ValueError):
        dilog(1.5)


class TestGeometricMeans:
    @given(st.floats(0.01, 0.99), st.integers(2, 8))
    def test_truncated_mean_matches_direct_sum(self, q, a):
        direct = sum(k * q**k for k in range(a)) / sum(q**k for k in range(a))
        assert E_a(q, a) == pytest.approx(direct, rel=1e-10)

    def test_unbounded_limit(self):
        assert E_a(0.3, None) == E(0.3) == pytest.approx(0.3 / 0.7)
        assert E_a(0.3, 200) == pytest.approx(E(0.3), rel=1e-12)

    def test_small_argument_series(self):
        assert shape._Ea_exp(1e-6, 3) == pytest.approx(1.0, abs=1e-5)


class TestConstants:
    @pytest.mark.parametrize(
        "args, value",
        [
            ((1, 1), math.pi / math.sqrt(6)),
            ((1, 1, 2), math.pi / math.sqrt(12)),
            ((1, 2), math.pi / math.sqrt(12)),
            ((2, 0.5), 0.5 * math.pi ** (1 / 3) * float(mpmath.zeta(1.5)) ** (2 / 3)),
        ],
    )
    def test_values(self, args, value):
        assert const_d(*args) == pytest.approx(value, abs=1e-12)

    @pytest.mark.parametrize("args", [(0.5, 1), (1, 0), (1, 1, 1)])
    def test_invalid(self, args):
        with pytest.raises(ValueError):
            const_d(*args)

    def test_named(self):
        assert C_CLASSIC == const_d(1, 1)
        assert D_DISTINCT == pytest.approx(const_d(1, 1, 2))
        assert shape.convex_constant() == pytest.approx(const_d(2, 0.5))

    def test_corollaries(self):
        assert shape.parts_constant() == pytest.approx(0.561099852, abs=1e-9)
        assert shape.durfee_constant() == pytest.approx(0.454611067, abs=1e-9)
        assert shape.durfee_quintic_value() == pytest.approx(shape.durfee_constant(), abs=1e-9)

    def test_durfee_of_classic_shape(self):
        assert shape.durfee_of(shape.phi_classic) == pytest.approx(math.log(2) / C_CLASSIC, rel=1e-12)


GRID = np.linspace(0.05, 4.0, 25)


class TestClosedForms:
    def test_phi_general_reduces_to_classic(self):
        for t in GRID:
            assert shape.phi_rB(t, 1, 1) == pytest.approx(shape.phi_classic(t), abs=1e-10)

    def test_phi_bounded_reduces_to_distinct(self):
        for t in GRID:
            assert shape.phi_rBa(t, 1, 1, 2) == pytest.approx(shape.psi_distinct(t), abs=1e-10)

    def test_odd_shapes_are_scaled_b2_members(self):
        for t in GRID:
            assert shape.odd_shape(t) == pytest.approx(shape.phi_rB(t, 1, 2), abs=1e-10)
            assert shape.odd_distinct_shape(t) == pytest.approx(shape.phi_rBa(t, 1, 2, 2), abs=1e-10)

    @pytest.mark.parametrize("f, finv", [(shape.phi_classic, shape.phi_classic_inv), (shape.psi_distinct, shape.psi_distinct_inv)])
    def test_inverses(self, f, finv):
        for t in (0.1, 0.7, 2.0):
            assert finv(f(t)) == pytest.approx(t, rel=1e-12)

    def test_lebesgue_pair(self):
        for x in (0.05, 0.2, 0.5):
            assert shape.lebesgue_m_inv(shape.lebesgue_m(x)) == pytest.approx(x, abs=1e-12)
            assert shape.lebesgue_general(1, 2, x) == pytest.approx(shape.lebesgue_m(x), rel=1e-12)

    def test_lebesgue_inverse_domain(self):
        with pytest.raises(ValueError):
            shape.lebesgue_m_inv(0.7)

    def test_romik_curves_are_mutual_inverses(self):
        for x in (0.1, 0.5, 1.0, 2.5):
            assert shape.romik_A(shape.romik_B(x)) == pytest.approx(x, abs=1e-12)
            assert shape.romik_B(shape.romik_A(x)) == pytest.approx(x, abs=1e-12)

    def test_min_difference_one_is_distinct(self):
        y, gamma, _, _ = shape.diffd_constants(1)
        assert y == pytest.approx(0.5)
        assert gamma == pytest.approx(math.log(2) / D_DISTINCT)
        for x in np.linspace(0.05, 0.7, 6):
            assert shape.diffd_inverse(1, x) == pytest.approx(shape.psi_distinct_inv(x), abs=1e-12)

    def test_bounded_pair_scaling(self):
        for s in (0.1, 0.4, 0.8):
            assert shape.bounded_G(1.0, s) == pytest.approx(2 * shape.bounded_F(1.0, 2 * s), rel=1e-12)
        assert shape.bounded_F(1.0, 2.0) == 0.0


UNIT_AREA_CASES = [
    ("phi", {}),
    ("psi", {}),
    ("odd", {}),
    ("odd-distinct", {}),
    ("phi-rB", {"r": 2, "B": 0.5}),
    ("phi-rBa", {"r": 2, "B": 1, "a": 3}),
    ("romik-a", {}),
    ("romik-b", {}),
    ("convex-inverse", {}),
    ("rth-inverse", {"r": 3}),
    ("lebesgue-m", {}),
    ("lebesgue-m-inv", {}),
    ("lebesgue-general", {"ell": 1, "k": 3}),
    ("diffd-inverse", {"d": 1}),
    ("diffd-inverse", {"d": 2}),
    ("diffd-inverse", {"d": 3}),
    ("bounded-F", {"b": 1}),
    ("bounded-G", {"b": 0.7}),
    ("bounded-Fmr", {"m": 3, "r": 2, "b": 1}),
    ("bounded-Gmr", {"m": 3, "r": 2, "b": 1}),
]


@pytest.mark.parametrize("name, params", UNIT_AREA_CASES, ids=lambda v: str(v))
def test_unit_area(name, params):
    curve = named_curve(name, params)
    assert curve.unit_area
    assert curve.area() == pytest.approx(1.0, abs=1e-6)


@pytest.mark.parametrize("name, params", [c for c in UNIT_AREA_CASES if c[0] not in ("lebesgue-m-inv",)][:12])
def test_curves_are_nonincreasing(name, params):
    curve = named_curve(name, params)
    lo, hi = curve.support
    xs = np.linspace(lo + 0.02, min(hi, 4.0) - 0.01, 30)
    vals = curve(xs)
    assert np.all(np.diff(vals) <= 1e-12)


def test_numeric_inverse_for_curve_without_closed_form():
    curve = named_curve("odd")
    y = curve(0.8)
    assert curve.inverse(y) == pytest.approx(0.8, rel=1e-10)


def test_every_name_resolves():
    for name in CURVE_NAMES:
        assert named_curve(name).name == name
    with pytest.raises(KeyError):
        named_curve("nope")


def test_scaling_exponents():
    c = named_curve("convex-inverse")
    assert (c.x_exponent, c.y_exponent) == pytest.approx((2 / 3, 1 / 3))


class TestIdentities:
    def test_glaisher(self):
        assert shape.glaisher_identity_check([0.25, 0.5, 1.0, 2.0]) < 1e-10

    @pytest.mark.parametrize("r, m", [(2, 2), (1, 3), (2, 3)])
    def test_stanton(self, r, m):
        assert shape.stanton_identity_check(r, m, [0.25, 0.5, 1.0, 2.0]) < 1e-6

    def test_printed_glaisher_chain_start_is_wrong(self):
        # Starting the chain from sqrt(2) Phi(x sqrt(2)) does not give Psi.
        gap = max(abs(math.sqrt(2) * shape.phi_classic(x * math.sqrt(2)) - shape.odd_shape(x)) for x in GRID)
        assert gap > 1e-2


def test_shape_triple():
    # y E(e^{-cy}) has total mass zeta(2) / c^2 = 1
    triple = ShapeTriple(0.0, 0.0, lambda y: y * shape._E_exp(C_CLASSIC * y))
    assert triple.check()
    assert not ShapeTriple(0.2, 0.0, triple.density).check()
