from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from limitshapes.core import (
    AndrewsBound,
    Convex,
    Distinct,
    EvenBoundedCount,
    EvenBoundedLargest,
    LebesgueSimple,
    MinDiff,
    MultiplicityVector,
    Odd,
    Partition,
    PartSizeSet,
    PartsIn,
    RomikA,
    SelfConjugate,
    conjugate,
    diagram,
    durfee,
    from_multiplicities,
    parse_class,
    rth_differences,
    scaled_diagram,
    to_multiplicities,
)

partitions = st.lists(st.integers(1, 25), max_size=15).map(Partition.of)


class TestPartition:
    def test_parse_and_str_round_trip(self):
        p = Partition.parse("4,3,1")
        assert p.parts == (4, 3, 1)
        assert str(p) == "4,3,1"
        assert Partition.parse("") == Partition()

    def test_of_sorts(self):
        assert Partition.of([1, 4, 3]) == Partition((4, 3, 1))

    @pytest.mark.parametrize("bad", [(1, 2), (3, 0), (2, -1)])
    def test_rejects_invalid(self, bad):
        with pytest.raises(ValueError):
            Partition(bad)

    def test_size_and_length(self):
        p = Partition((5, 2, 2))
        assert p.size == 9
        assert p.length == 3


class TestMultiplicities:
    def test_example(self):
        m = to_multiplicities(Partition((3, 1, 1)))
        assert dict(m) == {1: 2, 3: 1}
        assert m.weight == 5

    def test_zero_entries_dropped(self):
        assert MultiplicityVector({2: 0, 1: 3}) == MultiplicityVector({1: 3})

    @pytest.mark.parametrize("bad", [{0: 1}, {2: -1}])
    def test_rejects_invalid(self, bad):
        with pytest.raises(ValueError):
            MultiplicityVector(bad)

    @given(partitions)
    def test_round_trip(self, p):
        assert from_multiplicities(to_multiplicities(p)) == p


class TestConjugateAndDurfee:
    def test_examples(self):
        assert conjugate(Partition((4, 3, 1))) == Partition((3, 2, 2, 1))
        assert durfee(Partition((4, 3, 1))) == 2
        assert durfee(Partition()) == 0

    @given(partitions)
    def test_involution(self, p):
        q = conjugate(p)
        assert conjugate(q) == p
        assert q.size == p.size
        assert q.length == (p[0] if p.length else 0)

    @given(partitions)
    def test_durfee_is_conjugation_invariant(self, p):
        assert durfee(p) == durfee(conjugate(p))
        k = durfee(p)
        assert k == 0 or p[k - 1] >= k
        assert k == p.length or p[k] < k + 1


class TestDiagram:
    def test_step_values(self):
        p = Partition((4, 3, 1))
        assert [diagram(p, t) for t in (0.5, 1, 1.5, 3, 3.5, 4, 4.5)] == [3, 3, 2, 2, 1, 1, 0]

    @given(partitions)
    def test_area_is_size(self, p):
        assert sum(diagram(p, k) for k in range(1, 30)) == p.size

    @given(partitions, st.floats(0.5, 4.0))
    def test_scaled_diagram(self, p, alpha):
        n = max(p.size, 1)
        grid = [0.3, 1.0, 2.2]
        got = scaled_diagram(p, n, alpha, grid)
        want = [alpha / n * diagram(p, alpha * t) for t in grid]
        np.testing.assert_allclose(got, want)


@pytest.mark.parametrize(
    "parts, r, expected",
    [
        ((4, 1), 2, [2, 1]),
        ((6, 3, 1), 2, [1, 1, 1]),
        ((5, 4, 1), 2, [-2, 2, 1]),
        ((10, 4, 1), 3, [1, 1, 1]),
        ((10, 3, 1), 3, [4, 0, 1]),
    ],
)
def test_rth_differences(parts, r, expected):
    assert rth_differences(Partition(parts), r) == expected


class TestPartSizeSet:
    @pytest.mark.parametrize(
        "U, first",
        [
            (PartSizeSet.integers(), [1, 2, 3, 4, 5]),
            (PartSizeSet.odd(), [1, 3, 5, 7, 9]),
            (PartSizeSet.triangular(), [1, 3, 6, 10, 15]),
            (PartSizeSet.binomial(3), [1, 4, 10, 20, 35]),
            (PartSizeSet.powers(2), [1, 4, 9, 16, 25]),
            (PartSizeSet.powers(2, 2), [1, 9, 25, 49, 81]),
            (PartSizeSet.not_divisible(3), [1, 2, 4, 5, 7]),
            (PartSizeSet.explicit([7, 2, 5]), [2, 5, 7]),
        ],
    )
    def test_first_values(self, U, first):
        assert [U.u(k) for k in range(1, len(first) + 1)] == first
        assert U.values_upto(first[-1]) == first

    @pytest.mark.parametrize(
        "U, r, B",
        [
            (PartSizeSet.integers(), 1, 1.0),
            (PartSizeSet.odd(), 1, 2.0),
            (PartSizeSet.triangular(), 2, 0.5),
            (PartSizeSet.powers(2, 2), 2, 4.0),
            (PartSizeSet.not_divisible(3), 1, 1.5),
        ],
    )
    def test_growth_constants(self, U, r, B):
        assert U.r == r
        assert U.B == pytest.approx(B)

    def test_gcd(self):
        assert PartSizeSet.polynomial(2, 0).gcd == 2
        assert PartSizeSet.odd().gcd == 1
        assert PartSizeSet.explicit([4, 6]).gcd == 2

    @pytest.mark.parametrize("coeffs", [(0, 3), (1, Fraction(1, 2)), (-1, 5)])
    def test_rejects_bad_polynomial(self, coeffs):
        with pytest.raises(ValueError):
            PartSizeSet.polynomial(*coeffs)

    @settings(max_examples=50)
    @given(st.sampled_from(["integers", "odd", "triangular", "binom3", "powers2-not-3", "not-div-4"]), st.integers(1, 400))
    def test_contains_agrees_with_listing(self, name, u):
        U = parse_class(f"parts:{name}").U
        assert U.contains(u) == (u in U.values_upto(u))


CLASS_TEXTS = [
    "unrestricted",
    "distinct",
    "odd",
    "odd-distinct",
    "glaisher-o:3",
    "glaisher-d:2",
    "convex:2",
    "convex:3",
    "mindiff:2",
    "mindiff:2:no1",
    "romik-a",
    "romik-b",
    "lebesgue",
    "lebesgue:1:3",
    "self-conjugate",
    "mod4",
    "even-largest:3",
    "even-count:3",
    "multiples-largest:3:2:4",
    "multiples-count:3:2:4",
    "parts:triangular",
    "parts:integers:a=3",
    "parts:list=2/5",
]


@pytest.mark.parametrize("text", CLASS_TEXTS)
def test_parse_class_round_trip(text):
    c = parse_class(text)
    assert parse_class(c.spec) == c


@pytest.mark.parametrize("text", ["nonsense", "convex:x", "glaisher-o", "parts:wibble"])
def test_parse_class_errors(text):
    with pytest.raises(ValueError):
        parse_class(text)


@pytest.mark.parametrize(
    "cls, parts, expected",
    [
        (Distinct(), (3, 2, 1), True),
        (Distinct(), (2, 2), False),
        (Odd(), (5, 3, 3), True),
        (Odd(), (4, 1), False),
        (Convex(2), (4, 1), True),
        (Convex(2), (5, 4, 1), False),
        (MinDiff(2), (5, 3, 1), True),
        (MinDiff(2), (4, 3), False),
        (MinDiff(2, forbid_size_one=True), (5, 3, 1), False),
        (RomikA(), (5, 3), True),
        (RomikA(), (4, 3), False),
        (RomikA(), (3, 1), False),
        (LebesgueSimple(), (5, 1), True),
        (LebesgueSimple(), (4, 2), True),
        (LebesgueSimple(), (3, 1), False),
        (LebesgueSimple(), (2, 1), False),
        (SelfConjugate(), (3, 2, 1), True),
        (SelfConjugate(), (3, 1), False),
        (EvenBoundedLargest(2), (4, 2, 2), True),
        (EvenBoundedLargest(2), (6,), False),
        (EvenBoundedLargest(2), (2, 1), False),
        (EvenBoundedCount(2), (8, 2), True),
        (EvenBoundedCount(2), (2, 2, 2), False),
        (PartsIn(PartSizeSet.triangular()), (6, 3, 1), True),
        (PartsIn(PartSizeSet.triangular()), (5,), False),
        (AndrewsBound((None, 2)), (2, 1, 1, 1), True),
        (AndrewsBound((None, 2)), (2, 2), False),
    ],
)
def test_membership(cls, parts, expected):
    assert (Partition(parts) in cls) is expected


def test_multiplicative_rules():
    c = parse_class("parts:odd:a=3")
    assert c.multiplicative
    assert c.rule(3).allows(2)
    assert not c.rule(3).allows(3)
    assert not c.rule(2).allows(1)
    with pytest.raises(TypeError):
        Convex(2).rule(1)
