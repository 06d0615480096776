import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from limitshapes.core import (
    Distinct,
    Odd,
    PartSizeSet,
    PartsIn,
    Unrestricted,
    parse_class,
)
from limitshapes.enumeration import (
    ENUMERATION_LIMIT,
    NotApplicable,
    all_partitions,
    asymptotic_distinct,
    asymptotic_unrestricted,
    count,
    count_by_largest_part,
    count_table,
    enumerate_all,
    ingham_printed,
    roth_szekeres_printed,
)

# OEIS A000041 and A000009
P = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176]
Q = [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15, 18, 22, 27]


def test_known_small_counts():
    assert list(count_table(Unrestricted(), 15).counts) == P
    assert list(count_table(Distinct(), 15).counts) == Q


@pytest.mark.parametrize("cls, n, expected", [(Unrestricted(), 100, 190569292), (Distinct(), 100, 444793)])
def test_known_large_counts(cls, n, expected):
    assert count(cls, n) == expected


CLASSES = [
    "unrestricted",
    "distinct",
    "odd",
    "odd-distinct",
    "glaisher-o:2",
    "glaisher-d:2",
    "convex:2",
    "convex:3",
    "mindiff:2",
    "mindiff:3:no1",
    "romik-a",
    "romik-b",
    "lebesgue",
    "lebesgue:1:3",
    "lebesgue:2:3",
    "self-conjugate",
    "mod4",
    "even-largest:3",
    "even-count:3",
    "multiples-largest:2:2:4",
    "multiples-count:2:2:4",
    "parts:triangular",
    "parts:binom3:a=2",
    "parts:not-div-3",
    "parts:list=2/5",
    "andrews:2,3,inf:default=2",
]


@pytest.mark.parametrize("text", CLASSES)
def test_dp_matches_enumeration(text):
    c = parse_class(text)
    table = count_table(c, 16)
    for n in range(17):
        members = enumerate_all(c, n)
        assert len(members) == table[n], (text, n)
        assert all(p.size == n and p in c for p in members)


@pytest.mark.parametrize("text", [t for t in CLASSES if parse_class(t).multiplicative])
def test_largest_part_recursion_agrees(text):
    c = parse_class(text)
    table = count_table(c, 40)
    assert [count_by_largest_part(c, n) for n in range(41)] == list(table.counts)


def test_largest_part_recursion_needs_multiplicative_class():
    with pytest.raises(TypeError):
        count_by_largest_part(parse_class("convex:2"), 5)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 22))
def test_all_partitions_order_and_count(n):
    ps = all_partitions(n)
    assert len(ps) == P[n] if n < len(P) else len(ps) == count(Unrestricted(), n)
    assert len(set(ps)) == len(ps)
    assert list(ps) == sorted(ps, key=lambda p: p.parts)


def test_enumeration_limit():
    with pytest.raises(ValueError):
        enumerate_all(Unrestricted(), ENUMERATION_LIMIT + 1)


def test_empty_partition_counts_once():
    assert count(parse_class("parts:list=2/5"), 0) == 1
    assert count(parse_class("parts:list=2/5"), 3) == 0


class TestAsymptotics:
    @pytest.mark.parametrize("formula, cls", [(asymptotic_unrestricted, Unrestricted()), (asymptotic_distinct, Distinct())])
    def test_ratio_improves(self, formula, cls):
        U = PartSizeSet.integers()
        ratios = [count(cls, n) / formula(U, n) for n in (100, 400, 1600)]
        gaps = [abs(r - 1) for r in ratios]
        assert gaps[0] > gaps[1] > gaps[2]
        assert gaps[2] < 0.02

    def test_hardy_ramanujan_leading_term(self):
        n = 500
        hr = math.exp(math.pi * math.sqrt(2 * n / 3)) / (4 * n * math.sqrt(3))
        assert asymptotic_unrestricted(PartSizeSet.integers(), n) == pytest.approx(hr, rel=1e-12)

    @pytest.mark.parametrize("U, cls", [(PartSizeSet.odd(), Odd()), (PartSizeSet.triangular(), PartsIn(PartSizeSet.triangular()))])
    def test_other_polynomial_sets_trend(self, U, cls):
        r1 = count(cls, 300) / asymptotic_unrestricted(U, 300)
        r2 = count(cls, 2000) / asymptotic_unrestricted(U, 2000)
        assert abs(r2 - 1) < abs(r1 - 1)

    def test_off_lattice_raises(self):
        evens = PartSizeSet.polynomial(2, 0)
        with pytest.raises(NotApplicable):
            asymptotic_unrestricted(evens, 7)
        assert asymptotic_unrestricted(evens, 8) > 0

    def test_explicit_list_rejected(self):
        with pytest.raises(ValueError):
            asymptotic_distinct(PartSizeSet.explicit([1, 2]), 10)

    def test_printed_constants_disagree(self):
        # The printed closed forms are kept for reference; their constants do
        # not reproduce the counts (see the project notes).
        U = PartSizeSet.integers()
        r_ing = [count(Unrestricted(), n) / ingham_printed(U, n) for n in (200, 1000)]
        assert all(r < 0.05 for r in r_ing)
        assert r_ing[0] == pytest.approx(r_ing[1], rel=0.05)
        r_rs = [count(Distinct(), n) / roth_szekeres_printed(U, n) for n in (200, 1000)]
        assert r_rs[1] / r_rs[0] > 2
