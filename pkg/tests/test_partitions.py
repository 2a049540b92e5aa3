from itertools import product
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mnqt.exact import RatFunc
from mnqt.partitions import (BORDER, GENERALIZED_BORDER, HORIZONTAL, VERTICAL, Composition,
                             Partition, ShiftedSkewShape, SkewShape, character, coarsenings,
                             column_removal_bounds, double_strip_decompose, gbs_weight,
                             gds_weight, horizontal_strips_removed, major_index, n_stat,
                             partitions_between, partitions_of, skew_shapes, standard_tableaux,
                             strict_partitions, strip_classify, vertical_strips_removed)

t = RatFunc.var("t")
PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135]


@st.composite
def partitions(draw, max_size=12):
    n = draw(st.integers(0, max_size))
    parts = partitions_of(n)
    return parts[draw(st.integers(0, len(parts) - 1))]


@st.composite
def skew_pairs(draw, max_size=10):
    lam = draw(partitions(max_size))
    inner = partitions_between((), lam)
    return SkewShape(lam, inner[draw(st.integers(0, len(inner) - 1))])


# -- Partition -------------------------------------------------------------------

def test_partition_counts():
    assert [len(partitions_of(n)) for n in range(15)] == PARTITION_COUNTS


def test_partition_rejects_increasing_parts():
    with pytest.raises(ValueError):
        Partition((1, 2))


def test_parse_names_bad_token():
    with pytest.raises(ValueError, match="'x'"):
        Partition.parse("2,x")
    assert Partition.parse("(3, 1, 1)") == Partition((3, 1, 1))
    assert Partition.parse("-") == Partition(())


@given(partitions(14))
def test_conjugation_is_an_involution(lam):
    assert lam.conjugate.conjugate == lam
    assert lam.conjugate.size == lam.size


@given(partitions(12))
def test_n_statistic_two_ways(lam):
    assert lam.n == sum(comb(c, 2) for c in lam.conjugate)
    assert n_stat(SkewShape(lam)) == lam.n


def test_strict_partition_counts():
    assert [len(strict_partitions(n)) for n in range(1, 10)] == [1, 1, 2, 2, 3, 4, 5, 6, 8]


def test_dominance_examples():
    assert Partition((3, 1)).dominates((2, 2))
    assert not Partition((2, 2)).dominates((3, 1))
    assert not Partition((3, 1, 1, 1)).dominates((2, 2, 2))


# -- statistics and strips ----------------------------------------------------------

def test_n_stat_examples():
    assert n_stat(SkewShape((4, 3, 1))) == 5
    assert n_stat(SkewShape((3, 2), (3, 2))) == 0
    assert n_stat(SkewShape((2, 2), (2,))) == 0
    assert n_stat(SkewShape((2, 1), (1,))) == 0
    # a vertical domino: column differences (0, 2)
    assert n_stat(SkewShape((2, 2), (1, 1))) == 1


def test_strip_classes_of_three_component_shape():
    shape = SkewShape((4, 3, 3, 1), (3, 2, 1))
    flags = strip_classify(shape)
    assert GENERALIZED_BORDER in flags and BORDER not in flags
    assert len(shape.components) == 3


def test_strip_classes_of_row_and_square():
    assert strip_classify(SkewShape((5,))) >= {HORIZONTAL, BORDER}
    flags = strip_classify(SkewShape((2, 2)))
    assert not flags & {HORIZONTAL, VERTICAL, BORDER, GENERALIZED_BORDER}


@given(skew_pairs())
def test_horizontal_strip_iff_conjugate_is_vertical(shape):
    flags = strip_classify(shape)
    conj = strip_classify(shape.conjugate())
    assert (HORIZONTAL in flags) == (VERTICAL in conj)
    assert (BORDER in flags) == (BORDER in conj)


@given(skew_pairs())
def test_horizontal_strip_means_one_cell_per_column(shape):
    assert shape.is_horizontal_strip() == all(c <= 1 for c in shape.column_lengths())


def test_gbs_weight_examples():
    assert gbs_weight(SkewShape((4,)), t) == t ** 3
    assert gbs_weight(SkewShape((1, 1, 1)), t) == RatFunc(1)
    assert gbs_weight(SkewShape((4, 3, 3, 1), (3, 2, 1)), t) == (t - 1) ** 2 * (-t)
    with pytest.raises(ValueError):
        gbs_weight(SkewShape((2, 2)), t)


def test_gbs_weight_accepts_integers():
    assert gbs_weight(SkewShape((4, 3, 3, 1), (3, 2, 1)), 2) == -2


def test_column_removal_bounds_examples():
    shape = SkewShape((9, 9, 9, 5, 4, 2, 2), (5, 5, 4, 3, 1, 1, 1))
    assert column_removal_bounds(shape) == [(2, 2), (4, 1), (5, 1), (9, 3)]
    assert column_removal_bounds(SkewShape((3, 1), (3, 1))) == []
    assert column_removal_bounds(SkewShape((1,))) == [(1, 1)]


def test_coarsening_examples():
    assert set(coarsenings((1, 1))) == {(1, 1), (2,)}
    assert coarsenings((5,)) == [Composition((5,))]
    assert set(coarsenings((1, 2, 1))) == {(1, 2, 1), (3, 1), (1, 3), (4,)}


@given(st.lists(st.integers(1, 4), min_size=1, max_size=7))
def test_coarsenings_count_and_sum(parts):
    out = coarsenings(parts)
    assert len(out) == 2 ** (len(parts) - 1) == len(set(out))
    assert all(sum(c) == sum(parts) for c in out)


# -- shifted shapes ----------------------------------------------------------------

def test_double_strip_of_nineteen_cell_shape():
    shape = ShiftedSkewShape((15, 14, 10, 8, 7, 6, 5, 3, 1), (13, 11, 8, 6, 5, 4, 2, 1))
    info = double_strip_decompose(shape)
    assert shape.size == 19
    assert info.is_gds and info.c == 5 and info.m == 5


def test_double_strip_trivial_cases():
    info = double_strip_decompose(ShiftedSkewShape((4, 2), (4, 2)))
    assert info.is_gds and info.c == 0 and info.components == []
    info = double_strip_decompose(ShiftedSkewShape((6, 5, 4, 3, 2), (5, 4, 2)))
    assert info.is_gds and info.m == 1


def test_gds_weight_small_cases():
    assert gds_weight(ShiftedSkewShape((3, 1), (3, 1)), t) == RatFunc(1)
    assert gds_weight(ShiftedSkewShape((3, 1), (3,)), t) == 2 * (t - 1)
    # a single row of two cells has no proper coarsening: d_2 = 2(t-1)(-1)[2]_{-t}
    assert gds_weight(ShiftedSkewShape((2,)), t) == 2 * (t - 1) ** 2


def test_non_double_strip_is_rejected():
    shape = ShiftedSkewShape((5, 4, 3))
    assert not double_strip_decompose(shape).is_gds
    with pytest.raises(ValueError):
        gds_weight(shape, t)


# -- enumeration -------------------------------------------------------------------

def _brute_skew_shapes(n):
    """Skew cell sets with n cells, empty rows and columns squeezed out."""
    seen = set()
    # a normalized shape fits in an n x n box
    boxed = (p for m in range(n, n * n + 1) for p in partitions_of(m)
             if len(p) <= n and p.part(1) <= n)
    for lam in boxed:
        for rho in partitions_between((), lam):
            if lam.size - rho.size != n:
                continue
            cells = SkewShape(lam, rho).cells
            rows = {r: k for k, r in enumerate(sorted({i for i, _ in cells}))}
            cols = {c: k for k, c in enumerate(sorted({j for _, j in cells}))}
            seen.add(frozenset((rows[i], cols[j]) for i, j in cells))
    return seen


def test_skew_shape_counts():
    assert [len(skew_shapes(n)) for n in range(1, 8)] == [1, 3, 9, 28, 87, 272, 850]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_skew_shapes_match_squeezed_cell_sets(n):
    ours = set()
    for lam, rho in skew_shapes(n):
        cells = SkewShape(lam, rho).cells
        assert min(i for i, _ in cells) == 1 and min(j for _, j in cells) == 1
        ours.add(frozenset((i - 1, j - 1) for i, j in cells))
    assert len(ours) == len(skew_shapes(n))
    assert ours == _brute_skew_shapes(n)


@given(partitions(9))
def test_strip_removal_lists(lam):
    for mu in horizontal_strips_removed(lam):
        assert SkewShape(lam, mu).is_horizontal_strip()
    for mu in vertical_strips_removed(lam):
        assert SkewShape(lam, mu).is_vertical_strip()
    expected = [mu for mu in partitions_between((), lam) if SkewShape(lam, mu).is_horizontal_strip()]
    assert sorted(horizontal_strips_removed(lam)) == sorted(expected)


def _hook_length_count(lam):
    hooks = 1
    for i, j in lam.cells():
        hooks *= lam.arm(i, j) + lam.leg(i, j) + 1
    return factorial(lam.size) // hooks


@given(partitions(8))
def test_standard_tableaux_hook_length(lam):
    assert len(standard_tableaux(SkewShape(lam))) == _hook_length_count(lam)


def test_major_index_of_single_column_and_row():
    (col,) = standard_tableaux(SkewShape((1, 1, 1)))
    (row,) = standard_tableaux(SkewShape((3,)))
    assert major_index(col) == 3 and major_index(row) == 0


# -- characters ----------------------------------------------------------------

def test_character_examples():
    for rho in partitions_of(5):
        assert character((5,), rho) == 1
        assert character((1,) * 5, rho) == rho.sign
    assert character((2, 1), (1, 1, 1)) == 2
    assert character((2, 1), (1, 1, 1)) == len(standard_tableaux(SkewShape((2, 1))))


@pytest.mark.parametrize("n", range(1, 7))
def test_character_column_orthogonality(n):
    parts = partitions_of(n)
    for rho, sigma in product(parts, parts):
        total = sum(character(lam, rho) * character(lam, sigma) for lam in parts)
        assert total == (rho.z if rho == sigma else 0)
