"""Enumeration oracle vs the bivariate product expansion."""

import pytest

from frobq.frobenius import (
    MAX_ENUM_WEIGHT,
    FrobeniusArray,
    bivar_coefficient_series,
    count_cphi,
    count_phi,
    enumerate_arrays,
)


# ---------------------------------------------------------------------------
# enumeration basics, pinned against hand enumerations
# ---------------------------------------------------------------------------

def test_weight_zero_repetition():
    arrays = enumerate_arrays("repetition", 2, -1, 0)
    assert arrays == [FrobeniusArray((), (0,))]


def test_weight_two_repetition():
    arrays = enumerate_arrays("repetition", 2, -1, 2)
    assert set(arrays) == {
        FrobeniusArray((), (2,)),
        FrobeniusArray((1,), (0, 0)),
        FrobeniusArray((0,), (1, 0)),
    }


def test_weight_zero_colored():
    arrays = enumerate_arrays("colored", 2, -1, 0)
    assert set(arrays) == {
        FrobeniusArray((), ((0, 1),)),
        FrobeniusArray((), ((0, 2),)),
    }


def test_weight_three_repetition_hand_list():
    arrays = set(enumerate_arrays("repetition", 2, -1, 3))
    assert arrays == {
        FrobeniusArray((), (3,)),
        FrobeniusArray((2,), (0, 0)),
        FrobeniusArray((1,), (1, 0)),
        FrobeniusArray((0,), (2, 0)),
        FrobeniusArray((0,), (1, 1)),
        FrobeniusArray((0, 0), (1, 0, 0)),
    }


def test_rows_are_nonincreasing_and_bounded():
    for arr in enumerate_arrays("repetition", 2, -1, 6):
        for row in (arr.top, arr.bottom):
            assert list(row) == sorted(row, reverse=True)
            assert all(row.count(v) <= 2 for v in row)
        assert arr.weight == 6
        assert arr.row_difference == -1


def test_colored_rows_canonical_and_distinct():
    for arr in enumerate_arrays("colored", 2, -1, 4):
        for row in (arr.top, arr.bottom):
            assert len(set(row)) == len(row)
            assert list(row) == sorted(row, reverse=True)
            assert all(1 <= c <= 2 for _, c in row)
        assert arr.weight == 4


def test_enumeration_is_sorted_and_duplicate_free():
    arrays = enumerate_arrays("colored", 2, -1, 5)
    keyed = [(a.top, a.bottom) for a in arrays]
    assert keyed == sorted(keyed)
    assert len(set(keyed)) == len(keyed)


def test_enumeration_guard():
    with pytest.raises(ValueError, match="enumeration guard"):
        enumerate_arrays("repetition", 2, -1, MAX_ENUM_WEIGHT + 1)
    with pytest.raises(ValueError):
        enumerate_arrays("striped", 2, -1, 1)
    with pytest.raises(ValueError):
        enumerate_arrays("repetition", 0, -1, 1)
    with pytest.raises(ValueError):
        enumerate_arrays("repetition", 2, -1, -1)


# ---------------------------------------------------------------------------
# counts
# ---------------------------------------------------------------------------

def test_count_phi_k1_is_partition_numbers():
    assert [count_phi(1, 0, n) for n in range(5)] == [1, 1, 2, 3, 5]


def test_count_phi_small_values():
    assert count_phi(2, -1, 3) == 6
    assert count_phi(2, -1, 4) == 10


def test_count_cphi_small_values():
    assert count_cphi(2, -1, 0) == 2
    assert count_cphi(2, -1, 1) == 4
    assert count_cphi(2, -1, 2) == 12


def test_json_serialization_shape():
    rep = enumerate_arrays("repetition", 2, -1, 2)[0]
    assert rep.to_json_dict() == {"top": [], "bottom": [[2]]}
    col = enumerate_arrays("colored", 2, -1, 0)[0]
    assert col.to_json_dict() == {"top": [], "bottom": [[0, 1]]}


# ---------------------------------------------------------------------------
# bivariate expansion path
# ---------------------------------------------------------------------------

def test_bivar_examples():
    assert bivar_coefficient_series("repetition", 2, -1, 4).coeffs == (1, 2, 3, 6, 10)
    assert bivar_coefficient_series("colored", 2, -1, 2).coeffs == (2, 4, 12)
    assert bivar_coefficient_series("repetition", 1, 0, 4).coeffs == (1, 1, 2, 3, 5)


def test_bivar_window_padding_changes_nothing():
    for variant in ("repetition", "colored"):
        base = bivar_coefficient_series(variant, 2, -1, 20)
        padded = bivar_coefficient_series(variant, 2, -1, 20, window_pad=4)
        assert base == padded


@pytest.mark.parametrize("variant", ["repetition", "colored"])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_oracle_agrees_with_bivariate(variant, k):
    count = count_phi if variant == "repetition" else count_cphi
    for alpha in range(-2, 3):
        series = bivar_coefficient_series(variant, k, alpha, 12)
        for n in range(13):
            assert series.coeffs[n] == count(k, alpha, n), (variant, k, alpha, n)


# ---------------------------------------------------------------------------
# structural identities, validated through the oracle
# ---------------------------------------------------------------------------

def test_row_swap_symmetry():
    # swapping rows sends (weight n, difference alpha) to (n - alpha, -alpha)
    for k in (1, 2):
        for alpha in range(-2, 3):
            for n in range(9):
                if n - alpha < 0:
                    continue
                assert count_phi(k, alpha, n) == count_phi(k, -alpha, n - alpha)
                assert count_cphi(k, alpha, n) == count_cphi(k, -alpha, n - alpha)


def test_row_swap_is_a_bijection_on_arrays():
    swapped = {
        FrobeniusArray(a.bottom, a.top)
        for a in enumerate_arrays("repetition", 2, 1, 7)
    }
    assert swapped == set(enumerate_arrays("repetition", 2, -1, 6))


def test_minimal_weight_support():
    for k in (1, 2, 3):
        for alpha in range(0, k + 1):
            assert count_phi(k, alpha, alpha) >= 1
            for n in range(alpha):
                assert count_phi(k, alpha, n) == 0


def test_k1_variants_coincide():
    for alpha in range(-2, 3):
        for n in range(10):
            assert count_phi(1, alpha, n) == count_cphi(1, alpha, n)
