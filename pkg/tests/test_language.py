import math

import pytest

from randsub.inflation import CapacityError, level_sets
from randsub.language import _window_sets, complexity_profile, is_periodic_bounded, legal_words
from randsub.spectral import perron_data
from randsub.substitution import primitivity_exponent, substitution_matrix
from randsub.words import subwords_of_length

from conftest import EQUAL, FIB, RF, RPD, RTM, sub_of


def test_legal_words_examples():
    rf = sub_of(RF)
    assert legal_words(rf, 1).words == {"a", "b"}
    sl = legal_words(rf, 2)
    assert sl.words == {"aa", "ab", "ba", "bb"}
    assert sl.converged and sl.window == 2
    assert legal_words(sub_of(RTM), 2).words == {"aa", "ab", "ba", "bb"}


def test_legal_words_rejects_bad_length():
    with pytest.raises(ValueError):
        legal_words(sub_of(RF), 0)


def test_level_cap_gives_unconverged_slice():
    sl = legal_words(sub_of(RF), 4, m_cap=3)
    assert not sl.converged and sl.levels_used == 3


@pytest.mark.parametrize("rules, levels", [(RF, 6), (RTM, 5), (RPD, 4), (FIB, 8)])
@pytest.mark.parametrize("length", [1, 2, 3, 5])
def test_window_sets_equal_full_enumeration(rules, levels, length):
    sub = sub_of(rules)
    for _, (m, words, _) in zip(range(levels), _window_sets(sub, length, 10**7)):
        lv = level_sets(sub, m)
        expected = set()
        for group in lv.per_letter:
            for w in group:
                if len(w) >= length:
                    expected |= subwords_of_length(w, length)
        assert words == expected


def test_oracle_contains_inflation_subwords(entry):
    sub = entry.substitution
    slices = {n: legal_words(sub, n) for n in range(1, 7)}
    for m in (1, 2, 3):
        try:
            lv = level_sets(sub, m)
        except CapacityError:
            break
        for group in lv.per_letter:
            for w in group:
                for n in range(1, min(6, len(w)) + 1):
                    assert subwords_of_length(w, n) <= slices[n].words


def test_levels_reembed_after_primitivity_exponent(entry):
    sub = entry.substitution
    k = primitivity_exponent(substitution_matrix(sub))
    for n in (2, 3):
        sets = {}
        for _, (m, words, _) in zip(range(4 + k), _window_sets(sub, n, 10**7)):
            sets[m] = words
        for m in range(1, 5):
            if m + k in sets:
                assert sets[m] <= sets[m + k]


def test_complexity_profile():
    rows = complexity_profile(sub_of(RF), 3)
    assert rows[1][:3] == (2, 4, pytest.approx(math.log(4) / 2))
    fib = complexity_profile(sub_of(FIB), 6)
    assert [r.count for r in fib] == [2, 3, 4, 5, 6, 7]
    for r in fib:
        assert 0 <= r.frequency_deviation <= 1


def test_complexity_growth_bound(entry):
    sub = entry.substitution
    rows = complexity_profile(sub, 5)
    assert rows[0].count == sub.n
    for a, b in zip(rows, rows[1:]):
        assert b.count <= a.count * sub.n


def test_frequency_deviation_shrinks():
    rows = complexity_profile(sub_of(FIB), 30)
    assert rows[-1].frequency_deviation < rows[0].frequency_deviation
    R = perron_data(substitution_matrix(sub_of(FIB))).R
    assert rows[0].frequency_deviation == pytest.approx(max(1 - R[0], R[0]))


def test_is_periodic_bounded():
    cert = is_periodic_bounded(sub_of(EQUAL), "ab", 3)
    assert cert.verdict == "consistent" and cert.n_checked == 3
    cert = is_periodic_bounded(sub_of(FIB), "b", 2)
    assert (cert.verdict, cert.failed_at, cert.missing) == ("refuted", 2, "bb")
    # aa does occur in the Fibonacci word; aaa does not
    cert = is_periodic_bounded(sub_of(FIB), "a", 3)
    assert (cert.failed_at, cert.missing) == (3, "aaa")
    assert is_periodic_bounded(sub_of(RTM), "ab", 1).verdict == "consistent"
    assert is_periodic_bounded(sub_of(RPD), "abaa", 2).verdict == "consistent"
