import math

import pytest

from randsub.catalogue import (NAMES, TAU, get_example, rf_cardinality, rf_log_cardinality, rf_q,
                               rtm_cardinalities, rtm_q)
from randsub.entropy import bounds_table
from randsub.inflation import cardinalities, level_sets
from randsub.spectral import perron_data
from randsub.substitution import primitivity_exponent, substitution_matrix, validate
from randsub.words import concat_sets


def test_names():
    assert set(NAMES) == {"random-fibonacci", "random-thue-morse", "random-period-doubling",
                          "random-fibonacci-squared", "random-paper-folding", "equal-images",
                          "rust-ex19"}
    with pytest.raises(KeyError, match="unknown example"):
        get_example("nope")


def test_entries_valid_and_primitive(entry):
    assert validate(entry.substitution).ok
    assert primitivity_exponent(substitution_matrix(entry.substitution)) is not None


def test_named_entries():
    rpd = get_example("random-period-doubling")
    assert rpd.substitution.image("a") == {"ab", "ba"}
    assert rpd.substitution.image("b") == {"aa"}
    assert rpd.known_entropy == pytest.approx(2 / 3 * math.log(2))
    assert rpd.expected_certificate == "closed-form-disjoint"
    assert get_example("random-fibonacci").known_entropy == pytest.approx(0.444399, abs=5e-7)
    ex19 = get_example("rust-ex19")
    assert ex19.substitution.image("a") == {"abbabba", "ababbba"}
    assert ex19.known_entropy == pytest.approx(math.log(2) / 6)


def test_rf_formula_calibration():
    # pins the Fibonacci indexing f(0) = 0 against direct enumeration
    assert [rf_cardinality(m) for m in (1, 2, 3, 5)] == [2, 3, 8, 288]
    rf = get_example("random-fibonacci").substitution
    for m in range(1, 7):
        a, b = level_sets(rf, m).counts
        assert a == rf_cardinality(m)
        assert b == (rf_cardinality(m - 1) if m > 1 else 1)


def test_rf_counting_beyond_storage():
    rf = get_example("random-fibonacci").substitution
    assert cardinalities(rf, 7).counts == (rf_cardinality(7), rf_cardinality(6))


def test_rf_log_form():
    for m in range(1, 25):
        assert rf_log_cardinality(m) == pytest.approx(math.log(rf_cardinality(m)), rel=1e-12)
    assert rf_q(1) == (math.log(2), 0.0)


def test_rtm_recurrence():
    assert rtm_cardinalities(1) == (2, 1)
    assert rtm_cardinalities(2) == (3, 2)
    assert rtm_cardinalities(5) == (3456, 2880)
    rtm = get_example("random-thue-morse").substitution
    for m in range(1, 6):
        assert level_sets(rtm, m).counts == rtm_cardinalities(m)
    assert cardinalities(rtm, 6).counts == rtm_cardinalities(6)


def test_rtm_log_form_continues_exact_values():
    for m in (13, 14, 16):
        la, lb = (math.log(x) for x in rtm_cardinalities(m))
        qa, qb = rtm_q(m)
        assert qa == pytest.approx(la, rel=1e-12) and qb == pytest.approx(lb, rel=1e-12)


def test_rtm_overlap_premise():
    rtm = get_example("random-thue-morse").substitution
    for m in (1, 2, 3):
        a, b = level_sets(rtm, m).per_letter
        assert concat_sets(a, b) & concat_sets(b, a) == concat_sets(b, b)


def test_known_entropy_inside_brackets(entry):
    if entry.known_entropy is None:
        return
    table = bounds_table(entry.substitution, 20 if entry.recurrence else 5,
                         provider=entry.recurrence, enumerate_max=entry.enumerate_max)
    eps = entry.known_precision + 1e-12
    for r in table:
        assert r.lower - eps <= entry.known_entropy <= r.upper + eps
