import numpy as np
import pytest

from randsub.substitution import (RandomSubstitution, SubstitutionError, ValidationError,
                                  constant_length, parse_spec, primitivity_exponent,
                                  substitution_matrix, validate)
from randsub.words import abelianise

from conftest import EQUAL, FIB, RF, RPD, RTM, sub_of


def test_parse_random_fibonacci():
    sub = parse_spec("alphabet = a b\na -> ab | ba\nb -> a")
    assert sub.alphabet.glyphs == ("a", "b")
    assert sub.image("a") == {"ab", "ba"}
    assert sub.image("b") == {"a"}
    assert sub == sub_of(RF)


def test_parse_single_letter():
    sub = parse_spec("alphabet = a\na -> aa")
    assert sub.images == (frozenset({"aa"}),)


def test_parse_comments_blank_lines_duplicates():
    text = "# header\n\nalphabet = x y   # two letters\n\ny -> x\nx -> xy | yx | xy\n"
    sub = parse_spec(text)
    assert sub.alphabet.glyphs == ("x", "y")
    assert sub.image("x") == {"xy", "yx"}


@pytest.mark.parametrize("text, message", [
    ("alphabet = a b\na -> ab", "no image for letter b"),
    ("alphabet = a b\na -> ab\nb -> c", "line 3"),
    ("alphabet = a b\na -> ab\nb ->", "line 3"),
    ("alphabet = a b\na -> ab |\nb -> a", "line 2"),
    ("alphabet = a b\na -> ab\na -> ba\nb -> a", "second rule"),
    ("a -> ab", "line 1"),
    ("alphabet = a a\na -> aa", "duplicate"),
    ("alphabet = a b\na => ab\nb -> a", "line 2"),
    ("", "no alphabet"),
])
def test_parse_errors(text, message):
    with pytest.raises(SubstitutionError, match=message):
        parse_spec(text)


def test_roundtrip_text():
    sub = sub_of(RTM)
    assert parse_spec(sub.to_text()) == sub


def test_validate():
    assert validate(sub_of(RF)).ok
    assert validate(sub_of({"a": ["baa"], "b": ["ab", "ba"]})).ok
    report = validate(sub_of({"a": ["ab", "a"], "b": ["a"]}))
    assert not report.ok
    (v,) = report.violations
    assert v.letter == "a"
    assert set(v.witness) == {"ab", "a"}


def test_constructor_rejects_empty_and_foreign():
    with pytest.raises(SubstitutionError):
        sub_of({"a": [], "b": ["a"]})
    with pytest.raises(SubstitutionError):
        sub_of({"a": ["ac"], "b": ["a"]})


@pytest.mark.parametrize("rules, expected", [
    (RF, [[1, 1], [1, 0]]),
    (RPD, [[1, 2], [1, 0]]),
    (RTM, [[1, 1], [1, 1]]),
])
def test_substitution_matrix(rules, expected):
    assert substitution_matrix(sub_of(rules)).tolist() == expected


def test_matrix_requires_semicompatibility():
    with pytest.raises(ValidationError):
        substitution_matrix(sub_of({"a": ["ab", "a"], "b": ["a"]}))


def test_matrix_column_sums_and_representatives(entry):
    sub = entry.substitution
    M = substitution_matrix(sub)
    for j in range(sub.n):
        lengths = {len(w) for w in sub.images[j]}
        assert lengths == {int(M[:, j].sum())}
        for w in sub.images[j]:
            assert abelianise(w, sub.alphabet) == tuple(M[:, j])


@pytest.mark.parametrize("matrix, expected", [
    ([[1, 1], [1, 1]], 1),
    ([[1, 1], [1, 0]], 2),
    ([[1, 0], [0, 1]], None),
    ([[0, 1], [1, 0]], None),
    # Wielandt matrix attains the bound (n-1)^2 + 1
    ([[0, 1, 0], [0, 0, 1], [1, 1, 0]], 5),
])
def test_primitivity_exponent(matrix, expected):
    assert primitivity_exponent(np.array(matrix)) == expected


def test_primitivity_persists(entry):
    M = substitution_matrix(entry.substitution)
    k = primitivity_exponent(M)
    assert k is not None
    for power in (k, k + 1):
        assert (np.linalg.matrix_power(M, power) > 0).all()


@pytest.mark.parametrize("rules, expected", [(RPD, 2), (RF, None), (EQUAL, 2), (FIB, None)])
def test_constant_length(rules, expected):
    assert constant_length(sub_of(rules)) == expected


def test_paper_folding_constant_length():
    sub = sub_of({"a": ["ab", "ba"], "b": ["cb", "bc"], "c": ["ad", "da"], "d": ["cd", "dc"]})
    assert constant_length(sub) == 2
