import pytest
from hypothesis import given, strategies as st

from randsub.words import Alphabet, abelianise, common_length, concat_all, concat_sets, subwords_of_length

AB = Alphabet("ab")
words_ab = st.text(alphabet="ab", min_size=1, max_size=30)


@pytest.mark.parametrize("word, expected", [
    ("ab", (1, 1)),
    ("ba", (1, 1)),
    ("a", (1, 0)),
    ("abbabba", (3, 4)),
])
def test_abelianise(word, expected):
    assert abelianise(word, AB) == expected


def test_abelianise_rejects_foreign_letter():
    with pytest.raises(ValueError):
        abelianise("abc", AB)


@given(words_ab, words_ab)
def test_abelianise_is_additive(u, v):
    joint = abelianise(u + v, AB)
    assert joint == tuple(x + y for x, y in zip(abelianise(u, AB), abelianise(v, AB)))
    assert sum(joint) == len(u) + len(v)


def test_concat_sets():
    assert concat_sets({"ab", "ba"}, {"a"}) == {"aba", "baa"}
    assert concat_sets({"a"}, {"ab", "ba"}) == {"aab", "aba"}
    assert concat_sets({"u"}, {"v"}) == {"uv"}
    assert common_length(concat_sets({"ab", "ba"}, {"a"})) == 3


def test_concat_sets_collision():
    # {a, ab} . {b, bb} has a collision: a.bb == ab.b
    assert len(concat_sets({"a", "ab"}, {"b", "bb"})) == 3
    assert concat_all([{"ab", "ba"}, {"ba"}]) == {"abba", "baba"}


def test_subwords_of_length():
    assert subwords_of_length("aba", 2) == {"ab", "ba"}
    assert subwords_of_length("baab", 2) == {"ba", "aa", "ab"}
    assert subwords_of_length("abbab", 5) == {"abbab"}
    with pytest.raises(ValueError):
        subwords_of_length("ab", 3)
    with pytest.raises(ValueError):
        subwords_of_length("ab", 0)


@given(words_ab, st.integers(1, 30))
def test_subword_count_bound(u, length):
    if length > len(u):
        return
    assert len(subwords_of_length(u, length)) <= len(u) - length + 1


def test_alphabet_order_drives_sorting():
    ba = Alphabet("ba")
    assert ba.sorted(["ab", "ba", "bb", "aa"]) == ["bb", "ba", "ab", "aa"]
    assert abelianise("abb", ba) == (2, 1)


@pytest.mark.parametrize("glyphs", ["", "aa", ["ab"], [" "]])
def test_bad_alphabets(glyphs):
    with pytest.raises(ValueError):
        Alphabet(glyphs)
