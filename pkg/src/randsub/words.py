"""Words, word sets and letter-count vectors.

Words are plain ``str`` values whose characters are alphabet glyphs; word sets
are ``frozenset`` of such strings. An :class:`Alphabet` fixes the letter order,
which determines Abelianisation vectors and the canonical sort order used for
deterministic output.
"""
from __future__ import annotations

from typing import Iterable, Sequence


class Alphabet:
    """Ordered collection of single-character glyphs."""

    def __init__(self, glyphs: Iterable[str]):
        glyphs = tuple(glyphs)
        if not glyphs:
            raise ValueError("alphabet must contain at least one letter")
        for g in glyphs:
            if len(g) != 1 or not g.isprintable() or g.isspace():
                raise ValueError(f"invalid glyph {g!r}: letters are single printable characters")
        if len(set(glyphs)) != len(glyphs):
            raise ValueError(f"duplicate glyph in alphabet {' '.join(glyphs)}")
        self.glyphs = glyphs
        self._index = {g: i for i, g in enumerate(glyphs)}
        # maps glyphs onto code points in declaration order, for sorting
        self._rank = str.maketrans({g: chr(i) for i, g in enumerate(glyphs)})

    def __len__(self) -> int:
        return len(self.glyphs)

    def __iter__(self):
        return iter(self.glyphs)

    def __contains__(self, glyph) -> bool:
        return glyph in self._index

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self.glyphs == other.glyphs

    def __hash__(self) -> int:
        return hash(self.glyphs)

    def __repr__(self) -> str:
        return f"Alphabet({''.join(self.glyphs)!r})"

    def index(self, glyph: str) -> int:
        return self._index[glyph]

    def check_word(self, word: str) -> None:
        if not word:
            raise ValueError("words are non-empty")
        for g in word:
            if g not in self._index:
                raise ValueError(f"letter {g!r} of {word!r} is not in the alphabet")

    def sort_key(self, word: str) -> str:
        """Key ordering words lexicographically by letter index."""
        return word.translate(self._rank)

    def sorted(self, words: Iterable[str]) -> list[str]:
        return sorted(words, key=self.sort_key)


def abelianise(word: str, alphabet: Alphabet) -> tuple[int, ...]:
    """Letter-count vector of ``word``: entry i counts occurrences of letter i."""
    alphabet.check_word(word)
    return tuple(word.count(g) for g in alphabet.glyphs)


def concat_sets(first: Iterable[str], second: Iterable[str]) -> frozenset[str]:
    """All concatenations ``uv`` with ``u`` from ``first`` and ``v`` from ``second``."""
    second = tuple(second)
    return frozenset(u + v for u in first for v in second)


def concat_all(sets: Sequence[Iterable[str]]) -> frozenset[str]:
    """Concatenation of a sequence of word sets, left to right."""
    result: frozenset[str] = frozenset([""])
    for s in sets:
        result = concat_sets(result, s)
    return result


def subwords_of_length(word: str, length: int) -> frozenset[str]:
    if not 1 <= length <= len(word):
        raise ValueError(f"subword length {length} out of range 1..{len(word)}")
    return frozenset(word[k:k + length] for k in range(len(word) - length + 1))


def common_length(words: Iterable[str]) -> int | None:
    """Shared length of all ``words``, or None if lengths differ."""
    lengths = {len(w) for w in words}
    return lengths.pop() if len(lengths) == 1 else None
