"""Level-m inflation word sets, their cardinalities, and the set conditions.

Level ``m + 1`` is always built from level ``m`` through

    theta^(m+1)(a) = union over u in theta(a) of theta^m(u_1) ... theta^m(u_k),

so only the per-letter sets of the previous level are ever needed. Because all
words of ``theta^m(b)`` share one length, concatenating the per-letter sets is
injective, and a product ``theta^m(u)`` never needs to be materialised to be
counted or searched.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .substitution import RandomSubstitution, constant_length, require_primitive, substitution_matrix
from .words import concat_all

DEFAULT_CAP = 10**7
DEFAULT_CHECK_LEVEL = 3


class CapacityError(RuntimeError):
    """Enumerating a level would store more letters than the memory cap allows."""

    def __init__(self, level: int, needed: int, cap: int):
        self.level = level
        self.needed = needed
        self.cap = cap
        self.largest_feasible = level - 1
        super().__init__(
            f"level {level} needs up to {needed} stored letters, above the cap of {cap}; "
            f"largest feasible level is {level - 1}")


@dataclass(frozen=True)
class LevelSets:
    """The sets theta^m(a_i), one per letter."""

    sub: RandomSubstitution
    m: int
    per_letter: tuple[frozenset[str], ...]

    @cached_property
    def by_glyph(self) -> dict[str, frozenset[str]]:
        return dict(zip(self.sub.alphabet, self.per_letter))

    @cached_property
    def ordered(self) -> dict[str, tuple[str, ...]]:
        # fixed iteration order keeps searches and witnesses deterministic
        return {g: tuple(self.sub.alphabet.sorted(s)) for g, s in self.by_glyph.items()}

    @cached_property
    def lengths(self) -> dict[str, int]:
        return {g: len(next(iter(s))) for g, s in self.by_glyph.items()}

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.per_letter)

    @property
    def stored_letters(self) -> int:
        return sum(len(s) * len(next(iter(s))) for s in self.per_letter)

    def product_size(self, word: str) -> int:
        """Exact cardinality of theta^m(word), by the product law."""
        return math.prod(len(self.by_glyph[g]) for g in word)

    def expand(self, word: str) -> frozenset[str]:
        """Materialise theta^m(word)."""
        return concat_all([self.by_glyph[g] for g in word])


@dataclass(frozen=True)
class CardinalityVector:
    m: int
    counts: tuple[int, ...]


@dataclass(frozen=True)
class QVector:
    m: int
    entries: tuple[float, ...]


def inflate_set(sub: RandomSubstitution, words, cap: int = DEFAULT_CAP) -> frozenset[str]:
    """Union of theta(u) over ``words``, each theta(u) a set concatenation."""
    words = list(words)
    for w in words:
        sub.alphabet.check_word(w)
    sizes = {g: len(im) for g, im in zip(sub.alphabet, sub.images)}
    lengths = {g: len(next(iter(im))) for g, im in zip(sub.alphabet, sub.images)}
    needed = sum(math.prod(sizes[g] for g in w) * sum(lengths[g] for g in w) for w in words)
    if needed > cap:
        raise CapacityError(1, needed, cap)
    images = dict(zip(sub.alphabet, sub.images))
    out: set[str] = set()
    for w in words:
        out |= concat_all([images[g] for g in w])
    return frozenset(out)


def first_level(sub: RandomSubstitution) -> LevelSets:
    substitution_matrix(sub)  # semi-compatibility guard
    return LevelSets(sub, 1, sub.images)


def next_level(prev: LevelSets, cap: int = DEFAULT_CAP) -> LevelSets:
    sub = prev.sub
    needed = 0
    for image in sub.images:
        for u in image:
            needed += prev.product_size(u) * sum(prev.lengths[g] for g in u)
    if needed > cap:
        raise CapacityError(prev.m + 1, needed, cap)
    per_letter = []
    for image in sub.images:
        out: set[str] = set()
        for u in image:
            out |= prev.expand(u)
        per_letter.append(frozenset(out))
    return LevelSets(sub, prev.m + 1, tuple(per_letter))


def iter_level_sets(sub: RandomSubstitution, cap: int = DEFAULT_CAP) -> Iterator[LevelSets]:
    """Yield levels 1, 2, ...; raises CapacityError once the cap is hit."""
    level = first_level(sub)
    while True:
        yield level
        level = next_level(level, cap)


def level_sets(sub: RandomSubstitution, m: int, cap: int = DEFAULT_CAP) -> LevelSets:
    if m < 1:
        raise ValueError("level must be >= 1")
    require_primitive(sub)
    for level in iter_level_sets(sub, cap):
        if level.m == m:
            return level
    raise AssertionError("unreachable")


# -- searching products of level sets without materialising them ------------

def _offsets(word: str, lengths: dict[str, int]) -> tuple[int, ...]:
    offs = [0]
    for g in word:
        offs.append(offs[-1] + lengths[g])
    return tuple(offs)


def _advance(prefix: str, alive, level: LevelSets):
    """Drop candidates whose completed blocks disagree with ``prefix``."""
    sets = level.by_glyph
    out = []
    for word, offs, k in alive:
        while k < len(word) and offs[k + 1] <= len(prefix):
            if prefix[offs[k]:offs[k + 1]] not in sets[word[k]]:
                break
            k += 1
        else:
            out.append((word, offs, k))
    return out


def _candidates(others: Sequence[str], level: LevelSets):
    return [(v, _offsets(v, level.lengths), 0) for v in others]


def count_outside(u: str, others: Sequence[str], level: LevelSets) -> int:
    """#(theta^m(u) minus the union of theta^m(v) for v in ``others``)."""
    sizes = [len(level.by_glyph[g]) for g in u]
    tail = [1] * (len(u) + 1)
    for j in range(len(u) - 1, -1, -1):
        tail[j] = tail[j + 1] * sizes[j]
    ordered = level.ordered
    memo: dict = {}

    def walk(j: int, prefix: str, alive) -> int:
        if not alive:
            return tail[j]
        if j == len(u):
            return 0
        # once every candidate sits on a block boundary the rest of the
        # search no longer depends on the prefix
        key = None
        if all(offs[k] == len(prefix) for _, offs, k in alive):
            key = (j, frozenset(v[k:] for v, _, k in alive))
            if key in memo:
                return memo[key]
        total = sum(walk(j + 1, prefix + x, _advance(prefix + x, alive, level))
                    for x in ordered[u[j]])
        if key is not None:
            memo[key] = total
        return total

    return walk(0, "", _candidates(others, level))


def common_word(u: str, v: str, level: LevelSets) -> str | None:
    """Smallest word of theta^m(u) that also lies in theta^m(v), if any."""
    ordered = level.ordered

    def walk(j: int, prefix: str, alive) -> str | None:
        if not alive:
            return None
        if j == len(u):
            return prefix
        for x in ordered[u[j]]:
            found = walk(j + 1, prefix + x, _advance(prefix + x, alive, level))
            if found is not None:
                return found
        return None

    return walk(0, "", _candidates([v], level))


def word_outside(u: str, v: str, level: LevelSets) -> str | None:
    """Smallest word of theta^m(u) not in theta^m(v), if any."""
    ordered = level.ordered

    def walk(j: int, prefix: str, alive) -> str | None:
        if not alive:
            return prefix + "".join(ordered[g][0] for g in u[j:])
        if j == len(u):
            return None
        for x in ordered[u[j]]:
            found = walk(j + 1, prefix + x, _advance(prefix + x, alive, level))
            if found is not None:
                return found
        return None

    return walk(0, "", _candidates([v], level))


def count_next_level(prev: LevelSets) -> tuple[int, ...]:
    """Exact #theta^(m+1)(a_i) from level m, without storing level m+1."""
    counts = []
    for i in range(prev.sub.n):
        image = prev.sub.sorted_image(i)
        counts.append(sum(count_outside(u, image[:k], prev) for k, u in enumerate(image)))
    return tuple(counts)


def iter_counts(sub: RandomSubstitution, cap: int = DEFAULT_CAP) -> Iterator[CardinalityVector]:
    """Exact cardinality vectors for m = 1, 2, ...

    Level m is counted from stored level m-1, so counting reaches one level
    beyond what the cap allows to store. Raises CapacityError afterwards.
    """
    require_primitive(sub)
    level = first_level(sub)
    yield CardinalityVector(1, level.counts)
    while True:
        yield CardinalityVector(level.m + 1, count_next_level(level))
        level = next_level(level, cap)


def cardinalities(sub: RandomSubstitution, m: int, cap: int = DEFAULT_CAP) -> CardinalityVector:
    if m < 1:
        raise ValueError("level must be >= 1")
    for cv in iter_counts(sub, cap):
        if cv.m == m:
            return cv
    raise AssertionError("unreachable")


def log_counts(cv: CardinalityVector) -> QVector:
    return QVector(cv.m, tuple(math.log(c) for c in cv.counts))


def q_vector(sub: RandomSubstitution, m: int, cap: int = DEFAULT_CAP) -> tuple[CardinalityVector, QVector]:
    cv = cardinalities(sub, m, cap)
    return cv, log_counts(cv)


def power_substitution(sub: RandomSubstitution, k: int, cap: int = DEFAULT_CAP) -> RandomSubstitution:
    """The random substitution theta^k, letter by letter."""
    return RandomSubstitution(sub.alphabet, level_sets(sub, k, cap).per_letter)


# -- identical / disjoint set conditions -------------------------------------

@dataclass(frozen=True)
class ConditionReport:
    """Three-valued verdict on the identical or disjoint set condition.

    ``verdict`` is ``"guaranteed"`` (with ``criterion``), ``"refuted"`` (with
    ``level``, ``letter``, the image pair and a witness ``word``) or
    ``"unverified"`` (``max_level_checked`` levels searched without a
    counterexample).
    """

    condition: str
    verdict: str
    criterion: str | None = None
    level: int | None = None
    letter: str | None = None
    pair: tuple[str, str] | None = None
    word: str | None = None
    max_level_checked: int | None = None

    @property
    def guaranteed(self) -> bool:
        return self.verdict == "guaranteed"

    def describe(self) -> str:
        if self.verdict == "guaranteed":
            return f"{self.condition}: guaranteed ({self.criterion})"
        if self.verdict == "refuted":
            u, v = self.pair
            rel = "in both" if self.condition == "disjoint" else "only in the first of"
            return (f"{self.condition}: refuted at level {self.level}, letter {self.letter}: "
                    f"{self.word} {rel} theta^{self.level}({u}), theta^{self.level}({v})")
        return f"{self.condition}: unverified (checked levels 1..{self.max_level_checked})"


def _image_pairs(sub: RandomSubstitution):
    for i, glyph in enumerate(sub.alphabet):
        image = sub.sorted_image(i)
        for a in range(len(image)):
            for b in range(a + 1, len(image)):
                yield glyph, image[a], image[b]


def _search_levels(sub, m_max, cap, test):
    require_primitive(sub)
    checked = 0
    try:
        for level in iter_level_sets(sub, cap):
            for glyph, u, v in _image_pairs(sub):
                word = test(u, v, level)
                if word is not None:
                    return level.m, glyph, (u, v), word, checked
            checked = level.m
            if checked >= m_max:
                break
    except CapacityError:
        pass
    return None, None, None, None, checked


def check_identical(sub: RandomSubstitution, m_max: int = DEFAULT_CHECK_LEVEL,
                    cap: int = DEFAULT_CAP) -> ConditionReport:
    if sub.is_deterministic():
        return ConditionReport("identical", "guaranteed", criterion="singleton-images")
    if len(set(sub.images)) == 1:
        return ConditionReport("identical", "guaranteed", criterion="equal-images")
    # equal products have equal size, so one inclusion decides equality
    level, glyph, pair, word, checked = _search_levels(sub, m_max, cap, word_outside)
    if level is not None:
        return ConditionReport("identical", "refuted", level=level, letter=glyph,
                               pair=pair, word=word)
    return ConditionReport("identical", "unverified", max_level_checked=checked)


def _affix_free(sub: RandomSubstitution, relation) -> bool:
    entries = [(i, w) for i in range(sub.n) for w in sub.sorted_image(i)]
    for x in entries:
        for y in entries:
            if x != y and relation(y[1], x[1]):
                return False
    return True


def check_disjoint(sub: RandomSubstitution, m_max: int = DEFAULT_CHECK_LEVEL,
                   cap: int = DEFAULT_CAP) -> ConditionReport:
    if constant_length(sub) is not None:
        seen: set[str] = set()
        overlapping = False
        for image in sub.images:
            if seen & image:
                overlapping = True
            seen |= image
        if not overlapping:
            return ConditionReport("disjoint", "guaranteed", criterion="constant-length")
    if _affix_free(sub, str.startswith):
        return ConditionReport("disjoint", "guaranteed", criterion="no-prefix")
    if _affix_free(sub, str.endswith):
        return ConditionReport("disjoint", "guaranteed", criterion="no-suffix")
    level, glyph, pair, word, checked = _search_levels(sub, m_max, cap, common_word)
    if level is not None:
        return ConditionReport("disjoint", "refuted", level=level, letter=glyph,
                               pair=pair, word=word)
    return ConditionReport("disjoint", "unverified", max_level_checked=checked)
