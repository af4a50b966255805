"""Brute-force language enumeration, used to cross-check everything else."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .inflation import DEFAULT_CAP, CapacityError, iter_level_sets
from .spectral import perron_data
from .substitution import RandomSubstitution, primitivity_exponent, require_primitive

DEFAULT_LEVEL_CAP = 40


@dataclass(frozen=True)
class LanguageSlice:
    """Legal words of one length, collected from inflation words up to ``levels_used``.

    ``converged`` means the set stopped changing for ``window`` consecutive
    levels. That is a heuristic, not a proof of saturation.
    """

    length: int
    words: frozenset[str]
    levels_used: int
    converged: bool
    window: int

    def __contains__(self, word) -> bool:
        return word in self.words

    def __len__(self) -> int:
        return len(self.words)


@dataclass(frozen=True)
class _Frontier:
    """Length-n windows, (n-1)-prefixes and (n-1)-suffixes of theta^m(a), per letter."""

    windows: tuple[frozenset[str], ...]
    prefixes: tuple[frozenset[str], ...]
    suffixes: tuple[frozenset[str], ...]

    @property
    def stored_letters(self) -> int:
        return sum(sum(len(w) for w in group)
                   for part in (self.windows, self.prefixes, self.suffixes) for group in part)


def _frontier(level, length: int) -> _Frontier:
    windows, prefixes, suffixes = [], [], []
    for words in level.per_letter:
        win: set[str] = set()
        for w in words:
            win.update(w[k:k + length] for k in range(len(w) - length + 1))
        windows.append(frozenset(win))
        prefixes.append(frozenset(w[:length - 1] for w in words))
        suffixes.append(frozenset(w[len(w) - length + 1:] for w in words))
    return _Frontier(tuple(windows), tuple(prefixes), tuple(suffixes))


def _crossing(suffixes: frozenset[str], prefixes: frozenset[str], length: int) -> set[str]:
    """Windows of x + y that straddle the junction, for x ending in a suffix
    and y starting with a prefix (each of length ``length - 1``)."""
    out: set[str] = set()
    for k in range(1, length):
        tails = {s[len(s) - k:] for s in suffixes}
        heads = {p[:length - k] for p in prefixes}
        out.update(t + h for t in tails for h in heads)
    return out


def _next_frontier(sub: RandomSubstitution, fr: _Frontier, length: int) -> _Frontier:
    # valid while every level-m word has length >= length - 1, so a window
    # meets at most two consecutive blocks
    idx = {g: i for i, g in enumerate(sub.alphabet)}
    windows, prefixes, suffixes = [], [], []
    for image in sub.images:
        win: set[str] = set()
        pre: set[str] = set()
        suf: set[str] = set()
        for u in image:
            blocks = [idx[g] for g in u]
            for b in blocks:
                win |= fr.windows[b]
            for b, c in zip(blocks, blocks[1:]):
                win |= _crossing(fr.suffixes[b], fr.prefixes[c], length)
            pre |= fr.prefixes[blocks[0]]
            suf |= fr.suffixes[blocks[-1]]
        windows.append(frozenset(win))
        prefixes.append(frozenset(pre))
        suffixes.append(frozenset(suf))
    return _Frontier(tuple(windows), tuple(prefixes), tuple(suffixes))


def _window_sets(sub: RandomSubstitution, length: int, cap: int):
    """Yield (m, length-n subwords of the words of theta^m(a_i), all i, ready).

    ``ready`` turns true once every inflation word is at least n letters long.
    Levels are enumerated outright until then; afterwards only the windows
    and the word ends that later junctions can extend are carried forward.
    The yielded sets are exactly the subwords of the full level sets.
    """
    frontier = None
    for level in iter_level_sets(sub, cap):
        fr = _frontier(level, length)
        ready = min(level.lengths.values()) >= length
        yield level.m, frozenset().union(*fr.windows), ready
        if ready:
            frontier, m = fr, level.m
            break
    while True:
        frontier = _next_frontier(sub, frontier, length)
        m += 1
        if frontier.stored_letters > cap:
            raise CapacityError(m, frontier.stored_letters, cap)
        yield m, frozenset().union(*frontier.windows), True


def legal_words(sub: RandomSubstitution, length: int, window: int | None = None,
                m_cap: int = DEFAULT_LEVEL_CAP, *, cap: int = DEFAULT_CAP) -> LanguageSlice:
    """Subwords of the given length of level-m inflation words, m = 1, 2, ...

    Stability is only counted once every letter's inflation words are at
    least ``length`` long.
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    matrix = require_primitive(sub)
    if window is None:
        window = primitivity_exponent(matrix)
    found: set[str] = set()
    stable = 0
    for m, words, ready in _window_sets(sub, length, cap):
        before = len(found)
        found |= words
        if ready:
            stable = stable + 1 if len(found) == before else 0
            if stable >= window:
                return LanguageSlice(length, frozenset(found), m, True, window)
        if m >= m_cap:
            break
    return LanguageSlice(length, frozenset(found), m, False, window)


class ComplexityRow(NamedTuple):
    length: int
    count: int
    entropy_quotient: float
    # max over legal u of max_i |#_i(u)/|u| - R_i|
    frequency_deviation: float


def complexity_profile(sub: RandomSubstitution, max_length: int, *,
                       m_cap: int = DEFAULT_LEVEL_CAP, cap: int = DEFAULT_CAP) -> list[ComplexityRow]:
    R = perron_data(require_primitive(sub)).R
    rows = []
    for length in range(1, max_length + 1):
        sl = legal_words(sub, length, m_cap=m_cap, cap=cap)
        dev = max(
            max(abs(w.count(g) / length - r) for g, r in zip(sub.alphabet, R))
            for w in sl.words)
        rows.append(ComplexityRow(length, len(sl), math.log(len(sl)) / length, float(dev)))
    return rows


@dataclass(frozen=True)
class PeriodicityCertificate:
    """Outcome of checking ``u**N`` for legality, N = 1..n_checked.

    ``consistent`` is only a necessary condition for periodicity.
    """

    u: str
    n_checked: int
    verdict: str
    failed_at: int | None = None
    missing: str | None = None
    converged: bool = True


def is_periodic_bounded(sub: RandomSubstitution, u: str, n_max: int, *,
                        m_cap: int = DEFAULT_LEVEL_CAP, cap: int = DEFAULT_CAP) -> PeriodicityCertificate:
    sub.alphabet.check_word(u)
    all_converged = True
    for N in range(1, n_max + 1):
        sl = legal_words(sub, len(u) * N, m_cap=m_cap, cap=cap)
        all_converged &= sl.converged
        if u * N not in sl:
            return PeriodicityCertificate(u, N - 1, "refuted", N, u * N, sl.converged)
    return PeriodicityCertificate(u, n_max, "consistent", converged=all_converged)
