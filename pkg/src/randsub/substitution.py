"""Random substitutions: representation, parsing, validation and matrix data."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

from .words import Alphabet, abelianise, common_length


class SubstitutionError(ValueError):
    """Malformed substitution or spec file."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(SubstitutionError):
    """Substitution is not semi-compatible or not primitive."""


@dataclass(frozen=True)
class RandomSubstitution:
    """A map from letters to finite non-empty sets of words.

    ``images[i]`` is the image set of ``alphabet.glyphs[i]``. Duplicate words
    collapse since images are sets.
    """

    alphabet: Alphabet
    images: tuple[frozenset[str], ...]

    def __post_init__(self):
        if len(self.images) != len(self.alphabet):
            raise SubstitutionError(
                f"{len(self.images)} images given for {len(self.alphabet)} letters")
        images = []
        for glyph, image in zip(self.alphabet, self.images):
            image = frozenset(image)
            if not image:
                raise SubstitutionError(f"empty image for letter {glyph}")
            for w in image:
                try:
                    self.alphabet.check_word(w)
                except ValueError as exc:
                    raise SubstitutionError(f"image of {glyph}: {exc}") from None
            images.append(image)
        object.__setattr__(self, "images", tuple(images))

    @classmethod
    def from_mapping(cls, rules: Mapping[str, Iterable[str]]) -> "RandomSubstitution":
        """Build from ``{'a': ['ab', 'ba'], 'b': ['a']}``; key order is letter order."""
        alphabet = Alphabet(rules)
        return cls(alphabet, tuple(frozenset(rules[g]) for g in alphabet))

    @property
    def n(self) -> int:
        return len(self.alphabet)

    def image(self, glyph: str) -> frozenset[str]:
        return self.images[self.alphabet.index(glyph)]

    def sorted_image(self, i: int) -> list[str]:
        return self.alphabet.sorted(self.images[i])

    def is_deterministic(self) -> bool:
        return all(len(im) == 1 for im in self.images)

    def to_text(self) -> str:
        """Serialise in the spec-file format accepted by :func:`parse_spec`."""
        lines = ["alphabet = " + " ".join(self.alphabet)]
        for i, g in enumerate(self.alphabet):
            lines.append(f"{g} -> " + " | ".join(self.sorted_image(i)))
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        return ", ".join(
            f"{g} -> {{{','.join(self.sorted_image(i))}}}" for i, g in enumerate(self.alphabet))


_RULE = re.compile(r"^(\S)\s*->\s*(.*)$")


def parse_spec(text: str) -> RandomSubstitution:
    """Parse the line-oriented substitution format.

    ::

        alphabet = a b
        a -> ab | ba   # comment
        b -> a
    """
    alphabet = None
    rules: dict[str, frozenset[str]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if alphabet is None:
            key, sep, rest = line.partition("=")
            if not sep or key.strip() != "alphabet":
                raise SubstitutionError("expected 'alphabet = <glyph> <glyph> ...'", lineno)
            try:
                alphabet = Alphabet(rest.split())
            except ValueError as exc:
                raise SubstitutionError(str(exc), lineno) from None
            continue
        m = _RULE.match(line)
        if m is None:
            raise SubstitutionError(f"expected '<glyph> -> <word> | <word> ...', got {line!r}", lineno)
        glyph, body = m.groups()
        if glyph not in alphabet:
            raise SubstitutionError(f"rule for unknown letter {glyph}", lineno)
        if glyph in rules:
            raise SubstitutionError(f"second rule for letter {glyph}", lineno)
        words = [w.strip() for w in body.split("|")]
        if not body.strip() or any(not w for w in words):
            raise SubstitutionError(f"empty image word for letter {glyph}", lineno)
        for w in words:
            if re.search(r"\s", w):
                raise SubstitutionError(f"whitespace inside image word {w!r}", lineno)
            for c in w:
                if c not in alphabet:
                    raise SubstitutionError(f"unknown letter {c!r} in image of {glyph}", lineno)
        rules[glyph] = frozenset(words)
    if alphabet is None:
        raise SubstitutionError("no alphabet declaration")
    for g in alphabet:
        if g not in rules:
            raise SubstitutionError(f"no image for letter {g}")
    return RandomSubstitution(alphabet, tuple(rules[g] for g in alphabet))


@dataclass(frozen=True)
class Violation:
    letter: str
    witness: tuple[str, str]
    reason: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations


def validate(sub: RandomSubstitution) -> ValidationReport:
    """Check semi-compatibility: one letter-count vector per image."""
    violations = []
    for i, glyph in enumerate(sub.alphabet):
        words = sub.sorted_image(i)
        first = words[0]
        phi = abelianise(first, sub.alphabet)
        for w in words[1:]:
            other = abelianise(w, sub.alphabet)
            if other != phi:
                violations.append(Violation(
                    glyph, (first, w), f"letter counts {phi} != {other}"))
                break
    return ValidationReport(tuple(violations))


def substitution_matrix(sub: RandomSubstitution) -> np.ndarray:
    """Integer matrix whose column j is the letter-count vector of image j."""
    report = validate(sub)
    if not report.ok:
        v = report.violations[0]
        raise ValidationError(
            f"not semi-compatible: image of {v.letter} contains {v.witness[0]} and "
            f"{v.witness[1]} ({v.reason})")
    cols = [abelianise(sub.sorted_image(j)[0], sub.alphabet) for j in range(sub.n)]
    return np.array(cols, dtype=np.int64).T


def primitivity_exponent(matrix) -> int | None:
    """Smallest k with ``matrix**k`` strictly positive, or None.

    Only the zero pattern matters, so powers are taken on boolean matrices;
    the search stops at Wielandt's bound ``(n-1)**2 + 1``.
    """
    pattern = np.asarray(matrix) > 0
    n = pattern.shape[0]
    power = pattern.copy()
    for k in range(1, (n - 1) ** 2 + 2):
        if power.all():
            return k
        power = (power.astype(np.int64) @ pattern.astype(np.int64)) > 0
    return None


def constant_length(sub: RandomSubstitution) -> int | None:
    lengths = {common_length(im) for im in sub.images}
    if len(lengths) == 1:
        (k,) = lengths
        return k
    return None


def require_primitive(sub: RandomSubstitution) -> np.ndarray:
    """Substitution matrix of ``sub``; raises unless valid and primitive."""
    matrix = substitution_matrix(sub)
    if primitivity_exponent(matrix) is None:
        raise ValidationError("substitution matrix is not primitive")
    return matrix
