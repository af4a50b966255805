"""Entropy bounds from inflation word counts, with closed-form shortcuts."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

import numpy as np

from .inflation import (DEFAULT_CAP, DEFAULT_CHECK_LEVEL, CapacityError, ConditionReport,
                        check_disjoint, check_identical, iter_counts)
from .spectral import PerronData, length_vector, perron_data
from .substitution import RandomSubstitution, require_primitive
from .words import abelianise

# m -> per-letter natural logs of #theta^m(a_i)
QProvider = Callable[[int], Sequence[float]]


@dataclass(frozen=True)
class BoundsRow:
    m: int
    lower: float
    upper: float
    gap: float
    q: tuple[float, ...]
    source: str = "enumeration"
    counts: tuple[int, ...] | None = None


@dataclass
class BoundsTable:
    rows: list[BoundsRow]
    truncated: bool = False
    note: str | None = None

    def __iter__(self):
        return iter(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def __getitem__(self, i):
        return self.rows[i]

    def row(self, m: int) -> BoundsRow:
        for r in self.rows:
            if r.m == m:
                return r
        raise KeyError(m)


def bounds_row(m: int, q: Sequence[float], perron: PerronData, source: str = "enumeration",
               counts: Sequence[int] | None = None) -> BoundsRow:
    qr = float(np.dot(q, perron.R))
    scale = perron.lam ** m
    lower = qr / scale
    upper = qr / (scale - 1.0)
    return BoundsRow(m, lower, upper, qr / (scale * (scale - 1.0)), tuple(float(x) for x in q), source,
                     None if counts is None else tuple(counts))


def _q_rows(sub, perron, cap, provider, enumerate_max) -> Iterator[BoundsRow]:
    m = 0
    try:
        for cv in iter_counts(sub, cap):
            m = cv.m
            yield bounds_row(m, [math.log(c) for c in cv.counts], perron, counts=cv.counts)
            if provider is not None and enumerate_max is not None and m >= enumerate_max:
                break
    except CapacityError:
        if provider is None:
            raise
    while True:
        m += 1
        yield bounds_row(m, provider(m), perron, source="recurrence")


def iter_bounds(sub: RandomSubstitution, *, cap: int = DEFAULT_CAP, provider: QProvider | None = None,
                enumerate_max: int | None = None, perron: PerronData | None = None) -> Iterator[BoundsRow]:
    """Rows for m = 1, 2, ...

    Counts come from enumeration until the memory cap or ``enumerate_max`` is
    reached, then from ``provider`` if one is given.
    """
    matrix = require_primitive(sub)
    if perron is None:
        perron = perron_data(matrix)
    return _q_rows(sub, perron, cap, provider, enumerate_max)


def bounds_table(sub: RandomSubstitution, m_max: int, *, cap: int = DEFAULT_CAP,
                 provider: QProvider | None = None, enumerate_max: int | None = None,
                 perron: PerronData | None = None) -> BoundsTable:
    rows: list[BoundsRow] = []
    rows_iter = iter_bounds(sub, cap=cap, provider=provider, enumerate_max=enumerate_max,
                            perron=perron)
    try:
        for row in rows_iter:
            rows.append(row)
            if row.m >= m_max:
                break
    except CapacityError as exc:
        return BoundsTable(rows, truncated=True,
                           note=f"table stops at level {len(rows)} of {m_max}: {exc}")
    return BoundsTable(rows)


@dataclass(frozen=True)
class EntropyEstimate:
    """Entropy value with the certificate it rests on.

    ``certificate`` is ``closed-form-identical``, ``closed-form-disjoint`` or
    ``sandwich``; for a sandwich ``value`` is the midpoint of the tightest
    bracket found and ``m_used``/``gap`` record where the search stopped.
    """

    value: float
    certificate: str
    lower: float
    upper: float
    m_used: int | None = None
    gap: float | None = None
    tol: float | None = None
    conditions: tuple[ConditionReport, ...] = field(default=(), compare=False)
    note: str | None = None


def closed_form_identical(q1: Sequence[float], perron: PerronData) -> float:
    return float(np.dot(q1, perron.R)) / perron.lam


def closed_form_disjoint(q1: Sequence[float], perron: PerronData) -> float:
    return float(np.dot(q1, perron.R)) / (perron.lam - 1.0)


def estimate_entropy(sub: RandomSubstitution, tol: float = 0.01, m_cap: int = 5, *,
                     check_level: int = DEFAULT_CHECK_LEVEL, cap: int = DEFAULT_CAP,
                     provider: QProvider | None = None, enumerate_max: int | None = None,
                     conditions: tuple[ConditionReport, ConditionReport] | None = None) -> EntropyEstimate:
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    matrix = require_primitive(sub)
    perron = perron_data(matrix)
    q1 = [math.log(len(im)) for im in sub.images]
    if conditions is None:
        conditions = (check_identical(sub, check_level, cap), check_disjoint(sub, check_level, cap))
    identical, disjoint = conditions
    if identical.guaranteed:
        s = closed_form_identical(q1, perron)
        return EntropyEstimate(s, "closed-form-identical", s, s, conditions=conditions)
    if disjoint.guaranteed:
        s = closed_form_disjoint(q1, perron)
        return EntropyEstimate(s, "closed-form-disjoint", s, s, conditions=conditions)

    lower, upper = -math.inf, math.inf
    last = None
    note = None
    try:
        for row in iter_bounds(sub, cap=cap, provider=provider, enumerate_max=enumerate_max,
                               perron=perron):
            last = row
            lower = max(lower, row.lower)
            upper = min(upper, row.upper)
            if row.gap < tol or row.m >= m_cap:
                break
    except CapacityError as exc:
        note = f"stopped early: {exc}"
    if last is None:
        raise CapacityError(1, 0, cap)
    if last.gap >= tol and note is None:
        note = f"gap {last.gap:.3g} still above tolerance {tol:g} at level cap {m_cap}"
    return EntropyEstimate((lower + upper) / 2, "sandwich", lower, upper, m_used=last.m,
                           gap=upper - lower, tol=tol, conditions=conditions, note=note)


@dataclass(frozen=True)
class GeometricConfig:
    """Tile lengths ``psi`` per letter and the induced factor ``rho = 1/(psi . R)``."""

    psi: tuple[float, ...]
    rho: float

    @classmethod
    def from_psi(cls, psi: Sequence[float], perron: PerronData) -> "GeometricConfig":
        psi = tuple(float(x) for x in psi)
        if len(psi) != len(perron.R):
            raise ValueError(f"expected {len(perron.R)} tile lengths, got {len(psi)}")
        if any(not x > 0 for x in psi):
            raise ValueError("tile lengths must be positive")
        return cls(psi, 1.0 / float(np.dot(psi, perron.R)))

    @classmethod
    def natural(cls, perron: PerronData) -> "GeometricConfig":
        return cls.from_psi(perron.L, perron)


def geometric_entropy(cfg: GeometricConfig, est: EntropyEstimate) -> float:
    """Entropy per unit geometric length."""
    return cfg.rho * est.value


def periodic_growth(sub: RandomSubstitution, u: str, m_max: int, *,
                    cap: int = DEFAULT_CAP) -> list[tuple[int, float]]:
    """(m, log #theta^m(u) / |theta^m(u)|) for m = 1..m_max.

    Counts use the product law over the letter counts of ``u``; the caller is
    responsible for ``u`` being legal and periodic.
    """
    matrix = require_primitive(sub)
    phi = abelianise(u, sub.alphabet)
    out = []
    for cv in iter_counts(sub, cap):
        lengths = length_vector(matrix, cv.m)
        log_size = sum(k * math.log(c) for k, c in zip(phi, cv.counts))
        out.append((cv.m, log_size / sum(k * l for k, l in zip(phi, lengths))))
        if cv.m >= m_max:
            break
    return out
