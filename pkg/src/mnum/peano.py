"""Unit-step generation of polymsets from the empty polymset.

sc adds one copy at an index, pd removes one, and every polymset is reached
from the empty one by finitely many sc steps.  This layer is the successor
characterization that the arithmetic in :mod:`mnum.semiring` is checked
against (see :mod:`mnum.oracle`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from mnum.polymset import Index, Polymset, _checked_index


class NoSuchCopy(ValueError):
    """Asked to remove a copy at an index holding none."""


def sc(a: Polymset, idx: Iterable[int]) -> Polymset:
    """One more copy at idx."""
    idx = _checked_index(idx, a.dim)
    entries = a.to_dict()
    entries[idx] = entries.get(idx, 0) + 1
    return Polymset._raw(a.dim, entries)


def sc_pow(a: Polymset, idx: Iterable[int], alpha: int) -> Polymset:
    """alpha more copies at idx; sc iterated alpha times."""
    idx = _checked_index(idx, a.dim)
    if not isinstance(alpha, int) or isinstance(alpha, bool) or alpha < 0:
        raise ValueError(f"alpha must be a non-negative integer, got {alpha!r}")
    if alpha == 0:
        return a
    entries = a.to_dict()
    entries[idx] = entries.get(idx, 0) + alpha
    return Polymset._raw(a.dim, entries)


def pd(a: Polymset, idx: Iterable[int]) -> Polymset:
    """One copy fewer at idx.

    Strict, unlike the saturating msub: removing from an index with no
    copies raises :class:`NoSuchCopy`.
    """
    idx = _checked_index(idx, a.dim)
    entries = a.to_dict()
    m = entries.get(idx, 0)
    if not m:
        raise NoSuchCopy(f"no copy at {idx} to remove")
    if m == 1:
        del entries[idx]
    else:
        entries[idx] = m - 1
    return Polymset._raw(a.dim, entries)


def is_immediate_successor(candidate: Polymset, base: Polymset) -> bool:
    """True when candidate is base plus exactly one copy somewhere."""
    return (
        base.issubset(candidate)
        and candidate.cardinality() == base.cardinality() + 1
    )


def is_immediate_predecessor(candidate: Polymset, base: Polymset) -> bool:
    """True when candidate is base with exactly one copy removed."""
    return (
        candidate.issubset(base)
        and candidate.cardinality() == base.cardinality() - 1
    )


@dataclass(frozen=True)
class GenerationTrace:
    """A sequence of sc steps; its length equals the target's cardinality."""

    steps: tuple[Index, ...]

    def __iter__(self) -> Iterator[Index]:
        return iter(self.steps)

    def __len__(self) -> int:
        return len(self.steps)


def generate(dim: int, steps: Iterable[Iterable[int]]) -> Polymset:
    """Fold sc over steps starting from the empty polymset.

    Increments at different indices commute, so the result depends only on
    how often each index occurs, not on the order of the steps.
    """
    empty = Polymset(dim)
    counts: dict[Index, int] = {}
    for raw in steps:
        idx = _checked_index(raw, dim)
        counts[idx] = counts.get(idx, 0) + 1
    return Polymset._raw(dim, counts) if counts else empty


def trace_of(a: Polymset) -> GenerationTrace:
    """A canonical trace rebuilding a: indices in lexicographic order, each
    repeated as often as its multiplicity.

    ``generate(a.dim, trace_of(a))`` returns a value equal to ``a``.  The
    trace holds one step per copy, so this is meant for desk-scale
    polymsets, not for large multiplicities.
    """
    steps: list[Index] = []
    for idx, m in a.items():
        steps.extend([idx] * m)
    return GenerationTrace(tuple(steps))
