"""The commutative semiring of natural multidimensional numbers.

For a fixed dimension the polymsets form a commutative semiring: add is the
pointwise sum, mul is index convolution (multiplicities multiply, indices
add componentwise), zero is the empty polymset, and one holds a single copy
at the all-zeros index.  shift translates every index by a fixed offset and
equals multiplication by the unit at that offset.

compare_tetratomy classifies any equal-dimension pair into exactly one of
four cases, with an explicit additive witness for the dominance cases.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from mnum.polymset import DimensionMismatch, Polymset


def zero(dim: int) -> Polymset:
    """The additive identity: the empty polymset of the given dimension."""
    return Polymset(dim)


def unit(idx: Iterable[int]) -> Polymset:
    """A single copy at idx; the dimension is the length of idx."""
    idx = tuple(idx)
    return Polymset(len(idx), [(idx, 1)])


def one(dim: int) -> Polymset:
    """The multiplicative identity: one copy at the all-zeros index."""
    # Polymset(dim) vets the dimension before the index tuple is built, so
    # one(0) reports an invalid dimension rather than an empty index.
    Polymset(dim)
    return unit((0,) * dim)


def add(a: Polymset, b: Polymset) -> Polymset:
    """Pointwise sum; the same operation as the set-level msum."""
    return a.msum(b)


def mul(a: Polymset, b: Polymset) -> Polymset:
    """Index convolution: sum of m_a(p) * m_b(q) over all p + q = s."""
    return a * b


def shift(a: Polymset, offset: Iterable[int]) -> Polymset:
    """Translate every index of a by offset."""
    return a.shift(offset)


@dataclass(frozen=True)
class TetratomyResult:
    """Outcome of compare_tetratomy.

    kind is one of "equal", "greater", "less", "incomparable"; witness is
    the nonzero difference C with a = b + C (greater) or b = a + C (less),
    and None otherwise.
    """

    kind: str
    witness: Polymset | None = None

    @classmethod
    def equal(cls) -> "TetratomyResult":
        return cls("equal")

    @classmethod
    def greater_by(cls, witness: Polymset) -> "TetratomyResult":
        if not witness:
            raise ValueError("a dominance witness must be nonzero")
        return cls("greater", witness)

    @classmethod
    def less_by(cls, witness: Polymset) -> "TetratomyResult":
        if not witness:
            raise ValueError("a dominance witness must be nonzero")
        return cls("less", witness)

    @classmethod
    def incomparable(cls) -> "TetratomyResult":
        return cls("incomparable")

    @property
    def is_equal(self) -> bool:
        return self.kind == "equal"

    @property
    def is_greater(self) -> bool:
        return self.kind == "greater"

    @property
    def is_less(self) -> bool:
        return self.kind == "less"

    @property
    def is_incomparable(self) -> bool:
        return self.kind == "incomparable"

    def __str__(self) -> str:
        if self.kind == "equal":
            return "Equal"
        if self.kind == "greater":
            return f"GreaterBy({self.witness})"
        if self.kind == "less":
            return f"LessBy({self.witness})"
        return "Incomparable"


def compare_tetratomy(a: Polymset, b: Polymset) -> TetratomyResult:
    """Exactly one of: a = b, a = b + C, b = a + D, or incomparable.

    The dominance cases carry the unique nonzero witness; saturation in
    msub is inactive there because dominance holds componentwise.
    """
    if a.dim != b.dim:
        raise DimensionMismatch(
            f"cannot compare polymsets of dimensions {a.dim} and {b.dim}"
        )
    if a == b:
        return TetratomyResult.equal()
    if b.issubset(a):
        return TetratomyResult.greater_by(a.msub(b))
    if a.issubset(b):
        return TetratomyResult.less_by(b.msub(a))
    return TetratomyResult.incomparable()
