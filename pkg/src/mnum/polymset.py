"""Sparse multisets indexed by tuples of non-negative integers.

A :class:`Polymset` of dimension ``m`` assigns a positive multiplicity to
each member of a finite set of length-``m`` index tuples.  It is the value
type for the whole package: the set-level operations here (union,
intersection, pointwise sum, saturating difference, symmetric difference),
the dimension-changing reshapes (:meth:`Polymset.reduce`,
:meth:`Polymset.produce`), and the arithmetic in :mod:`mnum.semiring` all
return new values.

Values are immutable, hashable, and canonical: a zero multiplicity is never
stored, so two polymsets are equal exactly when their dimension and stored
entries coincide.  Multiplicities are plain Python integers and therefore
arbitrary precision; no overflow handling is needed or performed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping

Index = tuple[int, ...]

# A splitter maps (index, multiplicity) to (new_coordinate, share) pairs
# whose shares sum back to the original multiplicity.
Splitter = Callable[[Index, int], Iterable[tuple[int, int]]]


class InvalidDimension(ValueError):
    """A dimension that is not a positive integer."""


class DimensionMismatch(ValueError):
    """An index or operand whose length does not match the expected dim."""


class InvalidAxis(ValueError):
    """An axis argument outside the valid range for the operation."""


class InvalidSplitter(ValueError):
    """Splitter output with duplicate, negative, or non-integer parts."""


class ConservationViolation(ValueError):
    """Splitter output whose shares do not sum to the input multiplicity."""


def _checked_index(idx: Iterable[int], dim: int) -> Index:
    idx = tuple(idx)
    if len(idx) != dim:
        raise DimensionMismatch(
            f"index {idx!r} has length {len(idx)}, expected {dim}"
        )
    for c in idx:
        if not isinstance(c, int) or isinstance(c, bool) or c < 0:
            raise ValueError(
                f"index components must be non-negative integers, got {idx!r}"
            )
    return idx


class Polymset:
    """An immutable sparse multiset of index tuples.

    ``Polymset(dim)`` is the empty polymset of that dimension;
    ``Polymset(dim, components)`` builds from (index, multiplicity) pairs or
    a mapping, merging duplicate indices and dropping zero multiplicities::

        >>> a = Polymset(2, {(0, 0): 1, (1, 0): 3})
        >>> a.cardinality(), a.height()
        (4, 3)

    Operators mirror the named methods: ``|`` union, ``&`` intersection,
    ``+`` msum, ``-`` msub, ``^`` symdiff, ``*`` the convolution product.
    """

    __slots__ = ("_dim", "_entries", "_hash")

    def __init__(
        self,
        dim: int,
        components: Iterable[tuple[Iterable[int], int]] | Mapping[Index, int] = (),
    ):
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
            raise InvalidDimension(f"dimension must be a positive integer, got {dim!r}")
        pairs = components.items() if isinstance(components, Mapping) else components
        entries: dict[Index, int] = {}
        for raw, mult in pairs:
            idx = _checked_index(raw, dim)
            if not isinstance(mult, int) or isinstance(mult, bool) or mult < 0:
                raise ValueError(
                    f"multiplicity must be a non-negative integer, got {mult!r}"
                )
            if mult:
                entries[idx] = entries.get(idx, 0) + mult
        self._dim = dim
        self._entries = entries
        self._hash: int | None = None

    @classmethod
    def _raw(cls, dim: int, entries: dict[Index, int]) -> "Polymset":
        # Trusted constructor: entries must already be canonical (validated
        # keys of length dim, strictly positive multiplicities).
        pm = object.__new__(cls)
        pm._dim = dim
        pm._entries = entries
        pm._hash = None
        return pm

    # -- queries ----------------------------------------------------------

    @property
    def dim(self) -> int:
        return self._dim

    def multiplicity(self, idx: Iterable[int]) -> int:
        """Stored multiplicity at idx, 0 when absent."""
        return self._entries.get(_checked_index(idx, self._dim), 0)

    def __getitem__(self, idx: Iterable[int]) -> int:
        return self.multiplicity(idx)

    def __contains__(self, idx: Iterable[int]) -> bool:
        return self.multiplicity(idx) > 0

    def items(self) -> list[tuple[Index, int]]:
        """(index, multiplicity) pairs in lexicographic index order."""
        return sorted(self._entries.items())

    def to_dict(self) -> dict[Index, int]:
        """A fresh dict copy of the stored entries."""
        return dict(self._entries)

    def support(self) -> "Polymset":
        """The same indices, every multiplicity collapsed to 1."""
        return Polymset._raw(self._dim, dict.fromkeys(self._entries, 1))

    def cardinality(self) -> int:
        """Total number of copies: the sum of all multiplicities."""
        return sum(self._entries.values())

    def height(self) -> int:
        """Largest multiplicity, 0 for the empty polymset."""
        return max(self._entries.values(), default=0)

    # -- set-level operations (pointwise) ---------------------------------

    def _check_operand(self, other: "Polymset") -> None:
        if not isinstance(other, Polymset):
            raise TypeError(f"expected a Polymset, got {type(other).__name__}")
        if other._dim != self._dim:
            raise DimensionMismatch(
                f"operands have dimensions {self._dim} and {other._dim}"
            )

    def union(self, other: "Polymset") -> "Polymset":
        """Pointwise maximum of multiplicities."""
        self._check_operand(other)
        out = dict(self._entries)
        for idx, m in other._entries.items():
            if m > out.get(idx, 0):
                out[idx] = m
        return Polymset._raw(self._dim, out)

    def intersection(self, other: "Polymset") -> "Polymset":
        """Pointwise minimum of multiplicities."""
        self._check_operand(other)
        small, big = self._entries, other._entries
        if len(small) > len(big):
            small, big = big, small
        out: dict[Index, int] = {}
        for idx, m in small.items():
            n = big.get(idx, 0)
            if n:
                out[idx] = m if m < n else n
        return Polymset._raw(self._dim, out)

    def msum(self, other: "Polymset") -> "Polymset":
        """Pointwise sum of multiplicities."""
        self._check_operand(other)
        out = dict(self._entries)
        for idx, m in other._entries.items():
            out[idx] = out.get(idx, 0) + m
        return Polymset._raw(self._dim, out)

    def msub(self, other: "Polymset") -> "Polymset":
        """Saturating pointwise difference: shortfalls clamp to zero."""
        self._check_operand(other)
        other_entries = other._entries
        out: dict[Index, int] = {}
        for idx, m in self._entries.items():
            d = m - other_entries.get(idx, 0)
            if d > 0:
                out[idx] = d
        return Polymset._raw(self._dim, out)

    def symdiff(self, other: "Polymset") -> "Polymset":
        """Pointwise absolute difference of multiplicities."""
        self._check_operand(other)
        a, b = self._entries, other._entries
        out: dict[Index, int] = {}
        for idx, m in a.items():
            d = m - b.get(idx, 0)
            if d:
                out[idx] = d if d > 0 else -d
        for idx, m in b.items():
            if idx not in a:
                out[idx] = m
        return Polymset._raw(self._dim, out)

    def __or__(self, other: object) -> "Polymset":
        if not isinstance(other, Polymset):
            return NotImplemented
        return self.union(other)

    def __and__(self, other: object) -> "Polymset":
        if not isinstance(other, Polymset):
            return NotImplemented
        return self.intersection(other)

    def __add__(self, other: object) -> "Polymset":
        if not isinstance(other, Polymset):
            return NotImplemented
        return self.msum(other)

    def __sub__(self, other: object) -> "Polymset":
        if not isinstance(other, Polymset):
            return NotImplemented
        return self.msub(other)

    def __xor__(self, other: object) -> "Polymset":
        if not isinstance(other, Polymset):
            return NotImplemented
        return self.symdiff(other)

    # -- arithmetic helpers used by mnum.semiring --------------------------

    def shift(self, offset: Iterable[int]) -> "Polymset":
        """Translate every index by offset (componentwise addition)."""
        offset = _checked_index(offset, self._dim)
        if not any(offset):
            return self
        out = {
            tuple(c + o for c, o in zip(idx, offset)): m
            for idx, m in self._entries.items()
        }
        return Polymset._raw(self._dim, out)

    def __mul__(self, other: object) -> "Polymset":
        # Index convolution: the product collects m_a * m_b at the
        # componentwise sum of every pair of indices.
        if not isinstance(other, Polymset):
            return NotImplemented
        self._check_operand(other)
        out: dict[Index, int] = {}
        get = out.get
        for p, pm in self._entries.items():
            for q, qm in other._entries.items():
                s = tuple(x + y for x, y in zip(p, q))
                out[s] = get(s, 0) + pm * qm
        return Polymset._raw(self._dim, out)

    # -- dimension-changing reshapes ---------------------------------------

    def reduce(self, axis: int) -> "Polymset":
        """Sum the given axis away, lowering the dimension by one.

        Entries whose indices agree everywhere but on ``axis`` merge and
        their multiplicities add, so cardinality is preserved.  Rejected for
        dimension 1: the 0-dimensional collapse is :meth:`cardinality`.
        """
        if self._dim == 1:
            raise InvalidDimension(
                "cannot reduce a 1-dimensional polymset; use cardinality()"
            )
        if not isinstance(axis, int) or isinstance(axis, bool) or not 0 <= axis < self._dim:
            raise InvalidAxis(f"axis must be in 0..{self._dim - 1}, got {axis!r}")
        out: dict[Index, int] = {}
        for idx, m in self._entries.items():
            r = idx[:axis] + idx[axis + 1:]
            out[r] = out.get(r, 0) + m
        return Polymset._raw(self._dim - 1, out)

    def produce(self, axis: int, splitter: Splitter) -> "Polymset":
        """Insert a new axis at position ``axis``, raising the dimension.

        The splitter decides how each entry's multiplicity is distributed
        over coordinates of the new axis.  Its output must use distinct
        non-negative coordinates and non-negative shares summing exactly to
        the entry's multiplicity (zero shares are allowed and dropped), so
        ``produce`` conserves cardinality and ``reduce(axis)`` undoes it.
        """
        if not isinstance(axis, int) or isinstance(axis, bool) or not 0 <= axis <= self._dim:
            raise InvalidAxis(f"axis must be in 0..{self._dim}, got {axis!r}")
        out: dict[Index, int] = {}
        for idx, mult in sorted(self._entries.items()):
            total = 0
            seen: set[int] = set()
            for coord, share in splitter(idx, mult):
                if (
                    not isinstance(coord, int) or isinstance(coord, bool) or coord < 0
                    or not isinstance(share, int) or isinstance(share, bool) or share < 0
                ):
                    raise InvalidSplitter(
                        f"splitter emitted ({coord!r}, {share!r}) at {idx}; "
                        "coordinates and shares must be non-negative integers"
                    )
                if coord in seen:
                    raise InvalidSplitter(
                        f"splitter emitted coordinate {coord} twice at {idx}"
                    )
                seen.add(coord)
                total += share
                if share:
                    new = idx[:axis] + (coord,) + idx[axis:]
                    out[new] = out.get(new, 0) + share
            if total != mult:
                raise ConservationViolation(
                    f"splitter distributed {total} of {mult} copies at {idx}"
                )
        return Polymset._raw(self._dim + 1, out)

    # -- comparisons --------------------------------------------------------

    def issubset(self, other: "Polymset") -> bool:
        """Componentwise multiplicity dominance; False across dimensions."""
        if not isinstance(other, Polymset) or other._dim != self._dim:
            return False
        other_entries = other._entries
        return all(m <= other_entries.get(idx, 0) for idx, m in self._entries.items())

    def __le__(self, other: object) -> bool:
        if not isinstance(other, Polymset):
            return NotImplemented
        return self.issubset(other)

    def __ge__(self, other: object) -> bool:
        if not isinstance(other, Polymset):
            return NotImplemented
        return other.issubset(self)

    def relate(self, other: "Polymset") -> "RelationReport":
        """Classify this polymset against another, possibly of another dim."""
        if not isinstance(other, Polymset):
            raise TypeError(f"expected a Polymset, got {type(other).__name__}")
        equidimensional = self._dim == other._dim
        equicardinal = self.cardinality() == other.cardinality()
        return RelationReport(
            equal=equidimensional and self._entries == other._entries,
            similar=equidimensional and self._entries.keys() == other._entries.keys(),
            left_sub_right=self.issubset(other),
            right_sub_left=other.issubset(self),
            equicardinal=equicardinal,
            equidimensional=equidimensional,
            equivalent=equicardinal and equidimensional,
        )

    def boundedness(
        self,
        n: int | None = None,
        bounds: Mapping[Index, int] | None = None,
    ) -> "BoundednessReport":
        """Report multiplicity bounds.

        constant: all stored multiplicities equal (vacuously true if empty).
        n_bounded: height <= n, or None when n is not given.
        individually_bounded: every entry within its bound, indices missing
        from ``bounds`` being unconstrained; None when bounds is not given.
        """
        mults = set(self._entries.values())
        n_bounded = None if n is None else self.height() <= n
        individually = None
        if bounds is not None:
            checked = {
                _checked_index(idx, self._dim): limit for idx, limit in bounds.items()
            }
            individually = all(
                m <= checked[idx]
                for idx, m in self._entries.items()
                if idx in checked
            )
        return BoundednessReport(
            constant=len(mults) <= 1,
            n_bounded=n_bounded,
            individually_bounded=individually,
        )

    # -- value plumbing -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polymset):
            return NotImplemented
        return self._dim == other._dim and self._entries == other._entries

    def __ne__(self, other: object) -> bool:
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self._dim, frozenset(self._entries.items())))
            self._hash = h
        return h

    def __bool__(self) -> bool:
        return bool(self._entries)

    def __repr__(self) -> str:
        return f"Polymset({self._dim}, {dict(self.items())!r})"

    def __str__(self) -> str:
        if not self._entries:
            return "{}"
        parts = [
            "({}):{}".format(",".join(map(str, idx)), m) for idx, m in self.items()
        ]
        return "{" + ", ".join(parts) + "}"


@dataclass(frozen=True)
class RelationReport:
    """How two polymsets stand to one another.

    equal implies similar; left/right subpolymset flags are False whenever
    the dimensions differ; equivalent means equicardinal and equidimensional.
    """

    equal: bool
    similar: bool
    left_sub_right: bool
    right_sub_left: bool
    equicardinal: bool
    equidimensional: bool
    equivalent: bool


@dataclass(frozen=True)
class BoundednessReport:
    constant: bool
    n_bounded: bool | None
    individually_bounded: bool | None


def delta_splitter(idx: Index, mult: int) -> list[tuple[int, int]]:
    """Splitter sending every copy to coordinate 0 of the new axis."""
    return [(0, mult)]


def even_splitter(parts: int) -> Splitter:
    """Splitter spreading copies evenly over coordinates 0..parts-1.

    The remainder of the division lands on coordinate 0.
    """
    if not isinstance(parts, int) or isinstance(parts, bool) or parts < 1:
        raise ValueError(f"parts must be a positive integer, got {parts!r}")

    def split(idx: Index, mult: int) -> list[tuple[int, int]]:
        share, rem = divmod(mult, parts)
        return [(0, share + rem)] + [(t, share) for t in range(1, parts)]

    return split


class DomainBase:
    """Named attribute domains giving index coordinates readable labels.

    Purely advisory: no operation requires one, and indices are only
    range-checked against domain sizes when :meth:`validate` is called
    explicitly (for example by the interchange loader when a document
    carries a domain_base).
    """

    __slots__ = ("_domains",)

    def __init__(self, domains: Iterable[tuple[str, Iterable[str]]]):
        normalized: list[tuple[str, tuple[str, ...]]] = []
        names: set[str] = set()
        for name, elements in domains:
            name = str(name)
            elements = tuple(str(e) for e in elements)
            if name in names:
                raise ValueError(f"duplicate domain name {name!r}")
            names.add(name)
            if not elements:
                raise ValueError(f"domain {name!r} has no elements")
            if len(set(elements)) != len(elements):
                raise ValueError(f"domain {name!r} has duplicate elements")
            normalized.append((name, elements))
        if not normalized:
            raise InvalidDimension("a domain base needs at least one domain")
        self._domains = tuple(normalized)

    @property
    def dim(self) -> int:
        return len(self._domains)

    @property
    def domains(self) -> tuple[tuple[str, tuple[str, ...]], ...]:
        return self._domains

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(elements) for _, elements in self._domains)

    def resolve(self, labels: Iterable[str]) -> Index:
        """Translate one label per axis into a 0-based index tuple."""
        labels = tuple(labels)
        if len(labels) != self.dim:
            raise DimensionMismatch(
                f"got {len(labels)} labels for {self.dim} domains"
            )
        idx = []
        for label, (name, elements) in zip(labels, self._domains):
            try:
                idx.append(elements.index(label))
            except ValueError:
                raise ValueError(f"{label!r} is not in domain {name!r}") from None
        return tuple(idx)

    def labels(self, idx: Iterable[int]) -> tuple[str, ...]:
        """The inverse of :meth:`resolve` for an in-range index."""
        idx = _checked_index(idx, self.dim)
        out = []
        for c, (name, elements) in zip(idx, self._domains):
            if c >= len(elements):
                raise ValueError(
                    f"coordinate {c} is out of range for domain {name!r} "
                    f"of size {len(elements)}"
                )
            out.append(elements[c])
        return tuple(out)

    def polymset(self, components: Iterable[tuple[Iterable[str], int]]) -> Polymset:
        """Build a polymset from (label tuple, multiplicity) pairs."""
        return Polymset(
            self.dim, [(self.resolve(labels), m) for labels, m in components]
        )

    def validate(self, pm: Polymset) -> None:
        """Check every index of pm against the domain sizes."""
        if pm.dim != self.dim:
            raise DimensionMismatch(
                f"polymset has dimension {pm.dim}, domain base has {self.dim}"
            )
        for idx, _ in pm.items():
            self.labels(idx)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DomainBase):
            return NotImplemented
        return self._domains == other._domains

    def __hash__(self) -> int:
        return hash(self._domains)

    def __repr__(self) -> str:
        return f"DomainBase({list(self._domains)!r})"
