"""Reference routes and finite-universe law checking.

The two routes here recompute the semiring arithmetic from its unit-step
characterization, independently of the sparse formulas in
:mod:`mnum.semiring`, so each implementation certifies the other on every
tested input:

* add_via_successors peels one copy at a time off the second operand and
  replays it with sc;
* mul_recursive uses a * 0 = 0 and a * sc(b, i) = a * b + shift(a, i).

check_laws sweeps every generation and arithmetic law over an exhaustively
enumerated finite universe and reports, per law, pass/fail with the first
counterexample in enumeration order.  Laws whose argument space outgrows
the budget are checked on a deterministic random sample instead and say so.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Callable, Iterator

from mnum.peano import pd, sc
from mnum.polymset import DimensionMismatch, Index, Polymset
from mnum.semiring import add, compare_tetratomy, mul, one, unit


class UniverseTooLarge(ValueError):
    """An enumeration request whose universe exceeds the size limit."""


@dataclass(frozen=True)
class UniverseSpec:
    """A finite universe: every polymset of the given dimension with
    support inside the grid 0..max_index[k] per axis and multiplicities
    at most max_mult."""

    dim: int
    max_index: tuple[int, ...]
    max_mult: int

    def __post_init__(self) -> None:
        if not isinstance(self.dim, int) or isinstance(self.dim, bool) or self.dim < 1:
            raise ValueError(f"dim must be a positive integer, got {self.dim!r}")
        object.__setattr__(self, "max_index", tuple(self.max_index))
        if len(self.max_index) != self.dim:
            raise DimensionMismatch(
                f"max_index {self.max_index!r} has length {len(self.max_index)}, "
                f"expected {self.dim}"
            )
        for c in self.max_index:
            if not isinstance(c, int) or isinstance(c, bool) or c < 0:
                raise ValueError(f"max_index components must be >= 0, got {c!r}")
        if (
            not isinstance(self.max_mult, int)
            or isinstance(self.max_mult, bool)
            or self.max_mult < 0
        ):
            raise ValueError(f"max_mult must be >= 0, got {self.max_mult!r}")

    def cells(self) -> list[Index]:
        """Grid indices in lexicographic order."""
        return list(itertools.product(*(range(b + 1) for b in self.max_index)))

    def size(self) -> int:
        """Number of polymsets in the universe."""
        ncells = math.prod(b + 1 for b in self.max_index)
        return (self.max_mult + 1) ** ncells


def enumerate_universe(
    spec: UniverseSpec, limit: int = 1_000_000
) -> Iterator[Polymset]:
    """Yield every universe member exactly once, deterministically.

    The stream starts with the zero polymset and follows the lexicographic
    order of the per-cell multiplicity vectors.  Raises
    :class:`UniverseTooLarge` when the universe holds more than ``limit``
    members.
    """
    size = spec.size()
    if size > limit:
        raise UniverseTooLarge(
            f"universe holds {size} polymsets, more than the limit of {limit}"
        )
    cells = spec.cells()
    for mults in itertools.product(range(spec.max_mult + 1), repeat=len(cells)):
        yield Polymset._raw(
            spec.dim, {c: m for c, m in zip(cells, mults) if m}
        )


def add_via_successors(a: Polymset, b: Polymset) -> Polymset:
    """Recompute a + b one copy at a time.

    Structural recursion on b: peel its lexicographically smallest copy
    with pd, add the rest, then replay the copy with sc.  Recursion depth
    equals the cardinality of b, so this is a desk-scale cross-check, not
    a production adder.
    """
    if a.dim != b.dim:
        raise DimensionMismatch(
            f"operands have dimensions {a.dim} and {b.dim}"
        )
    if not b:
        return a
    idx = min(b.to_dict())
    return sc(add_via_successors(a, pd(b, idx)), idx)


def mul_recursive(a: Polymset, b: Polymset) -> Polymset:
    """Recompute a * b from the unit-step characterization.

    a * 0 = 0 and a * sc(b', i) = a * b' + shift(a, i).  Recursion depth
    equals the cardinality of b.
    """
    if a.dim != b.dim:
        raise DimensionMismatch(
            f"operands have dimensions {a.dim} and {b.dim}"
        )
    if not b:
        return Polymset(a.dim)
    idx = min(b.to_dict())
    return add(mul_recursive(a, pd(b, idx)), a.shift(idx))


def pointwise_mul(a: Polymset, b: Polymset) -> Polymset:
    """Deliberately wrong multiplication: pointwise product of
    multiplicities at matching indices.

    Exists only to demonstrate that check_laws catches a broken operation
    (the identity laws fail under it); never use it for arithmetic.
    """
    if a.dim != b.dim:
        raise DimensionMismatch(
            f"operands have dimensions {a.dim} and {b.dim}"
        )
    bd = b.to_dict()
    out = {}
    for idx, m in a.to_dict().items():
        n = bd.get(idx, 0)
        if n:
            out[idx] = m * n
    return Polymset._raw(a.dim, out)


MUTATIONS: dict[str, Callable[[Polymset, Polymset], Polymset]] = {
    "pointwise-mul": pointwise_mul,
}


@dataclass(frozen=True)
class LawResult:
    law: str
    status: str  # "pass" | "fail"
    coverage: str  # "exhaustive" | "sampled"
    checked: int
    counterexample: dict[str, str] | None = None


@dataclass(frozen=True)
class LawReport:
    universe: UniverseSpec
    budget: int
    results: tuple[LawResult, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(r.status == "pass" for r in self.results)

    def failures(self) -> list[LawResult]:
        return [r for r in self.results if r.status != "pass"]

    def to_document(self) -> dict:
        """A JSON-serializable report document."""
        return {
            "universe": {
                "dim": self.universe.dim,
                "max_index": list(self.universe.max_index),
                "max_mult": self.universe.max_mult,
            },
            "budget": self.budget,
            "ok": self.ok,
            "laws": [
                {
                    "law": r.law,
                    "status": r.status,
                    "coverage": r.coverage,
                    "checked": r.checked,
                    "counterexample": r.counterexample,
                }
                for r in self.results
            ],
        }


# A law is (name, domains, check): domains is a string of "E" (universe
# element) and "C" (grid cell); check returns None on success or a
# counterexample dict naming the offending arguments.
_Law = tuple[str, str, Callable[..., "dict[str, str] | None"]]


def _laws(
    spec: UniverseSpec,
    mul_fn: Callable[[Polymset, Polymset], Polymset],
) -> list[_Law]:
    dim = spec.dim
    zero_pm = Polymset(dim)
    one_pm = one(dim)

    def ce(**kwargs: object) -> dict[str, str]:
        return {k: str(v) for k, v in kwargs.items()}

    # -- generation laws --

    def sc_not_zero(a: Polymset, i: Index) -> dict | None:
        if not sc(a, i):
            return ce(A=a, index=i)
        return None

    def sc_distinct_indices(a: Polymset, i: Index, j: Index) -> dict | None:
        if i != j and sc(a, i) == sc(a, j):
            return ce(A=a, index_1=i, index_2=j)
        return None

    def sc_injective(a: Polymset, b: Polymset, i: Index) -> dict | None:
        if (sc(a, i) == sc(b, i)) != (a == b):
            return ce(A=a, B=b, index=i)
        return None

    def predecessor_inverts(a: Polymset) -> dict | None:
        for idx, _ in a.items():
            if sc(pd(a, idx), idx) != a:
                return ce(A=a, index=idx)
        return None

    def sc_no_fixpoint(a: Polymset, i: Index) -> dict | None:
        if sc(a, i) == a:
            return ce(A=a, index=i)
        return None

    def sc_commutes(a: Polymset, i: Index, j: Index) -> dict | None:
        if sc(sc(a, i), j) != sc(sc(a, j), i):
            return ce(A=a, index_1=i, index_2=j)
        return None

    def cross_index_collision() -> dict | None:
        # Two distinct one-copy polymsets whose successors at swapped
        # indices coincide; only statable for dim >= 2.
        i = (1, 0) + (0,) * (dim - 2)
        j = (0, 1) + (0,) * (dim - 2)
        a, b = unit(i), unit(j)
        if a == b or sc(a, j) != sc(b, i):
            return ce(A=a, B=b)
        return None

    # -- additive laws --

    def add_assoc(a: Polymset, b: Polymset, c: Polymset) -> dict | None:
        if add(add(a, b), c) != add(a, add(b, c)):
            return ce(A=a, B=b, C=c)
        return None

    def add_comm(a: Polymset, b: Polymset) -> dict | None:
        if add(a, b) != add(b, a):
            return ce(A=a, B=b)
        return None

    def add_zero_neutral(a: Polymset) -> dict | None:
        if add(a, zero_pm) != a or add(zero_pm, a) != a:
            return ce(A=a)
        return None

    def add_cancellation(a: Polymset, b: Polymset, c: Polymset) -> dict | None:
        if (add(a, c) == add(b, c)) != (a == b):
            return ce(A=a, B=b, C=c)
        return None

    def add_no_torsion(a: Polymset, b: Polymset) -> dict | None:
        # Adding a nonzero polymset strictly changes the value.
        if b and add(a, b) == a:
            return ce(A=a, B=b)
        return None

    def add_unit_step(a: Polymset, i: Index) -> dict | None:
        if add(a, unit(i)) != sc(a, i):
            return ce(A=a, index=i)
        return None

    def add_successor_step(a: Polymset, b: Polymset, i: Index) -> dict | None:
        if add(a, sc(b, i)) != sc(add(a, b), i):
            return ce(A=a, B=b, index=i)
        return None

    def tetratomy(a: Polymset, b: Polymset) -> dict | None:
        r = compare_tetratomy(a, b)
        a_dominates = b.issubset(a)
        b_dominates = a.issubset(b)
        cases = (
            a == b,
            a_dominates and a != b,
            b_dominates and a != b,
            not a_dominates and not b_dominates,
        )
        kinds = ("equal", "greater", "less", "incomparable")
        if sum(cases) != 1 or not cases[kinds.index(r.kind)]:
            return ce(A=a, B=b, verdict=r)
        if r.kind == "greater" and (not r.witness or add(b, r.witness) != a):
            return ce(A=a, B=b, verdict=r)
        if r.kind == "less" and (not r.witness or add(a, r.witness) != b):
            return ce(A=a, B=b, verdict=r)
        return None

    # -- multiplicative laws --

    def mul_assoc(a: Polymset, b: Polymset, c: Polymset) -> dict | None:
        if mul_fn(mul_fn(a, b), c) != mul_fn(a, mul_fn(b, c)):
            return ce(A=a, B=b, C=c)
        return None

    def mul_comm(a: Polymset, b: Polymset) -> dict | None:
        if mul_fn(a, b) != mul_fn(b, a):
            return ce(A=a, B=b)
        return None

    def one_identity(a: Polymset) -> dict | None:
        if mul_fn(one_pm, a) != a or mul_fn(a, one_pm) != a:
            return ce(A=a)
        return None

    def zero_annihilates(a: Polymset) -> dict | None:
        if mul_fn(a, zero_pm) != zero_pm or mul_fn(zero_pm, a) != zero_pm:
            return ce(A=a)
        return None

    def distrib_right(a: Polymset, b: Polymset, c: Polymset) -> dict | None:
        if mul_fn(add(a, b), c) != add(mul_fn(a, c), mul_fn(b, c)):
            return ce(A=a, B=b, C=c)
        return None

    def distrib_left(a: Polymset, b: Polymset, c: Polymset) -> dict | None:
        if mul_fn(c, add(a, b)) != add(mul_fn(c, a), mul_fn(c, b)):
            return ce(A=a, B=b, C=c)
        return None

    def unit_shift(a: Polymset, i: Index) -> dict | None:
        if mul_fn(unit(i), a) != a.shift(i):
            return ce(A=a, index=i)
        return None

    def unit_product(i: Index, j: Index) -> dict | None:
        expected = unit(tuple(x + y for x, y in zip(i, j)))
        if mul_fn(unit(i), unit(j)) != expected:
            return ce(index_1=i, index_2=j)
        return None

    def shift_compose(a: Polymset, i: Index, j: Index) -> dict | None:
        composed = a.shift(i).shift(j)
        if composed != a.shift(tuple(x + y for x, y in zip(i, j))):
            return ce(A=a, offset_1=i, offset_2=j)
        return None

    def shift_over_add(a: Polymset, b: Polymset, i: Index) -> dict | None:
        if add(a, b).shift(i) != add(a.shift(i), b.shift(i)):
            return ce(A=a, B=b, offset=i)
        return None

    def shift_over_mul(a: Polymset, b: Polymset, i: Index) -> dict | None:
        if mul_fn(a.shift(i), b) != mul_fn(a, b).shift(i):
            return ce(A=a, B=b, offset=i)
        return None

    # -- morphisms --

    def card_add(a: Polymset, b: Polymset) -> dict | None:
        if add(a, b).cardinality() != a.cardinality() + b.cardinality():
            return ce(A=a, B=b)
        return None

    def card_mul(a: Polymset, b: Polymset) -> dict | None:
        if mul_fn(a, b).cardinality() != a.cardinality() * b.cardinality():
            return ce(A=a, B=b)
        return None

    def reduce_over_add(a: Polymset, b: Polymset) -> dict | None:
        for axis in range(dim):
            if add(a, b).reduce(axis) != add(a.reduce(axis), b.reduce(axis)):
                return ce(A=a, B=b, axis=axis)
        return None

    def reduce_over_mul(a: Polymset, b: Polymset) -> dict | None:
        for axis in range(dim):
            if mul_fn(a, b).reduce(axis) != mul_fn(
                a.reduce(axis), b.reduce(axis)
            ):
                return ce(A=a, B=b, axis=axis)
        return None

    # -- route agreement --

    def add_route_agreement(a: Polymset, b: Polymset) -> dict | None:
        if add(a, b) != add_via_successors(a, b):
            return ce(A=a, B=b)
        return None

    def mul_route_agreement(a: Polymset, b: Polymset) -> dict | None:
        if mul_fn(a, b) != mul_recursive(a, b):
            return ce(A=a, B=b)
        return None

    laws: list[_Law] = [
        ("sc-not-zero", "EC", sc_not_zero),
        ("sc-distinct-indices", "ECC", sc_distinct_indices),
        ("sc-injective", "EEC", sc_injective),
        ("predecessor-inverts", "E", predecessor_inverts),
        ("sc-no-fixpoint", "EC", sc_no_fixpoint),
        ("sc-commutes", "ECC", sc_commutes),
        ("add-assoc", "EEE", add_assoc),
        ("add-comm", "EE", add_comm),
        ("add-zero-neutral", "E", add_zero_neutral),
        ("add-cancellation", "EEE", add_cancellation),
        ("add-no-torsion", "EE", add_no_torsion),
        ("add-unit-step", "EC", add_unit_step),
        ("add-successor-step", "EEC", add_successor_step),
        ("tetratomy", "EE", tetratomy),
        ("mul-assoc", "EEE", mul_assoc),
        ("mul-comm", "EE", mul_comm),
        ("one-identity", "E", one_identity),
        ("zero-annihilates", "E", zero_annihilates),
        ("distrib-right", "EEE", distrib_right),
        ("distrib-left", "EEE", distrib_left),
        ("unit-shift", "EC", unit_shift),
        ("unit-product", "CC", unit_product),
        ("shift-compose", "ECC", shift_compose),
        ("shift-over-add", "EEC", shift_over_add),
        ("shift-over-mul", "EEC", shift_over_mul),
        ("card-add", "EE", card_add),
        ("card-mul", "EE", card_mul),
        ("add-route-agreement", "EE", add_route_agreement),
        ("mul-route-agreement", "EE", mul_route_agreement),
    ]
    if dim >= 2:
        laws.insert(6, ("cross-index-collision", "", cross_index_collision))
        laws.append(("reduce-over-add", "EE", reduce_over_add))
        laws.append(("reduce-over-mul", "EE", reduce_over_mul))
    return laws


def check_laws(
    spec: UniverseSpec,
    budget: int = 1_000_000,
    mul_fn: Callable[[Polymset, Polymset], Polymset] | None = None,
    limit: int = 1_000_000,
) -> LawReport:
    """Check every generation and arithmetic law over the universe.

    Each law runs over the full cartesian product of its argument domains
    when that fits the budget, in enumeration order, stopping at the first
    counterexample; otherwise it runs on ``budget`` deterministically
    seeded random draws and the result says "sampled".  ``mul_fn``
    substitutes the multiplication under test (see :data:`MUTATIONS`);
    the default is the production convolution.
    """
    if not isinstance(budget, int) or isinstance(budget, bool) or budget < 1:
        raise ValueError(f"budget must be a positive integer, got {budget!r}")
    elems = list(enumerate_universe(spec, limit=limit))
    cells = spec.cells()
    pools = {"E": elems, "C": cells}
    results: list[LawResult] = []
    for name, domains, check in _laws(spec, mul_fn or mul):
        sizes = [len(pools[d]) for d in domains]
        total = math.prod(sizes)
        if total <= budget:
            coverage = "exhaustive"
            combos = itertools.product(*(pools[d] for d in domains))
        else:
            coverage = "sampled"
            rng = random.Random(f"mnum:{name}")
            pool_list = [pools[d] for d in domains]
            combos = (
                tuple(p[rng.randrange(len(p))] for p in pool_list)
                for _ in range(budget)
            )
            total = budget
        checked = 0
        failure = None
        for args in combos:
            checked += 1
            failure = check(*args)
            if failure is not None:
                break
        results.append(
            LawResult(
                law=name,
                status="fail" if failure is not None else "pass",
                coverage=coverage,
                checked=checked,
                counterexample=failure,
            )
        )
    return LawReport(universe=spec, budget=budget, results=tuple(results))
