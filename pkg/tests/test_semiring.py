from __future__ import annotations

import hypothesis.strategies as st
import pytest
from hypothesis import given

from mnum import (
    DimensionMismatch,
    InvalidDimension,
    Polymset,
    TetratomyResult,
    add,
    compare_tetratomy,
    mul,
    one,
    sc,
    shift,
    unit,
    zero,
)

SHAPES = Polymset(2, {(0, 4): 1, (1, 2): 11, (2, 0): 3, (3, 3): 7, (3, 0): 5})


def polymsets(dim=2, max_coord=4, max_mult=9):
    index = st.tuples(*(st.integers(0, max_coord),) * dim)
    return st.dictionaries(index, st.integers(1, max_mult), max_size=5).map(
        lambda d: Polymset(dim, d)
    )


indices = st.tuples(st.integers(0, 4), st.integers(0, 4))


# -- constants ----------------------------------------------------------------


def test_constants():
    assert zero(3) == Polymset(3)
    assert one(2) == Polymset(2, {(0, 0): 1})
    assert unit((1, 2)) == Polymset(2, {(1, 2): 1})
    assert unit((4,)).dim == 1


def test_constants_reject_bad_dimensions():
    with pytest.raises(InvalidDimension):
        zero(0)
    with pytest.raises(InvalidDimension):
        one(0)
    with pytest.raises(InvalidDimension):
        unit(())


def test_add_is_msum():
    assert add(SHAPES, SHAPES) == SHAPES.msum(SHAPES)


# -- multiplication -------------------------------------------------------------


def test_units_multiply_by_adding_indices():
    assert mul(unit((1, 2)), unit((2, 1))) == unit((3, 3))


def test_one_is_the_multiplicative_identity():
    assert mul(one(2), SHAPES) == SHAPES
    assert mul(SHAPES, one(2)) == SHAPES


def test_zero_annihilates():
    assert mul(zero(2), SHAPES) == zero(2)
    assert mul(SHAPES, zero(2)) == zero(2)


def test_small_square():
    edge = Polymset(2, {(0, 0): 1, (1, 0): 1})
    assert mul(edge, edge) == Polymset(2, {(0, 0): 1, (1, 0): 2, (2, 0): 1})


def test_mul_requires_equal_dims():
    with pytest.raises(DimensionMismatch):
        mul(SHAPES, Polymset(3, {(0, 0, 0): 1}))


# -- shift ------------------------------------------------------------------------


def test_shift_translates_indices():
    assert shift(SHAPES, (0, 0)) == SHAPES
    shifted = shift(SHAPES, (2, 1))
    assert shifted == Polymset(2, {(i + 2, j + 1): m for (i, j), m in SHAPES.items()})
    assert shifted.cardinality() == SHAPES.cardinality()


def test_shift_checks_offset_length():
    with pytest.raises(DimensionMismatch):
        shift(SHAPES, (1,))


@given(polymsets(), indices)
def test_multiplying_by_a_unit_shifts(a, idx):
    assert mul(unit(idx), a) == shift(a, idx)


@given(polymsets(), indices, indices)
def test_shift_composes_additively(a, i, j):
    combined = tuple(x + y for x, y in zip(i, j))
    assert shift(shift(a, i), j) == shift(a, combined)


# -- semiring laws (property-based) --------------------------------------------


@given(polymsets(), polymsets(), polymsets())
def test_add_assoc_comm(a, b, c):
    # (a + b) + c = a + (b + c); a + b = b + a
    assert add(add(a, b), c) == add(a, add(b, c))
    assert add(a, b) == add(b, a)


@given(polymsets(), polymsets(), polymsets())
def test_mul_assoc_comm(a, b, c):
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, b) == mul(b, a)


@given(polymsets(), polymsets(), polymsets())
def test_mul_distributes_over_add(a, b, c):
    assert mul(add(a, b), c) == add(mul(a, c), mul(b, c))
    assert mul(c, add(a, b)) == add(mul(c, a), mul(c, b))


@given(polymsets(), polymsets(), polymsets())
def test_add_cancellation(a, b, c):
    assert (add(a, c) == add(b, c)) == (a == b)


@given(polymsets(), polymsets())
def test_cardinality_is_multiplicative(a, b):
    assert mul(a, b).cardinality() == a.cardinality() * b.cardinality()


@given(polymsets(), polymsets(), st.integers(0, 1))
def test_reduce_commutes_with_arithmetic(a, b, axis):
    assert add(a, b).reduce(axis) == add(a.reduce(axis), b.reduce(axis))
    assert mul(a, b).reduce(axis) == mul(a.reduce(axis), b.reduce(axis))


@given(polymsets(), indices)
def test_adding_a_unit_is_succession(a, idx):
    assert add(a, unit(idx)) == sc(a, idx)


# -- tetratomy ----------------------------------------------------------------------


def test_tetratomy_equal():
    r = compare_tetratomy(SHAPES, SHAPES)
    assert r.is_equal and r.witness is None
    assert str(r) == "Equal"


def test_tetratomy_greater_with_witness():
    bigger = add(SHAPES, unit((9, 9)))
    r = compare_tetratomy(bigger, SHAPES)
    assert r.is_greater
    assert r.witness == unit((9, 9))
    assert add(SHAPES, r.witness) == bigger
    assert str(r) == "GreaterBy({(9,9):1})"


def test_tetratomy_less_with_witness():
    r = compare_tetratomy(zero(2), one(2))
    assert r.is_less
    assert r.witness == one(2)
    assert str(r) == "LessBy({(0,0):1})"


def test_tetratomy_incomparable():
    r = compare_tetratomy(unit((0, 1)), unit((1, 0)))
    assert r.is_incomparable and r.witness is None
    assert str(r) == "Incomparable"


def test_tetratomy_requires_equal_dims():
    with pytest.raises(DimensionMismatch):
        compare_tetratomy(zero(2), zero(3))


def test_tetratomy_witnesses_must_be_nonzero():
    with pytest.raises(ValueError):
        TetratomyResult.greater_by(zero(2))


@given(polymsets(), polymsets())
def test_tetratomy_is_total_and_exclusive(a, b):
    r = compare_tetratomy(a, b)
    cases = {
        "equal": a == b,
        "greater": b.issubset(a) and a != b,
        "less": a.issubset(b) and a != b,
        "incomparable": not a.issubset(b) and not b.issubset(a),
    }
    assert sum(cases.values()) == 1
    assert cases[r.kind]
    if r.is_greater:
        assert add(b, r.witness) == a
    if r.is_less:
        assert add(a, r.witness) == b
