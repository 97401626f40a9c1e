from __future__ import annotations

import hypothesis.strategies as st
import pytest
from hypothesis import given

from mnum import (
    DimensionMismatch,
    GenerationTrace,
    NoSuchCopy,
    Polymset,
    generate,
    is_immediate_predecessor,
    is_immediate_successor,
    pd,
    sc,
    sc_pow,
    trace_of,
    unit,
)

SHAPES = Polymset(2, {(0, 4): 1, (1, 2): 11, (2, 0): 3, (3, 3): 7, (3, 0): 5})


def polymsets(dim=2, max_coord=4, max_mult=6):
    index = st.tuples(*(st.integers(0, max_coord),) * dim)
    return st.dictionaries(index, st.integers(1, max_mult), max_size=5).map(
        lambda d: Polymset(dim, d)
    )


indices = st.tuples(st.integers(0, 4), st.integers(0, 4))


# -- sc / sc_pow -------------------------------------------------------------


def test_sc_from_empty():
    one_copy = sc(Polymset(3), (0, 1, 5))
    assert one_copy == Polymset(3, {(0, 1, 5): 1})
    assert sc(one_copy, (0, 1, 5)) == Polymset(3, {(0, 1, 5): 2})


def test_sc_pow_repeats_sc():
    assert sc_pow(Polymset(3), (0, 1, 5), 5) == Polymset(3, {(0, 1, 5): 5})
    stepped = Polymset(3)
    for _ in range(5):
        stepped = sc(stepped, (0, 1, 5))
    assert sc_pow(Polymset(3), (0, 1, 5), 5) == stepped


def test_sc_pow_zero_is_identity():
    assert sc_pow(SHAPES, (0, 0), 0) == SHAPES


def test_sc_pow_rejects_negative_alpha():
    with pytest.raises(ValueError):
        sc_pow(SHAPES, (0, 0), -1)


def test_sc_checks_index_dimension():
    with pytest.raises(DimensionMismatch):
        sc(SHAPES, (0, 0, 0))


# -- pd ----------------------------------------------------------------------


def test_pd_removes_one_copy():
    smaller = pd(SHAPES, (1, 2))
    assert smaller.multiplicity((1, 2)) == 10
    assert smaller.cardinality() == SHAPES.cardinality() - 1


def test_pd_drops_entry_at_multiplicity_one():
    removed = pd(SHAPES, (0, 4))
    assert (0, 4) not in removed
    assert sc(removed, (0, 4)) == SHAPES


def test_pd_is_strict_unlike_msub():
    with pytest.raises(NoSuchCopy):
        pd(SHAPES, (5, 5))
    # msub on the same operands saturates instead of failing
    assert SHAPES - Polymset(2, {(5, 5): 1}) == SHAPES


def test_pd_empty():
    with pytest.raises(NoSuchCopy):
        pd(Polymset(2), (0, 0))


# -- successor relations --------------------------------------------------------


def test_new_entry_and_increment_are_both_successions():
    bigger = sc(SHAPES, (1, 1))
    assert bigger.cardinality() == 28
    assert is_immediate_successor(bigger, SHAPES)
    assert is_immediate_predecessor(SHAPES, bigger)
    smaller = pd(SHAPES, (1, 2))
    assert is_immediate_predecessor(smaller, SHAPES)
    assert is_immediate_successor(SHAPES, smaller)
    assert (SHAPES + bigger).cardinality() == 55


def test_succession_predicates_reject_non_neighbors():
    assert not is_immediate_successor(SHAPES, SHAPES)
    assert not is_immediate_predecessor(SHAPES, SHAPES)
    far = sc(sc(SHAPES, (0, 0)), (0, 0))
    assert not is_immediate_successor(far, SHAPES)


def test_succession_needs_containment_not_just_count():
    a = Polymset(2, {(0, 0): 2})
    b = Polymset(2, {(1, 1): 3})
    assert b.cardinality() == a.cardinality() + 1
    assert not is_immediate_successor(b, a)
    assert not is_immediate_predecessor(a, b)


def test_succession_predicates_are_false_across_dimensions():
    assert not is_immediate_successor(Polymset(1, {(0,): 1}), Polymset(2))
    assert not is_immediate_predecessor(Polymset(2), Polymset(1, {(0,): 1}))


def test_distinct_bases_can_share_a_successor():
    a, b = unit((1, 0)), unit((0, 1))
    assert a != b
    assert sc(a, (0, 1)) == sc(b, (1, 0))


# -- generate / trace_of ----------------------------------------------------------


def test_generate_counts_steps():
    built = generate(3, [(0, 1, 5), (3, 2, 3)])
    assert built == Polymset(3, {(0, 1, 5): 1, (3, 2, 3): 1})
    assert generate(2, []) == Polymset(2)


def test_generate_is_order_independent():
    steps = [(0, 1), (1, 0), (0, 1)]
    assert generate(2, steps) == generate(2, reversed(steps))


def test_trace_is_sorted_with_one_step_per_copy():
    trace = trace_of(Polymset(2, {(1, 0): 2, (0, 1): 1}))
    assert isinstance(trace, GenerationTrace)
    assert trace.steps == ((0, 1), (1, 0), (1, 0))
    assert len(trace) == 3


def test_generate_inverts_trace_of():
    assert generate(SHAPES.dim, trace_of(SHAPES)) == SHAPES
    empty = Polymset(5)
    assert generate(5, trace_of(empty)) == empty


# -- generation laws as properties -----------------------------------------------------------


@given(polymsets(), indices)
def test_successors_are_never_zero(a, idx):
    assert sc(a, idx)
    assert sc(a, idx) != a


@given(polymsets(), indices)
def test_pd_inverts_sc(a, idx):
    assert pd(sc(a, idx), idx) == a


@given(polymsets(), indices)
def test_sc_inverts_pd_on_support(a, idx):
    stepped = sc(a, idx)  # guarantees idx is in the support
    assert sc(pd(stepped, idx), idx) == stepped


@given(polymsets(), polymsets(), indices)
def test_sc_is_injective(a, b, idx):
    assert (sc(a, idx) == sc(b, idx)) == (a == b)


@given(polymsets(), indices, indices)
def test_sc_commutes(a, i, j):
    assert sc(sc(a, i), j) == sc(sc(a, j), i)


@given(polymsets())
def test_generate_inverts_trace_of_random(a):
    assert generate(a.dim, trace_of(a)) == a


@given(polymsets(), indices)
def test_sc_makes_an_immediate_successor(a, idx):
    assert is_immediate_successor(sc(a, idx), a)
