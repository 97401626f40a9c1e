from __future__ import annotations

import json

import hypothesis.strategies as st
import pytest
from hypothesis import given

from mnum import (
    DimensionMismatch,
    Polymset,
    UniverseSpec,
    UniverseTooLarge,
    add,
    add_via_successors,
    check_laws,
    enumerate_universe,
    mul,
    mul_recursive,
    pointwise_mul,
    zero,
)

TINY = UniverseSpec(2, (1, 1), 1)


def polymsets(dim=2, max_coord=3, max_mult=5):
    index = st.tuples(*(st.integers(0, max_coord),) * dim)
    return st.dictionaries(index, st.integers(1, max_mult), max_size=4).map(
        lambda d: Polymset(dim, d)
    )


# -- universe enumeration -----------------------------------------------------


@pytest.mark.parametrize(
    "spec,expected",
    [
        (UniverseSpec(2, (0, 0), 2), 3),
        (UniverseSpec(2, (1, 1), 1), 16),
        (UniverseSpec(2, (1, 1), 2), 81),
        (UniverseSpec(1, (3,), 1), 16),
    ],
)
def test_universe_sizes(spec, expected):
    members = list(enumerate_universe(spec))
    assert spec.size() == expected
    assert len(members) == expected
    assert len(set(members)) == expected


def test_universe_starts_with_zero_and_stays_in_bounds():
    spec = UniverseSpec(2, (1, 2), 3)
    members = list(enumerate_universe(spec))
    assert members[0] == zero(2)
    for pm in members:
        assert pm.height() <= 3
        for (i, j), _ in pm.items():
            assert i <= 1 and j <= 2


def test_universe_enumeration_is_deterministic():
    first = list(enumerate_universe(TINY))
    second = list(enumerate_universe(TINY))
    assert first == second


def test_universe_limit():
    with pytest.raises(UniverseTooLarge):
        list(enumerate_universe(UniverseSpec(2, (1, 1), 2), limit=80))


def test_universe_spec_validation():
    with pytest.raises(DimensionMismatch):
        UniverseSpec(2, (1,), 1)
    with pytest.raises(ValueError):
        UniverseSpec(0, (), 1)
    with pytest.raises(ValueError):
        UniverseSpec(1, (-1,), 1)
    with pytest.raises(ValueError):
        UniverseSpec(1, (1,), -1)


# -- reference routes ------------------------------------------------------------


def test_routes_base_cases():
    a = Polymset(2, {(1, 1): 2})
    assert add_via_successors(a, zero(2)) == a
    assert add_via_successors(zero(2), a) == a
    assert mul_recursive(a, zero(2)) == zero(2)
    assert mul_recursive(zero(2), a) == zero(2)


def test_routes_check_dimensions():
    with pytest.raises(DimensionMismatch):
        add_via_successors(zero(2), zero(3))
    with pytest.raises(DimensionMismatch):
        mul_recursive(zero(2), zero(3))


@given(polymsets(), polymsets())
def test_add_routes_agree(a, b):
    assert add_via_successors(a, b) == add(a, b)


@given(polymsets(), polymsets())
def test_mul_routes_agree(a, b):
    assert mul_recursive(a, b) == mul(a, b)


def test_pointwise_mul_is_not_convolution():
    a = Polymset(2, {(0, 0): 2, (1, 0): 3})
    assert pointwise_mul(a, a) == Polymset(2, {(0, 0): 4, (1, 0): 9})
    assert pointwise_mul(a, a) != mul(a, a)


# -- check_laws --------------------------------------------------------------------


def test_check_laws_passes_on_tiny_universe():
    report = check_laws(TINY)
    assert report.ok
    assert report.failures() == []
    assert all(r.coverage == "exhaustive" for r in report.results)
    names = {r.law for r in report.results}
    assert {
        "sc-injective",
        "cross-index-collision",
        "add-assoc",
        "add-cancellation",
        "tetratomy",
        "mul-assoc",
        "distrib-left",
        "distrib-right",
        "one-identity",
        "unit-shift",
        "add-route-agreement",
        "mul-route-agreement",
        "reduce-over-mul",
    } <= names


def test_check_laws_dim_one_universe():
    report = check_laws(UniverseSpec(1, (2,), 1))
    assert report.ok
    names = {r.law for r in report.results}
    assert "cross-index-collision" not in names
    assert "reduce-over-add" not in names


def test_check_laws_samples_when_over_budget():
    report = check_laws(TINY, budget=300)
    by_name = {r.law: r for r in report.results}
    assert report.ok
    # 16^3 triples exceed the budget, 16^2 pairs do not
    assert by_name["add-assoc"].coverage == "sampled"
    assert by_name["add-assoc"].checked == 300
    assert by_name["add-comm"].coverage == "exhaustive"
    assert by_name["add-comm"].checked == 256


def test_check_laws_sampling_is_deterministic():
    first = check_laws(TINY, budget=50)
    second = check_laws(TINY, budget=50)
    assert first.to_document() == second.to_document()


def test_check_laws_rejects_bad_budget():
    with pytest.raises(ValueError):
        check_laws(TINY, budget=0)


def test_check_laws_catches_broken_multiplication():
    report = check_laws(TINY, mul_fn=pointwise_mul)
    assert not report.ok
    failed = {r.law for r in report.failures()}
    assert "one-identity" in failed
    assert "mul-route-agreement" in failed
    # untouched operations still pass
    passed = {r.law for r in report.results if r.status == "pass"}
    assert {"add-assoc", "add-comm", "tetratomy", "sc-injective"} <= passed


def test_check_laws_reports_first_counterexample_in_order():
    report = check_laws(TINY, mul_fn=pointwise_mul)
    one_identity = next(r for r in report.results if r.law == "one-identity")
    assert one_identity.counterexample is not None
    assert all(isinstance(v, str) for v in one_identity.counterexample.values())
    # the earliest failing element in enumeration order is the recorded one
    assert one_identity.checked == 2  # zero passes, the very next element fails


def test_report_document_is_json_serializable():
    doc = check_laws(TINY, budget=40).to_document()
    text = json.dumps(doc)
    back = json.loads(text)
    assert back["universe"] == {"dim": 2, "max_index": [1, 1], "max_mult": 1}
    assert back["budget"] == 40
    assert isinstance(back["ok"], bool)
    assert {l["law"] for l in back["laws"]} == {r.law for r in check_laws(TINY, budget=40).results}
