"""Abstract-to-concrete value selection and free-attribute randomization."""

import pytest

from ctdkit import (
    CtdError,
    FreeAttribute,
    Model,
    ModelSpace,
    abstract_candidates,
    generate_plan,
    instantiate,
    randomize_free,
    recover_abstract,
)
from ctdkit.model import Attribute, Value


def _abstract_rows(power_failure, count=6):
    space = ModelSpace(power_failure)
    plan = generate_plan(space, 2)
    rows = plan.tests
    while len(rows) < count:
        rows = rows + rows
    return rows[:count]


def test_ranged_values_land_in_range(power_failure):
    rows = _abstract_rows(power_failure)
    concrete = instantiate(power_failure, rows, seed=1)
    ranges = {"small": (1, 10), "medium": (10, 101), "long": (101, 1001)}
    for abstract, row in zip(rows, concrete.rows):
        lo, hi = ranges[abstract["WriteCount"]]
        assert lo <= int(row["WriteCount"]) < hi


def test_singleton_range_is_forced():
    m = Model((Attribute("A", (Value("only", (5, 6)),)),))
    concrete = instantiate(m, [{"A": "only"}] * 4, seed=9)
    assert [row["A"] for row in concrete.rows] == ["5", "5", "5", "5"]


def test_rangeless_values_pass_through(shopping):
    test = {"Availability": "Available", "Payment": "Credit", "Carrier": "Mail",
            "DeliverySchedule": "One Day", "ExportControl": "True"}
    concrete = instantiate(shopping, [test], seed=3)
    assert concrete.rows == [test]


def test_same_seed_reproduces_bit_exactly(power_failure):
    rows = _abstract_rows(power_failure)
    a = instantiate(power_failure, rows, seed=77)
    b = instantiate(power_failure, rows, seed=77)
    assert a.rows == b.rows
    assert a.to_json() == b.to_json()


def test_hundred_small_draws_in_range_and_reproducible():
    m = Model((Attribute("W", (Value("small", (1, 10)),)),))
    rows = [{"W": "small"}] * 100
    first = instantiate(m, rows, seed=123)
    again = instantiate(m, rows, seed=123)
    assert first.rows == again.rows
    assert all(1 <= int(row["W"]) < 10 for row in first.rows)


def test_concrete_plan_records_seed(power_failure):
    concrete = instantiate(power_failure, _abstract_rows(power_failure), seed=11)
    assert concrete.seed == 11
    assert concrete.to_json()["seed"] == 11
    assert concrete.to_json()["schema_version"] == 1


def test_round_trip_back_to_abstract(power_failure):
    rows = _abstract_rows(power_failure, count=12)
    concrete = instantiate(power_failure, rows, seed=5)
    assert recover_abstract(power_failure, concrete) == rows


def test_overlapping_subdomains_report_all_candidates():
    m = Model((Attribute("size", (Value("low", (0, 60)), Value("mid", (40, 100)))),))
    assert abstract_candidates(m, "size", "50") == ["low", "mid"]
    assert abstract_candidates(m, "size", "10") == ["low"]
    assert abstract_candidates(m, "size", "999") == []
    concrete = instantiate(m, [{"size": "low"}], seed=0)
    concrete.rows[0]["size"] = "50"  # force the ambiguous case
    with pytest.raises(CtdError, match="overlapping"):
        recover_abstract(m, concrete)


def test_abstract_candidates_for_plain_labels(shopping):
    assert abstract_candidates(shopping, "Payment", "Credit") == ["Credit"]
    assert abstract_candidates(shopping, "Payment", "Bitcoin") == []


def test_randomize_free_appends_column(power_failure):
    rows = _abstract_rows(power_failure)
    concrete = instantiate(power_failure, rows, seed=2)
    extended = randomize_free(power_failure, concrete,
                              [FreeAttribute("writeSize", 1, 4096)], seed=2)
    assert extended.columns == concrete.columns + ["writeSize"]
    assert all(1 <= int(row["writeSize"]) < 4096 for row in extended.rows)
    # original plan untouched
    assert all("writeSize" not in row for row in concrete.rows)


def test_randomize_free_empty_list_is_identity(power_failure):
    concrete = instantiate(power_failure, _abstract_rows(power_failure), seed=2)
    same = randomize_free(power_failure, concrete, [], seed=9)
    assert same.rows == concrete.rows
    assert same.columns == concrete.columns


def test_randomize_free_seeded_stream_is_frozen():
    m = Model((Attribute("A", (Value("x"),)),))
    base = instantiate(m, [{"A": "x"}] * 1000, seed=0)
    extended = randomize_free(m, base, [FreeAttribute("coin", 0, 2)], seed=42)
    draws = [int(row["coin"]) for row in extended.rows]
    assert draws.count(0) == 486
    assert draws.count(1) == 514
    assert draws[:12] == [0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0]


def test_free_attribute_collision_rejected(power_failure):
    concrete = instantiate(power_failure, _abstract_rows(power_failure), seed=2)
    with pytest.raises(CtdError, match="collides"):
        randomize_free(power_failure, concrete,
                       [FreeAttribute("Cache", 0, 2)], seed=0)


def test_free_attribute_empty_range_rejected():
    with pytest.raises(CtdError, match="empty range"):
        FreeAttribute("w", 5, 5)


def test_instantiate_rejects_unknown_labels(power_failure):
    with pytest.raises(CtdError):
        instantiate(power_failure, [{"FailureType": "nope", "WriteCount": "small",
                                     "Cache": "on"}], seed=0)
