"""Requirement generation, feasibility filtering, and coverage measurement."""

import itertools

import pytest

import oracles
from ctdkit import (
    CoverageReport,
    CtdError,
    Model,
    ModelSpace,
    Requirement,
    coverage_of,
    filter_feasible,
    generate_requirements,
    pairs_of_test,
    read_plan_csv,
)
from ctdkit.model import Attribute, Value


def test_shopping_pair_count(shopping):
    assert len(generate_requirements(shopping, 2)) == 101


def test_shopping_triple_count_vs_brute_force(shopping):
    reqs = generate_requirements(shopping, 3)
    oracle = oracles.feasible_t_tuples(shopping, 3)
    assert len(reqs) == len(oracle) == 314
    assert {r.bindings for r in reqs} == oracle


def test_xyz_pair_count(xyz):
    assert len(generate_requirements(xyz, 2)) == 12


def test_requirement_count_closed_form(shopping, api8x2, model1, staircase):
    for model in (shopping, api8x2, model1, staircase):
        sizes = [a.size for a in model.attributes]
        for t in (1, 2, 3):
            expected = sum(
                _product(combo)
                for combo in itertools.combinations(sizes, t))
            assert len(generate_requirements(model, t)) == expected


def _product(xs):
    n = 1
    for x in xs:
        n *= x
    return n


def test_requirement_order_is_deterministic(shopping):
    reqs = list(generate_requirements(shopping, 2))
    assert reqs[0].bindings == (("Availability", "Available"), ("Payment", "Credit"))
    assert reqs[1].bindings == (("Availability", "Available"), ("Payment", "Paypal"))
    assert reqs[:2] == list(generate_requirements(shopping, 2))[:2]


def test_t_out_of_range(shopping):
    with pytest.raises(CtdError):
        generate_requirements(shopping, 0)
    with pytest.raises(CtdError):
        generate_requirements(shopping, 6)


def test_directives_are_added_and_deduplicated(shopping):
    triple = (("Payment", "Credit"), ("DeliverySchedule", "One Day"),
              ("Carrier", "Fedex"))
    duplicate_pair = (("Availability", "Available"), ("Payment", "Credit"))
    m = Model(shopping.attributes, shopping.constraints,
              (triple, duplicate_pair, triple))
    reqs = list(generate_requirements(m, 2))
    assert len(reqs) == 102  # 101 pairs + the triple; the pair was already there
    assert reqs[-1].bindings == (("Payment", "Credit"), ("Carrier", "Fedex"),
                                 ("DeliverySchedule", "One Day"))


def test_directive_bindings_are_normalized_to_declaration_order(shopping):
    m = Model(shopping.attributes, (),
              ((("DeliverySchedule", "One Day"), ("Carrier", "UPS"),
                ("Payment", "Credit")),))
    reqs = list(generate_requirements(m, 2))
    assert reqs[-1].bindings == (("Payment", "Credit"), ("Carrier", "UPS"),
                                 ("DeliverySchedule", "One Day"))
    # a directive that merely repeats a base pair is absorbed
    m2 = Model(shopping.attributes, (),
               ((("DeliverySchedule", "One Day"), ("Payment", "Credit")),))
    assert len(generate_requirements(m2, 2)) == 101


def test_filter_feasible_unconstrained_is_all_feasible(shopping, shopping_space):
    reqs = filter_feasible(generate_requirements(shopping, 2), shopping_space)
    assert len(reqs.feasible()) == 101
    assert all(reqs.status(r) is True for r in reqs)


def test_filter_feasible_after_dropping_a_value(xyz_drop_a):
    space = ModelSpace(xyz_drop_a)
    reqs = filter_feasible(generate_requirements(xyz_drop_a, 2), space)
    assert len(reqs.feasible()) == 8
    infeasible = {r.bindings for r in reqs if reqs.status(r) is False}
    assert infeasible == {
        (("X", "a"), ("Y", "c")), (("X", "a"), ("Y", "d")),
        (("X", "a"), ("Z", "e")), (("X", "a"), ("Z", "f")),
    }


def test_filter_feasible_matches_brute_force_on_code_review(code_review,
                                                            code_review_space):
    def pred(t):
        length = int(t["LenCBchain"])
        return all(not (t[f"InterestingCB{i}"] == "true" and i > length)
                   for i in range(1, 6))
    oracle = oracles.feasible_t_tuples(code_review, 2, pred)
    reqs = filter_feasible(generate_requirements(code_review, 2), code_review_space)
    assert {r.bindings for r in reqs.feasible()} == oracle
    zero_and_interesting = Requirement(
        (("LenCBchain", "0"), ("InterestingCB1", "true")))
    assert reqs.status(zero_and_interesting) is False


def test_filter_feasible_is_monotone_under_constraints(xyz, xyz_drop_a):
    free = filter_feasible(generate_requirements(xyz, 2), ModelSpace(xyz))
    constrained = filter_feasible(generate_requirements(xyz_drop_a, 2),
                                  ModelSpace(xyz_drop_a))
    feasible_constrained = {r.bindings for r in constrained.feasible()}
    feasible_free = {r.bindings for r in free.feasible()}
    assert feasible_constrained <= feasible_free


def test_pairs_of_single_shopping_test(shopping):
    test = {
        "Availability": "Available", "Payment": "Paypal", "Carrier": "Fedex",
        "DeliverySchedule": "2-5 working days", "ExportControl": "True",
    }
    pairs = {p.bindings for p in pairs_of_test(shopping, test, 2)}
    assert pairs == {
        (("Availability", "Available"), ("Payment", "Paypal")),
        (("Availability", "Available"), ("Carrier", "Fedex")),
        (("Availability", "Available"), ("DeliverySchedule", "2-5 working days")),
        (("Availability", "Available"), ("ExportControl", "True")),
        (("Payment", "Paypal"), ("Carrier", "Fedex")),
        (("Payment", "Paypal"), ("DeliverySchedule", "2-5 working days")),
        (("Payment", "Paypal"), ("ExportControl", "True")),
        (("Carrier", "Fedex"), ("DeliverySchedule", "2-5 working days")),
        (("Carrier", "Fedex"), ("ExportControl", "True")),
        (("DeliverySchedule", "2-5 working days"), ("ExportControl", "True")),
    }
    assert len(pairs) == 10  # C(5, 2)


def test_pairs_of_test_at_full_width_is_the_test(xyz):
    test = {"X": "a", "Y": "d", "Z": "e"}
    [req] = pairs_of_test(xyz, test, 3)
    assert req.bindings == (("X", "a"), ("Y", "d"), ("Z", "e"))


def test_pairs_of_test_rejects_partial_assignment(xyz):
    with pytest.raises(CtdError):
        pairs_of_test(xyz, {"X": "a"}, 2)


def test_seven_row_plan_covers_all_112_pairs(api8x2, api8x2_space, models_dir):
    _, rows = read_plan_csv(models_dir / "api8x2_plan7.csv")
    report = coverage_of(api8x2_space, rows, 2)
    oracle = oracles.feasible_t_tuples(api8x2, 2)
    assert report.total_feasible == len(oracle) == 112
    assert report.covered == 112
    assert report.missing == []
    assert report.percent == 100.0


def test_manual_3x3x3_plan_covers_all_27_pairs(manual3x3x3, models_dir):
    space = ModelSpace(manual3x3x3)
    _, rows = read_plan_csv(models_dir / "manual3x3x3_plan9.csv")
    report = coverage_of(space, rows, 2)
    assert (report.covered, report.total_feasible) == (27, 27)


def test_thirteen_row_plan_covers_the_code_review_model(code_review_space,
                                                        models_dir):
    _, rows = read_plan_csv(models_dir / "code_review_plan13.csv")
    report = coverage_of(code_review_space, rows, 2)
    assert report.illegal_tests == []
    assert (report.covered, report.total_feasible) == (85, 85)


def test_partial_plan_reports_missing(api8x2_space, models_dir):
    _, rows = read_plan_csv(models_dir / "api8x2_plan7.csv")
    report = coverage_of(api8x2_space, rows[:3], 2)
    assert report.covered < report.total_feasible
    assert report.missing
    assert report.covered + len(report.missing) == report.total_feasible
    # oracle cross-check on the covered count
    names = [a.name for a in api8x2_space.model.attributes]
    assert report.covered == len(oracles.covered_t_tuples(rows[:3], names, 2))


def test_empty_plan_is_zero_percent(api8x2_space):
    report = coverage_of(api8x2_space, [], 2)
    assert report.covered == 0
    assert report.percent == 0.0


def test_zero_over_zero_reports_complete():
    report = CoverageReport(total_feasible=0, covered=0)
    assert report.percent == 100.0
    assert report.complete


def test_illegal_tests_earn_no_credit(code_review_space):
    illegal = {"LenCBchain": "0", "InterestingCB1": "true",
               "InterestingCB2": "false", "InterestingCB3": "false",
               "InterestingCB4": "false", "InterestingCB5": "false"}
    report = coverage_of(code_review_space, [illegal], 2)
    assert report.illegal_tests == [0]
    assert report.covered == 0


def test_coverage_is_monotone_in_the_test_list(api8x2_space, models_dir):
    _, rows = read_plan_csv(models_dir / "api8x2_plan7.csv")
    covered = [coverage_of(api8x2_space, rows[:k], 2).covered
               for k in range(len(rows) + 1)]
    assert covered == sorted(covered)


def test_pairs_of_test_are_reported_covered(xyz):
    space = ModelSpace(xyz)
    test = {"X": "b", "Y": "c", "Z": "f"}
    reqs = pairs_of_test(xyz, test, 2)
    report = coverage_of(space, [test], 2)
    missing = set(report.missing)
    assert all(r not in missing for r in reqs)
    assert report.covered == len(reqs)


def test_report_formats(api8x2_space, models_dir):
    _, rows = read_plan_csv(models_dir / "api8x2_plan7.csv")
    report = coverage_of(api8x2_space, rows[:2], 2)
    text = report.format(max_missing=3)
    assert "missing:" in text
    assert "more" in text
    document = report.to_json(max_missing=3)
    assert document["schema_version"] == 1
    assert len(document["missing"]) == 3
    assert document["missing_truncated"] is True
