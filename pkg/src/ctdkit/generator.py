"""Greedy construction of near-minimal covering test plans.

One test per iteration: seed with the first uncovered feasible requirement
(in the deterministic requirement order), intersect it with the legal
space, then bind the remaining attributes one at a time in declaration
order.  Each candidate value must keep the symbolic projection non-empty;
among those, the value completing the most currently-uncovered
requirements wins, lowest value index on ties (or a seeded random choice
among the tied best when randomized tie-breaking is enabled).  Every
emitted test is legal by construction and covers at least one new
requirement, so the loop terminates at full coverage unless a budget cuts
it short.
"""

from __future__ import annotations

import random

from .coverage import RequirementSet, filter_feasible, generate_requirements
from .errors import CtdError
from .model import ModelSpace
from .plans import GENERATED, TestPlan


def generate_plan(space: ModelSpace, t: int, budget: int | None = None,
                  seed: int = 0, randomize_ties: bool = False) -> TestPlan:
    """Cover every feasible t-way requirement of the space, or stop at budget."""
    if budget is not None and budget < 1:
        raise CtdError(f"budget must be >= 1, got {budget}")
    reqs = filter_feasible(generate_requirements(space.model, t), space)
    feasible = reqs.feasible()
    tests = grow_tests(space, feasible, set(), budget, seed, randomize_ties)
    covered = sum(1 for r in feasible if any(r.covered_by(x) for x in tests))
    return TestPlan(tests, covered, len(feasible), t, [GENERATED] * len(tests))


def grow_tests(space: ModelSpace, feasible, already_covered: set, budget: int | None,
               seed: int = 0, randomize_ties: bool = False) -> list[dict[str, str]]:
    """Greedy core shared with cycle augmentation: cover `feasible` minus
    `already_covered`, emitting at most `budget` tests."""
    rng = random.Random(seed)
    uncovered = {r: None for r in feasible if r not in already_covered}
    attributes = space.model.attributes
    tests: list[dict[str, str]] = []
    while uncovered and (budget is None or len(tests) < budget):
        seed_req = next(iter(uncovered))
        partial = dict(seed_req.bindings)
        fn = space.requirement_fn(seed_req.bindings) & space.legal
        for attr in attributes:
            if attr.name in partial:
                continue
            best = []  # tied (label, projection) candidates at best_score
            best_score = -1
            for label in attr.labels:
                candidate = fn & space.value_eq(attr.name, label)
                if candidate.is_false:
                    continue
                bound = dict(partial)
                bound[attr.name] = label
                score = sum(
                    1 for r in uncovered
                    if attr.name in r.attrs and _completed_by(r, bound))
                if score > best_score:
                    best, best_score = [(label, candidate)], score
                elif score == best_score:
                    best.append((label, candidate))
            label, fn = best[0] if not randomize_ties else rng.choice(best)
            partial[attr.name] = label
        tests.append(partial)
        for r in [r for r in uncovered if r.covered_by(partial)]:
            del uncovered[r]
    return tests


def _completed_by(r, bound: dict[str, str]) -> bool:
    """Does the extended partial assignment bind and match all of r?"""
    return all(a in bound and bound[a] == v for a, v in r.bindings)


def lower_bound(space: ModelSpace, t: int,
                reqs: RequirementSet | None = None) -> int:
    """Plan-size floor: the largest count of feasible value tuples sharing
    one attribute subset (each needs its own test)."""
    if reqs is None:
        reqs = filter_feasible(generate_requirements(space.model, t,
                                                     include_directives=False), space)
    per_subset: dict[tuple[str, ...], int] = {}
    for r in reqs.feasible():
        key = r.attrs
        per_subset[key] = per_subset.get(key, 0) + 1
    return max(per_subset.values(), default=0)
