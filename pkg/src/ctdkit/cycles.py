"""Budget-limited planning across test cycles.

Each cycle credits the tests that passed so far, recomputes the residual
requirements, and asks the greedy generator for at most n new tests
covering them.  Iterating until full coverage (or until cycles run out)
yields a monotonically nondecreasing coverage history.  Failed tests earn
no credit; they may be regenerated in a later cycle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .coverage import Requirement, filter_feasible, generate_requirements
from .errors import CtdError
from .generator import grow_tests
from .model import ModelSpace
from .plans import GENERATED, TestPlan


@dataclass
class AugmentResult:
    plan: TestPlan                       # the new tests only; coverage fields
    residual_before: int                 # reflect the union with credited tests
    residual_after: int
    illegal_passed: list[int] = field(default_factory=list)  # 0-based indices


@dataclass
class CycleRecord:
    budget: int
    emitted: int
    covered: int
    total_feasible: int

    @property
    def percent(self) -> float:
        if self.total_feasible == 0:
            return 100.0
        return 100.0 * self.covered / self.total_feasible


@dataclass
class CycleState:
    passed: list[dict[str, str]]
    residual: list[Requirement]
    history: list[CycleRecord]
    total_feasible: int

    @property
    def coverage_percent(self) -> float:
        if self.total_feasible == 0:
            return 100.0
        return 100.0 * (self.total_feasible - len(self.residual)) / self.total_feasible


def _credited(feasible, tests) -> set[Requirement]:
    covered: set[Requirement] = set()
    for test in tests:
        for r in feasible:
            if r not in covered and r.covered_by(test):
                covered.add(r)
    return covered


def augment_plan(space: ModelSpace, t: int, passed, n: int,
                 seed: int = 0, randomize_ties: bool = False) -> AugmentResult:
    """Generate at most n new tests covering requirements the passed tests
    leave uncovered.  Illegal passed tests are reported and earn no credit."""
    if n < 1:
        raise CtdError(f"cycle budget must be >= 1, got {n}")
    reqs = filter_feasible(generate_requirements(space.model, t), space)
    feasible = reqs.feasible()
    legal, illegal = [], []
    for i, test in enumerate(passed):
        space.model.check_assignment(test, full=True)
        if space.contains(test):
            legal.append(test)
        else:
            illegal.append(i)
    covered = _credited(feasible, legal)
    residual_before = len(feasible) - len(covered)
    tests = grow_tests(space, feasible, covered, n, seed, randomize_ties)
    covered |= _credited(feasible, tests)
    residual_after = len(feasible) - len(covered)
    plan = TestPlan(tests, len(covered), len(feasible), t,
                    [GENERATED] * len(tests))
    return AugmentResult(plan, residual_before, residual_after, illegal)


def run_cycles(space: ModelSpace, t: int, n: int,
               verdict_source: Callable[[dict[str, str]], bool],
               max_cycles: int, seed: int = 0) -> CycleState:
    """Iterate augment-and-execute until 100% coverage or max_cycles."""
    if max_cycles < 1:
        raise CtdError(f"max_cycles must be >= 1, got {max_cycles}")
    reqs = filter_feasible(generate_requirements(space.model, t), space)
    feasible = reqs.feasible()
    passed: list[dict[str, str]] = []
    history: list[CycleRecord] = []
    for _ in range(max_cycles):
        result = augment_plan(space, t, passed, n, seed)
        if not result.plan.tests:
            break  # nothing left to target
        for test in result.plan.tests:
            if verdict_source(test):
                passed.append(test)
        covered = len(_credited(feasible, passed))
        history.append(CycleRecord(n, len(result.plan.tests), covered, len(feasible)))
        if covered == len(feasible):
            break
    credited = _credited(feasible, passed)
    residual = [r for r in feasible if r not in credited]
    return CycleState(passed, residual, history, len(feasible))
