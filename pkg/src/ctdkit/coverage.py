"""Interaction coverage requirements and coverage measurement.

A requirement is one value tuple over a t-subset of attributes; a test
covers it when it assigns exactly those values.  Requirement order is
deterministic: attribute subsets in lexicographic declaration order, value
tuples in value-index order, then any explicit model directives
(deduplicated).  Feasibility of a requirement against a legal space is
decided symbolically: its equality conjunction intersected with the space
must be non-empty.

Coverage credit is granted only by tests inside the legal space; imported
tests that violate it are listed in the report and ignored.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import CtdError, UnknownAttributeError, UnknownValueError
from .model import Model, ModelSpace


@dataclass(frozen=True)
class Requirement:
    """An (attr, value) tuple over distinct attributes, in declaration order."""
    bindings: tuple[tuple[str, str], ...]

    @property
    def attrs(self) -> tuple[str, ...]:
        return tuple(a for a, _ in self.bindings)

    def covered_by(self, test: dict[str, str]) -> bool:
        return all(test.get(a) == v for a, v in self.bindings)

    def format(self) -> str:
        return ", ".join(f"{a}={v}" for a, v in self.bindings)


class RequirementSet:
    """Ordered requirements with tri-state feasibility (None until filtered)."""

    def __init__(self, requirements=()):
        self._status: dict[Requirement, bool | None] = {}
        for r in requirements:
            self.add(r)

    def add(self, requirement: Requirement) -> None:
        self._status.setdefault(requirement, None)

    def __len__(self) -> int:
        return len(self._status)

    def __iter__(self):
        return iter(self._status)

    def __contains__(self, requirement: Requirement) -> bool:
        return requirement in self._status

    def status(self, requirement: Requirement) -> bool | None:
        return self._status[requirement]

    def mark(self, requirement: Requirement, feasible: bool) -> None:
        if requirement not in self._status:
            raise KeyError(requirement)
        self._status[requirement] = feasible

    def feasible(self) -> list[Requirement]:
        """Requirements marked feasible (or not yet filtered)."""
        return [r for r, s in self._status.items() if s is not False]


def normalize_bindings(model: Model, bindings) -> Requirement:
    """Typecheck bindings and order them by attribute declaration."""
    resolved = []
    seen = set()
    for attr, value in bindings:
        ai = model.attribute_index(attr)
        if ai is None:
            raise UnknownAttributeError(attr)
        if model.attributes[ai].index_of(value) is None:
            raise UnknownValueError(attr, value)
        if ai in seen:
            raise CtdError(f"requirement repeats attribute {attr!r}")
        seen.add(ai)
        resolved.append((ai, attr, value))
    if not resolved:
        raise CtdError("requirement has no bindings")
    resolved.sort(key=lambda x: x[0])
    return Requirement(tuple((attr, value) for _, attr, value in resolved))


def generate_requirements(model: Model, t: int,
                          include_directives: bool = True) -> RequirementSet:
    """All value tuples over every t-subset of attributes, plus directives."""
    k = len(model.attributes)
    if not 1 <= t <= k:
        raise CtdError(f"interaction level t={t} out of range 1..{k}")
    reqs = RequirementSet()
    for subset in itertools.combinations(range(k), t):
        attrs = [model.attributes[i] for i in subset]
        for combo in itertools.product(*(a.labels for a in attrs)):
            reqs.add(Requirement(tuple((a.name, v) for a, v in zip(attrs, combo))))
    if include_directives:
        for directive in model.directives:
            reqs.add(normalize_bindings(model, directive))
    return reqs


def filter_feasible(reqs: RequirementSet, space: ModelSpace) -> RequirementSet:
    """Mark each requirement feasible iff its projection of the legal space
    is non-empty; returns the same set."""
    for r in reqs:
        fn = space.requirement_fn(r.bindings) & space.legal
        reqs.mark(r, not fn.is_false)
    return reqs


def pairs_of_test(model: Model, test: dict[str, str], t: int) -> list[Requirement]:
    """The C(k, t) requirements one full assignment covers."""
    model.check_assignment(test, full=True)
    k = len(model.attributes)
    if not 1 <= t <= k:
        raise CtdError(f"interaction level t={t} out of range 1..{k}")
    out = []
    for subset in itertools.combinations(model.attributes, t):
        out.append(Requirement(tuple((a.name, test[a.name]) for a in subset)))
    return out


@dataclass
class CoverageReport:
    total_feasible: int
    covered: int
    missing: list[Requirement] = field(default_factory=list)
    illegal_tests: list[int] = field(default_factory=list)  # 0-based test indices

    @property
    def percent(self) -> float:
        if self.total_feasible == 0:
            return 100.0
        return 100.0 * self.covered / self.total_feasible

    @property
    def complete(self) -> bool:
        return self.covered == self.total_feasible

    def to_json(self, max_missing: int | None = None) -> dict:
        missing = self.missing if max_missing is None else self.missing[:max_missing]
        return {
            "schema_version": 1,
            "total_feasible": self.total_feasible,
            "covered": self.covered,
            "percent": round(self.percent, 4),
            "missing": [list(r.bindings) for r in missing],
            "missing_truncated": max_missing is not None
                and len(self.missing) > max_missing,
            "illegal_tests": self.illegal_tests,
        }

    def format(self, max_missing: int | None = 20) -> str:
        lines = [
            f"covered {self.covered} of {self.total_feasible} "
            f"feasible requirements ({self.percent:.2f}%)"
        ]
        if self.illegal_tests:
            rows = ", ".join(str(i + 1) for i in self.illegal_tests)
            lines.append(f"illegal tests excluded from credit (rows): {rows}")
        shown = self.missing if max_missing is None else self.missing[:max_missing]
        for r in shown:
            lines.append(f"missing: {r.format()}")
        if max_missing is not None and len(self.missing) > max_missing:
            lines.append(f"... and {len(self.missing) - max_missing} more")
        return "\n".join(lines)


def coverage_of(space: ModelSpace, tests, t: int,
                reqs: RequirementSet | None = None) -> CoverageReport:
    """Measure a test list against the feasible requirements of the space."""
    if reqs is None:
        reqs = filter_feasible(generate_requirements(space.model, t), space)
    feasible = reqs.feasible()
    covered: set[Requirement] = set()
    illegal: list[int] = []
    for i, test in enumerate(tests):
        if not space.contains(test):
            illegal.append(i)
            continue
        for r in feasible:
            if r not in covered and r.covered_by(test):
                covered.add(r)
    missing = [r for r in feasible if r not in covered]
    return CoverageReport(len(feasible), len(covered), missing, illegal)
