"""Turning abstract plans into concrete executable inputs.

Values carrying an integer range [lo, hi) stand for subdomains; a concrete
plan replaces each by an integer drawn uniformly from the range.  Draws
come from one seeded stream, row-major (rows in order, attributes in
declaration order), so the same seed always reproduces the same plan.
Rangeless values pass through unchanged.

Attributes deliberately left out of the model can still be given concrete
random values per test via `randomize_free`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import CtdError
from .model import Model


@dataclass(frozen=True)
class FreeAttribute:
    """A randomized column that is not part of the model."""
    name: str
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo >= self.hi:
            raise CtdError(f"free attribute {self.name!r}: empty range "
                           f"[{self.lo}, {self.hi})")


@dataclass
class ConcretePlan:
    columns: list[str]
    rows: list[dict[str, str]]
    seed: int

    def to_json(self) -> dict:
        return {
            "schema_version": 1,
            "columns": self.columns,
            "tests": [[row[c] for c in self.columns] for row in self.rows],
            "seed": self.seed,
        }


def instantiate(model: Model, tests, seed: int) -> ConcretePlan:
    """Replace every subdomain value by a seeded uniform draw from its range."""
    rng = random.Random(seed)
    rows = []
    for test in tests:
        model.check_assignment(test, full=True)
        row = {}
        for attr in model.attributes:
            value = attr.values[attr.index_of(test[attr.name])]
            if value.range is None:
                row[attr.name] = value.label
            else:
                row[attr.name] = str(rng.randrange(*value.range))
        rows.append(row)
    return ConcretePlan([a.name for a in model.attributes], rows, seed)


def randomize_free(model: Model, plan: ConcretePlan, free, seed: int) -> ConcretePlan:
    """Append seeded random columns for attributes kept out of the model."""
    for fa in free:
        if model.attribute_index(fa.name) is not None:
            raise CtdError(
                f"free attribute {fa.name!r} collides with a model attribute")
    if not free:
        return ConcretePlan(list(plan.columns), [dict(r) for r in plan.rows],
                            plan.seed)
    rng = random.Random(seed)
    rows = []
    for row in plan.rows:
        extended = dict(row)
        for fa in free:
            extended[fa.name] = str(rng.randrange(fa.lo, fa.hi))
        rows.append(extended)
    return ConcretePlan(list(plan.columns) + [fa.name for fa in free], rows,
                        plan.seed)


def abstract_candidates(model: Model, attr_name: str, concrete: str) -> list[str]:
    """Value labels a concrete cell can stand for.

    An integer maps to every subdomain whose range contains it (overlapping
    subdomains report all matches); any other cell maps to the label itself
    when it belongs to the domain.
    """
    attr = model.attribute(attr_name)
    try:
        number = int(concrete)
    except ValueError:
        number = None
    matches = []
    for value in attr.values:
        if value.range is not None:
            if number is not None and value.range[0] <= number < value.range[1]:
                matches.append(value.label)
        elif value.label == concrete:
            matches.append(value.label)
    return matches


def recover_abstract(model: Model, plan: ConcretePlan) -> list[dict[str, str]]:
    """Map a concrete plan back to abstract value labels.

    Raises when a cell matches no subdomain or (because subdomains overlap)
    more than one.
    """
    out = []
    for i, row in enumerate(plan.rows):
        abstract = {}
        for attr in model.attributes:
            candidates = abstract_candidates(model, attr.name, row[attr.name])
            if len(candidates) != 1:
                detail = "no subdomain" if not candidates else \
                    f"overlapping subdomains {candidates}"
                raise CtdError(
                    f"row {i + 1}, attribute {attr.name!r}: value "
                    f"{row[attr.name]!r} maps to {detail}")
            abstract[attr.name] = candidates[0]
        out.append(abstract)
    return out
