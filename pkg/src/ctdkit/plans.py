"""Test plans and their file formats.

Plan CSV: first row is the header (attribute names in declaration order),
one row per test; the csv module double-quotes values containing commas.
Plan JSON carries the same rows plus coverage metrics and a
schema_version field.

Cycle results CSV: header ``test,verdict``; ``test`` is either a 1-based
row index into the plan CSV or the row's content hash (see `row_hash`),
``verdict`` is PASS or FAIL (case-insensitive).
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
from dataclasses import dataclass, field

from .errors import PlanFormatError
from .model import Model

GENERATED = "generated"
IMPORTED = "imported"


@dataclass
class TestPlan:
    """An ordered list of full assignments with coverage accounting."""
    __test__ = False  # keep pytest from collecting this as a test class

    tests: list[dict[str, str]]
    covered: int
    total_feasible: int
    t: int
    provenance: list[str] = field(default_factory=list)

    def __post_init__(self):
        if not self.provenance:
            self.provenance = [GENERATED] * len(self.tests)

    def __len__(self) -> int:
        return len(self.tests)

    @property
    def percent(self) -> float:
        if self.total_feasible == 0:
            return 100.0
        return 100.0 * self.covered / self.total_feasible

    @property
    def partial(self) -> bool:
        return self.covered < self.total_feasible


def row_hash(test: dict[str, str], columns) -> str:
    """Content hash of one row: sha1 over values in column order."""
    joined = "\x1f".join(test[c] for c in columns)
    return hashlib.sha1(joined.encode("utf-8")).hexdigest()


# ----------------------------------------------------------------------
# plan CSV / JSON

def write_plan_csv(tests, columns, fh) -> None:
    writer = csv.writer(fh)
    writer.writerow(columns)
    for test in tests:
        writer.writerow([test[c] for c in columns])


def plan_csv_text(tests, columns) -> str:
    buf = io.StringIO()
    write_plan_csv(tests, columns, buf)
    return buf.getvalue()


def read_plan_csv(path) -> tuple[list[str], list[dict[str, str]]]:
    """Read (columns, rows); labels are not validated against any model."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            columns = next(reader)
        except StopIteration:
            raise PlanFormatError(f"{path}: empty plan file") from None
        rows = []
        for line_no, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(columns):
                raise PlanFormatError(
                    f"{path}: line {line_no} has {len(row)} fields, "
                    f"header has {len(columns)}")
            rows.append(dict(zip(columns, (v.strip() for v in row))))
    return columns, rows


def check_plan_columns(columns, model: Model) -> None:
    expected = list(model.attribute_names)
    missing = [c for c in expected if c not in columns]
    extra = [c for c in columns if c not in expected]
    if missing or extra:
        raise PlanFormatError(
            f"plan columns {columns} do not match model attributes {expected}")


def plan_to_json(plan: TestPlan, columns, extra: dict | None = None) -> dict:
    document = {
        "schema_version": 1,
        "columns": list(columns),
        "tests": [[test[c] for c in columns] for test in plan.tests],
        "provenance": list(plan.provenance),
        "t": plan.t,
        "covered": plan.covered,
        "total_feasible": plan.total_feasible,
        "percent": round(plan.percent, 4),
        "partial": plan.partial,
    }
    if extra:
        document.update(extra)
    return document


def plan_json_text(plan: TestPlan, columns, extra: dict | None = None) -> str:
    return json.dumps(plan_to_json(plan, columns, extra), indent=2) + "\n"


# ----------------------------------------------------------------------
# cycle results CSV

def read_results_csv(path) -> list[tuple[str, bool]]:
    """Read (test reference, passed) pairs from a results file."""
    out = []
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise PlanFormatError(f"{path}: empty results file") from None
        if [h.strip().lower() for h in header] != ["test", "verdict"]:
            raise PlanFormatError(
                f"{path}: results header must be 'test,verdict', got {header}")
        for line_no, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 2:
                raise PlanFormatError(f"{path}: line {line_no}: expected 2 fields")
            ref, verdict = row[0].strip(), row[1].strip().upper()
            if verdict not in ("PASS", "FAIL"):
                raise PlanFormatError(
                    f"{path}: line {line_no}: verdict must be PASS or FAIL, "
                    f"got {row[1]!r}")
            out.append((ref, verdict == "PASS"))
    return out


def resolve_results(results, tests, columns) -> list[bool | None]:
    """Per-test verdicts (None = no verdict); refs are 1-based indices or hashes."""
    hashes = {row_hash(test, columns): i for i, test in enumerate(tests)}
    verdicts: list[bool | None] = [None] * len(tests)
    for ref, passed in results:
        if ref.isdigit():
            index = int(ref) - 1
            if not 0 <= index < len(tests):
                raise PlanFormatError(
                    f"results reference row {ref}, plan has {len(tests)} rows")
        else:
            index = hashes.get(ref)
            if index is None:
                raise PlanFormatError(f"results reference unknown row hash {ref!r}")
        verdicts[index] = passed
    return verdicts
