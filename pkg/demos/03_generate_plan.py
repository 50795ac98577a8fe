"""Near-minimal pairwise plans from the greedy heuristic.

Three classic shapes: eight boolean-ish parameters, a 3x3x3 cube, and a
skewed 9x7x5x2 model whose largest attribute pair already forces 63 tests.
Each plan is checked back with the analyzer before printing.
"""

import pathlib

from ctdkit import ModelSpace, coverage_of, generate_plan, load_model, lower_bound

MODELS = pathlib.Path(__file__).resolve().parent.parent / "models"

for name in ("api8x2", "manual3x3x3", "model1"):
    model = load_model(MODELS / f"{name}.json")
    space = ModelSpace(model)
    plan = generate_plan(space, t=2)
    floor = lower_bound(space, 2)
    report = coverage_of(space, plan.tests, 2)
    print(f"{name}: {model.cartesian_count()} combinations "
          f"-> {len(plan)} tests "
          f"(floor {floor}, coverage {report.percent:.0f}% "
          f"of {report.total_feasible} pairs)")

print("\nthe 8-parameter plan itself:")
model = load_model(MODELS / "api8x2.json")
plan = generate_plan(ModelSpace(model), t=2)
names = model.attribute_names
print("  " + " | ".join(names))
for test in plan.tests:
    print("  " + " | ".join(test[n].ljust(len(n)) for n in names))

print("\na budget cuts the plan short but keeps it honest:")
space = ModelSpace(load_model(MODELS / "model1.json"))
for budget in (5, 20, 40, None):
    plan = generate_plan(space, t=2, budget=budget)
    tag = "partial" if plan.partial else "complete"
    print(f"  budget {str(budget):>4}: {len(plan):>3} tests, "
          f"{plan.covered}/{plan.total_feasible} pairs ({tag})")
