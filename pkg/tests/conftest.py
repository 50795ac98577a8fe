import pathlib

import pytest

from ctdkit import ModelSpace, load_model

MODELS = pathlib.Path(__file__).resolve().parent.parent / "models"


@pytest.fixture
def acceptance_report(request):
    """Record one pass/fail line per acceptance criterion and enforce it."""
    def _report(name, failures):
        verdict = "PASS" if not failures else "FAIL"
        lines = getattr(request.config, "_acceptance_lines", None)
        if lines is None:
            lines = []
            request.config._acceptance_lines = lines
        lines.append(f"{name}: {verdict}")
        assert not failures, f"{name}: {failures}"
    return _report


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def models_dir():
    return MODELS


def _model(name):
    return load_model(MODELS / f"{name}.json")


@pytest.fixture(scope="session")
def shopping():
    return _model("shopping")


@pytest.fixture(scope="session")
def api8x2():
    return _model("api8x2")


@pytest.fixture(scope="session")
def staircase():
    return _model("staircase")


@pytest.fixture(scope="session")
def model1():
    return _model("model1")


@pytest.fixture(scope="session")
def xyz():
    return _model("xyz")


@pytest.fixture(scope="session")
def xyz_drop_a():
    return _model("xyz_drop_a")


@pytest.fixture(scope="session")
def at_least_one():
    return _model("at_least_one")


@pytest.fixture(scope="session")
def code_review():
    return _model("code_review")


@pytest.fixture(scope="session")
def code_review_dispatch():
    return _model("code_review_dispatch")


@pytest.fixture(scope="session")
def manual3x3x3():
    return _model("manual3x3x3")


@pytest.fixture(scope="session")
def power_failure():
    return _model("power_failure")


@pytest.fixture(scope="session")
def shopping_space(shopping):
    return ModelSpace(shopping)


@pytest.fixture(scope="session")
def api8x2_space(api8x2):
    return ModelSpace(api8x2)


@pytest.fixture(scope="session")
def code_review_space(code_review):
    return ModelSpace(code_review)


@pytest.fixture(scope="session")
def at_least_one_space(at_least_one):
    return ModelSpace(at_least_one)
