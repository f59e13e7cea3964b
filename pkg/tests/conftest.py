import warnings

import pytest

from tdalbp.datasets import example2

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def ex2():
    return example2()


@pytest.fixture(scope="session")
def ex2_salbp():
    return example2(divisions=False)


@pytest.fixture
def acceptance():
    """Record one acceptance criterion result for the end-of-run summary."""

    def record(number: int, ok: bool, detail: str):
        ACCEPTANCE[number] = (ok, detail)
        return ok

    return record


def pytest_configure(config):
    warnings.filterwarnings("ignore", message=".*cannot be split.*")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
