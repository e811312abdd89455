import pathlib

import pytest

DATA_DIR = pathlib.Path(__file__).parent / "data"


@pytest.fixture
def data_dir() -> pathlib.Path:
    return DATA_DIR


@pytest.fixture
def pyramid_path(tmp_path) -> str:
    from accesslint.fixtures import fixture_text

    path = tmp_path / "pyramid.json"
    path.write_text(fixture_text("pyramid"), encoding="utf-8")
    return str(path)


@pytest.fixture
def works_diary_path(tmp_path) -> str:
    from accesslint.fixtures import fixture_text

    path = tmp_path / "works-diary.json"
    path.write_text(fixture_text("works-diary"), encoding="utf-8")
    return str(path)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion at the end of a run."""
    results = {}
    for status in ("passed", "failed"):
        for report in terminalreporter.stats.get(status, []):
            if getattr(report, "when", None) != "call":
                continue
            if "test_acceptance" not in report.nodeid:
                continue
            name = report.nodeid.split("::")[-1]
            results[name] = status
    if not results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name in sorted(results):
        flag = "PASS" if results[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{flag}  {name}")
