import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from frcodes import (  # noqa: E402
    circulant_graph,
    cycle_graph,
    fr_code,
    graph_to_fr,
    load_json,
    petersen_graph,
    validate_fr,
)

FIXTURES = Path(__file__).parent / "fixtures"

# The seven-block (7,3,3) example, labels 1..7.
FANO_BLOCKS = [[1, 2, 4], [1, 3, 7], [1, 5, 6], [2, 3, 5], [2, 6, 7], [3, 4, 6], [4, 5, 7]]


def fixture_path(name: str) -> Path:
    return FIXTURES / name


def ingest(name: str):
    return validate_fr(load_json(FIXTURES / name))


@pytest.fixture
def fano():
    return fr_code(FANO_BLOCKS)


@pytest.fixture
def petersen_code():
    return graph_to_fr(petersen_graph())


@pytest.fixture
def code832():
    return graph_to_fr(circulant_graph(8, [1, 4]))


@pytest.fixture
def remark8():
    return ingest("remark8.json")


@pytest.fixture
def pentagon_code():
    return graph_to_fr(cycle_graph(5))


# ---------------------------------------------------------------------------
# Acceptance summary: one line per criterion after the run
# ---------------------------------------------------------------------------

_CRITERIA: dict[int, tuple[str, str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    props = dict(report.user_properties)
    marker = props.get("criterion")
    if marker:
        number, title = marker
        _CRITERIA[number] = (title, "PASS" if report.passed else "FAIL", props.get("note", ""))


def pytest_runtest_setup(item):
    m = item.get_closest_marker("criterion")
    if m is not None:
        item.user_properties.append(("criterion", tuple(m.args)))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, status, note = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {title}")
        if note:
            terminalreporter.write_line(f"              note: {note}")
