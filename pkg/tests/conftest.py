import pytest

from simplicial import from_faces

RP2_FACETS = [
    [1, 2, 3], [2, 3, 4], [3, 4, 5], [1, 5, 4], [5, 2, 1],
    [5, 6, 2], [4, 6, 2], [1, 6, 4], [3, 6, 5], [1, 6, 3],
]

KLEIN_FACETS = [
    [1, 2, 7], [7, 8, 2], [4, 7, 8], [4, 8, 5], [1, 4, 5], [1, 5, 2],
    [2, 8, 3], [8, 3, 9], [5, 8, 9], [5, 9, 6], [2, 5, 6], [2, 6, 3],
    [3, 9, 1], [9, 1, 4], [6, 9, 4], [6, 7, 4], [3, 6, 7], [3, 7, 1],
]

# facets printed for the random VR complex on [10] at eps = 0.4
VR_FACETS = [
    [5, 8], [2, 4, 9], [3, 4, 6], [4, 6, 9], [4, 7, 10], [6, 8, 9],
    [7, 8, 9], [1, 4, 7, 9], [2, 3, 4, 10], [3, 4, 5, 10],
]

CONSTRUCTOR_GENERATORS = [[1, 2, 3, 4], [1, 3, 4], [2, 5], [2, 4, 5]]
CHAIN_GENERATORS = [[1, 2, 3, 4], [2, 3, 5], [1, 5]]


@pytest.fixture
def rp2():
    return from_faces(RP2_FACETS)


@pytest.fixture
def klein():
    return from_faces(KLEIN_FACETS)


@pytest.fixture
def five_vertex():
    return from_faces(CHAIN_GENERATORS)


# -- acceptance reporting ------------------------------------------------

ACCEPTANCE_RESULTS = {}


def pytest_configure(config):
    for n in range(1, 13):
        config.addinivalue_line("markers", f"criterion_{n}: acceptance criterion {n}")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for marker in report.keywords:
        if marker.startswith("criterion_"):
            ACCEPTANCE_RESULTS[report.nodeid] = (marker, report.passed)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    by_criterion = {}
    for marker, passed in ACCEPTANCE_RESULTS.values():
        by_criterion.setdefault(marker, []).append(passed)
    for marker in sorted(by_criterion, key=lambda m: int(m.split("_")[1])):
        ok = all(by_criterion[marker])
        n = marker.split("_")[1]
        terminalreporter.write_line(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}")
