import pytest

_CRITERIA = {}


class CriterionLog:
    def __init__(self, number: int):
        self.number = number
        self.done = False

    def __call__(self, ok: bool, detail: str):
        _CRITERIA[self.number] = (bool(ok), detail)
        self.done = True
        return ok


@pytest.fixture
def criterion(request):
    """Record one pass/fail line for the acceptance criterion named by the test's ``criterion`` marker."""
    number = request.node.get_closest_marker("criterion").args[0]
    log = CriterionLog(number)
    yield log
    if not log.done:
        _CRITERIA[number] = (False, "raised before reporting")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        ok, detail = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} ({detail})")
