import pytest

_ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion(request):
    """Record a named acceptance criterion; the outcome is printed in the terminal summary."""
    box = {}

    def record(name: str, detail: str = "") -> None:
        box["name"], box["detail"] = name, detail

    yield record
    if "name" in box:
        rep = getattr(request.node, "rep_call", None)
        passed = rep is not None and rep.passed
        _ACCEPTANCE.append((box["name"], passed, box["detail"]))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in sorted(_ACCEPTANCE, key=lambda r: int(r[0].split()[0])):
        line = f"{'PASS' if passed else 'FAIL'}  criterion {name}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
