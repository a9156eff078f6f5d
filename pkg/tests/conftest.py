import pytest

from quintic75.lines import char2_lines, gram_matrix, lines75


@pytest.fixture(scope="session")
def lines_qb():
    return lines75()


@pytest.fixture(scope="session")
def gram75(lines_qb):
    return gram_matrix(lines_qb)


@pytest.fixture(scope="session")
def char2():
    return char2_lines()


@pytest.fixture(scope="session")
def lines135(char2):
    return char2["base"] + char2["orbit"] + char2["extra"]


@pytest.fixture(scope="session")
def gram135(lines135):
    return gram_matrix(lines135)


@pytest.fixture(scope="session")
def d2_result():
    from quintic75.quotient import d2_lattices

    return d2_lattices()


_ACCEPTANCE: dict[str, list[bool]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_ac" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split("::")[1].split("[")[0]
        _ACCEPTANCE.setdefault(name, []).append(report.outcome == "passed")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        status = "PASS" if all(_ACCEPTANCE[name]) else "FAIL"
        terminalreporter.write_line(f"{status}  {name[5:]}")
