import sys

import pytest

from oracles import BACKENDS, spec_for


@pytest.fixture(params=BACKENDS)
def backend_spec(request):
    return spec_for(request.param)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
