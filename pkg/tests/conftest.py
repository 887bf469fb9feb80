import pytest
from hypothesis import HealthCheck, settings

from hilbert_so22 import make_field

settings.register_profile(
    "exact",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")

# squarefree m covering both residue classes, norm +-1 units and several nu
M_SET = (2, 3, 5, 6, 7, 10, 13, 15, 17, 21, 33)


@pytest.fixture(params=M_SET, ids=lambda m: f"m{m}")
def ctx(request):
    return make_field(request.param)


def pytest_terminal_summary(terminalreporter):
    from tests import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
