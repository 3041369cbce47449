import pytest

from hocc.fading import (
    Egk,
    EtaMu,
    GeneralizedNakagami,
    KappaMu,
    Lognormal,
    Nakagami,
    OneSidedGaussian,
    Rayleigh,
    Weibull,
)

# one representative per family, shared by the cross-module suites
ZOO = (
    GeneralizedNakagami(2.5, 0.7),
    Nakagami(2.0),
    Rayleigh(),
    Weibull(2.0),
    OneSidedGaussian(),
    Lognormal(6.0),
    Egk(1.5, 1.2, 2.0, 0.8),
    KappaMu(1.0, 2.0),
    EtaMu(0.5, 1.0),
)

ZOO_IDS = [m.spec() for m in ZOO]


@pytest.fixture(params=ZOO, ids=ZOO_IDS)
def model(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    from tests import acceptance_log

    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(acceptance_log.LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
