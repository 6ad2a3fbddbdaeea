import pytest

from qlandauer.oscillator import OscillatorParams

# omega = 1.2, M0 = 1.1, M1 = 1.11, eta = 40 omega, omega_D = 25 eta, hbar = k = 1
STRONG = OscillatorParams(M=1.1, omega=1.2, eta=48.0, omega_D=1200.0)
STRONG_M1 = 1.11
MODERATE = OscillatorParams(M=1.0, omega=1.0, eta=1.0, omega_D=10.0)


@pytest.fixture
def strong():
    return STRONG


@pytest.fixture
def moderate():
    return MODERATE


# one verdict line per acceptance criterion, printed after the run
ACCEPTANCE = {}


def record(criterion, ok, detail):
    line = f"criterion {criterion}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE[criterion] = line
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[key])
