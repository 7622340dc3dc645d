import pytest

from agcodes.curve import Curve
from agcodes.galois import field_new


def poly_mul_mod(a, b, modulus, p):
    """Schoolbook product of coefficient tuples mod a monic modulus (test oracle)."""
    deg = len(modulus) - 1
    out = [0] * (2 * deg)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    for top in range(2 * deg - 1, deg - 1, -1):
        c = out[top] % p
        out[top] = 0
        for i in range(deg):
            out[top - deg + i] -= c * modulus[i]
    return tuple(v % p for v in out[:deg])


def decode(value, p, deg):
    return tuple((value // p**i) % p for i in range(deg))


def encode(coeffs, p):
    return sum(c * p**i for i, c in enumerate(coeffs))


@pytest.fixture(scope="session")
def f9():
    return field_new(3, 1)


@pytest.fixture(scope="session")
def f25():
    return field_new(5, 1)


@pytest.fixture(scope="session")
def curve3(f9):
    return Curve(f9, 2)


@pytest.fixture(scope="session")
def curve5(f25):
    return Curve(f25, 3)


_ACCEPTANCE: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "acceptance" in report.keywords and (report.when == "call" or report.outcome != "passed"):
        name = report.nodeid.split("::")[-1]
        if report.when == "call" or name not in _ACCEPTANCE:
            _ACCEPTANCE[name] = report.outcome.upper()


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"{_ACCEPTANCE[name]:<7} {name}")
