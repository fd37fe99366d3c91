import pytest

from stablemod.quiver import Quiver, an_quiver
from stablemod.rep import inj, proj, quotient, simple, socle

P = 101


@pytest.fixture
def a2():
    return an_quiver(2)


@pytest.fixture
def a3_zigzag():
    """A_3 with orientation '><': arrows 1 -> 2 <- 3."""
    return an_quiver(3, "><")


@pytest.fixture
def semisimple():
    return Quiver.build(3, [])


@pytest.fixture
def a2_modules(a2):
    return {"S1": simple(a2, 1, P), "S2": simple(a2, 2, P), "P1": proj(a2, 1, P), "P2": proj(a2, 2, P)}


@pytest.fixture
def bimorphism(a3_zigzag):
    """I_2 -> I_2/soc over A_3 '><'."""
    i2 = inj(a3_zigzag, 2, P)
    return quotient(i2, socle(i2))[1]


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
