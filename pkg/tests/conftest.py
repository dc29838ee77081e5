import pytest

from expected import ELEVEN_ASCENT, TWELVE_ASCENT
from intervalia.ascent import enumerate_ascent_sequences, order_from_ascent, parse_ascent_sequence

ACCEPTANCE = {}


@pytest.fixture(scope="session")
def eleven():
    return order_from_ascent(parse_ascent_sequence(ELEVEN_ASCENT))


@pytest.fixture(scope="session")
def twelve():
    return order_from_ascent(parse_ascent_sequence(TWELVE_ASCENT))


def orders_up_to(n_max, n_min=1):
    for n in range(n_min, n_max + 1):
        for seq in enumerate_ascent_sequences(n):
            yield seq, order_from_ascent(seq)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, title, detail = ACCEPTANCE[number]
        terminalreporter.write_line(
            f"{'PASS' if ok else 'FAIL'} criterion {number:>2}: {title} -- {detail}")
