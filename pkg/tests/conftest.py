import pytest

from rootcode import resources
from rootcode.rules import load_rules

# the 20 verb roots the round-trip criterion runs over
TEST_ROOTS = "কর বল চল পড় দেখ ধর রাখ বস লেখ শেখ শোন বোঝ ওঠ তোল যা খা পা দে নে হ".split()

_ACCEPTANCE = []


def record(line):
    _ACCEPTANCE.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def bn():
    return resources.bundled_rules("bn")


@pytest.fixture(scope="session")
def en():
    return resources.bundled_rules("en")


@pytest.fixture(scope="session")
def lex():
    return resources.bundled_lexicon()


@pytest.fixture
def small_table():
    """Hand-built Bengali fragment used by the worked examples."""
    text = "\n".join([
        "#@roots কর যা",
        "ব\tFUT\t1\tFUT\t-\t-\t-",
        "লাম\tPST\t1\tPST\t-\t-\t-",
        "ি\tPRS\t1\tPRS\t-\t-\t-",
        "∅\tPRS\t2\tPRS\tFAMILIAR\t-\t-",
    ])
    return load_rules(text, "bn")
