import warnings

import pytest

from fpgroups import constructions as C
from fpgroups.presentations import Presentation
from fpgroups.words import parse_word


@pytest.fixture(scope="session")
def W():
    """<a, b | mu(s1), mu(s2), mu(k), mu(t)>."""
    return Presentation(("a", "b"), tuple(C.encoding_words()))


@pytest.fixture(scope="session")
def R():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return C.presentation_R(C.STANDIN_P, 6, C.STANDIN_RULE3)


@pytest.fixture(scope="session")
def commutators():
    return Presentation(("a", "b", "c"), (parse_word("a c a^-1 c^-1"), parse_word("b c b^-1 c^-1")))


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for _, _, line in sorted(RESULTS, key=lambda r: int(r[0])):
            terminalreporter.write_line(line)
