import random
from fractions import Fraction

import pytest

from qgrass.coeff import LaurentPoly
from qgrass.freealg import Element


def random_poly(rng: random.Random, max_deg: int = 3) -> LaurentPoly:
    terms = {}
    for _ in range(rng.randint(1, 3)):
        terms[rng.randint(-max_deg, max_deg)] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return LaurentPoly(terms)


def random_element(rng: random.Random, names, max_len: int = 5, max_deg: int = 3, n_terms: int = 3) -> Element:
    e = Element.zero()
    for _ in range(rng.randint(1, n_terms)):
        w = tuple(rng.choice(names) for _ in range(rng.randint(0, max_len)))
        e = e + random_poly(rng, max_deg) * Element.word(*w)
    return e


@pytest.fixture
def rng():
    return random.Random(20261016)


# one line per acceptance criterion, echoed at the end of the run
ACCEPTANCE_LINES: dict = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[key])
