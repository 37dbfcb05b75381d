import random

import pytest
from hypothesis import strategies as st

from qpbraid3.words import ARTIN, BKL, Word

artin_letters = st.sampled_from([1, -1, 2, -2])
bkl_letters = st.sampled_from([1, -1, 2, -2, 3, -3])


def artin_words(max_size=12):
    return st.lists(artin_letters, max_size=max_size).map(lambda xs: Word(tuple(xs), ARTIN))


def bkl_words(max_size=12):
    return st.lists(bkl_letters, max_size=max_size).map(lambda xs: Word(tuple(xs), BKL))


def positive_artin_words(min_size=0, max_size=10):
    return st.lists(st.sampled_from([1, 2]), min_size=min_size, max_size=max_size).map(
        lambda xs: Word(tuple(xs), ARTIN))


@pytest.fixture
def rng():
    return random.Random(20240611)


def random_word(rng, length, alphabet=(1, -1, 2, -2), mode=ARTIN):
    return Word(tuple(rng.choice(alphabet) for _ in range(length)), mode)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for status in ("passed", "failed"):
        for rep in terminalreporter.stats.get(status, []):
            if rep.when == "call" and "test_acceptance.py::test_criterion_" in rep.nodeid:
                name = rep.nodeid.split("::", 1)[1]
                lines.append((name, "PASS" if status == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, status in sorted(lines):
            terminalreporter.write_line(f"{status}  {name}")
