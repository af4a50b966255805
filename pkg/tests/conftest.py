import itertools

import pytest

from randsub import RandomSubstitution
from randsub.catalogue import NAMES, get_example


def naive_apply(sub, word):
    """theta(word) by brute-force choice of one image word per letter."""
    choices = [sorted(sub.image(g)) for g in word]
    return {"".join(p) for p in itertools.product(*choices)}


def naive_level(sub, m, letter):
    """theta^m(letter) as theta applied m times to a growing word set."""
    words = {letter}
    for _ in range(m):
        words = set().union(*(naive_apply(sub, w) for w in words))
    return words


def sub_of(rules):
    return RandomSubstitution.from_mapping(rules)


RF = {"a": ["ab", "ba"], "b": ["a"]}
RTM = {"a": ["ab", "ba"], "b": ["ba"]}
RPD = {"a": ["ab", "ba"], "b": ["aa"]}
RF2 = {"a": ["baa"], "b": ["ab", "ba"]}
EQUAL = {"a": ["ab", "ba"], "b": ["ab", "ba"]}
FIB = {"a": ["ab"], "b": ["a"]}


@pytest.fixture(params=NAMES)
def entry(request):
    return get_example(request.param)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        ok, line = RESULTS[number]
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {line}")
