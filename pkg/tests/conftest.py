import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from orthoposets import config  # noqa: E402
from orthoposets.constructions import SubsetFamily, fixture_text, load_fixture  # noqa: E402
from orthoposets.formats import write_orthoposet  # noqa: E402
from orthoposets.poset import bits  # noqa: E402

from oracles import Naive  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(autouse=True, scope="session")
def _verification_on():
    # every operation re-derives its answer along a second route
    config.set_verification(True)
    yield


def points(mask: int) -> frozenset:
    return frozenset(i + 1 for i in bits(mask))


def key(P, i):
    """Oracle-side name of element i: a label, or the member as a frozenset."""
    if isinstance(P, SubsetFamily):
        return points(P.members[i])
    return P.labels[i]


def keys(P, mask: int) -> set:
    return {key(P, i) for i in bits(mask)}


def naive_of(P, fixture: str | None = None) -> Naive:
    if isinstance(P, SubsetFamily):
        return Naive.from_sets(P.ground, [points(m) for m in P.members])
    text = fixture_text(fixture) if fixture else write_orthoposet(P)
    return Naive.from_text(text)


def fixture_pair(name: str):
    return load_fixture(name), Naive.from_text(fixture_text(name))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
