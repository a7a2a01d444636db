import json
from itertools import combinations
from pathlib import Path

import pytest

from matroid_faces.matroid import Matroid, matroid_from_document
from matroid_faces.signvectors import CovectorSet

DATA = Path(__file__).parent / "data"


def load_corpus() -> list[tuple[str, Matroid]]:
    entries = json.loads((DATA / "matroid_corpus.json").read_text())
    return [(e["name"], matroid_from_document(e["matroid"])) for e in entries]


def load_covectors(name: str) -> CovectorSet:
    return CovectorSet.parse((DATA / name).read_text())


def brute_chains(L, members=None):
    """All nonempty chains of the poset restricted to ``members``, by subset search."""
    members = list(range(len(L))) if members is None else list(members)
    out = []
    for k in range(1, len(members) + 1):
        found = False
        for combo in combinations(members, k):
            if all(L.leq(a, b) or L.leq(b, a) for a, b in combinations(combo, 2)):
                out.append(combo)
                found = True
        if not found:
            break
    return out


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


@pytest.fixture(scope="session")
def u23_covectors():
    return load_covectors("u23_covectors.txt")


@pytest.fixture(scope="session")
def u24_covectors():
    return load_covectors("u24_covectors.txt")


ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
