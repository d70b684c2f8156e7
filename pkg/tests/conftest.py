import itertools

import pytest
from hypothesis import HealthCheck, settings

from chromsym.graph import LabeledGraph

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE_LINES: dict[int, str] = {}


def canonical_form(n, edges):
    """Lexicographically least relabelled edge list; brute force over vertex permutations."""
    best = None
    for perm in itertools.permutations(range(1, n + 1)):
        relab = tuple(sorted(tuple(sorted((perm[u - 1], perm[v - 1]))) for u, v in edges))
        if best is None or relab < best:
            best = relab
    return best


def small_graphs(max_n):
    """One representative per isomorphism class of simple graphs on 1..max_n vertices."""
    out = []
    for n in range(1, max_n + 1):
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        seen = set()
        for mask in range(1 << len(pairs)):
            edges = [pairs[j] for j in range(len(pairs)) if mask >> j & 1]
            key = canonical_form(n, edges)
            if key not in seen:
                seen.add(key)
                out.append(LabeledGraph(n, tuple(edges)))
    return out


@pytest.fixture
def criterion(capsys):
    """Record and print one pass/fail line for an acceptance criterion."""

    def report(number, ok, detail):
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
        ACCEPTANCE_LINES[number] = line
        with capsys.disabled():
            print("\n" + line)
        return ok

    return report


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])
