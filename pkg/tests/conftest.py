import random

import pytest

from multisat.graph import Host, Subgraph


def random_kt_free(host, t, rng, p):
    """Random K_t-free subgraph: visit host edges in random order, keep each
    with probability ``p`` unless it would close a K_t."""
    from multisat.cliques import completes_kt

    g = Subgraph(host)
    order = list(host.host_edges())
    rng.shuffle(order)
    for u, v in order:
        if rng.random() < p and completes_kt(g, (u, v), t) is None:
            g.add_edge(u, v)
    return g


@pytest.fixture
def rng():
    return random.Random(20240607)


@pytest.fixture
def h32():
    return Host(3, 2)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::" in nodeid and rep.when == "call":
                lines.append((nodeid.split("::")[-1], outcome.upper(), rep.duration))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, outcome, dur in sorted(lines):
            verdict = "PASS" if outcome == "PASSED" else "FAIL"
            terminalreporter.write_line(f"{verdict}  {name}  ({dur:.1f}s)")
