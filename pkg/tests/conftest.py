import numpy as np
import pytest
from hypothesis import strategies as st

from necvc.graph_core import Graph, gen_random_gnp

CORPUS_SEED = 20240917
PROBS = (0.2, 0.5, 0.8)


def oracle_corpus(count=500, seed=CORPUS_SEED):
    """Seeded G(n, p) graphs with n in [4, 16] and p in {0.2, 0.5, 0.8}."""
    rng = np.random.default_rng(seed)
    out = []
    for i in range(count):
        n = int(rng.integers(4, 17))
        p = PROBS[i % 3]
        out.append(gen_random_gnp(n, p, int(rng.integers(0, 2**63))))
    return out


@pytest.fixture(scope="session")
def corpus():
    return oracle_corpus()


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(n, chosen)


# --------------------------------------------------------------------------
# one pass/fail line per acceptance criterion in the terminal summary

_acceptance: dict[str, list[str]] = {}


def pytest_runtest_logreport(report):
    label = dict(report.user_properties).get("acceptance")
    if label is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        outcome = report.outcome.upper()
        _acceptance.setdefault(label, []).append(outcome)


@pytest.fixture(autouse=True)
def _tag_acceptance(request):
    marker = request.node.get_closest_marker("acceptance")
    if marker is not None:
        request.node.user_properties.append(("acceptance", marker.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_acceptance):
        outcomes = _acceptance[label]
        if "FAILED" in outcomes:
            verdict = "FAIL"
        elif all(o == "SKIPPED" for o in outcomes):
            verdict = "SKIP"
        else:
            verdict = "PASS"
        terminalreporter.write_line(f"[{verdict}] {label}")
