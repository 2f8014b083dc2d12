import sys
from itertools import combinations_with_replacement
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from toric2fano.constructions import (BundleSpec, del_pezzo_database, hirzebruch,  # noqa: E402
                                      kleinschmidt_bundle, product, projective_space)


def kleinschmidt_corpus():
    """20 Fano and non-Fano Picard-rank-2 bundles with d <= 5 and sum of twists <= 4."""
    specs = []
    for d in range(2, 6):
        for m in range(2, d + 1):
            n = d + 2 - m
            for tw in combinations_with_replacement(range(4, -1, -1), m - 1):
                if sum(tw) <= 4:
                    specs.append(BundleSpec(m, n, tw))
    # spread the picks over dimensions and twist sizes, deterministically
    specs.sort(key=lambda s: (s.dim, s.m, s.twists))
    step = len(specs) / 20
    return [specs[int(k * step)] for k in range(20)]


def build_corpus():
    p1 = projective_space(1)
    fans = [projective_space(d) for d in range(1, 5)]
    fans += [product(p1, projective_space(3)), product(projective_space(2), projective_space(2))]
    fans += del_pezzo_database()
    fans += [hirzebruch(a) for a in range(4)]
    fans += [kleinschmidt_bundle(s) for s in kleinschmidt_corpus()]
    return fans


CORPUS = build_corpus()


@pytest.fixture(scope="session")
def corpus():
    return CORPUS


@pytest.fixture
def p2():
    return projective_space(2)


# -- acceptance summary: one PASS/FAIL line per criterion ---------------------

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number n")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    n = marker.args[0]
    failed = report.failed or (report.when == "call" and report.skipped)
    if report.when == "call" or failed:
        _CRITERIA[n] = _CRITERIA.get(n, True) and not failed


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if _CRITERIA[n] else 'FAIL'}")
