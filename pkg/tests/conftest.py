from __future__ import annotations

import re
from collections import OrderedDict

CRITERIA = OrderedDict([
    (1, "census orbit counts equal pattern counts"),
    (2, "hom dimensions match closed forms; W kinds vanish on injective chains"),
    (3, "p/q order equals the hom-count order"),
    (4, "local moves generate every orbit closure"),
    (5, "rank matrices and involution order agree with patterns"),
    (6, "Krull-Schmidt recovers patterns and parabolic labels"),
    (7, "normal form shape and B-invariance"),
    (8, "semiinvariance identity and entry recovery"),
    (9, "n=3 one-parameter family is pairwise non-conjugate"),
    (10, "degeneration order sanity"),
])

_outcomes: dict[int, list[str]] = {}
_notes: dict[int, list[str]] = {}
_AC = re.compile(r"test_acceptance\.py::test_ac(\d+)_")


def pytest_runtest_logreport(report):
    m = _AC.search(report.nodeid)
    if not m:
        return
    ac = int(m.group(1))
    if report.when == "call" or report.outcome != "passed":
        _outcomes.setdefault(ac, []).append(report.outcome)
    if report.when == "call":
        _notes.setdefault(ac, []).extend(f"{k}: {v}" for k, v in report.user_properties)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for ac, title in CRITERIA.items():
        results = _outcomes.get(ac)
        if not results:
            status = "NOT RUN"
        elif all(r == "passed" for r in results):
            status = "PASS"
        else:
            status = "FAIL"
        terminalreporter.write_line(f"AC{ac:<2} {status:<7} {title}")
        for note in _notes.get(ac, []):
            terminalreporter.write_line(f"       {note}")
