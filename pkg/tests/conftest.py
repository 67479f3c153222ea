import itertools
import sys

import pytest

from hyperball import SchlafliSymbol

# every symbol that appears in a density table
TABLE_SYMBOLS = {
    "F1": [SchlafliSymbol(3, 3, u) for u in (7, 8, 9, 20, 50, 100)],
    "F2": [SchlafliSymbol(*s) for s in ((7, 3, 7), (6, 4, 6), (8, 3, 8), (8, 4, 8), (5, 4, 5), (4, 5, 4), (4, 6, 4), (3, 7, 3))],
    "F3": [SchlafliSymbol(u, v, 3) for u, v in itertools.product((4, 5, 50), (7, 8, 9))],
    "F4": [
        SchlafliSymbol(*s)
        for s in ((7, 3, 8), (7, 3, 9), (7, 3, 50), (8, 3, 9), (8, 3, 10), (8, 3, 50), (5, 4, 6), (5, 4, 7),
                  (5, 4, 50), (4, 5, 5), (4, 5, 6), (4, 5, 50), (4, 6, 5), (4, 6, 6), (4, 6, 50))
    ],
}


@pytest.fixture
def table_symbols():
    return TABLE_SYMBOLS


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
