import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from corpus import FIBONACCI_RULES  # noqa: E402
from liecomplexity.sources import WordSource  # noqa: E402


@pytest.fixture(scope="session")
def fib_source():
    return WordSource.sturmian("2;(1)")


@pytest.fixture(scope="session")
def fib_morphic_prefix():
    # independent of the continued-fraction machinery
    return WordSource.morphism(FIBONACCI_RULES, "0", 4096).prefix(4096)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(results):
        terminalreporter.write_line(results[num])
