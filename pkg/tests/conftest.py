import functools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gammasemi.constructors import all_fixtures, fixture
from gammasemi.enumeration import EnumSpec, Enumeration

ROOT = Path(__file__).resolve().parent.parent
FIXTURE_DIR = ROOT / "fixtures"


@functools.lru_cache(maxsize=None)
def sweep(max_m=3, max_g=2):
    """Every Gamma-semigroup with m <= max_m, g <= max_g (raw, not up to isomorphism)."""
    return tuple(M for m in range(1, max_m + 1) for g in range(1, max_g + 1) for M in Enumeration(EnumSpec(m, g), workers=1))


def sweep_and_fixtures():
    return sweep() + tuple(all_fixtures().values())


@pytest.fixture
def fx():
    return fixture


def el(M, name):
    return M.element_names.index(name)


def els(M, *names):
    return frozenset(el(M, n) for n in names)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(mod.RESULTS):
            terminalreporter.write_line(mod.RESULTS[n])
