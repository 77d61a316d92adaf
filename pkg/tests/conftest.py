import json
import sys
from pathlib import Path

import pytest

from ternions.module_geometry import enumerate_nonunimodular_free
from ternions.radical_decomposition import decompose
from ternions.reproduce import load_expected
from ternions.ternion_builder import FieldSpec, build_field, ternions

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def t2():
    return ternions(2)


@pytest.fixture(scope="session")
def t3():
    return ternions(3)


@pytest.fixture(scope="session")
def t4():
    return ternions(4)


@pytest.fixture(scope="session")
def gf2():
    return build_field(FieldSpec(2))


@pytest.fixture(scope="session")
def expected():
    return load_expected()


@pytest.fixture(scope="session")
def t2_subs(t2):
    return enumerate_nonunimodular_free(t2, 3)


@pytest.fixture(scope="session")
def t2_classes(t2, t2_subs):
    return decompose(t2_subs, t2.radical)


@pytest.fixture(scope="session")
def order16_path():
    return DATA / "order16_zd12.txt"


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
