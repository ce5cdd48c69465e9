import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from satelim import QQ, FieldSpec, RingSpec

settings.register_profile("default", deadline=None, derandomize=True, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

F32003 = FieldSpec.prime(32003)


@pytest.fixture
def rng():
    return random.Random(20240611)


def terms_strategy(nvars, max_exp=3, max_terms=5, coeff_range=5):
    mono = st.tuples(*[st.integers(0, max_exp)] * nvars)
    coeff = st.integers(-coeff_range, coeff_range)
    return st.dictionaries(mono, coeff, max_size=max_terms)


def poly_strategy(ring, **kw):
    return terms_strategy(ring.nvars, **kw).map(ring.from_dict)


@pytest.fixture
def xyz():
    return RingSpec(QQ, ("x", "y", "z"))


@pytest.fixture
def xyz_p():
    return RingSpec(F32003, ("x", "y", "z"))


# acceptance criteria report, one line per criterion at the end of the run
ACCEPTANCE = {}


def record_acceptance(n, ok, detail):
    line = f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE[n] = line
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])
