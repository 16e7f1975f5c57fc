import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from dkcoalg.exactlinalg import GF, QQ

settings.register_profile("default", deadline=None, max_examples=25,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

FIELDS = [QQ, GF(2), GF(3), GF(5)]
fields = st.sampled_from(FIELDS)
small_fields = st.sampled_from([GF(2), GF(3)])
seeds = st.integers(0, 2**31 - 1)


def rng_for(seed: int) -> random.Random:
    return random.Random(seed)


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        for line in mod.RESULTS[k]:
            terminalreporter.write_line(line)
