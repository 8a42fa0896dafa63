from fractions import Fraction

import pytest
from hypothesis import strategies as st

from tribquat.seq_core import PRESETS, SequenceParams


def brute(a, b, c, r, s, t, count):
    """Plain-list iteration; the independent oracle for every exact path."""
    v = [Fraction(a), Fraction(b), Fraction(c)]
    while len(v) < count:
        v.append(r * v[-1] + s * v[-2] + t * v[-3])
    return v[:count]


def brute_p(p: SequenceParams, count):
    return brute(*p.astuple(), count)


small_int = st.integers(-5, 5)
small_frac = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
int_params = st.builds(SequenceParams, small_int, small_int, small_int, small_int, small_int, small_int)
frac_params = st.builds(SequenceParams, small_frac, small_frac, small_frac, small_frac, small_frac, small_frac)
any_params = st.one_of(int_params, frac_params)


@pytest.fixture(params=list(PRESETS))
def preset_params(request):
    return request.param, PRESETS[request.param]


_ACCEPTANCE = []


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    status = "PASS" if call.excinfo is None else "FAIL"
    _ACCEPTANCE.append((marker.args[0], marker.args[1], status))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, status in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"[{status}] criterion {num:2d}: {title}")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")
