from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from hacs6.catalog import build_model, params_from_dict
from hacs6.quaternion import GQuat
from hacs6.scalar import Scalar

settings.register_profile("hacs6", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("hacs6")

small_fracs = st.fractions(min_value=-4, max_value=4, max_denominator=6)
nonzero_fracs = small_fracs.filter(lambda x: x != 0)
scalars = st.builds(Scalar, small_fracs, small_fracs)


def quats(eps: int = -1, elements=small_fracs):
    return st.builds(lambda w, x, y, z: GQuat(w, x, y, z, eps=eps), elements, elements, elements, elements)


def imag_quats(eps: int = -1, elements=small_fracs):
    return st.builds(lambda x, y, z: GQuat(0, x, y, z, eps=eps), elements, elements, elements)


# Unit imaginary quaternions with rational coordinates (Pythagorean quadruples).
UNIT_Q = ["i", "-i", "j", "k", "3/5i+4/5k", "3/5j+4/5k", "1/3i+2/3j+2/3k", "2/3i-1/3j+2/3k",
          "2/7i+3/7j+6/7k", "-6/7i+2/7j+3/7k"]


def model(spec: dict):
    return build_model(params_from_dict(spec))


@pytest.fixture(scope="session")
def kahler_model():
    return model({"case": "A1.1", "alpha": "1", "r": "0", "eps": "1", "q": "i", "b": "i"})


@pytest.fixture(scope="session")
def g2_compact():
    return model({"case": "G2c"})


@pytest.fixture(scope="session")
def sample_models():
    """One exact model per family of isotropy modules, all carrying a metric."""
    specs = [
        {"case": "A1.1", "alpha": "1", "r": "1", "eps": "1", "q": "3/5i+4/5k", "b": "3/5i+4/5k"},
        {"case": "A1.2", "q": "j", "p": "k"},
        {"case": "A1.4", "eps": "-1", "q": "1/3i+2/3j+2/3k"},
        {"case": "A2.1", "r": "1", "t": "2"},
        {"case": "A3.1", "alpha": "1", "r": "0", "eps": "1", "q": "i", "p": "i"},
        {"case": "A4.2", "r": "1/2", "t": "1"},
    ]
    return [model(s) for s in specs]


ONE = Fraction(1)


# criterion number -> "PASS ..." / "FAIL ..." line, filled by test_acceptance.py
VERDICTS: dict[int, str] = {}


def record_verdict(n: int, title: str, ok: bool, detail: str = "") -> str:
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {title}" + (f" ({detail})" if detail else "")
    VERDICTS[n] = line
    print(line)
    return line


def pytest_terminal_summary(terminalreporter):
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(VERDICTS):
            terminalreporter.write_line(VERDICTS[n])
