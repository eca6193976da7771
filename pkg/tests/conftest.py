import numpy as np
import pytest
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

from ginvsum import TolerancePolicy


def complex_gaussian(rng, *shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_rank_matrix(rng, m, n, r):
    """m x n complex matrix of rank exactly r (almost surely)."""
    return complex_gaussian(rng, m, r) @ complex_gaussian(rng, r, n)


def random_matrix_battery(seed, count, max_dim=12, deficient_fraction=0.3):
    """Shapes up to max_dim x max_dim; roughly deficient_fraction of them rank-deficient."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        m, n = (int(x) for x in rng.integers(1, max_dim + 1, 2))
        full = min(m, n)
        r = int(rng.integers(0, full)) if rng.random() < deficient_fraction else full
        out.append(random_rank_matrix(rng, m, n, r))
    return out


def assert_close(actual, expected, atol=1e-12):
    actual = np.asarray(actual)
    expected = np.asarray(expected, dtype=complex)
    assert actual.shape == expected.shape
    assert np.linalg.norm(actual - expected) <= atol, f"\n{actual}\n!=\n{expected}"


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def strict():
    return TolerancePolicy(residual_rel_tol=1e-10)


# small integer-valued complex matrices keep rank decisions exact
_entries = st.builds(complex, st.integers(-3, 3), st.integers(-3, 3))


@st.composite
def complex_matrices(draw, max_dim=5, square=False):
    m = draw(st.integers(1, max_dim))
    n = m if square else draw(st.integers(1, max_dim))
    return draw(hnp.arrays(np.complex128, (m, n), elements=_entries))


@st.composite
def low_rank_matrices(draw, max_dim=6, square=False):
    m = draw(st.integers(1, max_dim))
    n = m if square else draw(st.integers(1, max_dim))
    r = draw(st.integers(0, min(m, n)))
    F = draw(hnp.arrays(np.complex128, (m, r), elements=_entries))
    G = draw(hnp.arrays(np.complex128, (r, n), elements=_entries))
    return F @ G


# -- acceptance summary -----------------------------------------------------------

_criteria = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    props = dict(report.user_properties)
    if "criterion" in props:
        _criteria[props["criterion"]] = (report.passed, props.get("detail", ""))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        passed, detail = _criteria[number]
        line = f"criterion {number:2d}: {'PASS' if passed else 'FAIL'}"
        terminalreporter.write_line(f"{line}  {detail}" if detail else line)
