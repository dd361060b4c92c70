import numpy as np
import pytest
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from selfauth.image_io import RgbImage

# five natural images whose encode metrics sit in the reference table's ranges
NATURAL = ("astronaut", "chelsea", "coffee", "rocket", "immunohistochemistry")

_criteria = []


def even_dims(max_side=32):
    return st.tuples(
        st.integers(1, max_side // 2).map(lambda n: 2 * n),
        st.integers(1, max_side // 2).map(lambda n: 2 * n),
    )


@st.composite
def byte_planes(draw, max_side=32):
    w, h = draw(even_dims(max_side))
    return draw(arrays(np.uint8, (h, w)))


@st.composite
def rgb_images(draw, max_side=16, even=True):
    if even:
        w, h = draw(even_dims(max_side))
    else:
        w, h = draw(st.integers(1, max_side)), draw(st.integers(1, max_side))
    return RgbImage.from_array(draw(arrays(np.uint8, (h, w, 3))))


def random_image(rng, width, height):
    return RgbImage.from_array(rng.integers(0, 256, (height, width, 3), dtype=np.uint8))


@pytest.fixture
def rng():
    return np.random.default_rng(20100525)


@pytest.fixture(scope="session")
def natural():
    pytest.importorskip("skimage")
    from selfauth.corpus import natural_corpus

    return natural_corpus(512, NATURAL)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        number, title = marker.args
        _criteria.append((number, title, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number, title, outcome in sorted(_criteria):
        status = {"passed": "PASS", "failed": "FAIL"}.get(outcome, outcome.upper())
        terminalreporter.write_line(f"{status}  criterion {number}: {title}")
