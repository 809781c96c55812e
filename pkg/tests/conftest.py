import pytest

from beliefcat.frames import make_frame


@pytest.fixture
def ab():
    return make_frame(["a", "b"])


@pytest.fixture
def abc():
    return make_frame(["a", "b", "c"])
