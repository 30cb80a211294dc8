import pytest

from idealtri import (build_x101, build_x103, build_figure_eight,
                      double_cover)


@pytest.fixture(scope="session")
def x101():
    return build_x101()


@pytest.fixture(scope="session")
def x103_0():
    return build_x103(0)


@pytest.fixture(scope="session")
def x103_1():
    return build_x103(1)


@pytest.fixture(scope="session")
def fig8():
    return build_figure_eight()


@pytest.fixture(scope="session")
def x101_cover(x101):
    return double_cover(x101)
