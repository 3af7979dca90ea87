import contextlib
import sys
import pytest
from magspec.initializer import (set_seed,
                                 enable_debug_mode,
                                 set_num_workers,
                                 get_num_workers,
                                 set_convention,
                                 set_writer)
from magspec.utils.writer import DummyWriter


@pytest.fixture(scope="function", autouse=True)
def seed():
    """set random seed for testing"""
    set_seed(0)


@pytest.fixture(scope="function", autouse=True)
def debug():
    enable_debug_mode()


@pytest.fixture(scope="function", autouse=True)
def half_convention():
    set_convention("half")


@pytest.fixture(scope="function", autouse=True)
def dummy_writer():
    set_writer(DummyWriter())
    yield
    set_writer(DummyWriter())


@pytest.fixture
def serial():
    # keep the fixture's diagnostic print off the stdout captured by capsys
    pre_workers = get_num_workers()
    with contextlib.redirect_stdout(sys.stderr):
        set_num_workers(1)
    yield
    with contextlib.redirect_stdout(sys.stderr):
        set_num_workers(pre_workers)
