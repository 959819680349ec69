import os

from pytest                       import raises

from ptep.util import PtepError, cwd, grid, max_abs


def test_cwd(tmp_path):
    before = os.getcwd()
    with cwd(str(tmp_path)):
        assert os.path.samefile(os.getcwd(), str(tmp_path))
    assert os.getcwd() == before
    with cwd(None):
        assert os.getcwd() == before


def test_grid_is_closed():
    assert grid(0.0, 1.0, 5) == [0.0, 0.25, 0.5, 0.75, 1.0]
    with raises(ValueError):
        grid(0.0, 1.0, 1)


def test_max_abs():
    assert max_abs([[1.0, -3.0], [2.0, 0.0]]) == 3.0
    assert max_abs([]) == 0.0


def test_error_message():
    err = PtepError("bad value")
    assert str(err) == "bad value"
    assert err.value == "bad value"
