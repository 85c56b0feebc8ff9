"""End-to-end checks of the Python bindings against known values."""

import pytest

import swanlab


def test_version_and_schema():
    assert swanlab.SCHEMA == "swanlab/1"
    assert swanlab.__version__


def test_conductor_known_instance():
    rep = swanlab.conductor(["pi^-2"], p=3)
    assert rep["status"] == "ok"
    assert rep["sw"] == 2
    assert rep["sw_mod"] == 2
    assert rep["rsw"] == {
        "alpha": "0",
        "beta": "2",
        "n": 2,
        "basis": "log",
        "rendering": rep["rsw"]["rendering"],
    }
    assert rep["log_slope"] == 2
    assert rep["slope"] == 3


def test_conductor_statuses():
    trivial = swanlab.conductor(["pi^-4+pi^-1"], p=2)
    assert trivial["sw"] == 0
    assert trivial["status"] == "out_of_theorem_range"

    corner = swanlab.conductor(["y*pi^-2"], p=2, residue="rational")
    assert corner["sw"] == 2
    assert corner["sw_mod"] == 1
    assert corner["status"] == "unsupported_range"
    assert corner["rsw_mod_unsupported"] is True


def test_filtration_table():
    out = swanlab.filtration(
        ["y*pi^-2"], n_range=(0, 3), p=2, residue="rational"
    )
    assert out["fil"] == [False, False, True, True]
    assert out["fil_mod"] == [False, True, True, True]
    assert out["level"] == 2


def test_reduce_to_zero():
    out = swanlab.reduce(["pi^-4+pi^-1"], p=2)
    assert out["level"] == 0
    assert out["reduced"] == ["0"]
    assert out["exact"] is True


def test_witt_arithmetic():
    out = swanlab.witt_op(
        "add", ["pi^-1", "y"], other=["pi^-1", "y"], p=2, residue="rational"
    )
    assert out["result"][0] == "0"
    neg = swanlab.witt_op("neg", ["pi^-1"], p=2)
    assert neg["result"] == ["pi^-1"]


def test_normal_form_both_ways():
    ok = swanlab.normal_form(
        "log", 2, alpha="1", beta="0", p=2, residue="rational"
    )
    assert ok["in_image"] is True
    assert ok["normal_form"]["layers"] == [["1"]]
    miss = swanlab.normal_form(
        "log", 2, alpha="0", beta="y", p=2, residue="rational"
    )
    assert miss["in_image"] is False
    assert "obstruction" in miss


def test_render_roundtrip():
    s = swanlab.render("pi^-1 + pi^-2", p=3)
    assert s == "pi^-2+pi^-1"
    with pytest.raises(ValueError):
        swanlab.render("pi^", p=3)


def test_field_validation():
    with pytest.raises(RuntimeError):
        swanlab.conductor(["pi^-1"], p=7)
    with pytest.raises(TypeError):
        swanlab.conductor(["pi^-1"], p=2, bogus=1)


def test_batch_keeps_order():
    jobs = [
        {"field": swanlab.field(3), "witt": ["pi^-2"]},
        {"field": swanlab.field(3), "witt": ["oops("]},
        {"field": swanlab.field(2), "witt": ["pi^-3"]},
    ]
    out = swanlab.conductor_batch(jobs)
    assert len(out["jobs"]) == 3
    assert out["jobs"][0]["sw"] == 2
    assert out["jobs"][1]["status"] == "error"
    assert out["jobs"][2]["sw"] == 3


def test_selftest_single_suite():
    out = swanlab.selftest(["render-roundtrip"])
    assert out["passed"] is True
    assert out["suites"][0]["name"] == "render-roundtrip"
    assert out["suites"][0]["checks"] > 0
    assert "render-roundtrip" in swanlab.selftest_suites()
