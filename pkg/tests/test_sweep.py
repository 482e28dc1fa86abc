import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixsim.errors import ConfigError
from mixsim.sweep import CSV_HEADER, SweepConfig, SweepRecord, p_grid, run_sweep, write_csv


@pytest.fixture(scope="module")
def trivial_records():
    return run_sweep(SweepConfig(circuit="trivial"))


def test_default_grid():
    grid = p_grid(0.0, 1.0, 0.01)
    assert len(grid) == 101
    assert grid[0] == 0.0 and grid[-1] == 1.0 and grid[37] == 0.37


@settings(max_examples=200)
@given(
    start=st.integers(0, 100),
    span=st.integers(0, 100),
    step=st.integers(1, 100),
)
def test_grid_count_formula(start, span, step):
    # exact decimal inputs on a 0.01 lattice
    p_start, p_end, p_step = start / 100, min(start + span, 100) / 100, step / 100
    grid = p_grid(p_start, p_end, p_step)
    assert len(grid) == (min(start + span, 100) - start) // step + 1
    assert grid[0] == p_start and grid[-1] <= p_end + 1e-12
    assert all(b > a for a, b in zip(grid, grid[1:]))


def test_trivial_sweep(trivial_records):
    assert len(trivial_records) == 101
    assert trivial_records[0] == SweepRecord(0.0, 1.0, 1.0, 0.0, 0.0)
    last = trivial_records[-1]
    assert last.p == 1.0
    assert last.fidelity_density == pytest.approx(np.sqrt(1 / 8), abs=1e-12)
    assert last.trace_distance == pytest.approx(7 / 8, abs=1e-12)
    assert last.chi_square == pytest.approx(7 / 9, abs=1e-12)


def test_record_ranges(trivial_records):
    for rec in trivial_records + run_sweep(SweepConfig(circuit="shor", p_step=0.1)):
        assert 0 <= rec.fidelity_density <= 1
        assert 0 <= rec.fidelity_prob <= 1
        assert rec.chi_square >= 0
        assert 0 <= rec.trace_distance <= 1


def test_sub_grid_and_measured_qubits():
    recs = run_sweep(SweepConfig(circuit="shor", p_start=0.2, p_end=0.5, p_step=0.1, measured_qubits=(1, 2)))
    assert [r.p for r in recs] == [0.2, 0.3, 0.4, 0.5]


@pytest.mark.parametrize(
    "kwargs, field",
    [
        (dict(circuit="grover"), "circuit"),
        (dict(p_start=0.6, p_end=0.5), "p_start"),
        (dict(p_step=0.0), "p_step"),
        (dict(p_end=1.5), "p_end"),
        (dict(measured_qubits=()), "measured_qubits"),
        (dict(measured_qubits=(1, 8)), "measured_qubits"),
        (dict(a=6), "a"),
    ],
)
def test_config_errors_name_the_field(kwargs, field):
    with pytest.raises(ConfigError, match=field):
        run_sweep(SweepConfig(**kwargs))


def test_write_csv_empty(tmp_path):
    out = tmp_path / "empty.csv"
    write_csv([], out)
    assert out.read_bytes() == b"p,fidelity_density,fidelity_prob,chi_square,trace_distance\n"


def test_write_csv_one_record(tmp_path):
    out = tmp_path / "one.csv"
    write_csv([SweepRecord(0.0, 1.0, 1.0, 0.0, -0.0)], out)
    assert out.read_text(encoding="utf-8").splitlines() == [",".join(CSV_HEADER), "0,1,1,0,0"]


def test_write_csv_twelve_digits(tmp_path):
    out = tmp_path / "x.csv"
    write_csv([SweepRecord(0.01, np.sqrt(0.5), 1 / 3, 2e-17, 0.125)], out)
    assert out.read_text().splitlines()[1] == "0.01,0.707106781187,0.333333333333,2e-17,0.125"


def test_write_csv_full_sweep(tmp_path, trivial_records):
    out = tmp_path / "sweep.csv"
    write_csv(trivial_records, out)
    data = out.read_bytes()
    assert b"\r" not in data
    assert len(data.decode("utf-8").splitlines()) == 102
