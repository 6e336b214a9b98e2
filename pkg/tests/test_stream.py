import numpy as np
import pytest

from cayleyhash.analysis.stream import emit_stream, monobit_test, runs_test, to_bits
from cayleyhash.hasher import get_scheme


def test_monobit_known_answer():
    # worked example from the NIST SP 800-22 frequency test description
    res = monobit_test("1011010101")
    assert res.statistic == pytest.approx(0.632455532, abs=1e-9)
    assert res.p_value == pytest.approx(0.527089, abs=1e-6)


def test_runs_known_answer():
    # worked example from the NIST SP 800-22 runs test description
    res = runs_test("1001101011")
    assert res.statistic == 7
    assert res.p_value == pytest.approx(0.147232, abs=1e-6)


def test_all_zero_fails_monobit():
    assert not monobit_test(bytes(1000)).passed


def test_alternating_fails_runs():
    res = runs_test(bytes([0x55]) * 1000)
    assert res.extra["prerequisite"] and not res.passed


def test_prerequisite_failure():
    res = runs_test("1" * 90 + "0" * 10)
    assert not res.passed and res.p_value == 0.0


def test_to_bits_msb_first():
    assert to_bits(b"\x96").tolist() == [1, 0, 0, 1, 0, 1, 1, 0]
    assert to_bits(b"\xff", 3).tolist() == [1, 1, 1]


def test_stream_length_and_reproducibility():
    params = get_scheme("bsv")
    a = emit_stream(params, 10_003, seed=9)
    assert len(a) == 1251
    assert a[-1] & 0b00011111 == 0
    assert a == emit_stream(params, 10_003, seed=9)
    assert a != emit_stream(params, 10_003, seed=10)


def test_counter_mode_is_structured():
    # 64-bit inputs never wrap mod a 256-bit prime: mostly zero bytes
    data = emit_stream(get_scheme("bsv"), 100_000, seed=0, mode="independent")
    assert not monobit_test(data).passed


@pytest.mark.parametrize("sid", ["bsv", "neg", "cookies"])
def test_feedback_stream_passes(sid):
    data = emit_stream(get_scheme(sid), 200_000, seed=1)
    assert monobit_test(data).passed
    assert runs_test(data).passed


def test_requires_modular_scheme():
    with pytest.raises(ValueError):
        emit_stream(get_scheme("bsv", integer=True), 8)
    with pytest.raises(ValueError):
        emit_stream(get_scheme("bsv"), 8, mode="ctr")
