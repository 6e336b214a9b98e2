"""Digest bitstreams for statistical testing, plus the frequency and runs tests."""

from __future__ import annotations

from math import erfc, sqrt
from typing import Union

import numpy as np

from ..hasher import HashState, SchemeParams
from .reports import TestResult

__all__ = ["emit_stream", "monobit_test", "runs_test", "to_bits"]

ALPHA = 0.01
MODES = ("feedback", "independent")


def _counter_bits(value: int) -> str:
    return format(value % (1 << 64), "064b")


def emit_stream(
    params: SchemeParams,
    count_bits: int,
    seed: int = 0,
    mode: str = "feedback",
    warmup: int = 4,
) -> bytes:
    """Concatenated digests, packed MSB-first, truncated to ``count_bits`` bits.

    ``independent``: digest i hashes the 64-bit counter seed + i.
    ``feedback``: digest i hashes (digest i-1 || counter i), starting from the
    64-bit seed; the first ``warmup`` digests are dropped.

    Low-weight inputs give structured products (H(0^n) = A^n), and a 64-bit
    input over (A(2), B(2)) has entries below 2^82, so ``independent`` output
    for a 256-bit prime is mostly zero bytes. ``feedback`` hashes about four
    entry-widths of well-mixed bits per digest and is the default.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if params.domain.kind == "int":
        raise ValueError("stream generation needs a modular scheme")
    if count_bits < 0:
        raise ValueError("count_bits must be >= 0")
    need = (count_bits + 7) // 8
    out = bytearray()
    i = 0
    if mode == "independent":
        while len(out) < need:
            out += HashState(params).absorb_bits(_counter_bits(seed + i)).finalize().data
            i += 1
    else:
        prev = (seed % (1 << 64)).to_bytes(8, "big")
        while len(out) < need:
            prev = HashState(params).absorb_bytes(prev + i.to_bytes(8, "big")).finalize().data
            if i >= warmup:
                out += prev
            i += 1
    out = bytes(out[:need])
    if count_bits % 8:
        out = out[:-1] + bytes([out[-1] & (0xFF << (8 - count_bits % 8)) & 0xFF])
    return out


def to_bits(stream: Union[bytes, np.ndarray, str], count_bits: int = None) -> np.ndarray:
    """0/1 uint8 array from packed bytes, a 0/1 string, or an array."""
    if isinstance(stream, (bytes, bytearray)):
        bits = np.unpackbits(np.frombuffer(bytes(stream), dtype=np.uint8))
    elif isinstance(stream, str):
        bits = np.frombuffer(stream.encode(), dtype=np.uint8) - ord("0")
    else:
        bits = np.asarray(stream, dtype=np.uint8)
    if count_bits is not None:
        bits = bits[:count_bits]
    return bits


def monobit_test(stream, alpha: float = ALPHA) -> TestResult:
    """Frequency test: S = sum(2x - 1), p = erfc(|S| / sqrt(2n))."""
    bits = to_bits(stream)
    n = bits.size
    if n == 0:
        raise ValueError("empty stream")
    s = 2 * int(np.count_nonzero(bits)) - n
    s_obs = abs(s) / sqrt(n)
    p = erfc(s_obs / sqrt(2))
    return TestResult("monobit", s_obs, p, p >= alpha, alpha, {"n": n, "sum": s})


def runs_test(stream, alpha: float = ALPHA) -> TestResult:
    """Runs test; fails outright when the ones proportion is off by >= 2/sqrt(n)."""
    bits = to_bits(stream)
    n = bits.size
    if n < 2:
        raise ValueError("runs test needs at least two bits")
    pi = np.count_nonzero(bits) / n
    if abs(pi - 0.5) >= 2 / sqrt(n):
        return TestResult("runs", float("nan"), 0.0, False, alpha, {"n": n, "pi": pi, "prerequisite": False})
    v_obs = 1 + int(np.count_nonzero(np.diff(bits)))
    denom = 2 * sqrt(2 * n) * pi * (1 - pi)
    p = erfc(abs(v_obs - 2 * n * pi * (1 - pi)) / denom)
    return TestResult("runs", float(v_obs), p, p >= alpha, alpha, {"n": n, "pi": pi, "prerequisite": True})
