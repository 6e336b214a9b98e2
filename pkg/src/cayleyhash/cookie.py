"""Cookie-enhanced Cayley hashing.

A run of ``trigger_run`` ones switches later 1-bits from B to C; a run of
``release_run`` zeros switches them back. The bit completing a run is
hashed under the mode in force before it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Tuple, Union

from .matrix_core import Mat2, mat_mul

__all__ = [
    "COOKIE",
    "NORMAL",
    "CookieRule",
    "CookieState",
    "cookie_combine",
    "cookie_step",
    "cookie_transition",
    "cookie_word",
    "normalize_pad",
]

NORMAL = "normal"
COOKIE = "cookie"


@dataclass(frozen=True)
class CookieRule:
    trigger_run: int = 3
    release_run: int = 3

    def __post_init__(self):
        if self.trigger_run < 1 or self.release_run < 1:
            raise ValueError("cookie run lengths must be >= 1")

    @property
    def saturation(self) -> int:
        # run counts past both thresholds behave identically
        return max(self.trigger_run, self.release_run)


@dataclass(frozen=True)
class CookieState:
    mode: str = NORMAL
    ones_run: int = 0
    zeros_run: int = 0


def cookie_transition(state: CookieState, bit: int, rule: CookieRule) -> Tuple[int, CookieState]:
    """Return (letter index, next state): 0 -> A, 1 -> B, 2 -> C."""
    cap = rule.saturation
    mode = state.mode
    if bit:
        letter = 2 if mode == COOKIE else 1
        ones, zeros = min(state.ones_run + 1, cap), 0
        if mode == NORMAL and ones >= rule.trigger_run:
            mode = COOKIE
    else:
        letter = 0
        ones, zeros = 0, min(state.zeros_run + 1, cap)
        if mode == COOKIE and zeros >= rule.release_run:
            mode = NORMAL
    return letter, CookieState(mode, ones, zeros)


def _bit_list(bits: Union[str, Iterable[int]]) -> list:
    if isinstance(bits, str):
        bits = bits.replace(" ", "")
        if set(bits) - {"0", "1"}:
            raise ValueError("bit strings may contain only 0 and 1")
        return [ch == "1" for ch in bits]
    return [int(b) for b in bits]


def cookie_word(bits: Union[str, Iterable[int]], rule: CookieRule = CookieRule()) -> str:
    """Letter sequence the cookie transducer emits for ``bits`` from a fresh state."""
    state = CookieState()
    out = []
    for bit in _bit_list(bits):
        letter, state = cookie_transition(state, bit, rule)
        out.append("ABC"[letter])
    return "".join(out)


def cookie_step(state, bit: int):
    """Advance a cookie-scheme HashState by one bit."""
    if state.params.C is None:
        raise ValueError(f"scheme {state.params.scheme_id!r} has no cookie matrix")
    return state.absorb_bit(bit)


def normalize_pad(bits: str, rule: CookieRule = CookieRule()) -> str:
    """Append ``release_run`` zeros so the segment ends in normal mode with no pending ones."""
    return bits + "0" * rule.release_run


def cookie_combine(x: Mat2, y: Mat2) -> Mat2:
    """Hash of ``normalize_pad(X) || Y`` from the hashes of the padded X and of Y."""
    return mat_mul(x, y)
