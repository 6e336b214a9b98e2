"""Cayley hashing: bit 0 -> A, bit 1 -> B, digest = ordered matrix product."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Optional, Union

from . import gf2n as _gf
from .cookie import CookieRule, CookieState, cookie_transition
from .matrix_core import (
    INTEGER,
    Digest,
    Mat2,
    ScalarDomain,
    deserialize,
    gf2n,
    is_probable_prime,
    mat_det,
    mat_identity,
    mat_mul,
    mod_prime,
    serialize,
)

__all__ = [
    "BROKEN_SCHEMES",
    "COOKIE_C",
    "SCHEMES",
    "HashState",
    "SchemeParams",
    "absorb_bit",
    "absorb_bytes",
    "combine",
    "combine_digests",
    "default_prime",
    "finalize",
    "get_scheme",
    "hash_bits",
    "hash_bytes",
    "identity_digest",
    "lower",
    "new_state",
    "upper",
]

SCHEMES = ("zemor", "bsv", "neg", "tz", "cookies")
BROKEN_SCHEMES = frozenset({"zemor", "tz"})

Bits = Union[str, Iterable[int]]


def upper(k: int) -> Mat2:
    """A(k) = [[1, k], [0, 1]] over Z."""
    return Mat2(1, k, 0, 1)


def lower(m: int) -> Mat2:
    """B(m) = [[1, 0], [m, 1]] over Z."""
    return Mat2(1, 0, m, 1)


COOKIE_C = Mat2(2, 1, 1, 1)


@lru_cache(maxsize=None)
def default_prime(bits: int = 256) -> int:
    """Largest prime below 2**bits."""
    p = (1 << bits) - 1
    while not is_probable_prime(p):
        p -= 2
    return p


@dataclass(frozen=True)
class SchemeParams:
    scheme_id: str
    A: Mat2
    B: Mat2
    C: Optional[Mat2] = None
    rule: Optional[CookieRule] = None
    broken: bool = False
    check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        dom = self.A.domain
        for m in self.gens:
            if m.domain != dom:
                raise ValueError("all generators must share one scalar domain")
        if self.C is not None and self.rule is None:
            object.__setattr__(self, "rule", CookieRule())
        if self.check:
            if self.A == self.B:
                raise ValueError("generators A and B must differ")
            for m in self.gens:
                if mat_det(m) == 0:
                    raise ValueError("generators must be invertible")

    @property
    def domain(self) -> ScalarDomain:
        return self.A.domain

    @property
    def gens(self) -> tuple:
        return (self.A, self.B) if self.C is None else (self.A, self.B, self.C)

    def over(self, domain: ScalarDomain) -> "SchemeParams":
        """Same integer generators in another domain (e.g. a different prime)."""
        if self.domain.kind != "int" and domain.kind != "int" and self.domain.kind != domain.kind:
            raise ValueError("cannot move generators between GF(2^n) and Z/pZ")
        conv = [Mat2(*g.entries, domain) for g in self.gens]
        return SchemeParams(
            self.scheme_id, conv[0], conv[1], conv[2] if self.C is not None else None,
            self.rule, self.broken, self.check,
        )

    @cached_property
    def _tz_modulus(self) -> Optional[int]:
        dom = self.domain
        if dom.kind != "gf2n" or self.C is not None:
            return None
        al = _gf.alpha(dom.field)
        if self.A.entries == (al, 1, 1, 0) and self.B.entries == (al, al ^ 1, 1, 1):
            return dom.field.modulus
        return None

    @cached_property
    def _byte_table(self) -> list:
        """Product of the eight generator images of each byte value, MSB first."""
        dom = self.domain
        ents = [g.entries for g in self.gens]
        table = []
        for byte in range(256):
            acc = (1, 0, 0, 1)
            for i in range(7, -1, -1):
                acc = dom.matmul(acc, ents[(byte >> i) & 1])
            table.append(acc)
        return table

    @cached_property
    def _cookie_table(self) -> dict:
        # (CookieState, byte) -> (entries, next state); filled lazily
        return {}

    def cookie_byte(self, cs: CookieState, byte: int):
        key = (cs, byte)
        hit = self._cookie_table.get(key)
        if hit is None:
            dom = self.domain
            ents = [g.entries for g in self.gens]
            acc = (1, 0, 0, 1)
            s = cs
            for i in range(7, -1, -1):
                letter, s = cookie_transition(s, (byte >> i) & 1, self.rule)
                acc = dom.matmul(acc, ents[letter])
            hit = self._cookie_table[key] = (acc, s)
        return hit


def _resolve_domain(prime: Optional[int], integer: bool) -> ScalarDomain:
    if integer:
        return INTEGER
    return mod_prime(default_prime() if prime is None else prime)


@lru_cache(maxsize=64)
def get_scheme(
    scheme_id: str,
    *,
    prime: Optional[int] = None,
    modulus: Optional[Union[int, _gf.FieldSpec]] = None,
    integer: bool = False,
) -> SchemeParams:
    """Built-in scheme by name: zemor, bsv, neg, tz or cookies.

    Modular schemes default to the largest prime below 2^256; ``integer=True``
    keeps them over Z. ``tz`` defaults to GF(2)[x]/(x^127 + x + 1).
    Results are cached; params are immutable, so sharing keeps the lookup
    tables warm.
    """
    if scheme_id == "tz":
        if integer or prime is not None:
            raise ValueError("tz is defined over GF(2^n) only")
        if modulus is None:
            spec = _gf.default_field()
        elif isinstance(modulus, _gf.FieldSpec):
            spec = modulus
        else:
            spec = _gf.FieldSpec(modulus)
        dom = gf2n(spec)
        al = _gf.alpha(spec)
        return SchemeParams("tz", Mat2(al, 1, 1, 0, dom), Mat2(al, al ^ 1, 1, 1, dom), broken=True)

    if modulus is not None:
        raise ValueError(f"{scheme_id} is defined over Z/pZ; use prime=")
    if scheme_id == "zemor":
        gens, broken = (upper(1), lower(1)), True
    elif scheme_id == "bsv":
        gens, broken = (upper(2), lower(2)), False
    elif scheme_id == "neg":
        gens, broken = (upper(2), lower(-2)), False
    elif scheme_id == "cookies":
        gens, broken = (upper(2), lower(2), COOKIE_C), False
    else:
        raise ValueError(f"unknown scheme {scheme_id!r}; choose one of {', '.join(SCHEMES)}")
    base = SchemeParams(scheme_id, *gens, broken=broken)
    return base.over(_resolve_domain(prime, integer))


def _bits_str(bits: Bits) -> str:
    if isinstance(bits, str):
        bits = bits.replace(" ", "")
        if set(bits) - {"0", "1"}:
            raise ValueError("bit strings may contain only 0 and 1")
        return bits
    return "".join("1" if int(b) else "0" for b in bits)


class HashState:
    """Streaming accumulator. Single owner; ``finalize`` does not consume it.

    With ``trace=True`` the letters applied are recorded in ``letters``.
    """

    def __init__(self, params: SchemeParams, *, trace: bool = False):
        self.params = params
        self._acc = (1, 0, 0, 1)
        self.bits_consumed = 0
        self.cookie_state = CookieState() if params.C is not None else None
        self.letters: Optional[list] = [] if trace else None

    @property
    def acc(self) -> Mat2:
        return Mat2(*self._acc, self.params.domain)

    def copy(self) -> "HashState":
        other = HashState(self.params)
        other._acc = self._acc
        other.bits_consumed = self.bits_consumed
        other.cookie_state = self.cookie_state
        other.letters = None if self.letters is None else list(self.letters)
        return other

    def _letter(self, bit: int) -> int:
        if self.cookie_state is None:
            return bit
        letter, self.cookie_state = cookie_transition(self.cookie_state, bit, self.params.rule)
        return letter

    def absorb_bit(self, bit: int) -> "HashState":
        bit = int(bit)
        if bit not in (0, 1):
            raise ValueError(f"bit must be 0 or 1, got {bit}")
        letter = self._letter(bit)
        if self.letters is not None:
            self.letters.append("ABC"[letter])
        self._acc = self.params.domain.matmul(self._acc, self.params.gens[letter].entries)
        self.bits_consumed += 1
        return self

    def absorb_bits(self, bits: Bits) -> "HashState":
        s = _bits_str(bits)
        if not s:
            return self
        if self.letters is not None:
            for ch in s:
                self.absorb_bit(ch == "1")
            return self
        m = self.params._tz_modulus
        if m is not None:
            self._acc = _tz_run(self._acc, s, m)
            self.bits_consumed += len(s)
            return self
        whole = len(s) - len(s) % 8
        if whole:
            self._absorb_octets([int(s[i:i + 8], 2) for i in range(0, whole, 8)])
        for ch in s[whole:]:
            self.absorb_bit(ch == "1")
        return self

    def absorb_bytes(self, data: bytes) -> "HashState":
        if not data:
            return self
        if self.letters is not None or self.params._tz_modulus is not None:
            return self.absorb_bits("".join(format(b, "08b") for b in data))
        self._absorb_octets(data)
        return self

    def _absorb_octets(self, octets) -> None:
        params = self.params
        mul = params.domain.matmul
        acc = self._acc
        if self.cookie_state is None:
            table = params._byte_table
            for byte in octets:
                acc = mul(acc, table[byte])
        else:
            cs = self.cookie_state
            for byte in octets:
                ents, cs = params.cookie_byte(cs, byte)
                acc = mul(acc, ents)
            self.cookie_state = cs
        self._acc = acc
        self.bits_consumed += 8 * len(octets)

    def finalize(self) -> Digest:
        return serialize(self.acc, self.params.scheme_id)


def _tz_run(acc, bits: str, m: int):
    # right-multiplication by [[x,1],[1,0]] or [[x,x+1],[1,1]] only needs
    # multiplication by x: shift, then clear the overflow bit with m
    a, b, c, d = acc
    top = 1 << (m.bit_length() - 1)
    for ch in bits:
        t = a << 1
        if t & top:
            t ^= m
        t ^= b
        u = c << 1
        if u & top:
            u ^= m
        u ^= d
        if ch == "0":
            b, d = a, c
        else:
            b, d = t ^ a, u ^ c
        a, c = t, u
    return (a, b, c, d)


def new_state(params: SchemeParams, *, trace: bool = False) -> HashState:
    return HashState(params, trace=trace)


def absorb_bit(state: HashState, bit: int) -> HashState:
    return state.absorb_bit(bit)


def absorb_bytes(state: HashState, data: bytes) -> HashState:
    return state.absorb_bytes(data)


def finalize(state: HashState) -> Digest:
    return state.finalize()


def combine(x: Mat2, y: Mat2) -> Mat2:
    """Hash of a concatenation from the hashes of its parts."""
    return mat_mul(x, y)


def combine_digests(x: Digest, y: Digest, params: SchemeParams) -> Digest:
    dom = params.domain
    return serialize(combine(deserialize(x, dom), deserialize(y, dom)), params.scheme_id)


def hash_bits(params: SchemeParams, bits: Bits) -> Mat2:
    """Matrix hash of a bit string (or iterable of 0/1)."""
    return HashState(params).absorb_bits(bits).acc


def hash_bytes(params: SchemeParams, data: bytes) -> Digest:
    return HashState(params).absorb_bytes(data).finalize()


def identity_digest(params: SchemeParams) -> Digest:
    return serialize(mat_identity(params.domain), params.scheme_id)
