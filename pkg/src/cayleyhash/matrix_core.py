"""Exact 2x2 matrices over Z, Z/pZ and GF(2^n)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple, Union

import gmpy2

from .gf2n import FieldSpec, poly_mul, poly_mod

__all__ = [
    "INTEGER",
    "Digest",
    "Mat2",
    "ScalarDomain",
    "deserialize",
    "gf2n",
    "is_probable_prime",
    "mat_det",
    "mat_identity",
    "mat_mul",
    "mat_reduce",
    "max_abs_entry",
    "mod_prime",
    "serialize",
]

Entries = Tuple[int, int, int, int]

MR_ROUNDS = 64  # error < 4^-64 = 2^-128


def is_probable_prime(p: int) -> bool:
    return p >= 2 and bool(gmpy2.is_prime(p, MR_ROUNDS))


@dataclass(frozen=True)
class ScalarDomain:
    """Scalar ring for matrix entries.

    ``kind`` is ``"int"``, ``"modp"`` or ``"gf2n"``; ``p`` is set for modp,
    ``field`` for gf2n.
    """

    kind: str
    p: Optional[int] = None
    field: Optional[FieldSpec] = None

    def __post_init__(self):
        if self.kind == "int":
            if self.p is not None or self.field is not None:
                raise ValueError("integer domain takes no parameters")
        elif self.kind == "modp":
            if self.p is None or not is_probable_prime(self.p):
                raise ValueError(f"modulus {self.p!r} is not prime")
        elif self.kind == "gf2n":
            if not isinstance(self.field, FieldSpec):
                raise ValueError("gf2n domain needs a FieldSpec")
        else:
            raise ValueError(f"unknown scalar domain kind {self.kind!r}")

    def __repr__(self):
        if self.kind == "int":
            return "Integer"
        if self.kind == "modp":
            return f"ModPrime({self.p:#x})" if self.p > 1 << 32 else f"ModPrime({self.p})"
        return f"GF2N(n={self.field.n})"

    @property
    def is_modular(self) -> bool:
        return self.kind != "int"

    @property
    def entry_bytes(self) -> int:
        if self.kind == "modp":
            return (self.p.bit_length() + 7) // 8
        if self.kind == "gf2n":
            return self.field.nbytes
        raise ValueError("integer domain has no fixed-width encoding")

    def canon(self, x: int) -> int:
        if self.kind == "modp":
            return x % self.p
        if self.kind == "gf2n":
            if x < 0:
                raise ValueError("GF(2^n) elements are nonnegative bit-polynomials")
            return poly_mod(x, self.field.modulus)
        return x

    def mul(self, x: int, y: int) -> int:
        if self.kind == "modp":
            return x * y % self.p
        if self.kind == "gf2n":
            return poly_mod(poly_mul(x, y), self.field.modulus)
        return x * y

    def add(self, x: int, y: int) -> int:
        if self.kind == "modp":
            return (x + y) % self.p
        if self.kind == "gf2n":
            return x ^ y
        return x + y

    def sub(self, x: int, y: int) -> int:
        if self.kind == "modp":
            return (x - y) % self.p
        if self.kind == "gf2n":
            return x ^ y
        return x - y

    def matmul(self, x: Entries, y: Entries) -> Entries:
        """Product of row-major entry tuples, canonical in this domain."""
        a, b, c, d = x
        e, f, g, h = y
        if self.kind == "modp":
            p = self.p
            return ((a * e + b * g) % p, (a * f + b * h) % p, (c * e + d * g) % p, (c * f + d * h) % p)
        if self.kind == "gf2n":
            m = self.field.modulus
            return (
                poly_mod(poly_mul(a, e) ^ poly_mul(b, g), m),
                poly_mod(poly_mul(a, f) ^ poly_mul(b, h), m),
                poly_mod(poly_mul(c, e) ^ poly_mul(d, g), m),
                poly_mod(poly_mul(c, f) ^ poly_mul(d, h), m),
            )
        return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


INTEGER = ScalarDomain("int")


def mod_prime(p: int) -> ScalarDomain:
    return ScalarDomain("modp", p=p)


def gf2n(field: Union[FieldSpec, int]) -> ScalarDomain:
    if not isinstance(field, FieldSpec):
        field = FieldSpec(field)
    return ScalarDomain("gf2n", field=field)


@dataclass(frozen=True)
class Mat2:
    """Immutable [[a, b], [c, d]]; entries are canonicalised on construction."""

    a: int
    b: int
    c: int
    d: int
    domain: ScalarDomain = INTEGER

    def __post_init__(self):
        if self.domain.kind != "int":
            for name in "abcd":
                object.__setattr__(self, name, self.domain.canon(getattr(self, name)))

    @classmethod
    def from_rows(cls, rows, domain: ScalarDomain = INTEGER) -> "Mat2":
        (a, b), (c, d) = rows
        return cls(a, b, c, d, domain)

    @classmethod
    def from_entries(cls, entries: Entries, domain: ScalarDomain = INTEGER) -> "Mat2":
        return cls(*entries, domain)

    @property
    def entries(self) -> Entries:
        return (self.a, self.b, self.c, self.d)

    def rows(self):
        return [[self.a, self.b], [self.c, self.d]]

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return mat_mul(self, other)

    def __pow__(self, k: int) -> "Mat2":
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = mat_identity(self.domain)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def __repr__(self):
        return f"Mat2([[{self.a}, {self.b}], [{self.c}, {self.d}]], {self.domain!r})"


def mat_mul(x: Mat2, y: Mat2) -> Mat2:
    if x.domain != y.domain:
        raise ValueError(f"domain mismatch: {x.domain!r} vs {y.domain!r}")
    return Mat2(*x.domain.matmul(x.entries, y.entries), x.domain)


def mat_identity(domain: ScalarDomain = INTEGER) -> Mat2:
    return Mat2(1, 0, 0, 1, domain)


def mat_reduce(x: Mat2, p: int) -> Mat2:
    """Reduce an integer matrix entrywise into Z/pZ."""
    if x.domain.kind != "int":
        raise ValueError("mat_reduce expects an integer matrix")
    return Mat2(*x.entries, mod_prime(p))


def max_abs_entry(x: Mat2) -> int:
    if x.domain.kind != "int":
        raise ValueError("entry magnitude is undefined in a modular domain")
    return max(abs(x.a), abs(x.b), abs(x.c), abs(x.d))


def mat_det(x: Mat2) -> int:
    dom = x.domain
    return dom.sub(dom.mul(x.a, x.d), dom.mul(x.b, x.c))


@dataclass(frozen=True)
class Digest:
    data: bytes
    scheme_id: str = ""

    def hex(self) -> str:
        return self.data.hex()

    def __len__(self):
        return len(self.data)


def serialize(x: Mat2, scheme_id: str = "") -> Digest:
    """Row-major entries, each a fixed-width big-endian block."""
    w = x.domain.entry_bytes
    return Digest(b"".join(e.to_bytes(w, "big") for e in x.entries), scheme_id)


def deserialize(data: Union[bytes, Digest], domain: ScalarDomain) -> Mat2:
    if isinstance(data, Digest):
        data = data.data
    w = domain.entry_bytes
    if len(data) != 4 * w:
        raise ValueError(f"digest must be {4 * w} bytes, got {len(data)}")
    entries = [int.from_bytes(data[i * w:(i + 1) * w], "big") for i in range(4)]
    for e in entries:
        if domain.canon(e) != e:
            raise ValueError("digest entry is not canonical for the domain")
    return Mat2(*entries, domain)
