"""Arithmetic in GF(2^n) = GF(2)[x]/(m(x)).

Polynomials are plain Python ints: bit i holds the coefficient of x^i.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "FieldSpec",
    "alpha",
    "default_field",
    "evaluate",
    "is_irreducible",
    "poly_add",
    "poly_divmod",
    "poly_gcd",
    "poly_inverse",
    "poly_mod",
    "poly_mul",
    "poly_mul_mod",
    "poly_pow_mod",
    "poly_str",
]


def degree(a: int) -> int:
    """Degree of ``a``; the zero polynomial has degree -1."""
    return a.bit_length() - 1


def poly_add(x: int, y: int) -> int:
    return x ^ y


def poly_mul(x: int, y: int) -> int:
    """Carry-less product, no reduction."""
    if x.bit_length() < y.bit_length():
        x, y = y, x
    r = 0
    while y:
        if y & 1:
            r ^= x
        x <<= 1
        y >>= 1
    return r


def poly_divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    db = b.bit_length()
    q = 0
    while a.bit_length() >= db:
        shift = a.bit_length() - db
        q |= 1 << shift
        a ^= b << shift
    return q, a


def poly_mod(a: int, m: int) -> int:
    # highest degree first, one shifted XOR per surplus bit
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, poly_mod(a, b)
    return a


def poly_pow_mod(base: int, e: int, m: int) -> int:
    result = 1
    base = poly_mod(base, m)
    while e:
        if e & 1:
            result = poly_mod(poly_mul(result, base), m)
        base = poly_mod(poly_mul(base, base), m)
        e >>= 1
    return poly_mod(result, m)


def _prime_factors(n: int) -> list[int]:
    out = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(m: int) -> bool:
    """Rabin's irreducibility test over GF(2).

    ``m`` is irreducible of degree n iff x^(2^n) = x (mod m) and
    gcd(x^(2^(n/q)) - x, m) = 1 for every prime q dividing n.
    """
    n = degree(m)
    if n < 1:
        raise ValueError("irreducibility is defined for degree >= 1")

    def frob(k: int) -> int:
        # x^(2^k) mod m by repeated squaring
        t = poly_mod(0b10, m)
        for _ in range(k):
            t = poly_mod(poly_mul(t, t), m)
        return t

    if frob(n) != poly_mod(0b10, m):
        return False
    for q in _prime_factors(n):
        h = frob(n // q) ^ poly_mod(0b10, m)
        if poly_gcd(m, h) != 1:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """GF(2)[x]/(modulus) with an irreducible modulus of degree n."""

    modulus: int

    def __post_init__(self):
        n = degree(self.modulus)
        if n < 1:
            raise ValueError("field modulus must have degree >= 1")
        if not is_irreducible(self.modulus):
            raise ValueError(f"modulus {poly_str(self.modulus)} is reducible over GF(2)")
        if not (127 <= n <= 170 and len(_prime_factors(n)) == 1 and _prime_factors(n)[0] == n):
            warnings.warn(
                f"field degree {n} is outside the usual range (prime n, 127 <= n <= 170)",
                stacklevel=3,
            )

    @property
    def n(self) -> int:
        return degree(self.modulus)

    @property
    def nbytes(self) -> int:
        return (self.n + 7) // 8

    @classmethod
    def from_hex(cls, text: str) -> "FieldSpec":
        return cls(int(text, 16))

    def to_hex(self) -> str:
        return format(self.modulus, "x")

    def contains(self, a: int) -> bool:
        return 0 <= a and a.bit_length() <= self.n


def poly_mul_mod(x: int, y: int, spec: FieldSpec) -> int:
    return poly_mod(poly_mul(x, y), spec.modulus)


def poly_inverse(a: int, spec: FieldSpec) -> int:
    """Inverse via the extended Euclidean algorithm."""
    a = poly_mod(a, spec.modulus)
    if a == 0:
        raise ZeroDivisionError("zero has no inverse")
    r0, r1 = spec.modulus, a
    s0, s1 = 0, 1
    while r1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 ^ poly_mul(q, s1)
    # r0 is the gcd, 1 since the modulus is irreducible
    return poly_mod(s0, spec.modulus)


def alpha(spec: FieldSpec) -> int:
    """The class of x, a root of the modulus."""
    return poly_mod(0b10, spec.modulus)


def evaluate(coeffs: int, point: int, spec: FieldSpec) -> int:
    """Evaluate the GF(2)-polynomial ``coeffs`` at a field element (Horner)."""
    acc = 0
    for i in range(degree(coeffs), -1, -1):
        acc = poly_mul_mod(acc, point, spec) ^ ((coeffs >> i) & 1)
    return acc


def poly_str(a: int) -> str:
    if a == 0:
        return "0"
    terms = []
    for i in range(degree(a), -1, -1):
        if (a >> i) & 1:
            terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
    return " + ".join(terms)


@lru_cache(maxsize=None)
def default_field(n: int = 127) -> FieldSpec:
    """x^n + x + 1 when irreducible, else the smallest irreducible trinomial x^n + x^k + 1."""
    for k in range(1, n):
        m = (1 << n) | (1 << k) | 1
        if is_irreducible(m):
            return FieldSpec(m)
    raise ValueError(f"no irreducible trinomial of degree {n}")
