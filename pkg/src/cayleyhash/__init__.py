"""Cayley hash functions over 2x2 matrix semigroups, and tools to study them."""

from .cookie import CookieRule, CookieState, cookie_word, normalize_pad
from .gf2n import FieldSpec, default_field, is_irreducible
from .hasher import (
    SCHEMES,
    HashState,
    SchemeParams,
    combine,
    default_prime,
    get_scheme,
    hash_bits,
    hash_bytes,
    lower,
    upper,
)
from .matrix_core import INTEGER, Digest, Mat2, ScalarDomain, gf2n, mod_prime

__version__ = "0.1.0"
