"""
Hashing bit strings with 2x2 matrices
=====================================

Each bit picks a generator and the digest is the ordered product.
Hashing is a homomorphism, so the digest of a concatenation is the
product of the digests of its parts.
"""

from cayleyhash import get_scheme, hash_bits, hash_bytes
from cayleyhash.hasher import HashState, combine_digests

# the letters applied for 1001011
params = get_scheme("bsv", integer=True)
state = HashState(params, trace=True).absorb_bits("1001011")
print("".join(state.letters))
print(state.acc.rows())

# the same product over Z/pZ with the default 256-bit prime
params = get_scheme("bsv")
digest = hash_bytes(params, b"abc")
print(len(digest), "...", digest.hex()[-32:])

# amend a document without rehashing the head
head, tail = b"chapter one. " * 100, b"an appendix"
d = combine_digests(hash_bytes(params, head), hash_bytes(params, tail), params)
print(d == hash_bytes(params, head + tail))

# the same holds bitwise at any split point
x, y = "1101", "0010111"
print(hash_bits(params, x + y) == hash_bits(params, x) @ hash_bits(params, y))

# Tillich-Zemor over GF(2^127): 64-byte digests
tz = get_scheme("tz")
print(len(hash_bytes(tz, b"abc")))
