"""
Cookies: a stateful third generator
===================================

Three 1-bits in a row switch subsequent 1-bits from B to C; three 0-bits
switch back. The bit that completes a run is still hashed in the old mode.
"""

from cayleyhash import cookie_word, get_scheme, hash_bits, normalize_pad

print(cookie_word("110011101011" "00011"))

# the machine state leaks across a split, so pad the head first:
# release_run zeros return the machine to its initial state
params = get_scheme("cookies")
x, y = "0111", "1011"
print(hash_bits(params, x + y) == hash_bits(params, x) @ hash_bits(params, y))
xp = normalize_pad(x)
print(xp, hash_bits(params, xp + y) == hash_bits(params, xp) @ hash_bits(params, y))
