"""
Short relations modulo p
========================

Over Z the pair (A(2), B(2)) generates a free semigroup, so two different
words can only agree mod p once some entry reaches p. That gives a lower
bound on the length of any collision, which small primes let us compare
with the exact girth.
"""

import math

from cayleyhash import get_scheme, lower, upper
from cayleyhash.analysis import collision_search_birthday, exact_girth_bfs, girth_lower_bound
from cayleyhash.analysis.girth import lift_check

s = 1 + math.sqrt(2)
print("bound for a 256-bit p:", girth_lower_bound(2 ** 256, s))

for p in (13, 101, 1009):
    params = get_scheme("bsv", prime=p)
    rep = exact_girth_bfs(params)
    u, v = rep.witness
    distinct, biggest = lift_check((upper(2), lower(2)), u, v)
    print(f"p={p:5d} girth={rep.girth:3d} bound={girth_lower_bound(p, s):2d} "
          f"u={u or '(empty)'} v={v} largest lifted entry={biggest}")

# a small group falls to a birthday search in a second
params = get_scheme("bsv", prime=251)
print(collision_search_birthday(params, 40, 10 ** 6, seed=0))
