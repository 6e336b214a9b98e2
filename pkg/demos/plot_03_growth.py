"""
How fast do entries grow?
=========================

Exhaustive enumeration of all products of length n gives the largest
entry; its n-th root approaches the joint spectral radius from below.
Periodic words give exact lower bounds through their spectral radius.
"""

import math

from cayleyhash import lower, upper
from cayleyhash.analysis import enumerate_growth, periodic_spectral_radius, random_growth
from cayleyhash.hasher import COOKIE_C
from cayleyhash.analysis.growth import cookie_triple_growth

pairs = {
    "A(1),B(1)": (upper(1), lower(1)),
    "A(2),B(2)": (upper(2), lower(2)),
    "A(2),B(-2)": (upper(2), lower(-2)),
}
for name, gens in pairs.items():
    rep = enumerate_growth(gens, 20)
    print(f"{name:11s} n=20 exponent={rep.exponent:.4f} argmax={rep.argmax_word}")

# worst-case words are periodic
print(periodic_spectral_radius("AB", pairs["A(2),B(2)"]), 1 + math.sqrt(2))
print(periodic_spectral_radius("AABB", pairs["A(2),B(-2)"]), math.sqrt(2 + math.sqrt(3)))

# random products grow more slowly than the worst case
rep = random_growth(pairs["A(2),B(2)"], 400, 200, seed=1)
print(f"typical rate {rep.rate:.4f}")

# the cookie triple; the notes compare both quoted constants
rep = cookie_triple_growth((upper(2), lower(2), COOKIE_C), 10)
print(rep.to_text())
