"""Girth of Cayley graphs over Z/pZ and collision search."""

from __future__ import annotations

import math
from string import ascii_uppercase
from typing import Optional, Sequence, Tuple, Union

import mpmath
import numpy as np

from ..hasher import HashState, SchemeParams
from ..matrix_core import Mat2, max_abs_entry
from .growth import word_product
from .reports import GirthReport

__all__ = [
    "DEFAULT_STATE_CAP",
    "collision_search_birthday",
    "exact_girth_bfs",
    "girth_lower_bound",
    "lift_check",
    "validate_witness",
]

DEFAULT_STATE_CAP = 10 ** 8
DEFINITIONS = ("sum_of_lengths", "max_of_lengths")


def girth_lower_bound(p: int, s: float) -> int:
    """floor(log_s p): products of at most this many letters have entries below p."""
    if s <= 1:
        raise ValueError("growth rate s must exceed 1")
    if p < 2:
        raise ValueError("p must be >= 2")
    with mpmath.workdps(60):
        return int(mpmath.floor(mpmath.log(p) / mpmath.log(mpmath.mpf(s))))


def _gens_of(gens: Union[SchemeParams, Sequence[Mat2]]) -> Tuple[Mat2, ...]:
    if isinstance(gens, SchemeParams):
        gens = gens.gens
    gens = tuple(gens)
    dom = gens[0].domain
    if dom.kind != "modp" or any(g.domain != dom for g in gens):
        raise ValueError("girth search needs generators over one Z/pZ")
    return gens


def _inverse(x, dom):
    a, b, c, d = x
    det_inv = pow(dom.sub(dom.mul(a, d), dom.mul(b, c)), -1, dom.p)
    return tuple(dom.mul(det_inv, e) for e in (d, dom.canon(-b), dom.canon(-c), a))


def _partial(p, definition, bound, visits) -> GirthReport:
    return GirthReport(
        p=p, girth=None, witness=None, definition_used=definition,
        complete=False, lower_bound=bound, states_visited=visits,
    )


def _done(p, definition, size, u, v, visits) -> GirthReport:
    return GirthReport(
        p=p, girth=size, witness=(u, v), definition_used=definition,
        sum_of_lengths=len(u) + len(v), max_of_lengths=max(len(u), len(v)),
        complete=True, lower_bound=size, states_visited=visits,
    )


def _girth_max(gens, cap: int) -> GirthReport:
    dom = gens[0].domain
    ents = [g.entries for g in gens]
    mul = dom.matmul
    first = {(1, 0, 0, 1): ""}
    frontier = [((1, 0, 0, 1), "")]
    visits = 0
    level = 0
    while frontier:
        level += 1
        if visits + len(frontier) * len(ents) > cap:
            return _partial(dom.p, "max_of_lengths", level, visits)
        nxt = []
        hit = None
        for mat, word in frontier:
            for k, g in enumerate(ents):
                child = mul(mat, g)
                w = word + ascii_uppercase[k]
                visits += 1
                seen = first.get(child)
                if seen is None:
                    first[child] = w
                    nxt.append((child, w))
                elif hit is None:
                    hit = (seen, w)
        if hit is not None:
            return _done(dom.p, "max_of_lengths", level, hit[0], hit[1], visits)
        frontier = nxt
    raise RuntimeError("search exhausted without a relation")


def _girth_sum(gens, cap: int) -> GirthReport:
    # u1 u2 = v1 v2  <=>  v1^-1 u1 = v2 u2^-1. For total length S the halves
    # (u1, v1) and (u2, v2) carry S//2 and S - S//2 letters. A minimal relation
    # has distinct first letters and distinct last letters, so nonempty u1, v1
    # must start differently and nonempty u2, v2 must end differently.
    dom = gens[0].domain
    mul = dom.matmul
    ents = [g.entries for g in gens]
    m = len(ents)
    words = {0: [("", (1, 0, 0, 1))]}
    visits = 0

    def upto(k):
        nonlocal visits
        while max(words) < k:
            j = max(words)
            layer = []
            for w, x in words[j]:
                for i, g in enumerate(ents):
                    layer.append((w + ascii_uppercase[i], mul(x, g)))
            visits += len(layer)
            words[j + 1] = layer

    inverses = {}

    def inv(w, x):
        r = inverses.get(w)
        if r is None:
            r = inverses[w] = _inverse(x, dom)
        return r

    S = 0
    while True:
        S += 1
        a, b = S // 2, S - S // 2
        est = sum(m ** i * m ** (a - i) for i in range(a + 1)) + sum(m ** i * m ** (b - i) for i in range(b + 1))
        if visits + est > cap:
            return _partial(dom.p, "sum_of_lengths", S, visits)
        upto(b)
        left: dict = {}
        for i in range(a + 1):
            for u1, U1 in words[i]:
                for v1, V1 in words[a - i]:
                    if u1 and v1 and u1[0] == v1[0]:
                        continue
                    left.setdefault(mul(inv(v1, V1), U1), []).append((u1, v1))
        visits += sum(len(x) for x in left.values())
        best = None
        for i in range(b + 1):
            for u2, U2 in words[i]:
                iu2 = inv(u2, U2)
                for v2, V2 in words[b - i]:
                    if u2 and v2 and u2[-1] == v2[-1]:
                        continue
                    visits += 1
                    for u1, v1 in left.get(mul(V2, iu2), ()):
                        u, v = u1 + u2, v1 + v2
                        if u == v:
                            continue
                        if (len(v), v) < (len(u), u):
                            u, v = v, u
                        key = (len(u), u, v)
                        if best is None or key < best:
                            best = key
        if best is not None:
            return _done(dom.p, "sum_of_lengths", S, best[1], best[2], visits)


def exact_girth_bfs(
    gens: Union[SchemeParams, Sequence[Mat2]],
    definition: str = "sum_of_lengths",
    cap: int = DEFAULT_STATE_CAP,
) -> GirthReport:
    """Shortest relation u = v between distinct words over Z/pZ.

    ``max_of_lengths``: breadth-first search from the empty word, extending
    only the first word to reach each matrix; the first revisit is optimal.

    ``sum_of_lengths``: the first revisit is not optimal for this measure
    (mod 7 it gives lengths 5 + 6 while ABABAB = I gives 0 + 6), so relations
    are searched level by level in total length with a meet-in-the-middle
    match of v1^-1 u1 against v2 u2^-1.

    When more than ``cap`` products would be formed the result is partial:
    ``girth=None`` and ``lower_bound`` a length below which no relation exists.
    """
    if definition not in DEFINITIONS:
        raise ValueError(f"definition must be one of {DEFINITIONS}")
    gens = _gens_of(gens)
    if definition == "max_of_lengths":
        return _girth_max(gens, cap)
    return _girth_sum(gens, cap)


def validate_witness(gens: Union[SchemeParams, Sequence[Mat2]], u: str, v: str) -> bool:
    """True when u and v are distinct words with equal products."""
    if isinstance(gens, SchemeParams):
        gens = gens.gens
    return u != v and word_product(u, gens) == word_product(v, gens)


def lift_check(int_gens: Sequence[Mat2], u: str, v: str) -> Tuple[bool, int]:
    """Integer products of u and v: (distinct?, largest |entry| across both)."""
    U, V = word_product(u, int_gens), word_product(v, int_gens)
    return U != V, max(max_abs_entry(U), max_abs_entry(V))


def collision_search_birthday(
    params: SchemeParams,
    word_length: int,
    budget: int,
    seed: int = 0,
) -> Optional[Tuple[str, str]]:
    """Hash random ``word_length``-bit inputs until two distinct ones collide.

    Returns the colliding bit strings, or None once ``budget`` inputs were tried.
    """
    if params.domain.kind == "int":
        raise ValueError("collision search needs a modular scheme")
    rng = np.random.Generator(np.random.Philox(seed))
    seen: dict = {}
    batch = 4096
    done = 0
    while done < budget:
        k = min(batch, budget - done)
        rows = rng.integers(0, 2, size=(k, word_length), dtype=np.uint8)
        for row in rows:
            word = "".join("1" if b else "0" for b in row)
            key = HashState(params).absorb_bits(word)._acc
            prev = seen.setdefault(key, word)
            if prev != word:
                return prev, word
        done += k
    return None


def birthday_success_probability(trials: int, group_order: int) -> float:
    """1 - exp(-t(t-1)/2N) for t uniform draws from N values."""
    return 1.0 - math.exp(-trials * (trials - 1) / (2.0 * group_order))
