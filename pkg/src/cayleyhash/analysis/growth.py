"""Growth of entries in products of integer 2x2 matrices.

Exhaustive max-entry enumeration gives a lower estimate of the joint
spectral radius; spectral radii of periodic words give lower bounds on it.
"""

from __future__ import annotations

import math
from string import ascii_uppercase
from typing import Optional, Sequence

import mpmath
import numpy as np

from ..matrix_core import INTEGER, Mat2, mat_identity, mat_mul, max_abs_entry
from .reports import CapExceeded, GrowthReport, LyapunovReport

__all__ = [
    "COOKIE_TRIPLE_LITERATURE_FORMULA",
    "cookie_triple_growth",
    "default_cap",
    "enumerate_growth",
    "free_relation",
    "periodic_spectral_radius",
    "random_growth",
    "spectral_radius",
    "word_product",
]

_INT64_SAFE = 1 << 62
_PREFIX_BLOCK = 64

# value quoted for the (A(2), B(2), C) cookie triple and the closed form printed beside it
COOKIE_TRIPLE_QUOTED = 2.618
COOKIE_TRIPLE_LITERATURE_FORMULA = 3.5 + 1.5 * math.sqrt(5)


def default_cap(num_gens: int) -> int:
    """Largest word length enumerated without an explicit ``cap``."""
    if num_gens <= 2:
        return 24
    if num_gens == 3:
        return 16
    return int(24 / math.log2(num_gens))


def _check_gens(gens: Sequence[Mat2]) -> None:
    if not gens:
        raise ValueError("need at least one generator")
    for g in gens:
        if g.domain.kind != "int":
            raise ValueError("growth analysis needs integer matrices")


def word_product(word: str, gens: Sequence[Mat2]) -> Mat2:
    """Product of the generators named by ``word`` ('A' = gens[0], 'B' = gens[1], ...)."""
    out = mat_identity(gens[0].domain)
    for ch in word:
        out = mat_mul(out, gens[ascii_uppercase.index(ch)])
    return out


def _level(gens_arr: np.ndarray, k: int, dtype) -> np.ndarray:
    """All length-k products, rows in lexicographic word order."""
    P = np.array([[1, 0, 0, 1]], dtype=dtype)
    e, f, g, h = (gens_arr[:, i] for i in range(4))
    for _ in range(k):
        a, b, c, d = (P[:, i, None] for i in range(4))
        P = np.stack([a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h], axis=-1)
        P = P.reshape(-1, 4)
    return P


def _index_to_word(idx: int, n: int, m: int) -> str:
    letters = []
    for _ in range(n):
        idx, r = divmod(idx, m)
        letters.append(ascii_uppercase[r])
    return "".join(reversed(letters))


def enumerate_growth(gens: Sequence[Mat2], n: int, cap: Optional[int] = None) -> GrowthReport:
    """Exact maximum of |entry| over all len(gens)**n products of length n.

    Ties are broken towards the lexicographically smallest word. The word
    tree is split into prefixes and suffixes of about n/2 letters and the
    suffix products are swept in vectorised blocks.
    """
    _check_gens(gens)
    m = len(gens)
    if cap is None:
        cap = default_cap(m)
    if n < 1:
        raise ValueError("word length must be >= 1")
    if n > cap:
        raise CapExceeded(
            f"n={n} exceeds the enumeration cap {cap} for {m} generators; "
            f"pass cap= (CLI: --cap) to raise it"
        )

    norm = max(max(abs(g.a) + abs(g.b), abs(g.c) + abs(g.d)) for g in gens)
    # entries of a length-n product are bounded by the n-th power of the row-sum norm
    dtype = np.int64 if norm ** n < _INT64_SAFE else object
    G = np.array([g.entries for g in gens], dtype=dtype)

    h = n // 2
    P = _level(G, h, dtype)
    S = _level(G, n - h, dtype)
    sa, sb, sc, sd = (S[None, :, i] for i in range(4))
    ns = S.shape[0]

    best, best_idx = -1, 0
    for start in range(0, P.shape[0], _PREFIX_BLOCK):
        blk = P[start:start + _PREFIX_BLOCK]
        pa, pb, pc, pd = (blk[:, i, None] for i in range(4))
        mag = np.abs(pa * sa + pb * sc)
        for arr in (pa * sb + pb * sd, pc * sa + pd * sc, pc * sb + pd * sd):
            mag = np.maximum(mag, np.abs(arr))
        j = int(np.argmax(mag))  # first maximiser in row-major = smallest word
        v = int(mag.flat[j])
        if v > best:
            best = v
            row, col = divmod(j, ns)
            best_idx = (start + row) * ns + col

    word = _index_to_word(best_idx, n, m)
    return GrowthReport(n=n, max_entry=best, argmax_word=word, exponent=_root(best, n))


def _root(value: int, n: int) -> float:
    return math.exp(math.log(value) / n) if value > 0 else 0.0


def spectral_radius(x: Mat2, dps: int = 50) -> mpmath.mpf:
    """Largest |root| of t^2 - tr(x) t + det(x), in ``dps``-digit arithmetic."""
    if x.domain.kind != "int":
        raise ValueError("spectral radius needs an integer matrix")
    t = x.a + x.d
    det = x.a * x.d - x.b * x.c
    disc = t * t - 4 * det
    with mpmath.workdps(dps):
        if disc >= 0:
            r1 = (t + mpmath.sqrt(disc)) / 2
            r2 = (t - mpmath.sqrt(disc)) / 2
            return max(abs(r1), abs(r2))
        return mpmath.sqrt(det)  # complex pair, |lambda|^2 = det


def periodic_spectral_radius(word: str, gens: Sequence[Mat2]) -> float:
    """rho(M_word)^(1/|word|): the growth rate of powers of the word product."""
    if not word:
        raise ValueError("word must be nonempty")
    _check_gens(gens)
    M = word_product(word, gens)
    with mpmath.workdps(50):
        rho = spectral_radius(M)
        return float(rho ** (mpmath.mpf(1) / len(word)))


def random_growth(gens: Sequence[Mat2], n: int, trials: int, seed: int) -> LyapunovReport:
    """Mean of log(max |entry|)/n over ``trials`` uniformly random products of length n.

    Letters come from a Philox (counter-based) generator, so the report is a
    pure function of its arguments.
    """
    _check_gens(gens)
    if trials < 1 or n < 1:
        raise ValueError("n and trials must be >= 1")
    rng = np.random.Generator(np.random.Philox(seed))
    picks = rng.integers(0, len(gens), size=(trials, n))
    ents = [g.entries for g in gens]
    mul = INTEGER.matmul
    total = 0.0
    for row in picks:
        acc = (1, 0, 0, 1)
        for i in row:
            acc = mul(acc, ents[i])
        total += math.log(max_abs_entry(Mat2(*acc))) / n
    return LyapunovReport(n=n, trials=trials, seed=seed, mean_log_max_entry_over_n=total / trials)


def cookie_triple_growth(gens: Sequence[Mat2], n: int = 14, cap: Optional[int] = None) -> GrowthReport:
    """``enumerate_growth`` for a generator triple, annotated against both quoted cookie values."""
    rep = enumerate_growth(gens, n, cap)
    notes = (
        f"measured exponent {rep.exponent:.4f} at n={n}",
        f"quoted decimal 2.618 = (3+sqrt5)/2: difference {abs(rep.exponent - COOKIE_TRIPLE_QUOTED):.4f}",
        f"quoted closed form 7/2+3*sqrt5/2 = {COOKIE_TRIPLE_LITERATURE_FORMULA:.4f} does not equal 2.618; "
        f"difference {abs(rep.exponent - COOKIE_TRIPLE_LITERATURE_FORMULA):.4f}",
    )
    return GrowthReport(rep.n, rep.max_entry, rep.argmax_word, rep.exponent, notes)


def free_relation(gens: Sequence[Mat2], n: int):
    """First pair of distinct words of length <= n with equal integer products, or None.

    None means the generators satisfy no relation among words up to length n.
    """
    _check_gens(gens)
    m = len(gens)
    norm = max(max(abs(g.a) + abs(g.b), abs(g.c) + abs(g.d)) for g in gens)
    if norm ** n >= _INT64_SAFE:
        raise CapExceeded(f"entries at length {n} may overflow int64")
    G = np.array([g.entries for g in gens], dtype=np.int64)
    levels = [_level(G, k, np.int64) for k in range(n + 1)]
    allp = np.concatenate(levels)
    keys = np.ascontiguousarray(allp).view(np.dtype((np.void, allp.dtype.itemsize * 4))).ravel()
    _, first_idx, counts = np.unique(keys, return_index=True, return_counts=True)
    dup = np.nonzero(counts > 1)[0]
    if dup.size == 0:
        return None
    key = keys[first_idx[dup[0]]]
    hits = np.nonzero(keys == key)[0][:2]
    offsets = np.cumsum([0] + [lv.shape[0] for lv in levels])

    def word(flat):
        k = int(np.searchsorted(offsets, flat, side="right")) - 1
        return _index_to_word(int(flat - offsets[k]), k, m)

    return word(hits[0]), word(hits[1])
