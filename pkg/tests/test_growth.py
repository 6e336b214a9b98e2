import itertools
import math

import pytest

from cayleyhash.analysis.growth import (
    default_cap,
    enumerate_growth,
    free_relation,
    periodic_spectral_radius,
    random_growth,
    spectral_radius,
    word_product,
)
from cayleyhash.analysis.reports import CapExceeded
from cayleyhash.hasher import COOKIE_C, lower, upper
from cayleyhash.matrix_core import Mat2, max_abs_entry, mod_prime

ZEMOR = (upper(1), lower(1))
BSV = (upper(2), lower(2))
NEG = (upper(2), lower(-2))
COOKIES = (upper(2), lower(2), COOKIE_C)


def brute_force(gens, n):
    """Oracle: fold every word left to right with exact integers."""
    letters = "ABC"[: len(gens)]
    best, arg = -1, None
    for word in itertools.product(letters, repeat=n):
        acc = [[1, 0], [0, 1]]
        for ch in word:
            g = gens[letters.index(ch)].rows()
            acc = [[sum(acc[i][k] * g[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
        v = max(abs(e) for row in acc for e in row)
        if v > best:
            best, arg = v, "".join(word)
    return best, arg


@pytest.mark.parametrize("gens", [ZEMOR, BSV, NEG, COOKIES], ids=["zemor", "bsv", "neg", "cookies"])
@pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
def test_matches_brute_force(gens, n):
    rep = enumerate_growth(gens, n)
    assert (rep.max_entry, rep.argmax_word) == brute_force(gens, n)
    assert len(rep.argmax_word) == n
    assert rep.exponent >= 1


def test_small_examples():
    rep = enumerate_growth(ZEMOR, 2)
    assert rep.max_entry == 2
    # all four length-2 words reach 2; AB is one of them
    assert max_abs_entry(word_product("AB", ZEMOR)) == 2
    rep = enumerate_growth(BSV, 2)
    assert (rep.max_entry, rep.argmax_word) == (5, "AB")


def test_object_dtype_path():
    big = (Mat2(1, 10 ** 6, 0, 1), Mat2(1, 0, 10 ** 6, 1))
    rep = enumerate_growth(big, 6)
    assert (rep.max_entry, rep.argmax_word) == brute_force(big, 6)


def test_cap():
    assert default_cap(2) == 24 and default_cap(3) == 16
    with pytest.raises(CapExceeded, match="cap"):
        enumerate_growth(BSV, 25)
    assert enumerate_growth(ZEMOR, 25, cap=25).n == 25


def test_rejects_modular_generators():
    with pytest.raises(ValueError):
        enumerate_growth((Mat2(1, 1, 0, 1, mod_prime(7)),), 2)


@pytest.mark.parametrize("gens", [BSV, NEG, COOKIES], ids=["bsv", "neg", "cookies"])
def test_monotone_and_submultiplicative(gens):
    top = 12 if len(gens) == 2 else 9
    mx = {n: enumerate_growth(gens, n).max_entry for n in range(1, top + 1)}
    for n in range(1, top):
        assert mx[n] <= mx[n + 1]
    for n in range(1, top):
        for m in range(1, top - n + 1):
            assert mx[n + m] <= 2 * mx[n] * mx[m]


def test_argmax_structure_bsv():
    for n in range(2, 25, 2):
        word = enumerate_growth(BSV, n).argmax_word
        assert word in ("AB" * (n // 2), "BA" * (n // 2)), (n, word)


def test_argmax_structure_neg():
    for n in range(4, 25, 4):
        assert enumerate_growth(NEG, n).argmax_word == "AABB" * (n // 4)


def test_periodic_examples():
    golden = (1 + math.sqrt(5)) / 2
    assert word_product("AB", ZEMOR).rows() == [[2, 1], [1, 1]]
    assert abs(periodic_spectral_radius("AB", ZEMOR) - golden) < 1e-12
    assert word_product("AB", BSV).rows() == [[5, 2], [2, 1]]
    assert abs(periodic_spectral_radius("AB", BSV) - (1 + math.sqrt(2))) < 1e-12
    M = word_product("AABB", NEG)
    assert (M.a + M.d, M.a * M.d - M.b * M.c) == (-14, 1)
    assert abs(periodic_spectral_radius("AABB", NEG) - math.sqrt(2 + math.sqrt(3))) < 1e-12
    assert abs(periodic_spectral_radius("C", COOKIES) - (3 + math.sqrt(5)) / 2) < 1e-12


def test_spectral_radius_cases():
    assert abs(float(spectral_radius(Mat2(5, 2, 2, 1))) - (3 + 2 * math.sqrt(2))) < 1e-12
    assert float(spectral_radius(Mat2(0, -1, 1, 0))) == 1.0  # rotation, complex pair
    assert float(spectral_radius(Mat2(-15, 4, -4, 1))) == pytest.approx(7 + 4 * math.sqrt(3), abs=1e-9)


@pytest.mark.parametrize("gens, word", [(BSV, "AB"), (NEG, "AABB"), (ZEMOR, "AB"), (BSV, "AAB")])
def test_jsr_sandwich(gens, word):
    rho = periodic_spectral_radius(word, gens)
    for k in (1, 2, 3):
        n = k * len(word)
        mx = enumerate_growth(gens, n).max_entry
        assert rho <= (2 * mx) ** (1 / n) + 1e-12


def test_random_growth_bounds():
    rep = random_growth(BSV, 200, 100, seed=7)
    assert 0 < rep.mean_log_max_entry_over_n < math.log(1 + math.sqrt(2))
    assert rep.rate < 1 + math.sqrt(2)


def test_random_growth_n1():
    rep = random_growth(BSV, 1, 64, seed=3)
    # every single generator has max entry 2
    assert rep.mean_log_max_entry_over_n == pytest.approx(math.log(2))
    rep = random_growth(COOKIES, 1, 1, seed=0)
    assert rep.mean_log_max_entry_over_n == pytest.approx(math.log(2))


def test_random_growth_deterministic():
    a = random_growth(NEG, 150, 20, seed=11)
    b = random_growth(NEG, 150, 20, seed=11)
    assert a == b
    assert a.to_json() == b.to_json()
    assert random_growth(NEG, 150, 20, seed=12) != a


def test_free_relation():
    assert free_relation(BSV, 10) is None
    assert free_relation(COOKIES, 8) is None
    assert free_relation((upper(2), upper(2)), 2) == ("A", "B")
    u, v = free_relation((upper(1), upper(2)), 3)
    assert u != v and word_product(u, (upper(1), upper(2))) == word_product(v, (upper(1), upper(2)))


def test_report_text():
    text = enumerate_growth(BSV, 2).to_text()
    assert "max_entry=5" in text and "argmax_word=AB" in text


def test_cookie_triple_free_to_length_14():
    assert free_relation(COOKIES, 14) is None
