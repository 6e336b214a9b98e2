import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cayleyhash.gf2n import alpha, default_field
from cayleyhash.hasher import (
    COOKIE_C,
    HashState,
    SchemeParams,
    absorb_bit,
    absorb_bytes,
    combine,
    combine_digests,
    default_prime,
    finalize,
    get_scheme,
    hash_bits,
    hash_bytes,
    identity_digest,
    lower,
    new_state,
    upper,
)
from cayleyhash.matrix_core import Mat2, deserialize, mat_det, mat_identity, serialize

PLAIN = ("zemor", "bsv", "neg", "tz")


def product(word, gens):
    out = mat_identity(gens[0].domain)
    for ch in word:
        out = out @ gens["AB".index(ch)]
    return out


def test_default_prime():
    p = default_prime()
    assert p == (1 << 256) - 189
    assert p.bit_length() == 256


def test_builtin_generators():
    assert get_scheme("zemor", integer=True).gens == (upper(1), lower(1))
    assert get_scheme("bsv", integer=True).gens == (upper(2), lower(2))
    assert get_scheme("neg", integer=True).gens == (upper(2), lower(-2))
    assert get_scheme("cookies", integer=True).gens == (upper(2), lower(2), COOKIE_C)
    tz = get_scheme("tz")
    al = alpha(default_field())
    assert tz.A.entries == (al, 1, 1, 0)
    assert tz.B.entries == (al, al ^ 1, 1, 1)


def test_neg_generator_is_canonical():
    p = 101
    assert get_scheme("neg", prime=p).B.entries == (1, 0, 99, 1)


def test_unknown_scheme():
    with pytest.raises(ValueError):
        get_scheme("sha")


def test_params_validation():
    with pytest.raises(ValueError):
        SchemeParams("x", upper(2), upper(2))
    with pytest.raises(ValueError):
        SchemeParams("x", upper(2), Mat2(1, 1, 1, 1))
    assert SchemeParams("x", upper(2), upper(2), check=False).A == upper(2)


@pytest.mark.parametrize("sid", PLAIN)
def test_reference_word_1001011(sid):
    params = get_scheme(sid)
    st_ = HashState(params, trace=True).absorb_bits("1001011")
    assert "".join(st_.letters) == "BAABABB"
    assert st_.acc == product("BAABABB", params.gens)


def test_bsv_integer_regression_vector():
    # frozen from an independent numpy product of B(2)A(2)A(2)B(2)A(2)B(2)B(2)
    assert hash_bits(get_scheme("bsv", integer=True), "1001011").rows() == [[97, 22], [216, 49]]
    assert hash_bits(get_scheme("zemor", integer=True), "1001011").rows() == [[13, 5], [18, 7]]
    assert hash_bits(get_scheme("neg", integer=True), "1001011").rows() == [[33, -10], [-56, 17]]


def test_tz_single_zero():
    params = get_scheme("tz")
    assert hash_bits(params, "0") == params.A
    assert hash_bits(params, "1") == params.B


@pytest.mark.parametrize("sid", PLAIN + ("cookies",))
def test_fresh_state(sid):
    params = get_scheme(sid)
    state = new_state(params)
    assert state.acc == mat_identity(params.domain)
    assert state.bits_consumed == 0
    assert finalize(state) == identity_digest(params)


def test_byte_expansion_msb_first():
    params = get_scheme("bsv")
    a = new_state(params, trace=True)
    absorb_bytes(a, b"\x96")
    assert a.letters == list("BAABABBA")
    b = new_state(params)
    for bit in (1, 0, 0, 1, 0, 1, 1, 0):
        absorb_bit(b, bit)
    assert finalize(a) == finalize(b)
    assert hash_bytes(params, b"\x00") == serialize(params.A ** 8, "bsv")
    assert hash_bytes(params, b"") == identity_digest(params)


def test_finalize_is_a_read():
    state = new_state(get_scheme("bsv")).absorb_bits("10")
    d1 = state.finalize()
    assert state.finalize() == d1
    assert new_state(get_scheme("bsv")).absorb_bits("1").absorb_bit(0).finalize() == d1


def test_digest_sizes():
    assert len(hash_bytes(get_scheme("bsv"), b"abc")) == 128
    assert len(hash_bytes(get_scheme("tz"), b"abc")) == 64


@pytest.mark.parametrize("sid", PLAIN)
def test_combine_examples(sid):
    params = get_scheme(sid)
    H = lambda bits: hash_bits(params, bits)
    assert combine(H("10"), H("01")) == H("1001")
    assert combine(mat_identity(params.domain), H("0110")) == H("0110")


@pytest.mark.parametrize("sid", PLAIN)
def test_amended_document(sid):
    params = get_scheme(sid)
    rng = random.Random(sid)
    doc, appendix = rng.randbytes(1024), rng.randbytes(1024)
    whole = hash_bytes(params, doc + appendix)
    assert combine_digests(hash_bytes(params, doc), hash_bytes(params, appendix), params) == whole


bitstrings = st.text(alphabet="01", max_size=3000)


@pytest.mark.parametrize("sid", PLAIN)
@settings(max_examples=25, deadline=None)
@given(x=bitstrings, y=bitstrings, z=bitstrings)
def test_homomorphism_and_associativity(sid, x, y, z):
    params = get_scheme(sid)
    H = lambda bits: hash_bits(params, bits)
    assert H(x + y) == combine(H(x), H(y))
    assert H(x + y + z) == combine(combine(H(x), H(y)), H(z)) == combine(H(x), combine(H(y), H(z)))


@pytest.mark.parametrize("sid", PLAIN + ("cookies",))
@settings(max_examples=25, deadline=None)
@given(data=st.binary(max_size=200), cuts=st.lists(st.integers(0, 1600), max_size=6))
def test_streaming_equals_batch(sid, data, cuts):
    params = get_scheme(sid)
    bits = "".join(format(b, "08b") for b in data)
    state = new_state(params)
    pos = 0
    for i, cut in enumerate(sorted(c for c in cuts if c <= len(bits))):
        chunk = bits[pos:cut]
        if i % 3 == 0:
            for ch in chunk:
                state.absorb_bit(int(ch))
        else:
            state.absorb_bits(chunk)
        pos = cut
    state.absorb_bits(bits[pos:])
    assert state.finalize() == hash_bytes(params, data)
    # the slow per-bit path agrees with the table-driven one
    traced = new_state(params, trace=True).absorb_bytes(data)
    assert traced.finalize() == hash_bytes(params, data)


@pytest.mark.parametrize("sid", PLAIN + ("cookies",))
@settings(max_examples=40, deadline=None)
@given(data=st.binary(max_size=64))
def test_sl2_membership(sid, data):
    params = get_scheme(sid)
    m = deserialize(hash_bytes(params, data), params.domain)
    assert mat_det(m) == 1


def test_small_prime_scheme_digest_width():
    params = get_scheme("bsv", prime=251)
    assert len(hash_bytes(params, b"x")) == 4


def test_integer_scheme_cannot_finalize():
    with pytest.raises(ValueError):
        new_state(get_scheme("bsv", integer=True)).finalize()


def test_bad_bits():
    with pytest.raises(ValueError):
        new_state(get_scheme("bsv")).absorb_bits("012")
    with pytest.raises(ValueError):
        new_state(get_scheme("bsv")).absorb_bit(2)


def test_copy_is_independent():
    s = new_state(get_scheme("cookies")).absorb_bits("111")
    t = s.copy()
    t.absorb_bits("1")
    assert s.bits_consumed == 3 and t.bits_consumed == 4
    assert s.cookie_state != t.cookie_state or s.acc != t.acc
