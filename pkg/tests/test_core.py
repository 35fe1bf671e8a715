import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from avalanche.core import (
    Anf,
    BooleanFunction,
    DimensionError,
    ParseError,
    RangeError,
    autocorrelation,
    complement,
    concat,
    derivative_weight,
    distance,
    from_anf,
    is_balanced,
    parse_anf,
    parse_hex,
    to_anf,
    to_hex,
    unit,
    vector_of_vars,
    walsh_transform,
    weight,
    xor,
)
from avalanche.oracles import autocorrelation_by_definition, walsh_by_definition

from conftest import all_functions

bs = BooleanFunction.from_bitstring


@st.composite
def functions(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    bits = draw(st.lists(st.integers(0, 1), min_size=1 << n, max_size=1 << n))
    return BooleanFunction(n, bits)


def test_msb_convention():
    # x1 is the high index bit: the first half is the x1 = 0 slice
    x1 = BooleanFunction.affine([1, 0, 0])
    assert x1.bitstring() == "00001111"
    assert vector_of_vars([1], 3) == 0b100
    assert unit(1, 3) == 0b001 and unit(3, 3) == 0b100


def test_table_is_immutable():
    f = bs("0110")
    with pytest.raises(ValueError):
        f.bits[0] = 1


def test_bad_tables():
    with pytest.raises(ValueError):
        BooleanFunction(2, [0, 1, 1])
    with pytest.raises(ValueError):
        BooleanFunction(2, [0, 1, 2, 0])
    with pytest.raises(ValueError):
        BooleanFunction(25, [])


# -- ANF ---------------------------------------------------------------------

def test_from_anf_examples():
    assert from_anf(Anf(2, {frozenset()})) == bs("1111")
    assert from_anf(Anf(2, {frozenset({1, 2})})) == bs("0001")


def test_to_anf_examples():
    assert to_anf(bs("0000")).monomials == frozenset()
    assert to_anf(bs("0001")).monomials == {frozenset({1, 2})}
    assert to_anf(bs("0001")).degree == 2


def test_from_anf_rejects_bad_index():
    with pytest.raises(ValueError):
        Anf(2, {frozenset({3})})
    with pytest.raises(ParseError):
        parse_anf("x1 + x3", 2)


@pytest.mark.parametrize("text, expected", [
    ("x1x2", "x1x2"),
    ("x1*x2 + 1", "1 + x1x2"),
    (" x2 +x1 ", "x1 + x2"),
    ("x1 + x1", "0"),
    ("0", "0"),
])
def test_anf_text(text, expected):
    assert str(parse_anf(text, 2)) == expected


@pytest.mark.parametrize("text", ["", "x", "x1 + y2", "x1 ++ x2", "2x1", "x0"])
def test_anf_parse_errors(text):
    with pytest.raises(ParseError):
        parse_anf(text, 3)


@pytest.mark.parametrize("n", range(2, 11))
def test_mobius_round_trip(n, rng):
    for _ in range(100):
        f = BooleanFunction.random(n, rng)
        a = to_anf(f)
        assert from_anf(a) == f
        assert to_anf(from_anf(a)) == a


@given(functions(max_n=6))
def test_anf_degree_is_largest_monomial(f):
    a = to_anf(f)
    assert a.degree == max((len(m) for m in a.monomials), default=0)
    assert parse_anf(str(a), f.n) == a


# -- Walsh -------------------------------------------------------------------

def test_walsh_examples():
    assert list(walsh_transform(bs("0000")).values) == [4, 0, 0, 0]
    assert list(walsh_transform(bs("0011")).values) == [0, 0, 4, 0]
    bent = from_anf(parse_anf("x1x2 + x3x4"))
    w = walsh_transform(bent).values
    assert list(w) == walsh_by_definition(bent)
    assert set(np.abs(w)) == {4}


@pytest.mark.parametrize("n", range(2, 11))
def test_walsh_invariants(n, rng):
    for _ in range(100):
        f = BooleanFunction.random(n, rng)
        w = walsh_transform(f).values
        assert int((w.astype(object) ** 2).sum()) == 1 << (2 * n)
        assert w[0] == (1 << n) - 2 * weight(f)
        assert (w % 2 == 0).all()


@given(functions(max_n=6))
def test_walsh_matches_definition(f):
    assert list(walsh_transform(f).values) == walsh_by_definition(f)


# -- autocorrelation -----------------------------------------------------------

def test_autocorrelation_examples():
    assert list(autocorrelation(bs("1" * 16)).values) == [16] * 16
    assert list(autocorrelation(bs("0001")).values) == [4, 0, 0, 0]


def test_autocorrelation_exhaustive_n3():
    for f in all_functions(3):
        assert list(autocorrelation(f).values) == autocorrelation_by_definition(f)


@pytest.mark.parametrize("n", [1, 2, 4])
def test_autocorrelation_small_n(n, rng):
    fs = all_functions(n) if n < 4 else (BooleanFunction.random(4, rng) for _ in range(300))
    for f in fs:
        assert list(autocorrelation(f).values) == autocorrelation_by_definition(f)


@pytest.mark.parametrize("n", [5, 6])
def test_autocorrelation_random(n, rng):
    for _ in range(100):
        f = BooleanFunction.random(n, rng)
        assert list(autocorrelation(f).values) == autocorrelation_by_definition(f)


@pytest.mark.parametrize("n", range(2, 11))
def test_autocorrelation_invariants(n, rng):
    for _ in range(100):
        f = BooleanFunction.random(n, rng)
        ac = autocorrelation(f)
        assert ac[0] == 1 << n
        assert (ac.values[1:] % 4 == 0).all()
        assert (np.abs(ac.values) <= 1 << n).all()
        # squared spectrum through the butterfly gives 2^n Delta
        w = walsh_transform(f).values
        assert list(walsh_transform_of(w ** 2)) == list((1 << n) * ac.values)


def walsh_transform_of(values):
    from avalanche.core import _butterfly
    return _butterfly(values.copy())


def test_b_accessor_on_balanced(rng):
    from avalanche.verify import random_balanced
    f = random_balanced(6, rng)
    ac = autocorrelation(f)
    for a in range(64):
        assert 8 * ac.b(a) - 64 == ac[a]
        # b is half the count of y with f(y) = f(y + a) = 1
        assert 2 * ac.b(a) == sum(f[y] & f[y ^ a] for y in range(64))


def test_autocorrelation_large_n_is_exact(rng):
    f = BooleanFunction.random(14, rng)
    ac = autocorrelation(f)
    for a in (1, 77, 1 << 13, 12345):
        assert ac[a] == (1 << 14) - 2 * derivative_weight(f, a)


# -- derivative weight ------------------------------------------------------------

def test_derivative_weight_examples():
    f = bs("0001")
    assert derivative_weight(f, 0) == 0
    assert derivative_weight(f, 0b11) == 2
    g = BooleanFunction.affine([1, 0, 1], 1)
    for a in range(8):
        assert derivative_weight(g, a) in (0, 8)


@given(functions(min_n=2, max_n=7), st.data())
def test_derivative_weight_matches_autocorrelation(f, data):
    a = data.draw(st.integers(0, (1 << f.n) - 1))
    assert derivative_weight(f, a) == autocorrelation(f).derivative_weight(a)


# -- elementary ops ----------------------------------------------------------------

def test_elementary_examples():
    f = bs("0011")
    assert weight(f) == 2 and is_balanced(f)
    assert distance(f, f) == 0
    assert distance(f, complement(f)) == 4
    assert xor(f, bs("0101")) == bs("0110")
    assert concat(bs("00001111"), bs("01100110")) == bs("0000111101100110")


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        xor(bs("0011"), bs("00110011"))
    with pytest.raises(DimensionError):
        distance(bs("0011"), bs("00110011"))
    with pytest.raises(DimensionError):
        concat(bs("0011"), bs("00110011"))


@given(functions(max_n=6), st.data())
def test_concat_halves(h1, data):
    bits = data.draw(st.lists(st.integers(0, 1), min_size=1 << h1.n, max_size=1 << h1.n))
    h2 = BooleanFunction(h1.n, bits)
    lo, hi = concat(h1, h2).halves()
    assert lo == h1 and hi == h2


# -- hex ---------------------------------------------------------------------------

@pytest.mark.parametrize("text, bits", [("n=2:6", "0110"), ("n=3:69", "01101001"), ("n=2:1", "0001"), ("n=4:0F66", "0000111101100110")])
def test_hex(text, bits):
    f = parse_hex(text)
    assert f.bitstring() == bits
    assert to_hex(f) == text.lower()


@pytest.mark.parametrize("text", ["6", "n=2:", "n=2:66", "n=3:6", "n=2:g"])
def test_hex_parse_errors(text):
    with pytest.raises(ParseError):
        parse_hex(text)


@pytest.mark.parametrize("text", ["n=1:1", "n=25:0"])
def test_hex_range(text):
    with pytest.raises(RangeError):
        parse_hex(text)


@given(functions(min_n=2, max_n=8))
def test_hex_round_trip(f):
    assert parse_hex(to_hex(f)) == f
