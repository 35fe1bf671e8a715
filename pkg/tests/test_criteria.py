from fractions import Fraction

import mpmath
import numpy as np
import pytest

from avalanche import fixtures
from avalanche.construct import sac_concat
from avalanche.core import BooleanFunction, autocorrelation, from_anf, parse_anf, walsh_transform
from avalanche.criteria import (
    analyze,
    bounds_report,
    gac_indicators,
    linear_structures,
    nl_band,
    nl_upper_from_sigma,
    nonlinearity,
    pc_profile,
    sac_check_blockwise,
    sigma_from_spectrum,
    son_lower,
    sung_lower,
    sung_nl_upper,
    zz2_nl_upper,
)
from avalanche.oracles import nonlinearity_batch, nonlinearity_by_definition
from avalanche.verify import random_balanced

from conftest import all_functions

BENT4 = from_anf(parse_anf("x1x2 + x3x4"))


def test_nonlinearity_examples(example1):
    for coeffs in [(0, 0, 0), (1, 0, 1), (1, 1, 1)]:
        assert nonlinearity(walsh_transform(BooleanFunction.affine(coeffs, 1))) == 0
    assert nonlinearity_by_definition(BENT4) == 6
    assert nonlinearity(walsh_transform(BENT4)) == 6
    assert nonlinearity(walsh_transform(example1)) == fixtures.NONLINEARITY


@pytest.mark.parametrize("n", [2, 3, 5, 6])
def test_nonlinearity_matches_affine_distance(n, rng):
    tables = rng.integers(0, 2, size=(300, 1 << n), dtype=np.uint8)
    brute = nonlinearity_batch(tables, n)
    for t, d in zip(tables, brute):
        assert nonlinearity(walsh_transform(BooleanFunction(n, t))) == d


def test_gac_examples(example1):
    sigma, delta = gac_indicators(autocorrelation(BooleanFunction.affine([1, 0, 1])))
    assert (sigma, delta) == (512, 8)
    assert gac_indicators(autocorrelation(BENT4)) == (256, 0)
    assert gac_indicators(autocorrelation(example1))[0] == fixtures.SIGMA


@pytest.mark.parametrize("n", range(2, 11))
def test_sigma_two_routes(n, rng):
    for _ in range(100):
        f = BooleanFunction.random(n, rng)
        sigma, delta = gac_indicators(autocorrelation(f))
        assert sigma == sigma_from_spectrum(walsh_transform(f))
        assert 1 << (2 * n) <= sigma <= 1 << (3 * n)
        assert 0 <= delta <= 1 << n


def test_pc_profile_bent():
    p = pc_profile(autocorrelation(BENT4))
    assert len(p.pc_vectors) == 15 and not p.non_pc_vectors
    assert p.pc_degree == 4 and p.sac


def test_pc_profile_examples(example1, example2):
    p = pc_profile(autocorrelation(example1))
    assert p.non_pc_vectors == fixtures.EXAMPLE1_NON_PC
    assert p.sac and p.pc_degree == 1
    # the printed second example has 246 PC vectors; see the acceptance suite
    assert len(pc_profile(autocorrelation(example2)).pc_vectors) == 246


def test_pc_degree_zero_without_sac():
    p = pc_profile(autocorrelation(BooleanFunction.affine([1, 0, 0])))
    assert p.pc_degree == 0 and not p.sac


def test_pc_degree_counts_weights():
    # x1x2 + x3x4 + x5 fails only where x5 flips
    f = from_anf(parse_anf("x1x2 + x3x4 + x5"))
    p = pc_profile(autocorrelation(f))
    assert p.pc_degree == 0
    g = from_anf(parse_anf("x1x2 + x3x4"))
    assert pc_profile(autocorrelation(g)).pc_degree == 4


def test_sac_blockwise_examples(example1):
    assert not sac_check_blockwise(BooleanFunction.affine([1, 0, 0]))
    h = from_anf(parse_anf("x1x2", 3))
    f = sac_concat(h)
    assert sac_check_blockwise(f)
    assert pc_profile(autocorrelation(f)).sac
    assert sac_check_blockwise(example1)
    with pytest.raises(ValueError):
        sac_check_blockwise(BooleanFunction.affine([1, 1]))


@pytest.mark.parametrize("n", range(3, 9))
def test_sac_blockwise_agrees(n, rng):
    seen = set()
    for i in range(200):
        f = sac_concat(BooleanFunction.random(n - 1, rng)) if i % 3 == 0 else BooleanFunction.random(n, rng)
        expected = pc_profile(autocorrelation(f)).sac
        seen.add(expected)
        assert sac_check_blockwise(f) == expected
    assert seen == {True, False}


def test_linear_structures_examples(example1):
    f = BooleanFunction.affine([1, 1, 0, 1], 1)
    ls, even = linear_structures(autocorrelation(f))
    assert ls == frozenset(range(1, 16))
    assert even == 7
    assert linear_structures(autocorrelation(BooleanFunction.from_bitstring("0001"))) == (frozenset(), 0)
    ls, _ = linear_structures(autocorrelation(example1))
    assert ls == fixtures.EXAMPLE1_NON_PC


@pytest.mark.parametrize("n", range(2, 8))
def test_linear_structures_within_non_pc(n, rng):
    for _ in range(50):
        r = analyze(BooleanFunction.random(n, rng))
        assert r.linear_structures <= r.non_pc_vectors


# -- bound formulas ------------------------------------------------------------

def test_bound_spot_values():
    assert son_lower(8) == 67584
    assert sung_lower(8, 251) == (Fraction(81920), 3)
    assert nl_upper_from_sigma(8, 262144) == 112


def test_sung_cases():
    # threshold 2^8 - 2^5 - 1 = 223
    assert sung_lower(8, 223) == (Fraction(65536 + 64 * 32), 1)
    assert sung_lower(8, 222) == (Fraction(65536 + 64 * 36), 2)
    assert sung_lower(8, 224)[1] == 3
    assert sung_lower(8, 254) == (Fraction(2 * 65536), 3)
    for t in (-1, 255):
        with pytest.raises(ValueError):
            sung_lower(8, t)


def test_sung_nonmonotone_flag():
    assert bounds_report(8, t=10).sung_nonmonotone
    assert not bounds_report(8, t=9).sung_nonmonotone
    assert not bounds_report(8, t=251).sung_nonmonotone


def _float_nl_upper(n, radicand):
    with mpmath.workdps(60):
        r = Fraction(radicand)
        value = mpmath.mpf(r.numerator) / r.denominator
        return int(mpmath.floor(mpmath.mpf(2) ** (n - 1) - mpmath.sqrt(value) / 2))


@pytest.mark.parametrize("n", range(3, 13))
def test_nl_upper_matches_high_precision(n, rng):
    for sigma in list(rng.integers(1 << (2 * n), 1 << (3 * n), size=50)) + [1 << (2 * n), 1 << (3 * n)]:
        sigma = int(sigma)
        assert nl_upper_from_sigma(n, sigma) == _float_nl_upper(n, Fraction(sigma, 1 << n))
    for l_even in range(0, 8):
        assert nl_band(n, l_even)[1] == _float_nl_upper(n, (1 << n) * (1 + l_even))
    if n % 2 == 0:
        assert zz2_nl_upper(n) == _float_nl_upper(n, (1 << n) + (1 << (n // 2 + 3)) + 16)
    k = n + 1 if n % 2 else n - 1
    assert sung_nl_upper(n) == _float_nl_upper(n, Fraction((1 << (2 * n)) + (1 << (n + 6)) - 64 * k, 1 << n))


def test_nl_band_lower():
    assert nl_band(8, 3)[0] == 64


def test_balanced_sigma_bound_exhaustive_n3():
    count = 0
    for f in all_functions(3):
        if f.bits.sum() == 4:
            count += 1
            assert gac_indicators(autocorrelation(f))[0] >= son_lower(3)
    assert count == 70


@pytest.mark.parametrize("n", range(3, 11))
def test_balanced_identities(n, rng):
    for _ in range(100):
        f = random_balanced(n, rng)
        ac = autocorrelation(f)
        assert sum(Fraction(ac.b(a)) - Fraction(1 << n, 8) for a in range(1 << n)) == 0
        r = analyze(f)
        # N <= 2^(n-1) - 1/2 sqrt(sigma/2^n), squared out
        assert ((1 << n) - 2 * r.nonlinearity) ** 2 * (1 << n) >= r.sigma
        assert r.sigma >= son_lower(n)


def test_bounds_report_fields():
    br = bounds_report(8, t=251, l_h_even=2)
    assert (br.zz_sigma_lower, br.zz_sigma_upper) == (1 << 16, 1 << 24)
    assert br.son_lower == 67584
    assert (br.sung_lower, br.sung_case) == (81920, 3)
    assert (br.thm1_lower, br.thm1_upper) == (3 << 16, 1 << 22)
    assert br.satisfied == {}
    with pytest.raises(ValueError):
        bounds_report(8, t=300)
    with pytest.raises(ValueError):
        bounds_report(8, l_h_even=-1)


def test_bounds_report_against_examples(example1):
    r = analyze(example1)
    br = bounds_report(8, report=r)
    assert br.t == 252
    assert br.nl_upper_from_sigma == 112
    assert br.violations() == []
    assert set(br.satisfied) >= {"zz_sigma_range", "son_lower", "sung_lower", "zz_sac_nl_lower", "zz2_nl_upper", "sung_nl_upper"}


def test_bounds_report_flags_violation():
    # an affine function does not meet the bent-like sigma claimed by a fake report
    r = analyze(BooleanFunction.affine([1, 0, 0, 0]))
    fake = r.__class__(**{**r.__dict__, "nonlinearity": 7})
    assert "nl_upper_from_sigma" in bounds_report(4, report=fake).violations()


def test_bounds_skip_inapplicable():
    r = analyze(BooleanFunction.from_bitstring("00000001"))
    br = bounds_report(3, report=r)
    assert "son_lower" not in br.satisfied
    assert "sung_lower" not in br.satisfied
