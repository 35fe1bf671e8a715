"""Batch verification suites behind ``avalanche verify``."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from . import fixtures
from .construct import function_of, opposite, parse_blocks, sac_concat, theorem2_family
from .core import (
    BooleanFunction,
    autocorrelation,
    from_anf,
    hamming_weight,
    is_balanced,
    parse_anf,
    walsh_transform,
)
from .criteria import (
    SUNG_MIN_N,
    analyze,
    gac_indicators,
    linear_structures,
    nonlinearity,
    nl_upper_from_sigma,
    pc_profile,
    sac_check_blockwise,
    sigma_from_spectrum,
    son_lower,
    sung_lower,
    thm1_sigma_band,
    thm2_nl_lower,
    thm2_sigma_band,
)
from .oracles import (
    autocorrelation_by_definition,
    nonlinearity_batch,
    sac_by_definition,
    walsh_by_definition,
)

log = logging.getLogger(__name__)

DEFAULT_SEED = 2024


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}" + (f": {self.detail}" if self.detail else "")


# ---------------------------------------------------------------------------
# samplers


def random_balanced(n: int, rng: np.random.Generator) -> BooleanFunction:
    bits = np.zeros(1 << n, dtype=np.uint8)
    bits[rng.permutation(1 << n)[: 1 << (n - 1)]] = 1
    return BooleanFunction(n, bits)


def random_with_linear_structure(n: int, alpha: int, c: int, rng: np.random.Generator) -> BooleanFunction:
    """Random f with ``f(x + alpha) = f(x) + c`` for all x."""
    idx = np.arange(1 << n)
    reps = idx[idx < (idx ^ alpha)]
    bits = np.zeros(1 << n, dtype=np.uint8)
    vals = rng.integers(0, 2, size=reps.size, dtype=np.uint8)
    bits[reps] = vals
    bits[reps ^ alpha] = vals ^ c
    return BooleanFunction(n, bits)


def random_even_vector(m: int, rng: np.random.Generator) -> int:
    while True:
        v = int(rng.integers(1, 1 << m))
        if hamming_weight(v) % 2 == 0:
            return v


def random_odd_vector(m: int, rng: np.random.Generator) -> int:
    while True:
        v = int(rng.integers(1, 1 << m))
        if hamming_weight(v) % 2:
            return v


def affine_functions(n: int):
    for coeffs in product((0, 1), repeat=n):
        for b in (0, 1):
            yield BooleanFunction.affine(coeffs, b)


# ---------------------------------------------------------------------------
# suites


def suite_oracles(seed: int = DEFAULT_SEED, exhaustive_n4: bool = True) -> list[Check]:
    rng = np.random.default_rng(seed)
    checks = []

    bad = 0
    for n in range(1, 7):
        for _ in range(20):
            f = BooleanFunction.random(n, rng)
            bad += list(walsh_transform(f).values) != walsh_by_definition(f)
    checks.append(Check("walsh vs definition", bad == 0, f"{bad} mismatches over 120 functions, n=1..6"))

    bad = total = 0
    for x in range(256):
        f = BooleanFunction(3, [(x >> (7 - i)) & 1 for i in range(8)])
        bad += list(autocorrelation(f).values) != autocorrelation_by_definition(f)
        total += 1
    for n in (1, 2, 4, 5, 6):
        for _ in range(20 if n < 5 else 100):
            f = BooleanFunction.random(n, rng)
            bad += list(autocorrelation(f).values) != autocorrelation_by_definition(f)
            total += 1
    checks.append(Check("autocorrelation vs definition", bad == 0, f"{bad} mismatches over {total} functions"))

    if exhaustive_n4:
        tables = ((np.arange(1 << 16)[:, None] >> (15 - np.arange(16))[None, :]) & 1).astype(np.uint8)
        brute = nonlinearity_batch(tables, 4)
        fast = np.array([nonlinearity(walsh_transform(BooleanFunction(4, t))) for t in tables])
        bad = int((brute != fast).sum())
        checks.append(Check("nonlinearity vs affine distance (all n=4)", bad == 0, f"{bad} mismatches over 65536"))
    bad = 0
    for n in (5, 6):
        tables = rng.integers(0, 2, size=(200, 1 << n), dtype=np.uint8)
        brute = nonlinearity_batch(tables, n)
        fast = np.array([nonlinearity(walsh_transform(BooleanFunction(n, t))) for t in tables])
        bad += int((brute != fast).sum())
    checks.append(Check("nonlinearity vs affine distance (n=5,6 sample)", bad == 0, f"{bad} mismatches over 400"))

    bad = sac_hits = 0
    for n in range(3, 9):
        for i in range(200):
            # plant SAC functions so both outcomes are exercised
            f = sac_concat(BooleanFunction.random(n - 1, rng), int(rng.integers(2))) if i % 4 == 0 else BooleanFunction.random(n, rng)
            ac = autocorrelation(f)
            by_ac = all(ac[1 << j] == 0 for j in range(n))
            sac_hits += by_ac
            bad += (sac_check_blockwise(f) != by_ac) + (pc_profile(ac).sac != by_ac)
            if n <= 5:
                bad += sac_by_definition(f) != by_ac
    checks.append(Check("blockwise SAC vs Delta(e_i) = 0", bad == 0, f"{bad} mismatches over 1200 ({sac_hits} SAC)"))
    return checks


def suite_exhaustive_n3() -> list[Check]:
    parseval = sigma_range = sigma_routes = son = 0
    balanced = 0
    for x in range(256):
        f = BooleanFunction(3, [(x >> (7 - i)) & 1 for i in range(8)])
        s = walsh_transform(f)
        sigma, delta = gac_indicators(autocorrelation(f))
        parseval += int((s.values ** 2).sum()) != 64
        sigma_range += not (64 <= sigma <= 512 and 0 <= delta <= 8)
        sigma_routes += sigma != sigma_from_spectrum(s)
        if is_balanced(f):
            balanced += 1
            son += sigma < son_lower(3)
    return [
        Check("Parseval, all 256 n=3 functions", parseval == 0, f"{parseval} failures"),
        Check("2^(2n) <= sigma <= 2^(3n), all n=3", sigma_range == 0, f"{sigma_range} failures"),
        Check("sigma = 2^-n sum W^4, all n=3", sigma_routes == 0, f"{sigma_routes} failures"),
        Check("balanced sigma lower bound, all balanced n=3", balanced == 70 and son == 0, f"{balanced} balanced, {son} failures"),
    ]


def suite_bounds(seed: int = DEFAULT_SEED) -> list[Check]:
    rng = np.random.default_rng(seed)
    eq7 = routes = son = sung = bsum = parseval = 0
    tested = sung_tested = 0
    for n in range(3, 11):
        for _ in range(100):
            f = random_balanced(n, rng)
            s = walsh_transform(f)
            ac = autocorrelation(f)
            sigma, _ = gac_indicators(ac)
            tested += 1
            parseval += int((s.values ** 2).sum()) != 1 << (2 * n)
            routes += sigma != sigma_from_spectrum(s)
            nl = nonlinearity(s)
            # N <= 2^(n-1) - 1/2 sqrt(sigma / 2^n), squared
            eq7 += ((1 << n) - 2 * nl) ** 2 * (1 << n) < sigma
            son += sigma < son_lower(n)
            t = len(pc_profile(ac).pc_vectors)
            if n >= SUNG_MIN_N and t <= (1 << n) - 2:
                sung_tested += 1
                sung += sigma < sung_lower(n, t)[0]
            bsum += sum(Fraction(int(d) + (1 << n), 8) - Fraction(1 << n, 8) for d in ac.values) != 0
    return [
        Check("Parseval, random balanced n=3..10", parseval == 0, f"{parseval}/{tested}"),
        Check("sigma routes agree", routes == 0, f"{routes}/{tested}"),
        Check("N <= 2^(n-1) - sqrt(sigma/2^n)/2", eq7 == 0, f"{eq7}/{tested}"),
        Check("balanced sigma lower bound", son == 0, f"{son}/{tested}"),
        Check("PC(t) sigma lower bound, n>=4", sung == 0, f"{sung}/{sung_tested}"),
        Check("sum of (b_x - 2^(n-3)) vanishes", bsum == 0, f"{bsum}/{tested}"),
    ]


def suite_paper_examples() -> list[Check]:
    checks = []
    f_blocks = function_of(parse_blocks(fixtures.EXAMPLE1_BLOCKS))
    f_anf = from_anf(parse_anf(fixtures.EXAMPLE1_ANF, 8))
    r = analyze(f_blocks)
    checks += [
        Check("example 1: block string and ANF agree", f_blocks == f_anf),
        Check("example 1: balanced", r.balanced),
        Check("example 1: N = 112", r.nonlinearity == 112, str(r.nonlinearity)),
        Check("example 1: sigma = 262144", r.sigma == 262144, str(r.sigma)),
        Check("example 1: Delta = 256", r.delta_abs == 256, str(r.delta_abs)),
        Check("example 1: SAC", r.sac and sac_check_blockwise(f_blocks)),
        Check("example 1: non-PC = {e7+e8, e3+e4+e8, e3+e4+e7}", r.non_pc_vectors == fixtures.EXAMPLE1_NON_PC),
        Check("example 1: non-PC vectors are linear structures", r.linear_structures == r.non_pc_vectors),
        Check("example 1: equals the default segment construction", theorem2_family(8) == f_blocks),
    ]
    g_blocks = function_of(parse_blocks(fixtures.EXAMPLE2_BLOCKS))
    g_anf = from_anf(parse_anf(fixtures.EXAMPLE2_ANF, 8))
    r = analyze(g_blocks)
    checks += [
        Check("example 2: block string and ANF agree", g_blocks == g_anf),
        Check("example 2: balanced", r.balanced),
        Check("example 2: N = 112", r.nonlinearity == 112, str(r.nonlinearity)),
        Check("example 2: sigma = 262144", r.sigma == 262144, str(r.sigma)),
        Check("example 2: SAC", r.sac and sac_check_blockwise(g_blocks)),
        Check("example 2: 252 PC vectors", len(r.pc_vectors) == fixtures.EXAMPLE2_PC_COUNT, f"{len(r.pc_vectors)} PC vectors"),
    ]
    checks += [
        Check("balanced sigma lower bound n=8 = 67584", son_lower(8) == 67584),
        Check("PC(251) sigma lower bound n=8 = 81920", sung_lower(8, 251) == (81920, 3)),
        Check("N upper from sigma=262144, n=8 = 112", nl_upper_from_sigma(8, 262144) == 112),
    ]
    return checks


def suite_thm1(seed: int = DEFAULT_SEED, per_n: int = 50) -> list[Check]:
    rng = np.random.default_rng(seed)
    checks = []

    for n in range(4, 13):
        cases = bad = 0
        hs = list(affine_functions(n - 1)) if n <= 7 else [
            BooleanFunction.affine(rng.integers(0, 2, n - 1), int(rng.integers(2))) for _ in range(16)
        ]
        for h in hs:
            for a in (None, 1):
                f = sac_concat(h, 0, a)
                if not is_balanced(f):
                    continue
                cases += 1
                r = analyze(f)
                ok = r.sac and r.sigma == 1 << (3 * n - 2) and r.nonlinearity == 1 << (n - 2) and r.delta_abs == 1 << n
                bad += not ok
        checks.append(Check(f"affine h, n={n}: sigma=2^(3n-2), N=2^(n-2), Delta=2^n", cases > 0 and bad == 0, f"{bad}/{cases}"))

    for n in range(4, 11):
        m = n - 1
        cases = bad = tries = 0
        while cases < per_n:
            tries += 1
            h = random_with_linear_structure(m, random_even_vector(m, rng), int(rng.integers(2)), rng)
            a = random_odd_vector(m, rng) if rng.integers(2) else None
            f = sac_concat(h, int(rng.integers(2)), a)
            if not is_balanced(f):
                continue
            _, l_even = linear_structures(autocorrelation(h))
            r = analyze(f)
            lo, hi = thm1_sigma_band(n, l_even)
            cases += 1
            if not (l_even >= 1 and r.sac and lo <= r.sigma <= hi and r.delta_abs == 1 << n):
                bad += 1
                log.info("thm1 failure n=%d l_even=%d sigma=%d delta=%d", n, l_even, r.sigma, r.delta_abs)
        checks.append(Check(f"Theorem 1 band, n={n}", bad == 0, f"{bad}/{cases} failures ({tries} draws)"))
    return checks


def suite_thm2() -> list[Check]:
    checks = []
    for n in (8, 10, 12):
        f = theorem2_family(n)
        r = analyze(f)
        ok = (
            r.balanced
            and r.sac
            and r.sigma == 1 << (2 * n + 2)
            and r.nonlinearity == (1 << (n - 1)) - (1 << (n // 2))
            and r.delta_abs == 1 << n
            and len(r.non_pc_vectors) == 3
            and r.linear_structures == r.non_pc_vectors
        )
        checks.append(Check(f"segment family n={n}", ok, f"N={r.nonlinearity} sigma={r.sigma} non-PC={len(r.non_pc_vectors) + 1} incl. 0"))
    for n in (9, 11):
        f = theorem2_family(n)
        r = analyze(f)
        lo, hi = thm2_sigma_band(n)
        ok = r.balanced and r.sac and lo <= r.sigma <= hi and r.delta_abs == 1 << n and r.nonlinearity >= thm2_nl_lower(n)
        checks.append(Check(f"segment family n={n}", ok, f"measured N={r.nonlinearity} (bound {thm2_nl_lower(n)}), sigma=2^{r.sigma.bit_length() - 1}"))
    bad = 0
    for n in range(2, 6):
        for g in affine_functions(n):
            for gran in ("block", "bit"):
                bad += opposite(opposite(g, gran), gran) != g
    checks.append(Check("opposite is an involution on all affine n=2..5", bad == 0, f"{bad} failures"))
    return checks


SUITES = {
    "oracles": suite_oracles,
    "bounds": suite_bounds,
    "paper-examples": suite_paper_examples,
    "exhaustive-n3": suite_exhaustive_n3,
    "thm1": suite_thm1,
    "thm2": suite_thm2,
}

SEEDED = {"oracles", "bounds", "thm1"}


def run_suite(name: str, seed: int = DEFAULT_SEED) -> list[Check]:
    if name not in SUITES:
        raise KeyError(name)
    fn = SUITES[name]
    return fn(seed) if name in SEEDED else fn()
