"""Avalanche indicators, propagation criterion and the bound formulas.

All bound comparisons are exact.  Bounds of the form
``N <= 2^(n-1) - 1/2 sqrt(R)`` are stored as the largest integer ``N`` that
satisfies them, found by squaring.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

import numpy as np

from .core import (
    AutocorrVector,
    BooleanFunction,
    WalshSpectrum,
    algebraic_degree,
    autocorrelation,
    hamming_weight,
    is_balanced,
    walsh_transform,
    weight,
)


def nonlinearity(s: WalshSpectrum) -> int:
    """Distance to the nearest affine function, ``2^(n-1) - max|W| / 2``."""
    return (1 << (s.n - 1)) - s.max_abs() // 2


def sigma_from_spectrum(s: WalshSpectrum) -> int:
    """``2^-n sum W^4``; an independent route to the sum-of-squares indicator."""
    total = sum(int(v) ** 4 for v in s.values) if s.n > 15 else int((s.values ** 4).sum())
    q, r = divmod(total, 1 << s.n)
    assert r == 0, "sum of W^4 not divisible by 2^n"
    return q


def gac_indicators(ac: AutocorrVector) -> tuple[int, int]:
    """``(sigma, Delta)``: sum of ``Delta(alpha)^2`` over all alpha, and max ``|Delta(alpha)|`` over alpha != 0."""
    v = ac.values
    # sigma <= 2^(3n) overflows int64 past n = 20
    sigma = int((v * v).sum()) if ac.n <= 20 else sum(int(x) * int(x) for x in v)
    delta = int(np.abs(v[1:]).max()) if v.size > 1 else 0
    return sigma, delta


@dataclass(frozen=True)
class PcProfile:
    pc_vectors: frozenset
    non_pc_vectors: frozenset
    pc_degree: int
    sac: bool


def pc_profile(ac: AutocorrVector) -> PcProfile:
    zero = ac.values == 0
    zero[0] = False
    pc = frozenset(int(a) for a in np.flatnonzero(zero))
    non_pc = frozenset(range(1, 1 << ac.n)) - pc

    # smallest weight among failing vectors bounds the degree
    degree = min((hamming_weight(a) for a in non_pc), default=ac.n + 1) - 1
    return PcProfile(pc, non_pc, degree, degree >= 1)


def linear_structures(ac: AutocorrVector) -> tuple[frozenset, int]:
    """Nonzero alpha with ``|Delta(alpha)| = 2^n``, and how many of them have even weight."""
    full = np.abs(ac.values) == (1 << ac.n)
    full[0] = False
    found = frozenset(int(a) for a in np.flatnonzero(full))
    return found, sum(1 for a in found if hamming_weight(a) % 2 == 0)


def sac_check_blockwise(f: BooleanFunction) -> bool:
    """SAC from paired sign products, without computing the autocorrelation.

    For each ``i`` the table is cut into windows of ``2^i`` entries and every
    entry of a window's first half is paired with its partner ``2^(i-1)``
    further on; SAC holds iff each of the ``n`` pair sums vanishes.  For
    ``i >= 3`` the sum is taken over 4-bit blocks, where a pair of blocks
    ``M, N`` contributes ``#0 - #1`` of ``M + N``.
    """
    n = f.n
    if n < 3:
        raise ValueError("blockwise SAC check needs n >= 3")
    w = f.sign()
    for i in (1, 2):
        half = 1 << (i - 1)
        pairs = w.reshape(-1, 2, half)
        if int((pairs[:, 0, :] * pairs[:, 1, :]).sum()) != 0:
            return False
    blocks = f.bits.reshape(-1, 4)
    for i in range(3, n + 1):
        half = 1 << (i - 3)
        windows = blocks.reshape(-1, 2, half, 4)
        diff = windows[:, 0] ^ windows[:, 1]
        odot = 4 - 2 * diff.sum(axis=-1, dtype=np.int64)
        if int(odot.sum()) != 0:
            return False
    return True


# ---------------------------------------------------------------------------
# bound formulas


def _largest_nl(n: int, rhs: Fraction | int) -> int:
    """Largest integer N with ``2^n - 2N >= sqrt(rhs)``."""
    rhs = Fraction(rhs)
    ceil_rhs = -(-rhs.numerator // rhs.denominator)
    d = isqrt(ceil_rhs)
    if d * d < ceil_rhs:
        d += 1
    return ((1 << n) - d) // 2


def zz_sigma_range(n: int) -> tuple[int, int]:
    return 1 << (2 * n), 1 << (3 * n)


def son_lower(n: int) -> int:
    """Sum-of-squares lower bound for balanced functions."""
    return (1 << (2 * n)) + (1 << (n + 3))


# Below this n the PC(t) bound exceeds 2^(3n) and fails even for affine f.
SUNG_MIN_N = 4


def sung_lower(n: int, t: int) -> tuple[Fraction, int]:
    """Lower bound on sigma for balanced f with PC on ``t`` vectors; returns ``(bound, case)``.

    Meaningful for n >= SUNG_MIN_N only.
    """
    if not 0 <= t <= (1 << n) - 2:
        raise ValueError(f"t must be in 0..{(1 << n) - 2}, got {t}")
    base = 1 << (2 * n)
    threshold = (1 << n) - (1 << n) // 8 - 1 if n >= 3 else (1 << n) - 1
    if t <= threshold:
        if t % 2:
            return Fraction(base + 64 * ((1 << n) - t - 1)), 1
        return Fraction(base + 64 * ((1 << n) - t + 2)), 2
    return (1 + Fraction(1, (1 << n) - 1 - t)) * base, 3


def nl_upper_from_sigma(n: int, sigma: int) -> int:
    """Largest N with ``N <= 2^(n-1) - 1/2 sqrt(sigma / 2^n)``."""
    return _largest_nl(n, Fraction(sigma, 1 << n))


def zz_sac_nl_lower(n: int) -> int:
    """Nonlinearity lower bound ``2^(n-2)`` for SAC functions."""
    return 1 << (n - 2) if n >= 2 else 0


def thm1_sigma_band(n: int, l_even: int) -> tuple[int, int]:
    """Sum-of-squares band for balanced ``(h | l + g)`` with ``l_even`` even-weight linear structures in h."""
    return (1 << (2 * n)) * (1 + l_even), 1 << (3 * n - 2)


def nl_band(n: int, l_even: int) -> tuple[int, int]:
    """``2^(n-2) <= N <= 2^(n-1) - 2^(n/2-1) sqrt(1 + l_even)``, upper end as an integer."""
    return zz_sac_nl_lower(n), _largest_nl(n, (1 << n) * (1 + l_even))


def zz2_nl_upper(n: int) -> int | None:
    """Nonlinearity upper bound for balanced SAC functions, even n only."""
    if n % 2:
        return None
    return _largest_nl(n, (1 << n) + (1 << (n // 2 + 3)) + 16)


def sung_nl_upper(n: int) -> int | None:
    """Nonlinearity upper bound for balanced SAC functions, n > 2."""
    if n <= 2:
        return None
    k = n + 1 if n % 2 else n - 1
    return _largest_nl(n, (1 << n) + 64 - Fraction(k * 64, 1 << n))


def thm2_sigma_band(n: int) -> tuple[int, int]:
    eps = n % 2
    return 1 << (2 * n + 2), 1 << (2 * n + 2 + eps)


def thm2_nl_lower(n: int) -> int:
    return (1 << (n - 1)) - (1 << ((n + 1) // 2))


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class GacReport:
    n: int
    weight: int
    balanced: bool
    nonlinearity: int
    sigma: int
    delta_abs: int
    sac: bool
    pc_degree: int
    pc_vectors: frozenset
    non_pc_vectors: frozenset
    linear_structures: frozenset
    linear_structures_even: int
    algebraic_degree: int


def analyze(f: BooleanFunction) -> GacReport:
    """Compute every indicator of ``f``; cross-checks sigma against the spectrum route."""
    spec = walsh_transform(f)
    ac = autocorrelation(f)
    sigma, delta = gac_indicators(ac)
    sigma_w = sigma_from_spectrum(spec)
    if sigma != sigma_w:
        raise ArithmeticError(f"sigma mismatch: {sigma} via autocorrelation, {sigma_w} via spectrum")
    prof = pc_profile(ac)
    ls, ls_even = linear_structures(ac)
    return GacReport(
        n=f.n,
        weight=weight(f),
        balanced=is_balanced(f),
        nonlinearity=nonlinearity(spec),
        sigma=sigma,
        delta_abs=delta,
        sac=prof.sac,
        pc_degree=prof.pc_degree,
        pc_vectors=prof.pc_vectors,
        non_pc_vectors=prof.non_pc_vectors,
        linear_structures=ls,
        linear_structures_even=ls_even,
        algebraic_degree=algebraic_degree(f),
    )


@dataclass
class BoundsReport:
    n: int
    t: int | None = None
    l_h_even: int | None = None
    zz_sigma_lower: int = 0
    zz_sigma_upper: int = 0
    son_lower: int = 0
    sung_lower: Fraction | None = None
    sung_case: int | None = None
    # set when an even t carries a larger bound than the odd t - 1 below it
    sung_nonmonotone: bool | None = None
    nl_upper_from_sigma: int | None = None
    zz_sac_nl_lower: int = 0
    thm1_lower: int | None = None
    thm1_upper: int | None = None
    nl_band: tuple[int, int] | None = None
    zz2_nl_upper: int | None = None
    sung_nl_upper: int | None = None
    satisfied: dict = field(default_factory=dict)

    def violations(self) -> list[str]:
        return [k for k, ok in self.satisfied.items() if ok is False]


def bounds_report(
    n: int,
    t: int | None = None,
    l_h_even: int | None = None,
    report: GacReport | None = None,
) -> BoundsReport:
    """Evaluate every bound for dimension ``n``.

    With ``report`` given, ``t`` defaults to the number of PC vectors and each
    applicable bound is marked satisfied or violated.  Bounds whose hypotheses
    the function does not meet (e.g. the balanced-only ones on an unbalanced
    function) are left out of ``satisfied``.
    """
    if l_h_even is not None and l_h_even < 0:
        raise ValueError("l_h_even must be >= 0")
    if report is not None and t is None and len(report.pc_vectors) <= (1 << n) - 2:
        t = len(report.pc_vectors)

    lo, hi = zz_sigma_range(n)
    br = BoundsReport(
        n=n,
        t=t,
        l_h_even=l_h_even,
        zz_sigma_lower=lo,
        zz_sigma_upper=hi,
        son_lower=son_lower(n),
        zz_sac_nl_lower=zz_sac_nl_lower(n),
        zz2_nl_upper=zz2_nl_upper(n),
        sung_nl_upper=sung_nl_upper(n),
    )
    if t is not None:
        br.sung_lower, br.sung_case = sung_lower(n, t)
        br.sung_nonmonotone = br.sung_case == 2 and t >= 1 and br.sung_lower > sung_lower(n, t - 1)[0]
    if l_h_even is not None:
        br.thm1_lower, br.thm1_upper = thm1_sigma_band(n, l_h_even)
        br.nl_band = nl_band(n, l_h_even)
    if report is None:
        return br

    r = report
    br.nl_upper_from_sigma = nl_upper_from_sigma(n, r.sigma)
    ok = br.satisfied
    ok["zz_sigma_range"] = lo <= r.sigma <= hi and 0 <= r.delta_abs <= (1 << n)
    ok["nl_upper_from_sigma"] = r.nonlinearity <= br.nl_upper_from_sigma
    if r.balanced:
        ok["son_lower"] = r.sigma >= br.son_lower
        if br.sung_lower is not None and n >= SUNG_MIN_N:
            ok["sung_lower"] = r.sigma >= br.sung_lower
    if r.sac:
        ok["zz_sac_nl_lower"] = r.nonlinearity >= br.zz_sac_nl_lower
        if r.balanced:
            if br.zz2_nl_upper is not None:
                ok["zz2_nl_upper"] = r.nonlinearity <= br.zz2_nl_upper
            if br.sung_nl_upper is not None:
                ok["sung_nl_upper"] = r.nonlinearity <= br.sung_nl_upper
            if l_h_even is not None:
                ok["thm1_band"] = br.thm1_lower <= r.sigma <= br.thm1_upper
                ok["nl_band"] = br.nl_band[0] <= r.nonlinearity <= br.nl_band[1]
    return br
