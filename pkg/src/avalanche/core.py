"""Truth tables, transforms and the text formats built on them.

Indexing convention used everywhere in the package: table index ``i`` holds
``f(x_1, ..., x_n)`` where ``x_1`` is the most significant bit of ``i``.  The
first half of a table is therefore the ``x_1 = 0`` slice, and a vector
``alpha`` (direction of a derivative, Walsh mask, ...) is an ``int`` read with
the same bit order.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

import numpy as np

MAX_N = 24


class DimensionError(ValueError):
    """Operands live on different numbers of variables."""


class ParseError(ValueError):
    """Text input does not match the expected format."""


class RangeError(ValueError):
    """Variable count outside the supported range."""


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be in 1..{MAX_N}, got {n}")


def hamming_weight(v: int) -> int:
    return bin(v).count("1")


def var_bit(j: int, n: int) -> int:
    """Index bit that carries variable ``x_j``."""
    if not 1 <= j <= n:
        raise ValueError(f"variable index x{j} out of range 1..{n}")
    return 1 << (n - j)


def vector_of_vars(vars_: Iterable[int], n: int) -> int:
    """The vector with ones exactly at the given variables."""
    v = 0
    for j in vars_:
        v |= var_bit(j, n)
    return v


def unit(i: int, n: int) -> int:
    """Unit vector ``e_i`` counted from the least significant index bit.

    ``e_1`` flips the last variable ``x_n`` and ``e_n`` flips ``x_1``; this is
    the labelling under which ``f(v_s)`` and ``f(v_s + 2^(i-1))`` differ in
    ``e_i``.
    """
    if not 1 <= i <= n:
        raise ValueError(f"e{i} out of range 1..{n}")
    return 1 << (i - 1)


def vector_str(v: int, n: int) -> str:
    """``x_1 ... x_n`` as a bit string."""
    return format(v, f"0{n}b")


def _butterfly(a: np.ndarray, op: str = "add") -> np.ndarray:
    """In-place radix-2 butterfly along the last axis (length 2^n)."""
    size = a.shape[-1]
    lead = a.shape[:-1]
    h = 1
    while h < size:
        v = a.reshape(*lead, size // (2 * h), 2, h)
        lo = v[..., 0, :]
        hi = v[..., 1, :]
        if op == "xor":
            hi ^= lo
        else:
            s = lo + hi
            hi[...] = lo - hi
            lo[...] = s
        h *= 2
    return a


@dataclass(frozen=True, eq=False)
class BooleanFunction:
    """A Boolean function on ``n`` variables given by its truth table."""

    n: int
    bits: np.ndarray

    def __post_init__(self):
        _check_n(self.n)
        bits = np.asarray(self.bits, dtype=np.uint8)
        if bits.shape != (1 << self.n,):
            raise ValueError(f"truth table length must be 2^{self.n}, got {bits.shape}")
        if bits.size and bits.max() > 1:
            raise ValueError("truth table entries must be 0 or 1")
        bits = bits.copy()
        bits.flags.writeable = False
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_bitstring(cls, s: str) -> BooleanFunction:
        s = "".join(s.split())
        if not s or set(s) - {"0", "1"}:
            raise ParseError(f"not a bit string: {s!r}")
        size = len(s)
        if size & (size - 1) or size < 2:
            raise ParseError(f"bit string length {size} is not a power of two >= 2")
        return cls(size.bit_length() - 1, np.frombuffer(s.encode(), dtype=np.uint8) - ord("0"))

    @classmethod
    def from_callable(cls, n: int, func) -> BooleanFunction:
        """Build from ``func(x)`` where ``x`` is the integer index."""
        return cls(n, np.array([func(x) & 1 for x in range(1 << n)], dtype=np.uint8))

    @classmethod
    def zero(cls, n: int) -> BooleanFunction:
        return cls(n, np.zeros(1 << n, dtype=np.uint8))

    @classmethod
    def affine(cls, coeffs: Iterable[int], b: int = 0) -> BooleanFunction:
        """``c_1 x_1 + ... + c_n x_n + b``."""
        coeffs = tuple(coeffs)
        n = len(coeffs)
        mask = vector_of_vars((j for j, c in enumerate(coeffs, 1) if c), n)
        return cls(n, _parity_table(n, mask) ^ (b & 1))

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> BooleanFunction:
        return cls(n, rng.integers(0, 2, size=1 << n, dtype=np.uint8))

    def __len__(self) -> int:
        return self.bits.size

    def __getitem__(self, x: int) -> int:
        return int(self.bits[x])

    def __eq__(self, other) -> bool:
        if not isinstance(other, BooleanFunction):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.bits, other.bits)

    def __hash__(self) -> int:
        return hash((self.n, self.bits.tobytes()))

    def __repr__(self) -> str:
        if self.n <= 6:
            return f"BooleanFunction({self.bitstring()!r})"
        return f"BooleanFunction(n={self.n}, {to_hex(self)})"

    def __xor__(self, other: BooleanFunction) -> BooleanFunction:
        return xor(self, other)

    def __invert__(self) -> BooleanFunction:
        return complement(self)

    def bitstring(self) -> str:
        return (self.bits + ord("0")).tobytes().decode()

    def sign(self) -> np.ndarray:
        """``(-1)^f(x)`` for every x."""
        return 1 - 2 * self.bits.astype(np.int64)

    def halves(self) -> tuple[BooleanFunction, BooleanFunction]:
        """The ``x_1 = 0`` and ``x_1 = 1`` sub-functions."""
        if self.n < 2:
            raise ValueError("cannot split a function of one variable")
        half = self.bits.size // 2
        return BooleanFunction(self.n - 1, self.bits[:half]), BooleanFunction(self.n - 1, self.bits[half:])

    def shift(self, a: int) -> BooleanFunction:
        """``x -> f(x + a)``."""
        return BooleanFunction(self.n, self.bits[np.arange(self.bits.size) ^ a])


def _parity_table(n: int, mask: int) -> np.ndarray:
    x = np.arange(1 << n, dtype=np.int64) & mask
    out = np.zeros(1 << n, dtype=np.uint8)
    while mask:
        low = mask & -mask
        out ^= ((x & low) != 0).astype(np.uint8)
        mask ^= low
    return out


# ---------------------------------------------------------------------------
# elementary operations


def weight(f: BooleanFunction) -> int:
    return int(f.bits.sum(dtype=np.int64))


def is_balanced(f: BooleanFunction) -> bool:
    return 2 * weight(f) == f.bits.size


def _same_n(f: BooleanFunction, g: BooleanFunction) -> None:
    if f.n != g.n:
        raise DimensionError(f"functions on {f.n} and {g.n} variables")


def xor(f: BooleanFunction, g: BooleanFunction) -> BooleanFunction:
    _same_n(f, g)
    return BooleanFunction(f.n, f.bits ^ g.bits)


def distance(f: BooleanFunction, g: BooleanFunction) -> int:
    _same_n(f, g)
    return int(np.count_nonzero(f.bits != g.bits))


def complement(f: BooleanFunction) -> BooleanFunction:
    return BooleanFunction(f.n, f.bits ^ 1)


def concat(h1: BooleanFunction, h2: BooleanFunction) -> BooleanFunction:
    """``(h1 | h2)``: h1 is the ``x_1 = 0`` half of the result."""
    _same_n(h1, h2)
    return BooleanFunction(h1.n + 1, np.concatenate([h1.bits, h2.bits]))


# ---------------------------------------------------------------------------
# spectra


@dataclass(frozen=True, eq=False)
class WalshSpectrum:
    n: int
    values: np.ndarray

    def __getitem__(self, w: int) -> int:
        return int(self.values[w])

    def max_abs(self) -> int:
        return int(np.abs(self.values).max())


@dataclass(frozen=True, eq=False)
class AutocorrVector:
    n: int
    values: np.ndarray

    def __getitem__(self, alpha: int) -> int:
        return int(self.values[alpha])

    def derivative_weight(self, alpha: int) -> int:
        """``(2^n - Delta(alpha)) / 2``."""
        return ((1 << self.n) - int(self.values[alpha])) // 2

    def b(self, alpha: int) -> int:
        """``(Delta(alpha) + 2^n) / 8``, i.e. half the weight of ``f(y) f(y + alpha)`` summed.

        Integral only where ``Delta(alpha) = -2^n (mod 8)``.
        """
        num = int(self.values[alpha]) + (1 << self.n)
        if num % 8:
            raise ValueError(f"b({alpha}) is not an integer")
        return num // 8


def walsh_transform(f: BooleanFunction) -> WalshSpectrum:
    """``W(w) = sum_x (-1)^(f(x) + w.x)`` by a Theta(n 2^n) butterfly."""
    values = _butterfly(f.sign())
    values.flags.writeable = False
    return WalshSpectrum(f.n, values)


def autocorrelation(f: BooleanFunction) -> AutocorrVector:
    """``Delta(alpha) = sum_x (-1)^(f(x) + f(x + alpha))``.

    Squared spectrum pushed back through the butterfly, then divided by 2^n.
    Every partial sum is bounded by sum W^2 = 2^(2n), so int64 holds for
    n <= 24.
    """
    total = _butterfly(walsh_transform(f).values ** 2)
    values = total >> f.n
    values.flags.writeable = False
    return AutocorrVector(f.n, values)


def derivative_weight(f: BooleanFunction, alpha: int) -> int:
    """Weight of ``x -> f(x) + f(x + alpha)``."""
    if not 0 <= alpha < f.bits.size:
        raise ValueError(f"vector {alpha} out of range for n={f.n}")
    return int(np.count_nonzero(f.bits != f.bits[np.arange(f.bits.size) ^ alpha]))


# ---------------------------------------------------------------------------
# algebraic normal form


@dataclass(frozen=True)
class Anf:
    """XOR of monomials; each monomial is a frozenset of variable indices.

    The empty monomial is the constant 1.
    """

    n: int
    monomials: frozenset

    def __post_init__(self):
        mons = frozenset(frozenset(m) for m in self.monomials)
        for m in mons:
            for j in m:
                if not 1 <= j <= self.n:
                    raise ValueError(f"variable index x{j} out of range 1..{self.n}")
        object.__setattr__(self, "monomials", mons)

    @property
    def degree(self) -> int:
        return max((len(m) for m in self.monomials), default=0)

    def __str__(self) -> str:
        return format_anf(self)


def to_anf(f: BooleanFunction) -> Anf:
    coeffs = _butterfly(f.bits.copy(), op="xor")
    n = f.n
    mons = []
    for u in np.flatnonzero(coeffs):
        u = int(u)
        mons.append(frozenset(j for j in range(1, n + 1) if u & (1 << (n - j))))
    return Anf(n, frozenset(mons))


def from_anf(a: Anf) -> BooleanFunction:
    coeffs = np.zeros(1 << a.n, dtype=np.uint8)
    for m in a.monomials:
        coeffs[vector_of_vars(m, a.n)] ^= 1
    return BooleanFunction(a.n, _butterfly(coeffs, op="xor"))


def algebraic_degree(f: BooleanFunction) -> int:
    return to_anf(f).degree


def _monomial_key(m: frozenset) -> tuple:
    return (len(m), sorted(m))


def format_anf(a: Anf) -> str:
    if not a.monomials:
        return "0"
    terms = []
    for m in sorted(a.monomials, key=_monomial_key):
        terms.append("1" if not m else "".join(f"x{j}" for j in sorted(m)))
    return " + ".join(terms)


_TOKEN = re.compile(r"x(\d+)")


def parse_anf(text: str, n: int | None = None) -> Anf:
    """Parse ``"x1 + x7 + x1x5"``-style text.

    ``n`` defaults to the largest variable index present.
    """
    body = "".join(text.split())
    if not body:
        raise ParseError("empty ANF")
    mons: set[frozenset] = set()
    if body != "0":
        for term in body.split("+"):
            if term == "1":
                m = frozenset()
            else:
                stripped = term.replace("*", "")
                if not stripped or _TOKEN.sub("", stripped):
                    raise ParseError(f"bad ANF term {term!r}")
                idx = [int(t) for t in _TOKEN.findall(stripped)]
                if any(j < 1 for j in idx):
                    raise ParseError(f"variable index must be >= 1 in {term!r}")
                m = frozenset(idx)
            mons ^= {m}
    top = max((max(m) for m in mons if m), default=0)
    if n is None:
        n = max(top, 1)
    if top > n:
        raise ParseError(f"variable x{top} exceeds n={n}")
    return Anf(n, frozenset(mons))


# ---------------------------------------------------------------------------
# hex truth tables

_HEX = re.compile(r"^n=(\d+):([0-9a-fA-F]+)$")


def to_hex(f: BooleanFunction) -> str:
    if f.n < 2:
        raise ValueError("hex format needs n >= 2")
    digits = f.bits.reshape(-1, 4) @ np.array([8, 4, 2, 1])
    return f"n={f.n}:" + "".join("0123456789abcdef"[d] for d in digits)


def parse_hex(text: str) -> BooleanFunction:
    m = _HEX.match("".join(text.split()))
    if not m:
        raise ParseError(f"expected 'n=<k>:<hex digits>', got {text.strip()!r}")
    n, digits = int(m.group(1)), m.group(2)
    if not 2 <= n <= MAX_N:
        raise RangeError(f"n must be in 2..{MAX_N} for hex input, got {n}")
    if len(digits) != (1 << n) // 4:
        raise ParseError(f"n={n} needs {(1 << n) // 4} hex digits, got {len(digits)}")
    bits = np.array([(int(d, 16) >> s) & 1 for d in digits for s in (3, 2, 1, 0)], dtype=np.uint8)
    return BooleanFunction(n, bits)
