"""Block strings, the opposite transform and the two SAC constructions."""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Sequence, Union

import numpy as np

from .core import BooleanFunction, ParseError, algebraic_degree, concat, hamming_weight, is_balanced

PATTERNS = {
    "A": "0011",
    "B": "0101",
    "C": "0110",
    "D": "0000",
    "U": "1000",
    "V": "0001",
    "X": "0100",
    "Y": "0010",
}


class ConstructionError(ValueError):
    """Parameters violate a precondition of a construction."""


@dataclass(frozen=True)
class BlockLetter:
    letter: str
    complemented: bool = False

    def __post_init__(self):
        if self.letter not in PATTERNS:
            raise ValueError(f"unknown block letter {self.letter!r}")

    @property
    def bits(self) -> str:
        p = PATTERNS[self.letter]
        if self.complemented:
            p = p.translate(str.maketrans("01", "10"))
        return p

    def __invert__(self) -> BlockLetter:
        return BlockLetter(self.letter, not self.complemented)

    def __str__(self) -> str:
        return ("~" if self.complemented else "") + self.letter


_BY_BITS = {}
for _l in PATTERNS:
    for _c in (False, True):
        _BY_BITS[BlockLetter(_l, _c).bits] = BlockLetter(_l, _c)
assert len(_BY_BITS) == 16


@dataclass(frozen=True)
class BlockSequence:
    blocks: tuple

    def __str__(self) -> str:
        return format_blocks(self)

    def __len__(self) -> int:
        return len(self.blocks)


def blockseq_of(f: BooleanFunction) -> BlockSequence:
    if f.n < 2:
        raise ValueError("block rendering needs n >= 2")
    s = f.bitstring()
    return BlockSequence(tuple(_BY_BITS[s[i:i + 4]] for i in range(0, len(s), 4)))


def function_of(bs: BlockSequence) -> BooleanFunction:
    return BooleanFunction.from_bitstring("".join(b.bits for b in bs.blocks))


_BLOCK_TOKEN = re.compile(r"(~?)([A-DUVXY])")


def parse_blocks(text: str) -> BlockSequence:
    """Parse e.g. ``"A A A ~A B ..."``; whitespace and ``|`` separators are ignored."""
    body = re.sub(r"[\s|]", "", text)
    if not body:
        raise ParseError("empty block string")
    pos, out = 0, []
    for m in _BLOCK_TOKEN.finditer(body):
        if m.start() != pos:
            break
        out.append(BlockLetter(m.group(2), bool(m.group(1))))
        pos = m.end()
    if pos != len(body):
        raise ParseError(f"bad block token at {body[pos:pos + 6]!r}")
    k = len(out)
    if k & (k - 1):
        raise ParseError(f"{k} blocks is not a power of two")
    return BlockSequence(tuple(out))


def format_blocks(bs: BlockSequence) -> str:
    return " ".join(str(b) for b in bs.blocks)


# ---------------------------------------------------------------------------
# affine structure


def _dyadic_halving(units: np.ndarray, start: int = 1) -> bool:
    """Every aligned window of 2^(s+1) units is ``LL`` or ``L~L`` for s >= start."""
    size = units.size
    w = 1 << start
    while w < size:
        v = units.reshape(-1, 2, w)
        same = (v[:, 0] == v[:, 1]).all(axis=1)
        comp = (v[:, 0] != v[:, 1]).all(axis=1)
        if not (same | comp).all():
            return False
        w *= 2
    return True


def is_blockwise_affine(f: BooleanFunction) -> bool:
    if f.n < 2:
        raise ValueError("needs n >= 2")
    return _dyadic_halving(f.bits, start=1) and algebraic_degree(f) <= 1


def inner_g(m: int, b: int = 0) -> BooleanFunction:
    """``x_1 + ... + x_m + b``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return BooleanFunction.affine([1] * m, b)


def base_block(coeffs: Sequence[int], b: int = 0) -> BlockLetter:
    """Base letter of the affine function with these coefficients; set by the last two of them."""
    if len(coeffs) < 2:
        raise ValueError("need at least two variables")
    letter = {(1, 0): "A", (0, 1): "B", (1, 1): "C", (0, 0): "D"}[(coeffs[-2] & 1, coeffs[-1] & 1)]
    return BlockLetter(letter, bool(b & 1))


def opposite(g: BooleanFunction, granularity: str = "block") -> BooleanFunction:
    """The opposite transform O(g) of an affine function.

    Starting from a copy of the first unit (4-bit block or single bit), each
    dyadic prefix is extended by its complement where g repeats that prefix,
    and by a plain copy where g complements it.  ``O(O(g)) = g``.
    """
    if granularity not in ("block", "bit"):
        raise ValueError(f"granularity must be 'block' or 'bit', got {granularity!r}")
    if g.n < 2 or not is_blockwise_affine(g):
        raise ConstructionError("opposite needs an affine function on n >= 2 variables")
    unit = 4 if granularity == "block" else 1
    x = g.bits.reshape(-1, unit)
    y = np.empty_like(x)
    y[0] = x[0]
    length = 1
    while length < len(x):
        if np.array_equal(x[length:2 * length], x[:length]):
            y[length:2 * length] = y[:length] ^ 1
        else:
            y[length:2 * length] = y[:length]
        length *= 2
    return BooleanFunction(g.n, y.reshape(-1))


def sac_concat(h: BooleanFunction, b: int = 0, a: int | None = None) -> BooleanFunction:
    """``(h | h + g)``, or ``(h | l + g)`` with ``l(x) = h(x + a)`` when ``a`` is given.

    ``g`` is the parity function of h's variables plus ``b``.  The result is
    SAC; it need not be balanced (h = 0 is not).
    """
    if h.n < 2:
        raise ConstructionError("h must have at least 2 variables")
    if a is not None:
        if not 0 < a < (1 << h.n) or hamming_weight(a) % 2 == 0:
            raise ConstructionError("a must have odd weight")
        l = h.shift(a)
    else:
        l = h
    return concat(h, l ^ inner_g(h.n, b))


# ---------------------------------------------------------------------------
# segment family

Affine = Union[BooleanFunction, Sequence[int]]


def family_dims(n: int) -> tuple[int, int]:
    """``(k, m)``: n = 2k or 2k+1, and the g_i live on m variables."""
    k = n // 2
    if n < 8 or (n % 2 and n < 9):
        raise ConstructionError("n must satisfy n=2k≥8 or n=2k+1≥9")
    return k, (k - 2 if n % 2 == 0 else k - 1)


def default_selection(n: int) -> list[tuple[int, ...]]:
    """Linear coefficient vectors, 2^(k-4) per base letter, in A, B, C, D order.

    Within a letter the free coefficients c_1..c_(m-2) count up in binary,
    c_1 most significant.
    """
    k, m = family_dims(n)
    per_letter = 1 << (k - 4)
    out = []
    for tail in ((1, 0), (0, 1), (1, 1), (0, 0)):
        free = list(product((0, 1), repeat=m - 2))[:per_letter]
        out.extend(tuple(c) + tail for c in free)
    return out


def _as_affine(item: Affine, m: int) -> BooleanFunction:
    if isinstance(item, BooleanFunction):
        g = item
    else:
        coeffs = tuple(int(c) for c in item)
        if len(coeffs) != m:
            raise ConstructionError(f"coefficient vector {coeffs} must have {m} entries")
        g = BooleanFunction.affine(coeffs)
    if g.n != m or not is_blockwise_affine(g):
        raise ConstructionError(f"selection entries must be affine functions on {m} variables")
    return g


def check_conditions(gs: Sequence[BooleanFunction]) -> None:
    """Raise unless a quarter of the g_i sit on each of A, B, C, D and all pairwise sums are balanced."""
    counts = {"A": 0, "B": 0, "C": 0, "D": 0}
    for g in gs:
        letter = blockseq_of(g).blocks[0].letter
        counts[letter] += 1
    if any(4 * c != len(gs) for c in counts.values()):
        raise ConstructionError(f"condition (i) violated: base letter counts {counts}")
    for i in range(len(gs)):
        for j in range(i + 1, len(gs)):
            if not is_balanced(gs[i] ^ gs[j]):
                raise ConstructionError(f"condition (ii) violated: g_{i + 1} + g_{j + 1} is not balanced")


def theorem2_family(
    n: int,
    selection: Sequence[Affine] | None = None,
    granularity: str = "block",
    enforce_conditions: bool = True,
) -> BooleanFunction:
    """Balanced SAC function assembled from 2^(k-1) segments of affine pieces.

    With ``h_i = O(g_i)`` the first half is ``g_i h_i g_i ~h_i`` for every i
    followed by ``h_i ~g_i ~h_i ~g_i``; the second half is ``~h_i g_i h_i g_i``
    followed by ``~g_i ~h_i ~g_i h_i``.  ``enforce_conditions=False`` skips the
    selection validators, for experiments with the bit-level transform.
    """
    k, m = family_dims(n)
    count = 1 << (k - 2)
    if selection is None:
        selection = default_selection(n)
    gs = [_as_affine(item, m) for item in selection]
    if len(gs) != count:
        raise ConstructionError(f"need exactly {count} affine functions, got {len(gs)}")
    if enforce_conditions:
        check_conditions(gs)
    hs = [opposite(g, granularity) for g in gs]

    def seq(*parts):
        return np.concatenate([p.bits for p in parts])

    first = [seq(g, h, g, ~h) for g, h in zip(gs, hs)] + [seq(h, ~g, ~h, ~g) for g, h in zip(gs, hs)]
    second = [seq(~h, g, h, g) for g, h in zip(gs, hs)] + [seq(~g, ~h, ~g, h) for g, h in zip(gs, hs)]
    return BooleanFunction(n, np.concatenate(first + second))
