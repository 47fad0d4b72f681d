"""Words, distances, and ball/sphere enumeration for the three metric spaces.

Binary words live in F_2^L under the Hamming metric and are stored as int
bitsets: bit i (0-based) of ``mask`` is coordinate i+1.  Coordinates are
1-based everywhere a human sees them (supports, violators, design blocks)
and 0-based in the masks.

Q-ary words are symbol tuples over {0..q-1}, same metric.  Johnson words
are L-subsets of {1..n} with d(x, y) = |x \\ y| (half the Hamming distance
of the characteristic vectors); we keep the canonical-position convention
2L <= n so that a word and its complement never collide.

Enumeration caps: binary L <= 24, q-ary q**L <= 2**24, Johnson
C(n, L) <= 2**24.  Past those a CapacityError is raised rather than an
open-ended scan.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import CapacityError, FormatError, ParameterError

# Hard ceiling on binary word length.  Everything in this package does exact
# arithmetic, so the cap exists only to keep enumeration and search honest.
MAX_LENGTH = 256

ENUM_CAP = 1 << 24


@dataclass(frozen=True)
class SchemeParams:
    """(L, s, r) triple with the admissibility check L >= 2s + r + 1."""

    L: int
    s: int
    r: int

    def __post_init__(self):
        if self.L < 1 or self.L > MAX_LENGTH:
            raise ParameterError(f"L must be in 1..{MAX_LENGTH}, got {self.L}")
        if self.s < 0 or self.r < 0:
            raise ParameterError("s and r must be nonnegative")
        if self.L < 2 * self.s + self.r + 1:
            raise ParameterError(
                f"inadmissible parameters: L={self.L} < 2*{self.s}+{self.r}+1"
            )


@dataclass(frozen=True)
class BinaryWord:
    """A length-L binary word held as an int bitset."""

    length: int
    mask: int

    def __post_init__(self):
        if self.length < 0 or self.length > MAX_LENGTH:
            raise ParameterError(f"length must be in 0..{MAX_LENGTH}")
        if self.mask < 0 or self.mask >> self.length:
            raise ParameterError("mask has bits outside the word length")

    @classmethod
    def from_string(cls, text: str) -> "BinaryWord":
        if not text or any(ch not in "01" for ch in text):
            raise FormatError(f"not a binary word literal: {text!r}")
        mask = 0
        for i, ch in enumerate(text):  # leftmost character = coordinate 1
            if ch == "1":
                mask |= 1 << i
        return cls(len(text), mask)

    @classmethod
    def from_support(cls, length: int, support) -> "BinaryWord":
        mask = 0
        for c in support:
            if not 1 <= c <= length:
                raise ParameterError(f"coordinate {c} outside 1..{length}")
            mask |= 1 << (c - 1)
        return cls(length, mask)

    def to_string(self) -> str:
        return "".join("1" if self.mask >> i & 1 else "0" for i in range(self.length))

    @property
    def weight(self) -> int:
        return self.mask.bit_count()

    def support(self) -> frozenset[int]:
        """1-based coordinates carrying a one."""
        return frozenset(i + 1 for i in range(self.length) if self.mask >> i & 1)

    def __str__(self) -> str:
        return self.to_string()


@dataclass(frozen=True)
class QaryWord:
    q: int
    symbols: tuple[int, ...]

    def __post_init__(self):
        if self.q < 2:
            raise ParameterError("alphabet size q must be >= 2")
        if any(not 0 <= x < self.q for x in self.symbols):
            raise ParameterError("symbol outside 0..q-1")

    @classmethod
    def from_string(cls, q: int, text: str) -> "QaryWord":
        try:
            symbols = tuple(int(part) for part in text.split(","))
        except ValueError as exc:
            raise FormatError(f"not a q-ary word literal: {text!r}") from exc
        return cls(q, symbols)

    def to_string(self) -> str:
        return ",".join(str(x) for x in self.symbols)

    @property
    def length(self) -> int:
        return len(self.symbols)

    @property
    def weight(self) -> int:
        return sum(1 for x in self.symbols if x)


@dataclass(frozen=True)
class JohnsonWord:
    """An L-subset of {1..n}; requires the canonical range 2L <= n."""

    n: int
    elements: frozenset[int]

    def __post_init__(self):
        if any(not 1 <= e <= self.n for e in self.elements):
            raise ParameterError("element outside 1..n")
        if 2 * len(self.elements) > self.n:
            raise ParameterError(
                f"Johnson word needs 2L <= n, got L={len(self.elements)}, n={self.n}"
            )

    @classmethod
    def from_string(cls, n: int, text: str) -> "JohnsonWord":
        body = text.strip()
        if not (body.startswith("{") and body.endswith("}")):
            raise FormatError(f"not a Johnson word literal: {text!r}")
        inner = body[1:-1].strip()
        try:
            elems = frozenset(int(p) for p in inner.split(",")) if inner else frozenset()
        except ValueError as exc:
            raise FormatError(f"not a Johnson word literal: {text!r}") from exc
        return cls(n, elems)

    def to_string(self) -> str:
        return "{" + ",".join(str(e) for e in sorted(self.elements)) + "}"

    @property
    def length(self) -> int:
        return len(self.elements)


Word = BinaryWord | QaryWord | JohnsonWord


# ---------------------------------------------------------------------------
# distances
# ---------------------------------------------------------------------------

def hamming_distance(a, b) -> int:
    if isinstance(a, BinaryWord) and isinstance(b, BinaryWord):
        if a.length != b.length:
            raise ParameterError("length mismatch")
        return (a.mask ^ b.mask).bit_count()
    if isinstance(a, QaryWord) and isinstance(b, QaryWord):
        if a.q != b.q or a.length != b.length:
            raise ParameterError("alphabet or length mismatch")
        return sum(1 for x, y in zip(a.symbols, b.symbols) if x != y)
    raise ParameterError("hamming_distance wants two binary or two q-ary words")


def johnson_distance(a: JohnsonWord, b: JohnsonWord) -> int:
    if a.n != b.n or a.length != b.length:
        raise ParameterError("ambient set or weight mismatch")
    return len(a.elements - b.elements)


def distance(a, b) -> int:
    """Metric dispatch on word kind."""
    if isinstance(a, JohnsonWord):
        return johnson_distance(a, b)
    return hamming_distance(a, b)


def diameter(kind: str, L: int, n: int = 0, q: int = 2) -> int:
    """Largest distance realized in the scheme (needed by identity checks)."""
    if kind in ("binary", "qary"):
        return L
    if kind == "johnson":
        return min(L, n - L)
    raise ParameterError(f"unknown scheme kind {kind!r}")


# ---------------------------------------------------------------------------
# exact counting
# ---------------------------------------------------------------------------

def binom(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def ball_size(L: int, radius: int) -> int:
    """|B(x, radius)| in F_2^L, independent of the center."""
    if radius < 0:
        return 0
    return sum(math.comb(L, i) for i in range(0, min(radius, L) + 1))


def sphere_size(L: int, w: int) -> int:
    return binom(L, w)


def johnson_sphere_size(n: int, L: int, d: int) -> int:
    return binom(L, d) * binom(n - L, d)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def _check_binary_cap(L: int):
    if L > 24:
        raise CapacityError(f"binary enumeration capped at L <= 24, got {L}")


def enumerate_sphere(center, radius: int) -> Iterator:
    """All words at distance exactly ``radius`` from the center."""
    if isinstance(center, BinaryWord):
        _check_binary_cap(center.length)
        L = center.length
        for flips in itertools.combinations(range(L), radius):
            m = center.mask
            for i in flips:
                m ^= 1 << i
            yield BinaryWord(L, m)
        return
    if isinstance(center, QaryWord):
        L, q = center.length, center.q
        if q**L > ENUM_CAP:
            raise CapacityError(f"q-ary enumeration capped at q**L <= 2**24")
        for pos in itertools.combinations(range(L), radius):
            for alts in itertools.product(range(q - 1), repeat=radius):
                sym = list(center.symbols)
                for p, a in zip(pos, alts):
                    # pick any of the q-1 symbols differing from the center's
                    sym[p] = (center.symbols[p] + 1 + a) % q
                yield QaryWord(q, tuple(sym))
        return
    if isinstance(center, JohnsonWord):
        n, elems = center.n, center.elements
        if binom(n, len(elems)) > ENUM_CAP:
            raise CapacityError("Johnson enumeration capped at C(n, L) <= 2**24")
        outside = sorted(set(range(1, n + 1)) - elems)
        inside = sorted(elems)
        for drop in itertools.combinations(inside, radius):
            for add in itertools.combinations(outside, radius):
                yield JohnsonWord(n, (elems - set(drop)) | set(add))
        return
    raise ParameterError("unsupported word type")


def enumerate_ball(center, radius: int) -> Iterator:
    upper = radius
    if isinstance(center, JohnsonWord):
        upper = min(radius, center.length, center.n - center.length)
    elif isinstance(center, (BinaryWord, QaryWord)):
        upper = min(radius, center.length)
    for d in range(0, upper + 1):
        yield from enumerate_sphere(center, d)


def enumerate_weight_class(L: int, s: int) -> Iterator[BinaryWord]:
    """All binary length-L words of weight s, in support-lex order."""
    _check_binary_cap(L)
    for supp in itertools.combinations(range(L), s):
        m = 0
        for i in supp:
            m |= 1 << i
        yield BinaryWord(L, m)


# ---------------------------------------------------------------------------
# big-int characteristic vectors over F_2^L (bit y of the vector = word y)
# ---------------------------------------------------------------------------

_weight_vector_cache: dict[int, list[int]] = {}
_level_mask_cache: dict[int, list[int]] = {}


def weight_vectors(L: int) -> list[int]:
    """weight_vectors(L)[w] has bit y set iff popcount(y) == w.

    Built by doubling: a word of length l+1 is a length-l word plus a top
    bit, so each class is the old class OR the (w-1)-class shifted by 2^l.
    """
    _check_binary_cap(L)
    if L in _weight_vector_cache:
        return _weight_vector_cache[L]
    vecs = [1]  # L = 0: the empty word has weight 0
    for ell in range(L):
        shift = 1 << ell
        nxt = []
        for w in range(len(vecs) + 1):
            lo = vecs[w] if w < len(vecs) else 0
            hi = vecs[w - 1] if w >= 1 else 0
            nxt.append(lo | (hi << shift))
        vecs = nxt
    _weight_vector_cache[L] = vecs
    return vecs


def ball_vector(L: int, radius: int) -> int:
    """Characteristic vector of B(0, radius)."""
    vecs = weight_vectors(L)
    out = 0
    for w in range(0, min(radius, L) + 1):
        out |= vecs[w]
    return out


def _level_masks(L: int) -> list[int]:
    if L in _level_mask_cache:
        return _level_mask_cache[L]
    N = 1 << L
    full = (1 << N) - 1
    out = []
    for j in range(L):
        step = 1 << j
        block = (1 << step) - 1
        rep = full // ((1 << (2 * step)) - 1)
        out.append(rep * block)
    _level_mask_cache[L] = out
    return out


def xor_translate(vector: int, z: int, L: int) -> int:
    """Characteristic vector of {y ^ z : y in set(vector)}.

    Butterfly: translating by z swaps the two half-spaces at every bit
    position set in z.
    """
    levels = _level_masks(L)
    for j in range(L):
        if z >> j & 1:
            step = 1 << j
            A = levels[j]
            vector = ((vector & A) << step) | ((vector >> step) & A)
    return vector


def iter_vector_bits(vector: int) -> Iterator[int]:
    while vector:
        low = vector & -vector
        yield low.bit_length() - 1
        vector ^= low


def min_weight_member(vector: int, L: int) -> int | None:
    """Lowest-weight word in the set, ties broken by smallest mask value."""
    if not vector:
        return None
    vecs = weight_vectors(L)
    for w in range(L + 1):
        sect = vector & vecs[w]
        if sect:
            return (sect & -sect).bit_length() - 1
    return None


# ---------------------------------------------------------------------------
# misc exact helpers
# ---------------------------------------------------------------------------

def ratio(L: int, s: int) -> Fraction:
    if s <= 0:
        raise ParameterError("ratio L/s needs s >= 1")
    return Fraction(L, s)


def ceil_div(num: int, den: int) -> int:
    if den <= 0:
        raise ParameterError("ceil_div wants a positive denominator")
    return -(-num // den)


def ceil_fraction(f: Fraction) -> int:
    return ceil_div(f.numerator, f.denominator)
